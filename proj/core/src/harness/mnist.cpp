#include "tvadom/harness/mnist.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "tvadom/common/errors.hpp"

namespace tvadom::harness {
namespace {

std::vector<std::uint8_t> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::uint32_t read_be32(const std::vector<std::uint8_t>& bytes, std::size_t offset, const std::string& path) {
  if (offset + 4 > bytes.size())
    throw FormatError(path + ": truncated header at offset " + std::to_string(offset));
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void expect_magic(const std::vector<std::uint8_t>& bytes, std::uint32_t magic, const std::string& path) {
  const auto got = read_be32(bytes, 0, path);
  if (got != magic)
    throw FormatError(path + ": bad magic number " + hex(got) + " at offset 0, expected " + hex(magic));
}

}  // namespace

IdxImages read_idx_images(const std::string& path) {
  const auto bytes = slurp(path);
  expect_magic(bytes, 0x00000803u, path);
  const auto count = read_be32(bytes, 4, path);
  const auto rows = read_be32(bytes, 8, path);
  const auto cols = read_be32(bytes, 12, path);
  if (rows == 0 || cols == 0 || rows > 4096 || cols > 4096)
    throw FormatError(path + ": implausible image size at offset 8");
  const std::size_t pixels = std::size_t{rows} * cols;
  const std::size_t need = 16 + std::size_t{count} * pixels;
  if (bytes.size() < need)
    throw FormatError(path + ": truncated at offset " + std::to_string(bytes.size()) + ", expected " +
                      std::to_string(need) + " bytes");
  IdxImages out;
  out.rows = static_cast<int>(rows);
  out.cols = static_cast<int>(cols);
  out.images.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(16 + k * pixels);
    out.images.emplace_back(first, first + static_cast<std::ptrdiff_t>(pixels));
  }
  return out;
}

std::vector<std::uint8_t> read_idx_labels(const std::string& path) {
  const auto bytes = slurp(path);
  expect_magic(bytes, 0x00000801u, path);
  const auto count = read_be32(bytes, 4, path);
  if (bytes.size() < 8 + std::size_t{count})
    throw FormatError(path + ": truncated at offset " + std::to_string(bytes.size()) + ", expected " +
                      std::to_string(8 + std::size_t{count}) + " bytes");
  return {bytes.begin() + 8, bytes.begin() + 8 + count};
}

MnistDataset load_mnist(const std::string& images_path, const std::string& labels_path, int digit, int count,
                        double delta) {
  if (digit < 0 || digit > 9) throw InvalidArgument("load_mnist: digit must be 0..9");
  if (count < 1) throw InvalidArgument("load_mnist: count must be >= 1");
  const auto images = read_idx_images(images_path);
  const auto labels = read_idx_labels(labels_path);
  if (labels.size() != images.images.size())
    throw FormatError("load_mnist: " + std::to_string(images.images.size()) + " images but " +
                      std::to_string(labels.size()) + " labels");

  const int d = images.rows * images.cols;
  MnistDataset out{{}, entot::cost_matrix(entot::pixel_grid(images.rows, images.cols), true), {}};
  for (std::size_t k = 0; k < labels.size() && static_cast<int>(out.indices.size()) < count; ++k) {
    if (labels[k] != digit) continue;
    Vector w(d);
    for (int p = 0; p < d; ++p) w[p] = images.images[k][static_cast<std::size_t>(p)];
    auto h = w.sum() > 0.0 ? entot::Histogram::normalized(w) : entot::Histogram::uniform(d);
    out.measures.push_back(delta > 0.0 ? entot::floor_histogram(h, delta) : h);
    out.indices.push_back(static_cast<int>(k));
  }
  if (static_cast<int>(out.indices.size()) < count)
    throw InvalidArgument("load_mnist: only " + std::to_string(out.indices.size()) + " images of digit " +
                          std::to_string(digit) + ", requested " + std::to_string(count));
  return out;
}

}  // namespace tvadom::harness
