#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::harness {

struct IdxImages {
  int rows = 0;
  int cols = 0;
  /// count x (rows * cols) pixel bytes, row-major per image.
  std::vector<std::vector<std::uint8_t>> images;
};

/// IDX3 image file: big-endian magic 0x00000803, count, rows, cols, bytes.
/// Throws FormatError naming the path and byte offset on a bad magic number
/// or a truncated body.
IdxImages read_idx_images(const std::string& path);

/// IDX1 label file: big-endian magic 0x00000801, count, bytes.
std::vector<std::uint8_t> read_idx_labels(const std::string& path);

struct MnistDataset {
  std::vector<entot::Histogram> measures;
  entot::CostMatrix cost;
  /// Positions of the selected images in the source file.
  std::vector<int> indices;
};

/// First `count` images with label `digit`, each normalized to a point of
/// the simplex and delta-floored; cost is the normalized squared-Euclidean
/// distance between pixel centers. All-zero images become uniform before
/// the floor.
MnistDataset load_mnist(const std::string& images_path, const std::string& labels_path, int digit, int count,
                        double delta);

}  // namespace tvadom::harness
