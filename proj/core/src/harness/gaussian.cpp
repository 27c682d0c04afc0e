#include "tvadom/harness/gaussian.hpp"

#include <cmath>
#include <string>

#include "tvadom/common/errors.hpp"
#include "tvadom/common/rng.hpp"

namespace tvadom::harness {
namespace {

void check_grid(const Grid& grid) {
  if (grid.size < 2) throw InvalidArgument("grid needs at least 2 points, got " + std::to_string(grid.size));
  if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi) || !(grid.hi > grid.lo))
    throw InvalidArgument("grid interval must satisfy lo < hi");
}

}  // namespace

Vector Grid::points() const {
  check_grid(*this);
  return Vector::LinSpaced(size, lo, hi);
}

entot::Histogram gen_truncated_gaussian(const GaussianSpec& spec, double delta) {
  if (!(spec.std > 0.0) || !std::isfinite(spec.std))
    throw InvalidArgument("gaussian std must be positive, got " + std::to_string(spec.std));
  if (!std::isfinite(spec.mean)) throw InvalidArgument("gaussian mean must be finite");
  const Vector t = spec.grid.points();
  const Vector density = (-(t.array() - spec.mean).square() / (2.0 * spec.std * spec.std)).exp().matrix();
  if (!(density.sum() > 0.0)) throw InvalidArgument("gaussian has no mass on the grid");
  auto h = entot::Histogram::normalized(density);
  return delta > 0.0 ? entot::floor_histogram(h, delta) : h;
}

entot::Histogram analytic_barycenter(const std::vector<GaussianSpec>& specs, double delta) {
  if (specs.empty()) throw InvalidArgument("analytic_barycenter: no specs");
  GaussianSpec avg{0.0, 0.0, specs.front().grid};
  for (const auto& s : specs) {
    if (!(s.grid == avg.grid)) throw InvalidArgument("analytic_barycenter: specs use different grids");
    avg.mean += s.mean;
    avg.std += s.std;
  }
  avg.mean /= static_cast<double>(specs.size());
  avg.std /= static_cast<double>(specs.size());
  return gen_truncated_gaussian(avg, delta);
}

GaussianDataset make_gaussian_dataset(const GaussianDatasetOptions& options) {
  if (options.nodes < 1) throw InvalidArgument("gaussian dataset: nodes must be >= 1");
  if (!(options.mean_hi >= options.mean_lo) || !(options.std_hi >= options.std_lo) || !(options.std_lo > 0.0))
    throw InvalidArgument("gaussian dataset: invalid mean/std ranges");
  Rng rng(options.seed, 0x6761757373ULL);
  std::vector<GaussianSpec> specs;
  std::vector<entot::Histogram> measures;
  for (int i = 0; i < options.nodes; ++i) {
    GaussianSpec s;
    s.grid = options.grid;
    s.mean = rng.uniform(options.mean_lo, options.mean_hi);
    s.std = rng.uniform(options.std_lo, options.std_hi);
    measures.push_back(gen_truncated_gaussian(s, options.delta));
    specs.push_back(s);
  }
  const Vector t = options.grid.points();
  auto cost = entot::cost_matrix(Matrix(t), true);
  auto bary = analytic_barycenter(specs);
  return GaussianDataset{std::move(specs), std::move(measures), std::move(cost), std::move(bary)};
}

}  // namespace tvadom::harness
