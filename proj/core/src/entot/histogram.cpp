#include "tvadom/entot/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {

Histogram::Histogram(Vector mass) : mass_(std::move(mass)) {
  if (mass_.size() < 1) throw InvalidArgument("histogram: empty");
  if (!mass_.allFinite()) throw InvalidArgument("histogram: non-finite mass");
  if (mass_.minCoeff() < 0.0)
    throw InvalidArgument("histogram: negative mass " + std::to_string(mass_.minCoeff()));
  const double total = mass_.sum();
  if (std::abs(total - 1.0) > kSumTolerance)
    throw InvalidArgument("histogram: masses sum to " + std::to_string(total) + ", expected 1");
}

Histogram Histogram::normalized(Vector weights) {
  if (weights.size() < 1) throw InvalidArgument("histogram: empty");
  if (!weights.allFinite() || weights.minCoeff() < 0.0)
    throw InvalidArgument("histogram: weights must be finite and nonnegative");
  const double total = weights.sum();
  if (!(total > 0.0)) throw InvalidArgument("histogram: weights sum to zero");
  weights /= total;
  return Histogram(std::move(weights));
}

Histogram Histogram::uniform(int d) {
  if (d < 1) throw InvalidArgument("histogram: uniform needs d >= 1");
  return Histogram(Vector::Constant(d, 1.0 / d));
}

Histogram floor_histogram(const Histogram& q, double delta) {
  const double d = q.size();
  if (!(delta > 0.0) || !(delta * d < 1.0))
    throw InvalidArgument("floor_histogram: need 0 < delta * d < 1, got delta = " + std::to_string(delta) +
                          ", d = " + std::to_string(q.size()));
  Vector out = (1.0 - delta * d) * q.mass();
  out.array() += delta;
  return Histogram(std::move(out));
}

Histogram project_to_simplex(const Vector& v) {
  if (v.size() < 1 || !v.allFinite()) throw InvalidArgument("project_to_simplex: invalid input");
  // sort-based projection: find the threshold t with sum max(v - t, 0) = 1
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) threshold = t;
  }
  Vector out = (v.array() - threshold).max(0.0);
  out /= out.sum();
  return Histogram(std::move(out));
}

}  // namespace tvadom::entot
