#include "tvadom/harness/metrics.hpp"

#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::harness {

double consensus_metric(const NodeStack& x) {
  const auto m = x.rows();
  if (m < 2) throw InvalidArgument("consensus_metric: need at least 2 rows, got " + std::to_string(m));
  double total = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) total += (x.row(i) - x.row(j)).squaredNorm();
  return 2.0 * total / (static_cast<double>(m) * static_cast<double>(m - 1));
}

}  // namespace tvadom::harness
