#include "tvadom/entot/barycenter_oracle.hpp"

#include <string>

#include "tvadom/common/errors.hpp"
#include "tvadom/entot/dual.hpp"

namespace tvadom::entot {

BarycenterOracle::BarycenterOracle(std::vector<Histogram> measures, CostMatrix cost, double gamma)
    : measures_(std::move(measures)), cost_(std::move(cost)), gamma_(gamma) {
  if (measures_.empty()) throw InvalidArgument("barycenter oracle: no measures");
  if (!(gamma_ > 0.0)) throw InvalidArgument("barycenter oracle: gamma must be positive");
  for (std::size_t i = 0; i < measures_.size(); ++i) {
    if (measures_[i].size() != cost_.size())
      throw InvalidArgument("barycenter oracle: measure " + std::to_string(i) + " has size " +
                            std::to_string(measures_[i].size()) + ", cost has " + std::to_string(cost_.size()));
    if (!(measures_[i].min() > 0.0))
      throw InvalidArgument("barycenter oracle: measure " + std::to_string(i) +
                            " has a zero entry; apply floor_histogram first");
  }
}

void BarycenterOracle::gradient(int node, std::span<const double> z, std::span<double> out) const {
  detail::dual_grad_into(measures_[static_cast<std::size_t>(node)].mass(), cost_.entries(), gamma_, z, out);
}

double BarycenterOracle::value(int node, std::span<const double> z) const {
  return detail::dual_value_unchecked(measures_[static_cast<std::size_t>(node)].mass(), cost_.entries(), gamma_, z);
}

}  // namespace tvadom::entot
