#pragma once

#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::entot {

struct ExactOtResult {
  /// min_{X in U(p,q)} <M, X>
  double value = 0.0;
  Matrix plan;
  long pivots = 0;
};

/// Unregularized optimal transport by the transportation (network) simplex
/// method: north-west-corner start, spanning-tree basis, Dantzig pricing
/// with a switch to Bland's rule after a run of degenerate pivots.
/// Zero masses are allowed.
ExactOtResult exact_ot(const Histogram& p, const Histogram& q, const CostMatrix& cost);

}  // namespace tvadom::entot
