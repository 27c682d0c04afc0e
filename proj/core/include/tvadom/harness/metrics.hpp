#pragma once

#include "tvadom/common/types.hpp"

namespace tvadom::harness {

/// Mean pairwise squared distance between the rows of an m x d stack,
///   2 / (m (m - 1)) sum_{i<j} |x_i - x_j|^2.
/// Throws InvalidArgument for fewer than two rows.
double consensus_metric(const NodeStack& x);

}  // namespace tvadom::harness
