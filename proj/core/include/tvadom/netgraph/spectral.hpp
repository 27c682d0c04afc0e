#pragma once

#include <vector>

#include "tvadom/common/types.hpp"
#include "tvadom/netgraph/schedule.hpp"

namespace tvadom::netgraph {

/// Eigenvalues of a dense symmetric matrix in ascending order, computed with
/// the cyclic Jacobi rotation method. Only the lower triangle is trusted to
/// be symmetric with the upper one; asymmetric input is rejected.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

struct SpectralBounds {
  double lambda_min_plus = 0.0;
  double lambda_max = 0.0;
};

/// Smallest positive and largest eigenvalue of one Laplacian. Eigenvalues
/// below `zero_tol * lambda_max` are treated as the kernel.
SpectralBounds laplacian_bounds(const Laplacian& laplacian, double zero_tol = 1e-9);

/// Bounds over every epoch a run of `horizon` iterations touches: the
/// minimum of lambda_min^+ and the maximum of lambda_max.
SpectralBounds spectral_bounds(const NetworkSchedule& schedule, long horizon);

}  // namespace tvadom::netgraph
