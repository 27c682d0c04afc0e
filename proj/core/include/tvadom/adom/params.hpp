#pragma once

#include "tvadom/netgraph/spectral.hpp"

namespace tvadom::adom {

using netgraph::SpectralBounds;

/// Step parameters of the accelerated dual method.
///
/// `smoothness` and `strong_convexity` are the (L, mu) of the primal h_i the
/// method actually runs on. For the Moreau-smoothed problem these are
/// (1/r, gamma/(1 + r gamma)); `r` and `gamma` are zero for baseline
/// parameter sets built directly from (L, mu).
struct Params {
  double r = 0.0;
  double gamma = 0.0;
  double smoothness = 0.0;
  double strong_convexity = 0.0;
  double alpha = 0.0;
  double eta = 0.0;
  double theta = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
  SpectralBounds bounds;

  /// Per-iteration contraction factor of the convergence bound, 1 - tau.
  double rate() const { return 1.0 - tau; }
};

/// Closed-form parameters for smoothing weight r and primal modulus gamma:
///   alpha = r/2,  eta = 2 l_min sqrt(gamma) / (7 l_max sqrt(r (1 + r gamma))),
///   theta = gamma / (l_max (1 + r gamma)),  sigma = 1 / l_max,
///   tau = (l_min / (7 l_max)) sqrt(r gamma / (1 + r gamma)).
Params derive_params(double r, double gamma, SpectralBounds bounds);

/// Parameters for L-smooth, mu-strongly convex h_i:
///   alpha = 1/(2L), eta = 2 l_min sqrt(mu L) / (7 l_max), theta = mu / l_max,
///   sigma = 1 / l_max, tau = (l_min / (7 l_max)) sqrt(mu / L).
Params baseline_params(double smoothness, double strong_convexity, SpectralBounds bounds);

/// C2 = m (1 + r gamma) K / (sqrt(2) gamma) sqrt(l_max / l_min)
///    + m (1 + r gamma)^2 / (4 r gamma^2)
double value_constant(int nodes, double r, double gamma, double k, SpectralBounds bounds);

/// Advisory iteration count
///   ceil((7 l_max / l_min) sqrt((1 + r gamma) / (r gamma)) ln(2 C2 / eps)),
/// clamped at zero when 2 C2 <= eps.
long iteration_estimate(double eps, double r, double gamma, SpectralBounds bounds, double c2);

}  // namespace tvadom::adom
