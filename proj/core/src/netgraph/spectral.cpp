#include "tvadom/netgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::netgraph {

std::vector<double> symmetric_eigenvalues(const Matrix& input) {
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw InvalidArgument("symmetric_eigenvalues: matrix is not square");
  if (n > 0 && (input - input.transpose()).cwiseAbs().maxCoeff() > 0.0)
    throw InvalidArgument("symmetric_eigenvalues: matrix is not symmetric");

  Matrix a = input;
  const double scale = std::max(a.norm(), std::numeric_limits<double>::min());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // rotation angle that annihilates a(p, q)
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectralBounds laplacian_bounds(const Laplacian& laplacian, double zero_tol) {
  const auto eig = symmetric_eigenvalues(laplacian.matrix());
  SpectralBounds b;
  b.lambda_max = eig.back();
  const auto positive = std::find_if(eig.begin(), eig.end(),
                                     [&](double v) { return v > zero_tol * b.lambda_max; });
  if (positive == eig.end()) throw DisconnectedGraph("laplacian_bounds: no positive eigenvalue");
  b.lambda_min_plus = *positive;
  // connected graph: kernel is exactly span{1}
  if (positive - eig.begin() != 1)
    throw DisconnectedGraph("laplacian_bounds: kernel dimension " +
                            std::to_string(positive - eig.begin()) + " exceeds 1");
  return b;
}

SpectralBounds spectral_bounds(const NetworkSchedule& schedule, long horizon) {
  const long epochs = schedule.epochs_in(horizon);
  SpectralBounds out{std::numeric_limits<double>::infinity(), 0.0};
  for (long e = 0; e < epochs; ++e) {
    const auto b = laplacian_bounds(schedule.epoch_laplacian(e));
    out.lambda_min_plus = std::min(out.lambda_min_plus, b.lambda_min_plus);
    out.lambda_max = std::max(out.lambda_max, b.lambda_max);
  }
  return out;
}

}  // namespace tvadom::netgraph
