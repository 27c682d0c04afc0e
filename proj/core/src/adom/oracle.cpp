#include "tvadom/adom/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tvadom/common/errors.hpp"
#include "tvadom/common/parallel.hpp"

namespace tvadom::adom {
namespace {

void check_shape(const StackedGradient& g, const NodeStack& z) {
  if (z.rows() != g.nodes() || z.cols() != g.dim())
    throw InvalidArgument("oracle: stack is " + std::to_string(z.rows()) + "x" + std::to_string(z.cols()) +
                          ", oracle expects " + std::to_string(g.nodes()) + "x" + std::to_string(g.dim()));
}

std::span<const double> row(const NodeStack& s, int i) {
  return {s.data() + static_cast<std::ptrdiff_t>(i) * s.cols(), static_cast<std::size_t>(s.cols())};
}

std::span<double> row(NodeStack& s, int i) {
  return {s.data() + static_cast<std::ptrdiff_t>(i) * s.cols(), static_cast<std::size_t>(s.cols())};
}

}  // namespace

double moreau_envelope(const ConvexPrimal& f, int node, std::span<const double> x, double r) {
  if (!(r > 0.0)) throw InvalidArgument("moreau_envelope: r must be positive");
  std::vector<double> p(x.size());
  f.prox(node, x, r, p);
  double dist2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) dist2 += (p[k] - x[k]) * (p[k] - x[k]);
  return f.value(node, p) + dist2 / (2.0 * r);
}

SmoothedOracle::SmoothedOracle(const DualOracle& base, double r, int threads)
    : base_(&base), r_(r), threads_(threads) {
  if (!(r > 0.0)) throw InvalidArgument("smoothed_oracle: r must be positive, got " + std::to_string(r));
}

void SmoothedOracle::evaluate(const NodeStack& z, NodeStack& out) const {
  check_shape(*this, z);
  out.resize(z.rows(), z.cols());
  parallel_for(nodes(), threads_, [&](int i) {
    base_->gradient(i, row(z, i), row(out, i));
    out.row(i) += r_ * z.row(i);
  });
}

double SmoothedOracle::value(const NodeStack& z) const {
  check_shape(*this, z);
  double total = 0.0;
  for (int i = 0; i < nodes(); ++i) total += base_->value(i, row(z, i)) + 0.5 * r_ * z.row(i).squaredNorm();
  return total;
}

void PlainStackedOracle::evaluate(const NodeStack& z, NodeStack& out) const {
  check_shape(*this, z);
  out.resize(z.rows(), z.cols());
  parallel_for(nodes(), threads_, [&](int i) { base_->gradient(i, row(z, i), row(out, i)); });
}

double PlainStackedOracle::value(const NodeStack& z) const {
  check_shape(*this, z);
  double total = 0.0;
  for (int i = 0; i < nodes(); ++i) total += base_->value(i, row(z, i));
  return total;
}

RegularizedOracle::RegularizedOracle(const ConvexPrimal& primal, double gamma)
    : primal_(&primal), gamma_(gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("regularized oracle: gamma must be positive");
}

void RegularizedOracle::gradient(int node, std::span<const double> z, std::span<double> out) const {
  // argmax_x <z,x> - f(x) - gamma/2 |x|^2 = argmin_x f(x) + gamma/2 |x - z/gamma|^2
  std::vector<double> v(z.begin(), z.end());
  for (auto& e : v) e /= gamma_;
  primal_->prox(node, v, 1.0 / gamma_, out);
}

double RegularizedOracle::value(int node, std::span<const double> z) const {
  std::vector<double> x(z.size());
  gradient(node, z, x);
  double inner = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    inner += z[k] * x[k];
    sq += x[k] * x[k];
  }
  return inner - primal_->value(node, x) - 0.5 * gamma_ * sq;
}

RegularizedOracle regularize_for_accuracy(const ConvexPrimal& primal, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("regularize_for_accuracy: eps must be positive");
  return RegularizedOracle(primal, std::sqrt(eps));
}

}  // namespace tvadom::adom
