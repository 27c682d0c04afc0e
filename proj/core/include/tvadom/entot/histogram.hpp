#pragma once

#include <optional>

#include "tvadom/common/types.hpp"

namespace tvadom::entot {

/// Point of the probability simplex: nonnegative masses summing to one.
class Histogram {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Throws InvalidArgument for negative or non-finite entries, or a total
  /// mass farther than kSumTolerance from 1.
  explicit Histogram(Vector mass);

  /// Divides nonnegative weights by their sum.
  static Histogram normalized(Vector weights);
  /// Uniform distribution on d points.
  static Histogram uniform(int d);

  const Vector& mass() const { return mass_; }
  int size() const { return static_cast<int>(mass_.size()); }
  double operator[](int i) const { return mass_[i]; }
  double min() const { return mass_.minCoeff(); }

 private:
  Vector mass_;
};

/// q' = (1 - delta d) q + delta 1; requires 0 < delta d < 1.
Histogram floor_histogram(const Histogram& q, double delta);

/// Euclidean projection of an arbitrary vector onto the simplex.
Histogram project_to_simplex(const Vector& v);

}  // namespace tvadom::entot
