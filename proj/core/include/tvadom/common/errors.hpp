#pragma once

#include <stdexcept>
#include <string>

namespace tvadom {

/// Precondition violated by a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph that must be connected is not.
class DisconnectedGraph : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Non-finite values appeared in a solver iterate.
class NumericalDivergence : public std::runtime_error {
 public:
  NumericalDivergence(std::string iterate, long iteration)
      : std::runtime_error("numerical divergence: non-finite value in " + iterate +
                           " at iteration " + std::to_string(iteration)),
        iterate_(std::move(iterate)),
        iteration_(iteration) {}

  const std::string& iterate() const noexcept { return iterate_; }
  long iteration() const noexcept { return iteration_; }

 private:
  std::string iterate_;
  long iteration_;
};

/// Malformed input file (IDX, config, manifest).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tvadom
