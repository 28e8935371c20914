#pragma once

#include <stdexcept>
#include <string>

namespace geobeam {

// Input outside a documented parameter domain (bad config, denominator
// nonpositive, precondition violated).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Computation cannot proceed: caps exceeded, series non-convergence.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer than N users inside the selection radius. The caller decides whether
// to resample or count the draw as a failure.
class InsufficientUsersError : public std::runtime_error {
 public:
  InsufficientUsersError(std::size_t have, std::size_t want)
      : std::runtime_error("insufficient users: " + std::to_string(have) +
                           " within radius, need " + std::to_string(want)),
        have_(have),
        want_(want) {}
  std::size_t have() const { return have_; }
  std::size_t want() const { return want_; }

 private:
  std::size_t have_;
  std::size_t want_;
};

// Config file / key=value parse problem.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geobeam
