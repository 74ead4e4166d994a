#pragma once

#include <stdexcept>
#include <string>

namespace kspec {

struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssumptionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The linear form y failed the a posteriori genericity checks too often.
struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdentityViolation : std::runtime_error {
  IdentityViolation(const std::string& id, int degree, const std::string& detail)
      : std::runtime_error(id + " violated at k=" + std::to_string(degree) + ": " + detail), id(id), degree(degree) {}
  std::string id;
  int degree;
};

struct WellDefinednessViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LiftFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kspec
