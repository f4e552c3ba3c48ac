#pragma once

#include <stdexcept>
#include <string>

namespace surgery {

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested arcsinh evaluation leaves the principal-branch domain.
struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

// Newton iteration failed to converge.
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u and v are real-proportional; the coefficient system is singular.
struct DegenerateCusp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parabolic degrees do not sum to an integer across a gluing.
struct GluingIncompatibility : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotImplemented : std::logic_error {
  using std::logic_error::logic_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace surgery
