#pragma once

#include <stdexcept>
#include <string>

namespace lgs {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GcdViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyWeights : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotGeneralType : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotNarrow : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct OrderMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FlavorMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveArgument : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonIntegerResult : std::logic_error {
  using std::logic_error::logic_error;
};

struct PoleInPrefactor : std::domain_error {
  using std::domain_error::domain_error;
};

struct PrecisionBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CancellationFailure : std::logic_error {
  long m;
  long ell;
  CancellationFailure(const std::string& what, long m_, long ell_)
      : std::logic_error(what), m(m_), ell(ell_) {}
};

struct RelationViolated : std::logic_error {
  using std::logic_error::logic_error;
};

// Internal identity checks (paper identities re-derived at runtime).
struct IdentityFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lgs
