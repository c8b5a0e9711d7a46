#ifndef LIEALG_ERRORS_HPP
#define LIEALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liealg {

struct FieldMismatchError : std::runtime_error {
  FieldMismatchError() : std::runtime_error("operands lie in different fields") {}
};

struct DimensionMismatchError : std::runtime_error {
  explicit DimensionMismatchError(const std::string& what)
      : std::runtime_error("dimension mismatch: " + what) {}
};

struct DivisionByZeroError : std::runtime_error {
  DivisionByZeroError() : std::runtime_error("inverse of zero") {}
};

struct BadParameterError : std::runtime_error {
  explicit BadParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct NotContainedError : std::runtime_error {
  NotContainedError() : std::runtime_error("subspace not contained in ambient argument") {}
};

struct NotNilpotentError : std::runtime_error {
  NotNilpotentError() : std::runtime_error("lower central series does not reach zero") {}
};

struct NotAnIdealError : std::runtime_error {
  NotAnIdealError() : std::runtime_error("subspace is not an ideal") {}
};

struct NotADerivationError : std::runtime_error {
  NotADerivationError() : std::runtime_error("action matrix violates the derivation law") {}
};

struct JacobiFailureError : std::runtime_error {
  int i, j, k;
  JacobiFailureError(int i_, int j_, int k_)
      : std::runtime_error("Jacobi identity fails on triple (" + std::to_string(i_) + "," +
                           std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct NotCentralDomainError : std::runtime_error {
  NotCentralDomainError() : std::runtime_error("gluing domain not contained in the center") {}
};

struct NotCentralImageError : std::runtime_error {
  NotCentralImageError() : std::runtime_error("gluing image not contained in the center") {}
};

struct NotInjectiveError : std::runtime_error {
  NotInjectiveError() : std::runtime_error("gluing map is not injective") {}
};

struct AbelianInputError : std::runtime_error {
  AbelianInputError() : std::runtime_error("operation requires a non-abelian algebra") {}
};

struct WrongDerivedDimError : std::runtime_error {
  WrongDerivedDimError() : std::runtime_error("derived subalgebra does not have dimension one") {}
};

struct UnknownNameError : std::runtime_error {
  explicit UnknownNameError(const std::string& name)
      : std::runtime_error("unknown catalog name: " + name) {}
};

struct HypothesisFailureError : std::runtime_error {
  explicit HypothesisFailureError(const std::string& what)
      : std::runtime_error("hypotheses not satisfied: " + what) {}
};

// Internal dichotomy of the classifier was not met.  Must never fire on
// valid input; when it does, the caller reports it as a finding.
struct StructureMismatchError : std::runtime_error {
  explicit StructureMismatchError(const std::string& what)
      : std::runtime_error("structure mismatch: " + what) {}
};

struct BadDefsetError : std::runtime_error {
  BadDefsetError() : std::runtime_error("chosen pairs do not span the derived subalgebra independently") {}
};

struct SingularError : std::runtime_error {
  SingularError() : std::runtime_error("basis-change matrix is singular") {}
};

struct StepNotInvertibleError : std::runtime_error {
  std::string step;
  explicit StepNotInvertibleError(const std::string& step_)
      : std::runtime_error("reduction step requires inverting zero: " + step_), step(step_) {}
};

struct UnsupportedFieldError : std::runtime_error {
  explicit UnsupportedFieldError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

struct ValidationError : std::runtime_error {
  int i, j, k;
  ValidationError(int i_, int j_, int k_)
      : std::runtime_error("Jacobi identity fails on triple (" + std::to_string(i_) + "," +
                           std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

}  // namespace liealg

#endif
