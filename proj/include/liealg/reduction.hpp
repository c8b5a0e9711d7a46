#ifndef LIEALG_REDUCTION_HPP
#define LIEALG_REDUCTION_HPP

#include <map>
#include <memory>
#include <string>

#include "liealg/isomorphism.hpp"

namespace liealg {

/// Coefficient expression over the script parameters:
/// sums/products/negation/inv of parameters and integer literals.
struct ScalarExpr {
  enum Kind { Const, Param, Add, Sub, Mul, Neg, Inv } kind = Const;
  long long cval = 0;
  std::string param;
  std::shared_ptr<ScalarExpr> a, b;

  Scalar eval(FieldSpec f, const std::map<std::string, Scalar>& bind) const;
  std::string to_string() const;
};

/// One basis-change step of a proof-replay script.
struct ReductionStep {
  enum Kind { Replace, Scale, Swap } kind = Replace;
  int target = 0;  // 1-based basis index as written in the scripts
  int other = 0;   // swap partner
  // Replace: target <- Σ coeff_i * x_{index_i}
  std::vector<std::pair<ScalarExpr, int>> combination;
  ScalarExpr factor;  // Scale
  std::string text;   // original line, used in error reports
};

struct ReductionScript {
  std::vector<ReductionStep> steps;
  std::map<std::string, long long> default_bindings;  // from the bind header

  /// Line format: `bind a1=2 a2=1`, `replace 4 <- 4 - a1*3`,
  /// `scale 5 by inv(a7)`, `swap 4 5`; `#` comments.
  static ReductionScript parse(const std::string& text);
  std::string serialize() const;
};

struct ReductionOutcome {
  LieAlgebra algebra;
  BasisChange change;  // composite of all steps
};

/// Replays the script on L.  A step that needs the inverse of a parameter
/// bound to zero, or a non-invertible replacement, throws
/// StepNotInvertibleError naming the step.
ReductionOutcome run_reduction(const LieAlgebra& L, const ReductionScript& script,
                               const std::map<std::string, Scalar>& bindings);

/// Convenience: bind from integers.
std::map<std::string, Scalar> bind_ints(FieldSpec f,
                                        const std::map<std::string, long long>& vals);

}  // namespace liealg

#endif
