#ifndef LIEALG_CLASSIFY_HPP
#define LIEALG_CLASSIFY_HPP

#include <optional>
#include <string>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Structural witness for one clause of the main classification theorem.
/// All subspaces live in the ambient coordinates of the classified algebra.
struct ClauseWitness {
  std::string clause;  // "i".."ix", or "base" for the degenerate dim-5 input
  Subspace I;          // the 5-dimensional core, class 3
  std::optional<Subspace> T;  // Heisenberg part H(m)
  std::optional<Subspace> A;  // abelian complement beyond the center
  std::optional<Subspace> K;  // generalized Heisenberg rank-2 part
  std::optional<Subspace> IT, IA, IK;  // bracket profile
  std::size_t heis_m = 0;              // T ≅ H(m)
  bool it_equals_t2 = false;           // clause (vi) refinement: [I,T] = T²
};

/// Classifies a hypothesis-satisfying algebra into one of the clauses by
/// replaying the structure proof: split L/Z(L) ≅ H(1) ⊕ A(n-5), lift the
/// two ideals, branch on the structure of the abelian-quotient ideal.
/// Throws HypothesisFailureError if the standing hypotheses fail and
/// StructureMismatchError if an internal dichotomy of the proof is not met
/// (the latter must never fire on valid input; it is a reportable finding).
ClauseWitness theorem_a_classify(const LieAlgebra& L);

/// Re-verifies every side condition of the clause witness:
///   γ2(I) = γ2(L); Z(L) = Z(I) = γ3(I) = γ3(L);
///   γ2(T) ⊊ Z(L) and dim T = 2m+1 when T is present;
///   γ2(K) = Z(L) = Z(K) and K an ideal when K is present;
///   A abelian with A ∩ Z(L) = 0 and 0 ≠ [I,A] ⊆ Z(L) when A is present.
/// Returns the list of violated conditions (empty = all verified).
std::vector<std::string> verify_clause_witness(const LieAlgebra& L, const ClauseWitness& w);

}  // namespace liealg

#endif
