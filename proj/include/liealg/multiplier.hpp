#ifndef LIEALG_MULTIPLIER_HPP
#define LIEALG_MULTIPLIER_HPP

#include <optional>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// dim H₂(L) with trivial coefficients:
///   dim ker(∂₂: Λ²L → L) − rank(∂₃: Λ³L → Λ²L),
/// ∂₂(x∧y) = [x,y],  ∂₃(x∧y∧z) = [x,y]∧z − [x,z]∧y + [y,z]∧x.
/// Λ² and Λ³ bases are ordered lexicographically on index tuples.
std::size_t ce_h2_dim(const LieAlgebra& L);

/// Central extension with one tail generator per bracket pair.
struct TailPresentation {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;   // lex order, all i<j
  std::vector<std::pair<std::size_t, std::size_t>> zeroed;  // absorbed tails (the definition set)
  Matrix relations;       // rows = Jacobi-forced relations over surviving tails
  std::vector<std::array<std::size_t, 3>> relation_triples; // generating triple per row
  std::vector<std::size_t> surviving;                       // tail indices kept (into pairs)
  std::size_t dim_m = 0;  // surviving count − rank(relations)
};

/// The tail construction: extend [e_i,e_j]* = [e_i,e_j] + s_ij with the
/// s_ij central, absorb tails on a pair set whose brackets form a basis of
/// γ₂(L) (greedy lex choice when absent), and collect the relations among
/// the remaining tails forced by the Jacobi identity.
TailPresentation tail_multiplier(
    const LieAlgebra& L,
    const std::optional<std::vector<std::pair<std::size_t, std::size_t>>>& defset =
        std::nullopt);

struct InvariantBundle {
  std::size_t dim = 0;
  std::vector<std::size_t> dims_gamma;
  std::size_t dim_center = 0;
  std::size_t dim_m = 0;   // both methods, checked to agree
  long long t_l = 0;       // C(dim,2) − dim_m
  long long t_l2 = 0;      // n(n−1)/2 − dim γ₂, n = dim L/Z(L)
};

InvariantBundle invariant_bundle(const LieAlgebra& L);

}  // namespace liealg

#endif
