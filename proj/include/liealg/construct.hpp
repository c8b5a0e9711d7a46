#ifndef LIEALG_CONSTRUCT_HPP
#define LIEALG_CONSTRUCT_HPP

#include <string>

#include "liealg/lie_algebra.hpp"

namespace liealg {

LieAlgebra abelian(FieldSpec f, std::size_t n);
/// H(m): dim 2m+1 with [e_{2i-1}, e_{2i}] = e_{2m+1} (1-based reading).
LieAlgebra heisenberg(FieldSpec f, std::size_t m);
/// Free nilpotent of class 2 on g generators: dim g + g(g-1)/2,
/// [e_i, e_j] = the (i,j)-th extra coordinate, lex order.
LieAlgebra free_nilpotent_class2(FieldSpec f, std::size_t g);

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B);

/// Action of J on I: one dim(I) x dim(I) matrix per basis element of J.
struct DerivationAction {
  std::vector<Matrix> matrices;
};

/// Checks the derivation law D[u,v] = [Du,v] + [u,Dv] on basis pairs.
bool is_derivation(const LieAlgebra& I, const Matrix& D);

/// I ⋊ J.  The assembled table must pass jacobi_check; that is the full
/// compatibility condition, checked after construction.
LieAlgebra semidirect_sum(const LieAlgebra& I, const LieAlgebra& J,
                          const DerivationAction& action);

struct CentralProduct {
  LieAlgebra algebra;
  Matrix embed_a;  // quotient coordinates of an A-coordinate tuple
  Matrix embed_b;
};

/// A ∔ B glued along an injective map of central subspaces:
/// dom rows span U ⊆ Z(A), img rows are their images in Z(B);
/// result is (A ⊕ B) / span{(u, -phi u)}.
CentralProduct central_product(const LieAlgebra& A, const LieAlgebra& B,
                               const Matrix& dom, const Matrix& img);

struct StemDecomposition {
  Subspace stem_part;     // bracket-closed, contains γ2(L), Z(stem) ⊆ stem²
  Subspace abelian_part;  // central complement
};

/// L = S ⊕ A with S stem and A abelian; requires L non-abelian.
StemDecomposition stem_decompose(const LieAlgebra& L);

struct Dim1DerivedReport {
  std::size_t m = 0;             // L ≅ H(m) ⊕ A(abelian_rank)
  std::size_t abelian_rank = 0;
  bool capable = false;          // iff m == 1
};

/// Recognizer for nilpotent L with dim γ2(L) = 1.
Dim1DerivedReport recognize_dim1_derived(const LieAlgebra& L);

/// Fixed algebras of the classification: L5_9, L1..L4, GH5, A(n), H(m).
LieAlgebra catalog(const std::string& name, FieldSpec f);

}  // namespace liealg

#endif
