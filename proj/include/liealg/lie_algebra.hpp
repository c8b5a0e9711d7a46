#ifndef LIEALG_LIE_ALGEBRA_HPP
#define LIEALG_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <vector>

#include "liealg/subspace.hpp"

namespace liealg {

/// Finite-dimensional Lie algebra given by structure constants on a basis.
/// Only pairs i < j are stored (0-based); [e_j,e_i] = -[e_i,e_j] and
/// [e_i,e_i] = 0 are structural.  Absent pairs bracket to zero.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(FieldSpec f, std::size_t dim) : field_(f), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  bool validated() const { return validated_; }

  /// Define [e_i, e_j] = v for i < j; zero vectors are dropped.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  /// [e_i, e_j] for arbitrary i, j.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coordinate tuples.
  Vec bracket(const Vec& u, const Vec& v) const;

  /// Matrix of ad(v): w -> [v, w].
  Matrix ad(const Vec& v) const;

  const std::map<std::pair<std::size_t, std::size_t>, Vec>& table() const { return table_; }

  /// Marks the algebra validated; call after jacobi_check returns empty.
  void mark_validated() { validated_ = true; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }
  friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Vec> table_;
  bool validated_ = false;
};

/// All basis triples i<j<k violating Jacobi; empty list means valid.
std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& L);

/// jacobi_check + mark_validated, throwing ValidationError on failure.
void validate(LieAlgebra& L);

struct SeriesReport {
  std::vector<Subspace> lower;  // γ1 ⊇ γ2 ⊇ ... (nonzero terms only)
  std::vector<Subspace> upper;  // Z1 ⊆ Z2 ⊆ ... up to L
  std::size_t cls = 0;          // nilpotency class
  std::vector<std::size_t> lower_dims() const;
  std::vector<std::size_t> upper_dims() const;
};

/// Lower and upper central series; throws NotNilpotentError if the γ-chain
/// stabilizes above zero.
SeriesReport series(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
Subspace derived_subalgebra(const LieAlgebra& L);  // γ2

Subspace subalgebra_close(const LieAlgebra& L, const std::vector<Vec>& gens);
Subspace ideal_close(const LieAlgebra& L, const std::vector<Vec>& gens);
bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_bracket_closed(const LieAlgebra& L, const Subspace& S);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;  // quotient coords of an L-coordinate tuple
};

/// L / I on the pivot-greedy complement of I; I must be an ideal.
Quotient quotient(const LieAlgebra& L, const Subspace& I);

/// Bracket-closed S as an algebra on its own RREF basis rows.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S);

struct HypothesisReport {
  bool class_is_3 = false;
  std::size_t dim_derived = 0;
  bool center_eq_gamma3 = false;
  std::size_t center_dim = 0;
  bool is_stem = false;
  bool satisfies_hypotheses = false;
};

/// The standing hypotheses of the classification: cl(L)=3, dim γ2 = 3,
/// Z(L) = γ3(L) of dimension 2, stem.
HypothesisReport hypothesis_check(const LieAlgebra& L);

struct MoneyhunReport {
  std::size_t n = 0;           // dim L/Z(L)
  std::size_t bound = 0;       // n(n-1)/2
  std::size_t dim_derived = 0;
  bool holds = false;
};

MoneyhunReport moneyhun_check(const LieAlgebra& L);

/// t(L^2) = n(n-1)/2 - dim γ2(L), n = dim L/Z(L).
long long t_of_derived(const LieAlgebra& L);

/// γ_{c-i} ⊄ Z_i for all 0 < i <= c-1 (class c >= 2 required).
bool proposition_class_check(const LieAlgebra& L);

enum class LemmaLowResult { Holds, Fails, NotApplicable };

/// With K a subalgebra satisfying L² = K² + L³: checks γ_i(L) = γ_i(K)
/// for i >= 2 and that K is an ideal.
LemmaLowResult lemma_low_check(const LieAlgebra& L, const Subspace& K);

}  // namespace liealg

#endif
