#ifndef LIEALG_SUBSPACE_HPP
#define LIEALG_SUBSPACE_HPP

#include "liealg/matrix.hpp"

namespace liealg {

/// Subspace of F^n held as an RREF basis, so set equality is comparison.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(FieldSpec f, std::size_t ambient);
  static Subspace full(FieldSpec f, std::size_t ambient);
  /// Span of arbitrary generating rows (reduced internally).
  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residue of v after reduction against the basis; zero iff contained.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the basis rows; requires contains(v).
  Vec coordinates(const Vec& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  Subspace intersect(const Subspace& other) const;
  /// Deterministic W with this ⊕ W = whole (pivot-greedy over whole's rows).
  /// Requires this ⊆ whole.
  Subspace complement_in(const Subspace& whole) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

}  // namespace liealg

#endif
