#include "liealg/subspace.hpp"

namespace liealg {

Subspace Subspace::zero(FieldSpec f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  Subspace s = zero(f, ambient);
  s.basis_ = Matrix::identity(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens) {
  for (const auto& g : gens)
    if (g.size() != ambient) throw DimensionMismatchError("span generator");
  Subspace s = zero(f, ambient);
  if (gens.empty()) return s;
  RrefResult rr = rref(Matrix::from_rows(f, gens));
  Matrix b(f, rr.rank, ambient);
  for (std::size_t r = 0; r < rr.rank; ++r) b.set_row(r, rr.reduced.row(r));
  s.basis_ = b;
  s.pivots_ = rr.pivot_cols;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatchError("reduce");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatchError("contains");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  // RREF rows have unit pivots and zeros above/below, so coordinates are
  // just the pivot-column entries; validity is checked via reduce.
  if (!contains(v)) throw NotContainedError();
  Vec c = zero_vec(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatchError("sum");
  if (a.field_ != b.field_) throw FieldMismatchError();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_.row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_.row(i));
  return Subspace::span(a.field_, a.ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatchError("intersect");
  if (other.field_ != field_) throw FieldMismatchError();
  // x in U∩V: x = c·U = d·V; solve [U^T | -V^T] null space, read U-part.
  std::size_t du = dim(), dv = other.dim();
  if (du == 0 || dv == 0) return Subspace::zero(field_, ambient_);
  Matrix m(field_, ambient_, du + dv);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t c = 0; c < du; ++c) m.at(r, c) = basis_.at(c, r);
    for (std::size_t c = 0; c < dv; ++c) m.at(r, du + c) = -other.basis_.at(c, r);
  }
  Matrix k = kernel(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vec x = zero_vec(field_, ambient_);
    for (std::size_t c = 0; c < du; ++c)
      if (!k.at(i, c).is_zero())
        x = add(x, scale(k.at(i, c), basis_.row(c)));
    rows.push_back(x);
  }
  return Subspace::span(field_, ambient_, rows);
}

Subspace Subspace::complement_in(const Subspace& whole) const {
  if (!whole.contains(*this)) throw NotContainedError();
  std::vector<Vec> chosen;
  Subspace acc = *this;
  for (std::size_t i = 0; i < whole.dim(); ++i) {
    Vec v = whole.basis_.row(i);
    if (!acc.contains(v)) {
      chosen.push_back(v);
      std::vector<Vec> rows = chosen;
      for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row(r));
      acc = Subspace::span(field_, ambient_, rows);
    }
  }
  return Subspace::span(field_, ambient_, chosen);
}

}  // namespace liealg
