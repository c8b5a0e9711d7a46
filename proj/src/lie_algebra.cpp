#include "liealg/lie_algebra.hpp"

namespace liealg {

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= j || j >= dim_) throw BadParameterError("set_bracket requires i < j < dim");
  if (v.size() != dim_) throw DimensionMismatchError("bracket value");
  for (const auto& c : v)
    if (c.field() != field_) throw FieldMismatchError();
  validated_ = false;
  if (is_zero_vec(v))
    table_.erase({i, j});
  else
    table_[{i, j}] = v;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vec(field_, dim_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return zero_vec(field_, dim_);
  return flip ? scale(-Scalar::one(field_), it->second) : it->second;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatchError("bracket");
  for (const auto& c : u)
    if (c.field() != field_) throw FieldMismatchError();
  for (const auto& c : v)
    if (c.field() != field_) throw FieldMismatchError();
  Vec r = zero_vec(field_, dim_);
  for (const auto& [ij, w] : table_) {
    auto [i, j] = ij;
    Scalar c = u[i] * v[j] - u[j] * v[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) r[k] += c * w[k];
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& v) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(v, unit_vec(field_, dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& L) {
  std::vector<std::array<std::size_t, 3>> bad;
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = L.bracket(L.bracket_basis(i, j), unit_vec(L.field(), n, k));
        s = add(s, L.bracket(L.bracket_basis(j, k), unit_vec(L.field(), n, i)));
        s = add(s, L.bracket(L.bracket_basis(k, i), unit_vec(L.field(), n, j)));
        if (!is_zero_vec(s)) bad.push_back({i, j, k});
      }
  return bad;
}

void validate(LieAlgebra& L) {
  auto bad = jacobi_check(L);
  if (!bad.empty())
    throw ValidationError(static_cast<int>(bad[0][0]) + 1, static_cast<int>(bad[0][1]) + 1,
                          static_cast<int>(bad[0][2]) + 1);
  L.mark_validated();
}

std::vector<std::size_t> SeriesReport::lower_dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : lower) d.push_back(s.dim());
  return d;
}

std::vector<std::size_t> SeriesReport::upper_dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : upper) d.push_back(s.dim());
  return d;
}

namespace {

// Linear operator "reduce against U" as a matrix; kernel-membership in U
// becomes a linear condition usable inside larger systems.
Matrix reduction_operator(const Subspace& U) {
  std::size_t n = U.ambient_dim();
  Matrix R = Matrix::identity(U.field(), n);
  for (std::size_t r = 0; r < U.dim(); ++r) {
    std::size_t p = U.pivots()[r];
    for (std::size_t j = 0; j < n; ++j) R.at(j, p) -= U.basis().at(r, j);
  }
  // row j of R*v is v_j - Σ_r v_{p_r} B_{r,j}; transpose of the above fill.
  return R;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A) {
  std::size_t n = L.dim();
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < A.dim(); ++r)
    for (std::size_t k = 0; k < n; ++k) {
      Vec w = L.bracket(A.basis().row(r), unit_vec(L.field(), n, k));
      if (!is_zero_vec(w)) gens.push_back(w);
    }
  return Subspace::span(L.field(), n, gens);
}

}  // namespace

SeriesReport series(const LieAlgebra& L) {
  SeriesReport rep;
  std::size_t n = L.dim();
  Subspace g = Subspace::full(L.field(), n);
  std::size_t steps = 0;
  while (g.dim() > 0) {
    rep.lower.push_back(g);
    Subspace next = bracket_span(L, g);
    if (next == g) throw NotNilpotentError();
    if (++steps > n + 1) throw NotNilpotentError();
    g = next;
  }
  rep.cls = rep.lower.size();

  Subspace z = Subspace::zero(L.field(), n);
  steps = 0;
  while (z.dim() < n) {
    // Z_{i+1} = { v : [v, e_k] ∈ Z_i for all k } = ker of stacked R∘ad(e_k).
    Matrix R = reduction_operator(z);
    Matrix stacked(L.field(), n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Matrix rk = R * L.ad(unit_vec(L.field(), n, k));
      // columns of ad(e_k) are [e_k, e_j]; we want [v, e_k], so negate —
      // irrelevant for the kernel.
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked.at(k * n + r, c) = rk.at(r, c);
    }
    Matrix kern = kernel(stacked);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < kern.rows(); ++r) rows.push_back(kern.row(r));
    Subspace next = Subspace::span(L.field(), n, rows);
    if (next == z) throw NotNilpotentError();
    rep.upper.push_back(next);
    z = next;
    if (++steps > n + 1) throw NotNilpotentError();
  }
  if (n == 0) rep.upper.push_back(Subspace::zero(L.field(), 0));
  return rep;
}

Subspace center(const LieAlgebra& L) {
  std::size_t n = L.dim();
  if (n == 0) return Subspace::zero(L.field(), 0);
  Matrix stacked(L.field(), n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix adk = L.ad(unit_vec(L.field(), n, k));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(k * n + r, c) = adk.at(r, c);
  }
  Matrix kern = kernel(stacked);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < kern.rows(); ++r) rows.push_back(kern.row(r));
  return Subspace::span(L.field(), n, rows);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  return bracket_span(L, Subspace::full(L.field(), L.dim()));
}

Subspace subalgebra_close(const LieAlgebra& L, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(L.field(), L.dim(), gens);
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < s.dim(); ++a) {
      rows.push_back(s.basis().row(a));
      for (std::size_t b = a + 1; b < s.dim(); ++b) {
        Vec w = L.bracket(s.basis().row(a), s.basis().row(b));
        if (!is_zero_vec(w)) rows.push_back(w);
      }
    }
    Subspace next = Subspace::span(L.field(), L.dim(), rows);
    if (next == s) return s;
    s = next;
  }
}

Subspace ideal_close(const LieAlgebra& L, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(L.field(), L.dim(), gens);
  for (;;) {
    Subspace next = s + bracket_span(L, s);
    if (next == s) return s;
    s = next;
  }
}

bool is_bracket_closed(const LieAlgebra& L, const Subspace& S) {
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = a + 1; b < S.dim(); ++b)
      if (!S.contains(L.bracket(S.basis().row(a), S.basis().row(b)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t k = 0; k < L.dim(); ++k)
      if (!S.contains(L.bracket(S.basis().row(a), unit_vec(L.field(), L.dim(), k))))
        return false;
  return true;
}

Quotient quotient(const LieAlgebra& L, const Subspace& I) {
  if (I.ambient_dim() != L.dim()) throw DimensionMismatchError("quotient");
  if (!is_ideal(L, I)) throw NotAnIdealError();
  std::size_t n = L.dim();
  // Quotient coordinates: standard indices not claimed by I's pivots.
  std::vector<std::size_t> free_idx;
  {
    std::vector<bool> is_piv(n, false);
    for (std::size_t p : I.pivots()) is_piv[p] = true;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_piv[k]) free_idx.push_back(k);
  }
  std::size_t q = free_idx.size();
  // projection: reduce v against I, then read off the free coordinates;
  // reduce(v)_j = v_j - Σ_r v_{p_r} B_{r,j}.
  Matrix proj(L.field(), q, n);
  for (std::size_t a = 0; a < q; ++a) {
    std::size_t j = free_idx[a];
    proj.at(a, j) = Scalar::one(L.field());
    for (std::size_t r = 0; r < I.dim(); ++r)
      proj.at(a, I.pivots()[r]) -= I.basis().at(r, j);
  }
  LieAlgebra Q(L.field(), q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vec w = L.bracket(unit_vec(L.field(), n, free_idx[a]), unit_vec(L.field(), n, free_idx[b]));
      Q.set_bracket(a, b, proj.apply(w));
    }
  validate(Q);
  return {Q, proj};
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S) {
  if (!is_bracket_closed(L, S)) throw BadParameterError("restriction of a non-closed subspace");
  LieAlgebra A(L.field(), S.dim());
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = a + 1; b < S.dim(); ++b) {
      Vec w = L.bracket(S.basis().row(a), S.basis().row(b));
      A.set_bracket(a, b, S.coordinates(w));
    }
  A.mark_validated();  // Jacobi restricts
  return A;
}

HypothesisReport hypothesis_check(const LieAlgebra& L) {
  SeriesReport sr = series(L);
  Subspace Z = center(L);
  HypothesisReport rep;
  rep.class_is_3 = sr.cls == 3;
  rep.dim_derived = sr.lower.size() > 1 ? sr.lower[1].dim() : 0;
  Subspace g3 = sr.lower.size() > 2 ? sr.lower[2] : Subspace::zero(L.field(), L.dim());
  rep.center_eq_gamma3 = (Z == g3);
  rep.center_dim = Z.dim();
  rep.is_stem = sr.lower.size() > 1 ? sr.lower[1].contains(Z) : Z.dim() == 0;
  // "≅ A(2)" reduces to a dimension test: central subspaces are abelian.
  rep.satisfies_hypotheses = rep.class_is_3 && rep.dim_derived == 3 &&
                                   rep.center_eq_gamma3 && rep.center_dim == 2 && rep.is_stem;
  return rep;
}

MoneyhunReport moneyhun_check(const LieAlgebra& L) {
  MoneyhunReport rep;
  Subspace Z = center(L);
  rep.n = L.dim() - Z.dim();
  rep.bound = rep.n * (rep.n - 1) / 2;
  rep.dim_derived = derived_subalgebra(L).dim();
  rep.holds = rep.dim_derived <= rep.bound;
  return rep;
}

long long t_of_derived(const LieAlgebra& L) {
  MoneyhunReport m = moneyhun_check(L);
  return static_cast<long long>(m.bound) - static_cast<long long>(m.dim_derived);
}

bool proposition_class_check(const LieAlgebra& L) {
  SeriesReport sr = series(L);
  if (sr.cls < 2) throw BadParameterError("proposition requires class >= 2");
  for (std::size_t i = 1; i + 1 <= sr.cls; ++i) {
    const Subspace& gamma = sr.lower[sr.cls - i - 1];  // γ_{c-i}
    const Subspace& zi = sr.upper[i - 1];              // Z_i
    if (zi.contains(gamma)) return false;
  }
  return true;
}

LemmaLowResult lemma_low_check(const LieAlgebra& L, const Subspace& K) {
  if (!is_bracket_closed(L, K)) throw BadParameterError("K must be a subalgebra");
  // γ-series of K inside ambient coordinates.
  std::vector<Subspace> gk;
  gk.push_back(K);
  for (;;) {
    const Subspace& prev = gk.back();
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < prev.dim(); ++a)
      for (std::size_t b = 0; b < K.dim(); ++b) {
        Vec w = L.bracket(prev.basis().row(a), K.basis().row(b));
        if (!is_zero_vec(w)) gens.push_back(w);
      }
    Subspace next = Subspace::span(L.field(), L.dim(), gens);
    if (next == prev || next.dim() == 0) {
      gk.push_back(next);
      break;
    }
    gk.push_back(next);
  }
  SeriesReport sr = series(L);
  auto gammaL = [&](std::size_t i) {  // 1-based
    return i <= sr.lower.size() ? sr.lower[i - 1] : Subspace::zero(L.field(), L.dim());
  };
  auto gammaK = [&](std::size_t i) {
    return i <= gk.size() ? gk[i - 1] : Subspace::zero(L.field(), L.dim());
  };
  if (gammaL(2) != gammaK(2) + gammaL(3)) return LemmaLowResult::NotApplicable;
  for (std::size_t i = 2; i <= sr.cls + 1; ++i)
    if (gammaL(i) != gammaK(i)) return LemmaLowResult::Fails;
  if (!is_ideal(L, K)) return LemmaLowResult::Fails;
  return LemmaLowResult::Holds;
}

}  // namespace liealg
