#include "liealg/multiplier.hpp"

#include <map>

namespace liealg {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> lex_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ps.push_back({i, j});
  return ps;
}

}  // namespace

std::size_t ce_h2_dim(const LieAlgebra& L) {
  std::size_t n = L.dim();
  FieldSpec f = L.field();
  auto pairs = lex_pairs(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t t = 0; t < pairs.size(); ++t) pair_index[pairs[t]] = t;

  // ∂₂ as a (#pairs × n) matrix, row (i,j) = coordinates of [e_i,e_j].
  Matrix d2(f, pairs.size(), n);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    d2.set_row(t, L.bracket_basis(pairs[t].first, pairs[t].second));
  std::size_t r2 = rref(d2).rank;

  // ∂₃ rows indexed by triples, columns by pairs.
  std::vector<Vec> rows3;
  auto wedge_accum = [&](Vec& row, const Vec& val, std::size_t k, const Scalar& sgn) {
    // val ∧ e_k expanded over the pair basis
    for (std::size_t m = 0; m < n; ++m) {
      if (val[m].is_zero() || m == k) continue;
      if (m < k)
        row[pair_index[{m, k}]] += sgn * val[m];
      else
        row[pair_index[{k, m}]] -= sgn * val[m];
    }
  };
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec row = zero_vec(f, pairs.size());
        wedge_accum(row, L.bracket_basis(i, j), k, one);
        wedge_accum(row, L.bracket_basis(i, k), j, -one);
        wedge_accum(row, L.bracket_basis(j, k), i, one);
        if (!is_zero_vec(row)) rows3.push_back(row);
      }
  std::size_t r3 = rows3.empty() ? 0 : rref(Matrix::from_rows(f, rows3)).rank;
  return pairs.size() - r2 - r3;
}

TailPresentation tail_multiplier(
    const LieAlgebra& L,
    const std::optional<std::vector<std::pair<std::size_t, std::size_t>>>& defset) {
  std::size_t n = L.dim();
  FieldSpec f = L.field();
  TailPresentation tp;
  tp.pairs = lex_pairs(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t t = 0; t < tp.pairs.size(); ++t) pair_index[tp.pairs[t]] = t;

  Subspace g2 = derived_subalgebra(L);
  if (defset) {
    // provided pairs must have independent brackets spanning γ2
    std::vector<Vec> vals;
    for (auto [i, j] : *defset) vals.push_back(L.bracket_basis(i, j));
    Subspace sp = Subspace::span(f, n, vals);
    if (sp.dim() != defset->size() || sp != g2) throw BadDefsetError();
    tp.zeroed = *defset;
  } else {
    Subspace acc = Subspace::zero(f, n);
    for (auto [i, j] : tp.pairs) {
      if (acc.dim() == g2.dim()) break;
      Vec v = L.bracket_basis(i, j);
      if (!is_zero_vec(v) && !acc.contains(v)) {
        tp.zeroed.push_back({i, j});
        acc = acc + Subspace::span(f, n, {v});
      }
    }
  }
  std::vector<bool> absorbed(tp.pairs.size(), false);
  for (auto [i, j] : tp.zeroed) absorbed[pair_index[{i, j}]] = true;
  for (std::size_t t = 0; t < tp.pairs.size(); ++t)
    if (!absorbed[t]) tp.surviving.push_back(t);
  std::map<std::size_t, std::size_t> col_of;  // tail index -> relation column
  for (std::size_t c = 0; c < tp.surviving.size(); ++c) col_of[tp.surviving[c]] = c;

  // Jacobi on the extended bracket [e_i,e_j]* = [e_i,e_j] + s_ij with the
  // s central: the e-part cancels (L is Lie), the s-part of
  // [[e_i,e_j]*,e_k]* + cyc is one linear relation per triple.
  auto s_part = [&](Vec& row, std::size_t a, std::size_t b, const Scalar& coeff) {
    // contribution coeff * s_{ab}, a != b
    if (a == b) return;
    std::size_t t = a < b ? pair_index[{a, b}] : pair_index[{b, a}];
    Scalar c = a < b ? coeff : -coeff;
    if (absorbed[t]) return;  // tail set to zero
    row[col_of[t]] += c;
  };
  std::vector<Vec> rel_rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec row = zero_vec(f, tp.surviving.size());
        const Vec cij = L.bracket_basis(i, j);
        const Vec cjk = L.bracket_basis(j, k);
        const Vec cki = L.bracket_basis(k, i);
        for (std::size_t m = 0; m < n; ++m) {
          if (!cij[m].is_zero()) s_part(row, m, k, cij[m]);
          if (!cjk[m].is_zero()) s_part(row, m, i, cjk[m]);
          if (!cki[m].is_zero()) s_part(row, m, j, cki[m]);
        }
        if (!is_zero_vec(row)) {
          rel_rows.push_back(row);
          tp.relation_triples.push_back({i, j, k});
        }
      }
  tp.relations = rel_rows.empty() ? Matrix(f, 0, tp.surviving.size())
                                  : Matrix::from_rows(f, rel_rows);
  std::size_t rank = rel_rows.empty() ? 0 : rref(tp.relations).rank;
  tp.dim_m = tp.surviving.size() - rank;
  return tp;
}

InvariantBundle invariant_bundle(const LieAlgebra& L) {
  InvariantBundle b;
  b.dim = L.dim();
  SeriesReport sr = series(L);
  b.dims_gamma = sr.lower_dims();
  b.dim_center = center(L).dim();
  std::size_t ce = ce_h2_dim(L);
  std::size_t tails = tail_multiplier(L).dim_m;
  if (ce != tails)
    throw StructureMismatchError("multiplier methods disagree: CE " + std::to_string(ce) +
                                 " vs tails " + std::to_string(tails));
  b.dim_m = ce;
  b.t_l = static_cast<long long>(b.dim * (b.dim - 1) / 2) - static_cast<long long>(b.dim_m);
  b.t_l2 = t_of_derived(L);
  return b;
}

}  // namespace liealg
