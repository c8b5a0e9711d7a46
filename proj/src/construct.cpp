#include "liealg/construct.hpp"

namespace liealg {

LieAlgebra abelian(FieldSpec f, std::size_t n) {
  LieAlgebra L(f, n);
  L.mark_validated();
  return L;
}

LieAlgebra heisenberg(FieldSpec f, std::size_t m) {
  if (m < 1) throw BadParameterError("heisenberg requires m >= 1");
  std::size_t n = 2 * m + 1;
  LieAlgebra L(f, n);
  for (std::size_t i = 0; i < m; ++i)
    L.set_bracket(2 * i, 2 * i + 1, unit_vec(f, n, n - 1));
  L.mark_validated();
  return L;
}

LieAlgebra free_nilpotent_class2(FieldSpec f, std::size_t g) {
  if (g < 2) throw BadParameterError("free_nilpotent_class2 requires g >= 2");
  std::size_t n = g + g * (g - 1) / 2;
  LieAlgebra L(f, n);
  std::size_t extra = g;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      L.set_bracket(i, j, unit_vec(f, n, extra++));
  L.mark_validated();
  return L;
}

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  if (A.field() != B.field()) throw FieldMismatchError();
  std::size_t na = A.dim(), n = na + B.dim();
  FieldSpec f = A.field();
  LieAlgebra L(f, n);
  auto lift_a = [&](const Vec& v) {
    Vec w = zero_vec(f, n);
    for (std::size_t k = 0; k < na; ++k) w[k] = v[k];
    return w;
  };
  auto lift_b = [&](const Vec& v) {
    Vec w = zero_vec(f, n);
    for (std::size_t k = 0; k < v.size(); ++k) w[na + k] = v[k];
    return w;
  };
  for (const auto& [ij, v] : A.table()) L.set_bracket(ij.first, ij.second, lift_a(v));
  for (const auto& [ij, v] : B.table())
    L.set_bracket(na + ij.first, na + ij.second, lift_b(v));
  if (A.validated() && B.validated()) L.mark_validated();
  return L;
}

bool is_derivation(const LieAlgebra& I, const Matrix& D) {
  std::size_t n = I.dim();
  if (D.rows() != n || D.cols() != n) throw DimensionMismatchError("derivation matrix");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec lhs = D.apply(I.bracket_basis(a, b));
      Vec rhs = add(I.bracket(D.col(a), unit_vec(I.field(), n, b)),
                    I.bracket(unit_vec(I.field(), n, a), D.col(b)));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra semidirect_sum(const LieAlgebra& I, const LieAlgebra& J,
                          const DerivationAction& action) {
  if (I.field() != J.field()) throw FieldMismatchError();
  if (action.matrices.size() != J.dim())
    throw DimensionMismatchError("one action matrix per basis element of J");
  for (const auto& D : action.matrices)
    if (!is_derivation(I, D)) throw NotADerivationError();
  std::size_t ni = I.dim(), n = ni + J.dim();
  FieldSpec f = I.field();
  LieAlgebra L(f, n);
  for (const auto& [ij, v] : I.table()) {
    Vec w = zero_vec(f, n);
    for (std::size_t k = 0; k < ni; ++k) w[k] = v[k];
    L.set_bracket(ij.first, ij.second, w);
  }
  for (const auto& [ij, v] : J.table()) {
    Vec w = zero_vec(f, n);
    for (std::size_t k = 0; k < v.size(); ++k) w[ni + k] = v[k];
    L.set_bracket(ni + ij.first, ni + ij.second, w);
  }
  // [e_i, j_a] = -D_a(e_i), stored on the (i, ni+a) slot.
  for (std::size_t a = 0; a < J.dim(); ++a)
    for (std::size_t i = 0; i < ni; ++i) {
      Vec d = action.matrices[a].col(i);
      Vec w = zero_vec(f, n);
      for (std::size_t k = 0; k < ni; ++k) w[k] = -d[k];
      L.set_bracket(i, ni + a, w);
    }
  auto bad = jacobi_check(L);
  if (!bad.empty())
    throw JacobiFailureError(static_cast<int>(bad[0][0]), static_cast<int>(bad[0][1]),
                             static_cast<int>(bad[0][2]));
  L.mark_validated();
  return L;
}

CentralProduct central_product(const LieAlgebra& A, const LieAlgebra& B,
                               const Matrix& dom, const Matrix& img) {
  if (A.field() != B.field()) throw FieldMismatchError();
  if (dom.rows() != img.rows()) throw DimensionMismatchError("gluing map rows");
  if (dom.cols() != A.dim() || img.cols() != B.dim())
    throw DimensionMismatchError("gluing map columns");
  Subspace za = center(A), zb = center(B);
  std::vector<Vec> dom_rows, img_rows;
  for (std::size_t r = 0; r < dom.rows(); ++r) {
    dom_rows.push_back(dom.row(r));
    img_rows.push_back(img.row(r));
  }
  for (const auto& v : dom_rows)
    if (!za.contains(v)) throw NotCentralDomainError();
  for (const auto& v : img_rows)
    if (!zb.contains(v)) throw NotCentralImageError();
  if (rref(dom).rank != dom.rows() || rref(img).rank != img.rows())
    throw NotInjectiveError();

  LieAlgebra D = direct_sum(A, B);
  std::size_t na = A.dim(), n = D.dim();
  std::vector<Vec> glue;
  for (std::size_t r = 0; r < dom.rows(); ++r) {
    Vec g = zero_vec(A.field(), n);
    for (std::size_t k = 0; k < na; ++k) g[k] = dom.at(r, k);
    for (std::size_t k = 0; k < B.dim(); ++k) g[na + k] = -img.at(r, k);
    glue.push_back(g);
  }
  Quotient q = quotient(D, Subspace::span(A.field(), n, glue));
  CentralProduct out;
  out.algebra = q.algebra;
  std::size_t m = q.algebra.dim();
  out.embed_a = Matrix(A.field(), m, A.dim());
  out.embed_b = Matrix(A.field(), m, B.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) {
    Vec v = zero_vec(A.field(), n);
    v[c] = Scalar::one(A.field());
    Vec w = q.projection.apply(v);
    for (std::size_t r = 0; r < m; ++r) out.embed_a.at(r, c) = w[r];
  }
  for (std::size_t c = 0; c < B.dim(); ++c) {
    Vec v = zero_vec(A.field(), n);
    v[na + c] = Scalar::one(A.field());
    Vec w = q.projection.apply(v);
    for (std::size_t r = 0; r < m; ++r) out.embed_b.at(r, c) = w[r];
  }
  return out;
}

StemDecomposition stem_decompose(const LieAlgebra& L) {
  Subspace g2 = derived_subalgebra(L);
  if (g2.dim() == 0) throw AbelianInputError();
  Subspace Z = center(L);
  Subspace zg = Z.intersect(g2);
  StemDecomposition out;
  out.abelian_part = zg.complement_in(Z);
  // S: grow γ2 by standard vectors missing from γ2 ⊕ A.
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < g2.dim(); ++r) rows.push_back(g2.basis().row(r));
  Subspace acc = g2 + out.abelian_part;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    Vec e = unit_vec(L.field(), L.dim(), k);
    if (!acc.contains(e)) {
      rows.push_back(e);
      acc = acc + Subspace::span(L.field(), L.dim(), {e});
    }
  }
  out.stem_part = Subspace::span(L.field(), L.dim(), rows);
  if (out.stem_part.dim() + out.abelian_part.dim() != L.dim() ||
      out.stem_part.intersect(out.abelian_part).dim() != 0)
    throw StructureMismatchError("stem decomposition is not a direct sum");
  // stem property of S: Z(S) ⊆ S².
  LieAlgebra S = restrict_to(L, out.stem_part);
  if (!derived_subalgebra(S).contains(center(S)))
    throw StructureMismatchError("stem part has central elements outside its derived subalgebra");
  return out;
}

Dim1DerivedReport recognize_dim1_derived(const LieAlgebra& L) {
  Subspace g2 = derived_subalgebra(L);
  if (g2.dim() != 1) throw WrongDerivedDimError();
  series(L);  // nilpotency guard
  Subspace Z = center(L);
  std::size_t codim = L.dim() - Z.dim();
  if (codim % 2 != 0)
    throw StructureMismatchError("odd center codimension with one-dimensional derived subalgebra");
  Dim1DerivedReport rep;
  rep.m = codim / 2;
  rep.abelian_rank = L.dim() - 2 * rep.m - 1;
  rep.capable = rep.m == 1;
  return rep;
}

namespace {

// 1-based bracket helper for catalog tables.
void put(LieAlgebra& L, int i, int j, std::initializer_list<int> targets) {
  Vec v = zero_vec(L.field(), L.dim());
  for (int t : targets) v[t - 1] = Scalar::one(L.field());
  L.set_bracket(i - 1, j - 1, v);
}

}  // namespace

LieAlgebra catalog(const std::string& name, FieldSpec f) {
  if (name == "L5_9") {
    LieAlgebra L(f, 5);
    put(L, 1, 2, {3});
    put(L, 1, 3, {4});
    put(L, 2, 3, {5});
    validate(L);
    return L;
  }
  if (name == "L1" || name == "L2" || name == "L3" || name == "L4") {
    LieAlgebra L(f, 7);
    put(L, 1, 2, {3});
    if (name == "L1") {
      put(L, 1, 3, {6});
      put(L, 1, 4, {6});
      put(L, 2, 3, {7});
      put(L, 1, 5, {7});
    } else if (name == "L2") {
      put(L, 1, 3, {6});
      put(L, 2, 4, {6});
      put(L, 2, 3, {7});
      put(L, 1, 5, {7});
    } else if (name == "L3") {
      put(L, 1, 3, {6});
      put(L, 2, 3, {7});
      put(L, 4, 5, {7});
    } else {
      put(L, 1, 3, {6});
      put(L, 2, 4, {6});
      put(L, 2, 3, {7});
      put(L, 4, 5, {7});
    }
    validate(L);
    return L;
  }
  if (name == "GH5") {
    // rank-2 generalized Heisenberg: free class-2 on 3 generators modulo
    // one central line.
    LieAlgebra F3 = free_nilpotent_class2(f, 3);
    Subspace line = Subspace::span(f, 6, {unit_vec(f, 6, 5)});
    return quotient(F3, line).algebra;
  }
  if (name.size() > 2 && name.substr(0, 2) == "A(" && name.back() == ')') {
    long v = std::stol(name.substr(2, name.size() - 3));
    if (v < 0) throw BadParameterError("A(n) requires n >= 0");
    return abelian(f, static_cast<std::size_t>(v));
  }
  if (name.size() > 2 && name.substr(0, 2) == "H(" && name.back() == ')') {
    long v = std::stol(name.substr(2, name.size() - 3));
    if (v < 1) throw BadParameterError("H(m) requires m >= 1");
    return heisenberg(f, static_cast<std::size_t>(v));
  }
  throw UnknownNameError(name);
}

}  // namespace liealg
