#include "liealg/classify.hpp"

namespace liealg {

namespace {

// span of all [u, v], u in U, v in V, in ambient coordinates
Subspace bracket_subspace(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < U.dim(); ++a)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      Vec w = L.bracket(U.basis().row(a), V.basis().row(b));
      if (!is_zero_vec(w)) gens.push_back(w);
    }
  return Subspace::span(L.field(), L.dim(), gens);
}

// center of the subalgebra S, as an ambient subspace
Subspace center_in_ambient(const LieAlgebra& L, const Subspace& S) {
  LieAlgebra R = restrict_to(L, S);
  Subspace z = center(R);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < z.dim(); ++r) {
    Vec amb = zero_vec(L.field(), L.dim());
    for (std::size_t c = 0; c < S.dim(); ++c)
      if (!z.basis().at(r, c).is_zero())
        amb = add(amb, scale(z.basis().at(r, c), S.basis().row(c)));
    rows.push_back(amb);
  }
  return Subspace::span(L.field(), L.dim(), rows);
}

// lift of a quotient subspace through the section of the projection
Subspace lift_through(const LieAlgebra& L, const Quotient& q, const Subspace& V,
                      const Subspace& Z) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < Z.dim(); ++r) rows.push_back(Z.basis().row(r));
  for (std::size_t r = 0; r < V.dim(); ++r) {
    Vec up = zero_vec(L.field(), L.dim());
    // section: quotient coordinate a corresponds to the a-th free column
    for (std::size_t a = 0; a < V.basis().cols(); ++a) {
      const Scalar& c = V.basis().at(r, a);
      if (c.is_zero()) continue;
      // find the ambient column of quotient coordinate a: the projection has
      // a 1 in exactly one "free" column per row
      for (std::size_t k = 0; k < L.dim(); ++k) {
        if (q.projection.at(a, k).is_one()) {
          bool pure = true;
          for (std::size_t a2 = 0; a2 < q.projection.rows(); ++a2)
            if (a2 != a && !q.projection.at(a2, k).is_zero()) pure = false;
          if (pure) {
            Vec e = unit_vec(L.field(), L.dim(), k);
            up = add(up, scale(c, e));
            break;
          }
        }
      }
    }
    rows.push_back(up);
  }
  return Subspace::span(L.field(), L.dim(), rows);
}

// greedy complement of avoid inside whole that contains seed
Subspace complement_containing(const Subspace& seed, const Subspace& avoid,
                               const Subspace& whole) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < seed.dim(); ++r) rows.push_back(seed.basis().row(r));
  Subspace acc = seed + avoid;
  for (std::size_t r = 0; r < whole.dim(); ++r) {
    Vec v = whole.basis().row(r);
    if (!acc.contains(v)) {
      rows.push_back(v);
      acc = acc + Subspace::span(seed.field(), seed.ambient_dim(), {v});
    }
  }
  return Subspace::span(seed.field(), seed.ambient_dim(), rows);
}

}  // namespace

ClauseWitness theorem_a_classify(const LieAlgebra& L) {
  HypothesisReport hyp = hypothesis_check(L);
  if (!hyp.satisfies_hypotheses) {
    std::string what;
    if (!hyp.class_is_3) what = "nilpotency class is not 3";
    else if (hyp.dim_derived != 3) what = "derived subalgebra dimension is not 3";
    else if (hyp.center_dim != 2) what = "center dimension is not 2";
    else if (!hyp.center_eq_gamma3) what = "center differs from the third lower central term";
    else what = "not a stem algebra";
    throw HypothesisFailureError(what);
  }
  std::size_t n = L.dim();
  FieldSpec f = L.field();
  Subspace Z = center(L);
  Subspace g2 = derived_subalgebra(L);

  ClauseWitness w;
  if (n == 5) {
    w.clause = "base";
    w.I = Subspace::full(f, n);
    return w;
  }

  Quotient q = quotient(L, Z);
  const LieAlgebra& Q = q.algebra;
  std::size_t nq = Q.dim();

  // Q ≅ H(1) ⊕ A(n-5): one-dimensional derived subalgebra with m = 1
  Subspace g2q = derived_subalgebra(Q);
  if (g2q.dim() != 1)
    throw StructureMismatchError("central quotient has derived dimension " +
                                 std::to_string(g2q.dim()));
  Subspace Zq = center(Q);
  if (nq - Zq.dim() != 2)
    throw StructureMismatchError("central quotient is not H(1) plus abelian");

  // first basis pair with nonzero quotient bracket
  std::size_t ua = 0, ub = 0;
  bool got = false;
  for (std::size_t a = 0; a < nq && !got; ++a)
    for (std::size_t b = a + 1; b < nq && !got; ++b)
      if (!is_zero_vec(Q.bracket_basis(a, b))) {
        ua = a;
        ub = b;
        got = true;
      }
  if (!got) throw StructureMismatchError("central quotient is abelian");
  Vec u = unit_vec(f, nq, ua), v = unit_vec(f, nq, ub);
  Vec wv = Q.bracket_basis(ua, ub);
  Subspace Hpart = Subspace::span(f, nq, {u, v, wv});
  if (Hpart.dim() != 3) throw StructureMismatchError("H(1) part did not have dimension 3");
  Subspace wline = Subspace::span(f, nq, {wv});
  Subspace Cpart = wline.complement_in(Zq);
  if (Hpart.intersect(Cpart).dim() != 0 || (Hpart + Cpart).dim() != nq)
    throw StructureMismatchError("H(1) ⊕ A decomposition of the quotient failed");

  Subspace I1 = lift_through(L, q, Hpart, Z);
  Subspace I2 = lift_through(L, q, Cpart, Z);
  if (I1.dim() != 5 || I2.dim() != n - 3 || !is_ideal(L, I1) || !is_ideal(L, I2))
    throw StructureMismatchError("ideal lifts have unexpected shape");
  if (I1.intersect(I2) != Z) throw StructureMismatchError("I1 ∩ I2 is not the center");

  // I1 is the unique 5-dim stem core (L_{5,9} type)
  {
    LieAlgebra C5 = restrict_to(L, I1);
    HypothesisReport h5 = hypothesis_check(C5);
    if (!h5.satisfies_hypotheses)
      throw StructureMismatchError("core ideal is not of L_{5,9} type");
  }
  w.I = I1;

  LieAlgebra K2 = restrict_to(L, I2);
  Subspace g2I2 = bracket_subspace(L, I2, I2);
  if (!Z.contains(g2I2)) throw StructureMismatchError("I2 derived part escapes the center");

  if (g2I2.dim() == 0) {
    // case (a): I2 abelian -> clause (i), L = I ⋊ A
    Subspace A = Z.complement_in(I2);
    Subspace IA = bracket_subspace(L, I1, A);
    if (IA.dim() == 0 || !Z.contains(IA))
      throw StructureMismatchError("clause (i) bracket profile violated");
    w.clause = "i";
    w.A = A;
    w.IA = IA;
    return w;
  }

  if (g2I2.dim() == 1) {
    // case (b): I2 ≅ H(m) ⊕ A(...) — split off the Heisenberg part
    Subspace tline = g2I2;
    Subspace Zi2 = center_in_ambient(L, I2);
    Subspace A1 = tline.complement_in(Zi2);
    Subspace T1 = complement_containing(tline, A1, I2);
    if (T1.intersect(A1).dim() != 0 || (T1 + A1) != I2)
      throw StructureMismatchError("Heisenberg split of I2 failed");
    if (T1.dim() % 2 == 0) throw StructureMismatchError("Heisenberg part has even dimension");
    std::size_t m = (T1.dim() - 1) / 2;
    {
      LieAlgebra TH = restrict_to(L, T1);
      Subspace zt = center(TH);
      Subspace gt = derived_subalgebra(TH);
      if (zt.dim() != 1 || gt.dim() != 1 || zt != gt)
        throw StructureMismatchError("T part is not a Heisenberg algebra");
    }
    Subspace zline = Z.intersect(A1);
    if (zline.dim() != 1)
      throw StructureMismatchError("center does not meet the abelian part in a line");
    Subspace A2 = zline.complement_in(A1);
    Subspace IT = bracket_subspace(L, I1, T1);
    if (!Z.contains(IT)) throw StructureMismatchError("[I,T] escapes the center");

    w.T = T1;
    w.heis_m = m;
    w.IT = IT;
    bool has_a = A2.dim() > 0;
    if (has_a) {
      Subspace IA = bracket_subspace(L, I1, A2);
      if (IA.dim() == 0 || !Z.contains(IA))
        throw StructureMismatchError("abelian complement fails its bracket profile");
      w.A = A2;
      w.IA = IA;
    }
    switch (IT.dim()) {
      case 0:
        w.clause = has_a ? "iii" : "ii";
        break;
      case 2:
        if (IT != Z) throw StructureMismatchError("two-dimensional [I,T] differs from Z");
        w.clause = has_a ? "v" : "iv";
        break;
      case 1: {
        Subspace t2 = bracket_subspace(L, T1, T1);
        w.it_equals_t2 = (IT == t2);
        w.clause = has_a ? "vii" : "vi";
        break;
      }
      default:
        throw StructureMismatchError("[I,T] has impossible dimension");
    }
    if (!has_a && n != 2 * m + 5)
      throw StructureMismatchError("dimension mismatch against n = 2m + 5");
    return w;
  }

  if (g2I2.dim() == 2) {
    // case (c): I2 ≅ K ⊕ A(t) with K generalized Heisenberg of rank 2
    if (g2I2 != Z) throw StructureMismatchError("rank-2 derived part of I2 differs from Z");
    Subspace Zi2 = center_in_ambient(L, I2);
    Subspace At = Z.complement_in(Zi2);
    Subspace U = Zi2.complement_in(I2);
    Subspace K = U + Z;
    Subspace g2K = bracket_subspace(L, K, K);
    if (g2K != Z) throw StructureMismatchError("K is not generalized Heisenberg of rank 2");
    if (center_in_ambient(L, K) != Z)
      throw StructureMismatchError("K center differs from Z(L)");
    if (!is_ideal(L, K)) throw StructureMismatchError("K is not an ideal");
    Subspace IK = bracket_subspace(L, I1, K);
    if (!Z.contains(IK)) throw StructureMismatchError("[I,K] escapes the center");
    w.K = K;
    w.IK = IK;
    if (At.dim() == 0) {
      w.clause = "viii";
    } else {
      Subspace IA = bracket_subspace(L, I1, At);
      if (IA.dim() == 0 || !Z.contains(IA))
        throw StructureMismatchError("clause (ix) abelian part fails its bracket profile");
      w.clause = "ix";
      w.A = At;
      w.IA = IA;
    }
    return w;
  }

  throw StructureMismatchError("I2 derived dimension exceeds 2");
}

std::vector<std::string> verify_clause_witness(const LieAlgebra& L, const ClauseWitness& w) {
  std::vector<std::string> bad;
  Subspace Z = center(L);
  Subspace g2 = derived_subalgebra(L);
  SeriesReport sr = series(L);
  Subspace g3 = sr.lower.size() > 2 ? sr.lower[2] : Subspace::zero(L.field(), L.dim());

  Subspace g2I = bracket_subspace(L, w.I, w.I);
  if (g2I != g2) bad.push_back("γ2(I) != γ2(L)");
  Subspace g3I = bracket_subspace(L, w.I, g2I);
  if (g3I != g3) bad.push_back("γ3(I) != γ3(L)");
  if (center_in_ambient(L, w.I) != Z) bad.push_back("Z(I) != Z(L)");
  if (g3 != Z) bad.push_back("γ3(L) != Z(L)");

  if (w.T) {
    Subspace t2 = bracket_subspace(L, *w.T, *w.T);
    if (!(Z.contains(t2) && t2 != Z)) bad.push_back("γ2(T) not strictly inside Z(L)");
    if (w.T->dim() != 2 * w.heis_m + 1) bad.push_back("dim T != 2m+1");
  }
  if (w.K) {
    Subspace k2 = bracket_subspace(L, *w.K, *w.K);
    if (k2 != Z) bad.push_back("γ2(K) != Z(L)");
    if (center_in_ambient(L, *w.K) != Z) bad.push_back("Z(K) != Z(L)");
    if (!is_ideal(L, *w.K)) bad.push_back("K not an ideal");
  }
  if (w.A) {
    Subspace a2 = bracket_subspace(L, *w.A, *w.A);
    if (a2.dim() != 0) bad.push_back("A not abelian");
    if (w.A->intersect(Z).dim() != 0) bad.push_back("A meets the center");
    Subspace IA = bracket_subspace(L, w.I, *w.A);
    if (IA.dim() == 0 || !Z.contains(IA)) bad.push_back("[I,A] not a nonzero central subspace");
  }
  if (w.clause != "base") {
    // the witness parts must assemble to L
    Subspace total = w.I;
    if (w.T) total = total + *w.T;
    if (w.K) total = total + *w.K;
    if (w.A) total = total + *w.A;
    if (total.dim() != L.dim()) bad.push_back("witness parts do not span L");
  }
  return bad;
}

}  // namespace liealg
