#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liealg/classify.hpp"
#include "liealg/construct.hpp"

using namespace liealg;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Vec ev(FieldSpec f, std::size_t n, std::size_t i) { return unit_vec(f, n, i); }

// L5_9 extended by a derivation a: x1 -> x4 (clause (i) exemplar, dim 6)
LieAlgebra clause_i_exemplar(FieldSpec f) {
  LieAlgebra I = catalog("L5_9", f);
  Matrix D(f, 5, 5);
  D.at(3, 0) = Scalar::one(f);  // D(x1) = x4
  return semidirect_sum(I, abelian(f, 1), {{D}});
}

// L5_9 glued with H(m) along the center: clause (ii), dim 2m+5
LieAlgebra clause_ii_exemplar(FieldSpec f, std::size_t m) {
  LieAlgebra I = catalog("L5_9", f);
  LieAlgebra H = heisenberg(f, m);
  Matrix dom(f, 1, 2 * m + 1);
  dom.at(0, 2 * m) = Scalar::one(f);  // z_H
  Matrix img(f, 1, 5);
  img.at(0, 3) = Scalar::one(f);  // -> x4
  return central_product(H, I, dom, img).algebra;
}

// helper: raw 7-dim table on x1..x5 (L5_9) plus u,v with [u,v] = x4 and
// extra central-valued cross brackets
LieAlgebra seven_dim_with_t(FieldSpec f,
                            const std::vector<std::tuple<int, int, int>>& cross) {
  LieAlgebra L(f, 7);
  L.set_bracket(0, 1, ev(f, 7, 2));
  L.set_bracket(0, 2, ev(f, 7, 3));
  L.set_bracket(1, 2, ev(f, 7, 4));
  L.set_bracket(5, 6, ev(f, 7, 3));  // [u,v] = x4: T^2 glued into Z
  for (auto [i, j, k] : cross) L.set_bracket(i, j, ev(f, 7, k));
  validate(L);
  return L;
}

}  // namespace

TEST_CASE("standard families") {
  LieAlgebra h1 = heisenberg(Q, 1);
  CHECK(h1.dim() == 3);
  CHECK(derived_subalgebra(h1).dim() == 1);
  CHECK(center(h1).dim() == 1);
  CHECK(series(h1).cls == 2);

  LieAlgebra f3 = free_nilpotent_class2(Q, 3);
  CHECK(f3.dim() == 6);
  CHECK(derived_subalgebra(f3).dim() == 3);
  CHECK(center(f3) == derived_subalgebra(f3));

  LieAlgebra gh5 = catalog("GH5", Q);
  CHECK(gh5.dim() == 5);
  CHECK(derived_subalgebra(gh5).dim() == 2);
  CHECK(center(gh5) == derived_subalgebra(gh5));  // generalized Heisenberg rank 2

  CHECK(abelian(Q, 0).dim() == 0);
  CHECK_THROWS_AS(heisenberg(Q, 0), BadParameterError);
  CHECK_THROWS_AS(free_nilpotent_class2(Q, 1), BadParameterError);
}

TEST_CASE("direct sum") {
  LieAlgebra s = direct_sum(heisenberg(Q, 1), abelian(Q, 2));
  CHECK(s.dim() == 5);
  CHECK(center(s).dim() == 3);
  CHECK(derived_subalgebra(s).dim() == 1);

  LieAlgebra t = direct_sum(abelian(Q, 0), catalog("L1", Q));
  CHECK(t == catalog("L1", Q));

  for (const char* a : {"L5_9", "H(2)"})
    for (const char* b : {"H(1)", "A(3)"}) {
      LieAlgebra A = catalog(a, Q), B = catalog(b, Q);
      LieAlgebra D = direct_sum(A, B);
      CHECK(jacobi_check(D).empty());
      CHECK(derived_subalgebra(D).dim() ==
            derived_subalgebra(A).dim() + derived_subalgebra(B).dim());
      CHECK(center(D).dim() == center(A).dim() + center(B).dim());
    }
}

TEST_CASE("semidirect sum") {
  SUBCASE("zero action degenerates to the direct sum") {
    LieAlgebra I = catalog("L5_9", Q);
    DerivationAction act{{Matrix(Q, 5, 5)}};
    CHECK(semidirect_sum(I, abelian(Q, 1), act) == direct_sum(I, abelian(Q, 1)));
  }
  SUBCASE("clause (i) action x1 -> x4") {
    LieAlgebra L = clause_i_exemplar(Q);
    CHECK(L.dim() == 6);
    CHECK(jacobi_check(L).empty());
    HypothesisReport h = hypothesis_check(L);
    CHECK(h.satisfies_hypotheses);
    // [I, A] = span(x4), nonzero and central
    Subspace z = center(L);
    CHECK(z.dim() == 2);
    CHECK(z.contains(ev(Q, 6, 3)));
  }
  SUBCASE("non-derivation is rejected") {
    LieAlgebra I = catalog("L5_9", Q);
    Matrix D(Q, 5, 5);
    D.at(2, 0) = Scalar::one(Q);  // x1 -> x3 violates the derivation law
    CHECK_FALSE(is_derivation(I, D));
    CHECK_THROWS_AS(semidirect_sum(I, abelian(Q, 1), {{D}}), NotADerivationError);
  }
}

TEST_CASE("central product") {
  SUBCASE("H(1) glued with H(1) on centers") {
    LieAlgebra H = heisenberg(Q, 1);
    Matrix dom(Q, 1, 3), img(Q, 1, 3);
    dom.at(0, 2) = Scalar::one(Q);
    img.at(0, 2) = Scalar::one(Q);
    CentralProduct cp = central_product(H, H, dom, img);
    CHECK(cp.algebra.dim() == 5);
    CHECK(derived_subalgebra(cp.algebra).dim() == 1);
    CHECK(jacobi_check(cp.algebra).empty());
  }
  SUBCASE("empty map is the direct sum") {
    LieAlgebra H = heisenberg(Q, 1);
    CentralProduct cp = central_product(H, H, Matrix(Q, 0, 3), Matrix(Q, 0, 3));
    CHECK(cp.algebra == direct_sum(H, H));
  }
  SUBCASE("clause (ii) gluing has dim 7 and satisfies the hypotheses") {
    LieAlgebra L = clause_ii_exemplar(Q, 1);
    CHECK(L.dim() == 7);
    CHECK(hypothesis_check(L).satisfies_hypotheses);
  }
  SUBCASE("non-central domain is rejected") {
    LieAlgebra H = heisenberg(Q, 1);
    Matrix dom(Q, 1, 3), img(Q, 1, 3);
    dom.at(0, 0) = Scalar::one(Q);  // x1 is not central
    img.at(0, 2) = Scalar::one(Q);
    CHECK_THROWS_AS(central_product(H, H, dom, img), NotCentralDomainError);
  }
  SUBCASE("non-injective map is rejected") {
    LieAlgebra H3 = heisenberg(Q, 3);  // center = span(e7)… dim 1
    LieAlgebra A = abelian(Q, 2);
    Matrix dom(Q, 2, 2), img(Q, 2, 7);
    dom.at(0, 0) = Scalar::one(Q);
    dom.at(1, 0) = Scalar::one(Q);  // dependent rows
    img.at(0, 6) = Scalar::one(Q);
    img.at(1, 6) = Scalar::one(Q);
    CHECK_THROWS_AS(central_product(A, H3, dom, img), NotInjectiveError);
  }
}

TEST_CASE("stem decomposition") {
  SUBCASE("H(1) ⊕ A(3)") {
    StemDecomposition sd = stem_decompose(direct_sum(heisenberg(Q, 1), abelian(Q, 3)));
    CHECK(sd.stem_part.dim() == 3);
    CHECK(sd.abelian_part.dim() == 3);
  }
  SUBCASE("L4 is stem already") {
    StemDecomposition sd = stem_decompose(catalog("L4", Q));
    CHECK(sd.stem_part.dim() == 7);
    CHECK(sd.abelian_part.dim() == 0);
  }
  SUBCASE("abelian input is rejected") {
    CHECK_THROWS_AS(stem_decompose(abelian(Q, 5)), AbelianInputError);
  }
  SUBCASE("decomposition properties") {
    for (const char* nm : {"L1", "L5_9", "H(2)"}) {
      LieAlgebra L = direct_sum(catalog(nm, Q), abelian(Q, 2));
      StemDecomposition sd = stem_decompose(L);
      CHECK(sd.stem_part.dim() + sd.abelian_part.dim() == L.dim());
      CHECK(is_bracket_closed(L, sd.stem_part));
      // [S, A] = 0 and γ2(S) = γ2(L)
      bool commutes = true;
      for (std::size_t a = 0; a < sd.stem_part.dim(); ++a)
        for (std::size_t b = 0; b < sd.abelian_part.dim(); ++b)
          commutes &= is_zero_vec(L.bracket(sd.stem_part.basis().row(a),
                                            sd.abelian_part.basis().row(b)));
      CHECK(commutes);
      LieAlgebra S = restrict_to(L, sd.stem_part);
      CHECK(derived_subalgebra(S).dim() == derived_subalgebra(L).dim());
    }
  }
}

TEST_CASE("recognizer for one-dimensional derived subalgebras") {
  Dim1DerivedReport r = recognize_dim1_derived(heisenberg(Q, 1));
  CHECK(r.m == 1);
  CHECK(r.abelian_rank == 0);
  CHECK(r.capable);

  Dim1DerivedReport r2 = recognize_dim1_derived(direct_sum(heisenberg(Q, 2), abelian(Q, 1)));
  CHECK(r2.m == 2);
  CHECK(r2.abelian_rank == 1);
  CHECK_FALSE(r2.capable);

  CHECK_THROWS_AS(recognize_dim1_derived(catalog("L1", Q)), WrongDerivedDimError);
}

TEST_CASE("catalog unknown name") {
  CHECK_THROWS_AS(catalog("L6", Q), UnknownNameError);
}

TEST_CASE("classifier: degenerate dim-5 input") {
  ClauseWitness w = theorem_a_classify(catalog("L5_9", Q));
  CHECK(w.clause == "base");
  CHECK(w.I.dim() == 5);
}

TEST_CASE("classifier: hypothesis failure paths") {
  CHECK_THROWS_AS(theorem_a_classify(abelian(Q, 5)), HypothesisFailureError);
  CHECK_THROWS_AS(theorem_a_classify(heisenberg(Q, 1)), HypothesisFailureError);
}

TEST_CASE("classifier round trip over the clause exemplars") {
  for (FieldSpec f : {Q, FieldSpec::gf(3), FieldSpec::gf(5)}) {
    SUBCASE(("clause i over " + f.name()).c_str()) {
      LieAlgebra L = clause_i_exemplar(f);
      ClauseWitness w = theorem_a_classify(L);
      CHECK(w.clause == "i");
      CHECK(verify_clause_witness(L, w).empty());
    }
    SUBCASE(("clause ii over " + f.name()).c_str()) {
      for (std::size_t m : {1u, 2u}) {
        LieAlgebra L = clause_ii_exemplar(f, m);
        CHECK(L.dim() == 2 * m + 5);
        ClauseWitness w = theorem_a_classify(L);
        CHECK(w.clause == "ii");
        CHECK(w.heis_m == m);
        CHECK(verify_clause_witness(L, w).empty());
      }
    }
    SUBCASE(("clause iv over " + f.name()).c_str()) {
      // [I,T] = Z(L): cross brackets [x1,u] = x5, [x2,u] = x4
      LieAlgebra L = seven_dim_with_t(f, {{0, 5, 4}, {1, 5, 3}});
      ClauseWitness w = theorem_a_classify(L);
      CHECK(w.clause == "iv");
      CHECK(w.IT->dim() == 2);
      CHECK(verify_clause_witness(L, w).empty());
    }
    SUBCASE(("clause vi over " + f.name()).c_str()) {
      // [I,T] one-dimensional, distinct from T²
      LieAlgebra L = seven_dim_with_t(f, {{0, 5, 4}});
      ClauseWitness w = theorem_a_classify(L);
      CHECK(w.clause == "vi");
      CHECK(w.IT->dim() == 1);
      CHECK_FALSE(w.it_equals_t2);
      CHECK(verify_clause_witness(L, w).empty());
    }
    SUBCASE(("clause vi with [I,T] = T² over " + f.name()).c_str()) {
      LieAlgebra L = seven_dim_with_t(f, {{0, 5, 3}});
      ClauseWitness w = theorem_a_classify(L);
      CHECK(w.clause == "vi");
      CHECK(w.it_equals_t2);
      CHECK(verify_clause_witness(L, w).empty());
    }
    SUBCASE(("clause viii over " + f.name()).c_str()) {
      // L5_9 glued with the rank-2 generalized Heisenberg along the center
      LieAlgebra I = catalog("L5_9", f);
      LieAlgebra K = catalog("GH5", f);
      Matrix dom(f, 2, 5), img(f, 2, 5);
      dom.at(0, 3) = Scalar::one(f);
      dom.at(1, 4) = Scalar::one(f);
      img.at(0, 3) = Scalar::one(f);
      img.at(1, 4) = Scalar::one(f);
      LieAlgebra L = central_product(K, I, dom, img).algebra;
      CHECK(L.dim() == 8);
      ClauseWitness w = theorem_a_classify(L);
      CHECK(w.clause == "viii");
      CHECK(verify_clause_witness(L, w).empty());
    }
  }
}
