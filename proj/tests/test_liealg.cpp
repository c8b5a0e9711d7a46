#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liealg/construct.hpp"
#include "liealg/multiplier.hpp"

using namespace liealg;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Vec ev(FieldSpec f, std::size_t n, std::size_t i) { return unit_vec(f, n, i); }
}  // namespace

TEST_CASE("catalog tables pass jacobi") {
  for (FieldSpec f : {Q, FieldSpec::gf(3), FieldSpec::gf(5)})
    for (const char* nm : {"L5_9", "L1", "L2", "L3", "L4", "GH5", "A(4)", "H(2)"}) {
      LieAlgebra L = catalog(nm, f);
      CHECK(jacobi_check(L).empty());
    }
}

TEST_CASE("bracket evaluation") {
  LieAlgebra L = catalog("L5_9", Q);
  SUBCASE("[x1,x2] = x3") { CHECK(L.bracket(ev(Q, 5, 0), ev(Q, 5, 1)) == ev(Q, 5, 2)); }
  SUBCASE("alternating on random vectors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 20; ++t) {
      Vec u = zero_vec(Q, 5);
      for (auto& x : u) x = Scalar(Q, d(rng));
      CHECK(is_zero_vec(L.bracket(u, u)));
      Vec v = zero_vec(Q, 5);
      for (auto& x : v) x = Scalar(Q, d(rng));
      CHECK(L.bracket(u, v) == sub(zero_vec(Q, 5), L.bracket(v, u)));
    }
  }
  SUBCASE("heisenberg relations") {
    LieAlgebra H = heisenberg(Q, 1);
    CHECK(H.bracket(ev(Q, 3, 0), ev(Q, 3, 1)) == ev(Q, 3, 2));
    CHECK(is_zero_vec(H.bracket(ev(Q, 3, 0), ev(Q, 3, 2))));
  }
}

TEST_CASE("jacobi_check catches a broken table") {
  // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1 satisfies Jacobi over Q
  LieAlgebra L(Q, 3);
  L.set_bracket(0, 1, ev(Q, 3, 2));
  L.set_bracket(0, 2, ev(Q, 3, 1));
  L.set_bracket(1, 2, ev(Q, 3, 0));
  CHECK(jacobi_check(L).empty());
  // a sign flip alone cannot break this table (every Jacobi term is a
  // self-bracket); retargeting one value does
  L.set_bracket(0, 2, ev(Q, 3, 0));
  auto bad = jacobi_check(L);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(jacobi_check(abelian(Q, 4)).empty());
}

TEST_CASE("series of the catalog algebras") {
  SUBCASE("L5_9: gamma dims 5,3,2, class 3") {
    SeriesReport sr = series(catalog("L5_9", Q));
    CHECK(sr.lower_dims() == std::vector<std::size_t>{5, 3, 2});
    CHECK(sr.cls == 3);
  }
  SUBCASE("H(m): class 2, derived dim 1") {
    for (std::size_t m : {1u, 2u, 3u}) {
      SeriesReport sr = series(heisenberg(Q, m));
      CHECK(sr.cls == 2);
      CHECK(sr.lower_dims()[1] == 1);
    }
  }
  SUBCASE("abelian: class 1") { CHECK(series(abelian(Q, 4)).cls == 1); }
  SUBCASE("monotone chains and matching class") {
    for (const char* nm : {"L1", "L2", "L3", "L4", "GH5"}) {
      SeriesReport sr = series(catalog(nm, Q));
      for (std::size_t i = 1; i < sr.lower.size(); ++i)
        CHECK(sr.lower[i - 1].contains(sr.lower[i]));
      for (std::size_t i = 1; i < sr.upper.size(); ++i)
        CHECK(sr.upper[i].contains(sr.upper[i - 1]));
      CHECK(sr.upper.size() == sr.cls);  // Z-chain reaches L in class steps
    }
  }
  SUBCASE("non-nilpotent input is rejected") {
    // sl2-like: [e1,e2]=e2 is already non-nilpotent
    LieAlgebra L(Q, 2);
    L.set_bracket(0, 1, ev(Q, 2, 1));
    CHECK_THROWS_AS(series(L), NotNilpotentError);
  }
}

TEST_CASE("center") {
  SUBCASE("L1 center is span(x6,x7)") {
    Subspace z = center(catalog("L1", Q));
    CHECK(z.dim() == 2);
    CHECK(z.contains(ev(Q, 7, 5)));
    CHECK(z.contains(ev(Q, 7, 6)));
  }
  SUBCASE("abelian is all-central") { CHECK(center(abelian(Q, 3)).dim() == 3); }
  SUBCASE("H(1) center is the line e3") {
    Subspace z = center(heisenberg(Q, 1));
    CHECK(z.dim() == 1);
    CHECK(z.contains(ev(Q, 3, 2)));
  }
  SUBCASE("center equals first upper term") {
    for (const char* nm : {"L1", "L3", "L5_9", "GH5"}) {
      LieAlgebra L = catalog(nm, Q);
      CHECK(center(L) == series(L).upper[0]);
    }
  }
}

TEST_CASE("closures") {
  LieAlgebra l59 = catalog("L5_9", Q);
  SUBCASE("x1,x2 generate L5_9") {
    CHECK(subalgebra_close(l59, {ev(Q, 5, 0), ev(Q, 5, 1)}).dim() == 5);
  }
  LieAlgebra l1 = catalog("L1", Q);
  SUBCASE("a central element closes to itself") {
    CHECK(subalgebra_close(l1, {ev(Q, 7, 5)}) == Subspace::span(Q, 7, {ev(Q, 7, 5)}));
  }
  SUBCASE("ideal closure of x3 in L1") {
    // [x1,x3]=x6, [x2,x3]=x7
    Subspace s = ideal_close(l1, {ev(Q, 7, 2)});
    CHECK(s == Subspace::span(Q, 7, {ev(Q, 7, 2), ev(Q, 7, 5), ev(Q, 7, 6)}));
  }
}

TEST_CASE("quotient") {
  SUBCASE("L1 / Z has derived dim 1 and class 2") {
    LieAlgebra l1 = catalog("L1", Q);
    Quotient q = quotient(l1, center(l1));
    CHECK(q.algebra.dim() == 5);
    SeriesReport sr = series(q.algebra);
    CHECK(sr.cls == 2);
    CHECK(sr.lower_dims()[1] == 1);
    CHECK(jacobi_check(q.algebra).empty());
  }
  SUBCASE("L / L is the zero algebra") {
    LieAlgebra l1 = catalog("L1", Q);
    Quotient q = quotient(l1, Subspace::full(Q, 7));
    CHECK(q.algebra.dim() == 0);
  }
  SUBCASE("H(1)/center is abelian of dim 2") {
    LieAlgebra h = heisenberg(Q, 1);
    Quotient q = quotient(h, center(h));
    CHECK(q.algebra.dim() == 2);
    CHECK(q.algebra.table().empty());
  }
  SUBCASE("non-ideal input is rejected") {
    LieAlgebra l59 = catalog("L5_9", Q);
    CHECK_THROWS_AS(quotient(l59, Subspace::span(Q, 5, {ev(Q, 5, 0)})), NotAnIdealError);
  }
  SUBCASE("class drops by one through the center") {
    for (const char* nm : {"L1", "L2", "L3", "L4", "L5_9", "GH5"}) {
      LieAlgebra L = catalog(nm, Q);
      CHECK(series(quotient(L, center(L)).algebra).cls == series(L).cls - 1);
    }
  }
}

TEST_CASE("hypothesis_check") {
  for (const char* nm : {"L1", "L2", "L3", "L4"}) {
    HypothesisReport h = hypothesis_check(catalog(nm, Q));
    CHECK(h.satisfies_hypotheses);
    CHECK(h.class_is_3);
    CHECK(h.dim_derived == 3);
    CHECK(h.center_dim == 2);
    CHECK(h.center_eq_gamma3);
    CHECK(h.is_stem);
  }
  CHECK_FALSE(hypothesis_check(heisenberg(Q, 1)).satisfies_hypotheses);
  HypothesisReport hs = hypothesis_check(direct_sum(catalog("L5_9", Q), abelian(Q, 1)));
  CHECK_FALSE(hs.is_stem);
  CHECK_FALSE(hs.satisfies_hypotheses);
}

TEST_CASE("moneyhun bound and t(L^2)") {
  SUBCASE("L1") {
    MoneyhunReport m = moneyhun_check(catalog("L1", Q));
    CHECK(m.n == 5);
    CHECK(m.bound == 10);
    CHECK(m.dim_derived == 3);
    CHECK(m.holds);
    CHECK(t_of_derived(catalog("L1", Q)) == 7);
  }
  SUBCASE("abelian") {
    MoneyhunReport m = moneyhun_check(abelian(Q, 4));
    CHECK(m.n == 0);
    CHECK(m.bound == 0);
    CHECK(m.holds);
    CHECK(t_of_derived(abelian(Q, 4)) == 0);
  }
  SUBCASE("H(1)") {
    MoneyhunReport m = moneyhun_check(heisenberg(Q, 1));
    CHECK(m.n == 2);
    CHECK(m.bound == 1);
    CHECK(m.dim_derived == 1);
    CHECK(m.holds);
    CHECK(t_of_derived(heisenberg(Q, 1)) == 0);
  }
}

TEST_CASE("proposition on the central series") {
  CHECK(proposition_class_check(catalog("L5_9", Q)));
  CHECK(proposition_class_check(catalog("L3", Q)));
  CHECK(proposition_class_check(heisenberg(Q, 1)));
  CHECK_THROWS_AS(proposition_class_check(abelian(Q, 3)), BadParameterError);
}

TEST_CASE("lower-central transfer lemma") {
  LieAlgebra l59 = catalog("L5_9", Q);
  CHECK(lemma_low_check(l59, Subspace::full(Q, 5)) == LemmaLowResult::Holds);
  LieAlgebra l1 = catalog("L1", Q);
  Subspace K = subalgebra_close(l1, {ev(Q, 7, 0), ev(Q, 7, 1)});
  CHECK(lemma_low_check(l1, K) == LemmaLowResult::Holds);
  Subspace Z = Subspace::span(Q, 7, {ev(Q, 7, 5), ev(Q, 7, 6)});
  CHECK(lemma_low_check(l1, Z) == LemmaLowResult::NotApplicable);
}

TEST_CASE("multiplier dimensions match the classification") {
  // dim M = 8 for L1, L2 and 6 for L3, L4; cross-checked by both methods
  for (FieldSpec f : {Q, FieldSpec::gf(3), FieldSpec::gf(5)}) {
    CHECK(ce_h2_dim(catalog("L1", f)) == 8);
    CHECK(ce_h2_dim(catalog("L2", f)) == 8);
    CHECK(ce_h2_dim(catalog("L3", f)) == 6);
    CHECK(ce_h2_dim(catalog("L4", f)) == 6);
    CHECK(tail_multiplier(catalog("L1", f)).dim_m == 8);
    CHECK(tail_multiplier(catalog("L2", f)).dim_m == 8);
    CHECK(tail_multiplier(catalog("L3", f)).dim_m == 6);
    CHECK(tail_multiplier(catalog("L4", f)).dim_m == 6);
  }
}

TEST_CASE("multiplier of standard families") {
  for (std::size_t n : {2u, 3u, 4u, 5u})
    CHECK(ce_h2_dim(abelian(Q, n)) == n * (n - 1) / 2);
  CHECK(ce_h2_dim(heisenberg(Q, 1)) == 2);
  CHECK(tail_multiplier(heisenberg(Q, 1)).dim_m == 2);
}

TEST_CASE("tail presentation details for L1") {
  TailPresentation tp = tail_multiplier(catalog("L1", Q));
  CHECK(tp.pairs.size() == 21);
  CHECK(tp.zeroed.size() == 3);  // brackets spanning γ2
  CHECK(tp.dim_m == 8);
  // every relation row is attached to its generating Jacobi triple
  CHECK(tp.relation_triples.size() == tp.relations.rows());
}

TEST_CASE("defset independence and BadDefset") {
  LieAlgebra l1 = catalog("L1", Q);
  // all valid defsets on a γ2 of dimension 3: brute-force over pair triples
  auto pairs = tail_multiplier(l1).pairs;
  int checked = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      for (std::size_t c = b + 1; c < pairs.size(); ++c) {
        std::vector<std::pair<std::size_t, std::size_t>> ds = {pairs[a], pairs[b],
                                                               pairs[c]};
        std::size_t got = 0;
        try {
          got = tail_multiplier(l1, ds).dim_m;
        } catch (const BadDefsetError&) {
          continue;
        }
        CHECK(got == 8);
        ++checked;
      }
  CHECK(checked > 0);
  std::vector<std::pair<std::size_t, std::size_t>> bogus = {{0, 1}, {0, 2}, {3, 4}};
  // [x4,x5] = 0 in L1, so this set cannot span γ2
  CHECK_THROWS_AS(tail_multiplier(l1, bogus), BadDefsetError);
}

TEST_CASE("invariant bundle") {
  InvariantBundle b = invariant_bundle(catalog("L1", Q));
  CHECK(b.dim == 7);
  CHECK(b.dim_m == 8);
  CHECK(b.t_l == 13);
  CHECK(b.t_l2 == 7);
  InvariantBundle b3 = invariant_bundle(catalog("L3", Q));
  CHECK(b3.dim_m == 6);
  CHECK(b3.t_l == 15);
  InvariantBundle ba = invariant_bundle(abelian(Q, 3));
  CHECK(ba.dim_m == 3);
  CHECK(ba.t_l == 0);
}

TEST_CASE("central multiplier inequality on the corpus") {
  for (const char* nm : {"L1", "L2", "L3", "L4", "L5_9", "GH5", "H(2)", "A(4)"}) {
    LieAlgebra L = catalog(nm, Q);
    std::size_t zg = center(L).intersect(derived_subalgebra(L)).dim();
    CHECK(zg <= ce_h2_dim(L));
  }
}
