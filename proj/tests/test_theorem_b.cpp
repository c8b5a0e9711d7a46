#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liealg/construct.hpp"
#include "liealg/isomorphism.hpp"
#include "liealg/theorem_b.hpp"

using namespace liealg;

namespace {

bool packed_filter(int p, const std::array<int, 10>& a) {
  return expand_packed(p, a).center_dim() == 2;
}

bool generic_filter(FieldSpec f, const std::array<int, 10>& a) {
  std::array<long long, 10> al{};
  for (int i = 0; i < 10; ++i) al[i] = a[i];
  LieAlgebra L = NormalForm::from_ints(f, al).expand();
  return hypothesis_check(L).satisfies_hypotheses;
}

}  // namespace

TEST_CASE("normal form expansion is a valid table for random tuples") {
  std::mt19937_64 rng(41);
  for (int p : {3, 5}) {
    FieldSpec f = FieldSpec::gf(p);
    std::uniform_int_distribution<int> d(0, p - 1);
    for (int t = 0; t < 50; ++t) {
      std::array<long long, 10> a{};
      for (auto& x : a) x = d(rng);
      LieAlgebra L = NormalForm::from_ints(f, a).expand();
      CHECK(jacobi_check(L).empty());
      // packed expansion mirrors the generic one
      std::array<int, 10> ai{};
      for (int i = 0; i < 10; ++i) ai[i] = static_cast<int>(a[i]);
      CHECK(expand_packed(p, ai).to_algebra() == L);
    }
  }
}

TEST_CASE("packed filter agrees with the generic hypothesis check") {
  std::mt19937_64 rng(43);
  for (int p : {3, 5, 7}) {
    FieldSpec f = FieldSpec::gf(p);
    std::uniform_int_distribution<int> d(0, p - 1);
    for (int t = 0; t < 300; ++t) {
      std::array<int, 10> a{};
      for (auto& x : a) x = d(rng);
      CHECK(packed_filter(p, a) == generic_filter(f, a));
    }
  }
}

TEST_CASE("degenerate and catalog tuples") {
  // all-zero tuple: x4, x5 central, dim Z = 4, filtered out
  std::array<int, 10> zero{};
  CHECK(expand_packed(3, zero).center_dim() == 4);
  CHECK_FALSE(packed_filter(3, zero));
  // L1's tuple survives: alpha1 = alpha4 = 1, rest 0
  std::array<int, 10> l1{1, 0, 0, 1, 0, 0, 0, 0, 0, 0};
  CHECK(packed_filter(3, l1));
  std::array<long long, 10> l1l{1, 0, 0, 1, 0, 0, 0, 0, 0, 0};
  LieAlgebra L = NormalForm::from_ints(FieldSpec::gf(3), l1l).expand();
  CHECK(L == catalog("L1", FieldSpec::gf(3)));
}

TEST_CASE("tuple indexing is a bijection") {
  for (int p : {3, 5}) {
    long long idx = 1234 % (p * p);
    auto a = tuple_of_index(idx, p);
    long long back = 0;
    for (int i = 9; i >= 0; --i) back = back * p + a[i];
    CHECK(back == idx);
  }
}

TEST_CASE("GF(5) sample: survivors classify into the four catalog classes") {
  // spot check of the --large pipeline on a random sample, including a
  // tuple of the extra GF(3) class, which must merge into L2 over GF(5)
  FieldSpec f = FieldSpec::gf(5);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> d(0, 4);
  IsoOptions opt;
  opt.force_search = true;
  std::vector<LieAlgebra> reps;
  for (const char* nm : {"L1", "L2", "L3", "L4"}) reps.push_back(catalog(nm, f));
  int classified = 0, survivors = 0;
  for (int t = 0; t < 40; ++t) {
    std::array<int, 10> a{};
    for (auto& x : a) x = d(rng);
    if (!packed_filter(5, a)) continue;
    ++survivors;
    std::array<long long, 10> al{};
    for (int i = 0; i < 10; ++i) al[i] = a[i];
    LieAlgebra L = NormalForm::from_ints(f, al).expand();
    for (const auto& rep : reps)
      if (find_isomorphism(L, rep, opt).verdict == IsoVerdict::Isomorphic) {
        ++classified;
        break;
      }
  }
  CHECK(survivors > 0);
  CHECK(classified == survivors);

  std::array<long long, 10> xa{0, 0, 0, 1, 0, 1, 1, 0, 0, 0};
  LieAlgebra X5 = NormalForm::from_ints(f, xa).expand();
  CHECK(find_isomorphism(X5, reps[1], opt).verdict == IsoVerdict::Isomorphic);
  // ... while over GF(3) the same tuple is outside all four classes
  FieldSpec f3 = FieldSpec::gf(3);
  LieAlgebra X3 = NormalForm::from_ints(f3, xa).expand();
  for (const char* nm : {"L1", "L2", "L3", "L4"})
    CHECK(find_isomorphism(X3, catalog(nm, f3), opt).verdict ==
          IsoVerdict::NotIsomorphic);
}

TEST_CASE("dim5 verification, small round-trip count") {
  Dim5Report rep = verify_dim5(FieldSpec::gf(3), 10, 7);
  CHECK(rep.forced_is_l59);
  CHECK(rep.random_roundtrips_ok == 10);
}
