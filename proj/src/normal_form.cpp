#include "liealg/normal_form.hpp"

namespace liealg {

LieAlgebra NormalForm::expand() const {
  LieAlgebra L(field, 7);
  auto unit = [&](std::size_t k) { return unit_vec(field, 7, k); };
  L.set_bracket(0, 1, unit(2));
  L.set_bracket(0, 2, unit(5));
  L.set_bracket(1, 2, unit(6));
  auto comb = [&](const Scalar& a, const Scalar& b) {
    Vec v = zero_vec(field, 7);
    v[5] = a;
    v[6] = b;
    return v;
  };
  L.set_bracket(0, 3, comb(alpha[0], alpha[1]));
  L.set_bracket(0, 4, comb(alpha[2], alpha[3]));
  L.set_bracket(1, 3, comb(alpha[4], alpha[5]));
  L.set_bracket(1, 4, comb(alpha[6], alpha[7]));
  L.set_bracket(3, 4, comb(alpha[8], alpha[9]));
  L.mark_validated();  // every parameter term is central
  return L;
}

NormalForm NormalForm::from_ints(FieldSpec f, const std::array<long long, 10>& a) {
  NormalForm nf;
  nf.field = f;
  for (int i = 0; i < 10; ++i) nf.alpha[i] = Scalar(f, a[i]);
  return nf;
}

Packed expand_packed(int p, const std::array<int, 10>& a) {
  Packed P;
  P.n = 7;
  P.p = p;
  auto set = [&](int i, int j, int k, int val) {
    val %= p;
    if (val < 0) val += p;
    P.c[i][j][k] = static_cast<std::uint8_t>(val);
    P.c[j][i][k] = static_cast<std::uint8_t>(val == 0 ? 0 : p - val);
  };
  set(0, 1, 2, 1);
  set(0, 2, 5, 1);
  set(1, 2, 6, 1);
  set(0, 3, 5, a[0]);
  set(0, 3, 6, a[1]);
  set(0, 4, 5, a[2]);
  set(0, 4, 6, a[3]);
  set(1, 3, 5, a[4]);
  set(1, 3, 6, a[5]);
  set(1, 4, 5, a[6]);
  set(1, 4, 6, a[7]);
  set(3, 4, 5, a[8]);
  set(3, 4, 6, a[9]);
  return P;
}

std::array<int, 10> tuple_of_index(long long idx, int p) {
  std::array<int, 10> a{};
  for (int i = 0; i < 10; ++i) {
    a[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return a;
}

}  // namespace liealg
