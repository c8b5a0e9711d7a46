#ifndef LIEALG_NORMAL_FORM_HPP
#define LIEALG_NORMAL_FORM_HPP

#include <array>

#include "liealg/lie_algebra.hpp"
#include "liealg/packed.hpp"

namespace liealg {

/// The 10-parameter family every hypothesis-satisfying 7-dimensional algebra
/// reduces to:
///   [x1,x2]=x3, [x1,x3]=x6, [x2,x3]=x7,
///   [x1,x4]=a1 x6+a2 x7, [x1,x5]=a3 x6+a4 x7,
///   [x2,x4]=a5 x6+a6 x7, [x2,x5]=a7 x6+a8 x7,
///   [x4,x5]=a9 x6+a10 x7.
/// All parameter terms are central, so Jacobi holds for every tuple.
struct NormalForm {
  FieldSpec field;
  std::array<Scalar, 10> alpha;

  LieAlgebra expand() const;

  static NormalForm from_ints(FieldSpec f, const std::array<long long, 10>& a);
};

/// Packed expansion of an integer tuple over GF(p) (enumeration hot path).
Packed expand_packed(int p, const std::array<int, 10>& a);

/// Decode enumeration index into a base-p digit tuple.
std::array<int, 10> tuple_of_index(long long idx, int p);

}  // namespace liealg

#endif
