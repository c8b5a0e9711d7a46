#ifndef LIEALG_PACKED_HPP
#define LIEALG_PACKED_HPP

#include <array>
#include <cstdint>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Fixed-capacity structure-constant tensor over GF(p), the hot-loop
/// representation behind the enumeration and isomorphism kernels.
/// The generic Scalar-based path stays as the exact reference.
struct Packed {
  static constexpr int MAXN = 12;
  int n = 0;
  int p = 0;
  // c[i][j][k]: coefficient of e_k in [e_i, e_j]; filled antisymmetrically.
  std::uint8_t c[MAXN][MAXN][MAXN] = {};

  static Packed from(const LieAlgebra& L);
  LieAlgebra to_algebra() const;

  using V = std::array<std::uint8_t, MAXN>;

  int addp(int a, int b) const { return (a + b) % p; }
  int subp(int a, int b) const { return (a - b % p + p) % p; }
  int mulp(int a, int b) const { return a * b % p; }

  void bracket(const V& u, const V& v, V& out) const;
  /// rank of the matrix whose columns are [v, e_j].
  int ad_rank(const V& v) const;
  /// (rank ad v, dim([v,L] ∩ Z)) given the center as a row basis.
  std::pair<int, int> ad_profile(const V& v, const std::uint8_t zbasis[][MAXN],
                                 int zdim) const;
  /// dimension of the center.
  int center_dim() const;
  /// row basis of the center into out (row-echelon); returns dimension.
  int center_basis(std::uint8_t out[][MAXN]) const;
  /// γ-series dims (γ1, γ2, ...; nonzero terms); returns class, -1 if the
  /// chain stalls above zero.
  int gamma_dims(std::array<int, MAXN + 1>& dims) const;
  /// dim H2 of the Chevalley–Eilenberg complex (same maps as ce_h2_dim).
  int h2_dim() const;
};

/// In-place Gauss elimination mod p on an r x c row-major byte matrix;
/// returns the rank.  Scratch-buffer friendly, no allocation.
int gauss_rank(std::uint8_t* m, int rows, int cols, int stride, int p);

}  // namespace liealg

#endif
