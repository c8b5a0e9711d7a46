#include "liealg/packed.hpp"

namespace liealg {

Packed Packed::from(const LieAlgebra& L) {
  if (!L.field().is_finite())
    throw UnsupportedFieldError("packed kernels require a finite field");
  if (L.dim() > MAXN)
    throw BadParameterError("packed kernels support dim <= " + std::to_string(MAXN));
  Packed P;
  P.n = static_cast<int>(L.dim());
  P.p = static_cast<int>(L.field().p);
  for (const auto& [ij, v] : L.table()) {
    int i = static_cast<int>(ij.first), j = static_cast<int>(ij.second);
    for (int k = 0; k < P.n; ++k) {
      int r = static_cast<int>(v[k].residue());
      P.c[i][j][k] = static_cast<std::uint8_t>(r);
      P.c[j][i][k] = static_cast<std::uint8_t>(r == 0 ? 0 : P.p - r);
    }
  }
  return P;
}

LieAlgebra Packed::to_algebra() const {
  FieldSpec f = FieldSpec::gf(p);
  LieAlgebra L(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = zero_vec(f, n);
      bool nz = false;
      for (int k = 0; k < n; ++k)
        if (c[i][j][k]) {
          v[k] = Scalar(f, c[i][j][k]);
          nz = true;
        }
      if (nz) L.set_bracket(i, j, v);
    }
  return L;
}

void Packed::bracket(const V& u, const V& v, V& out) const {
  out.fill(0);
  for (int i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!v[j] || i == j) continue;
      int coef = mulp(u[i], v[j]);
      if (!coef) continue;
      const std::uint8_t* w = c[i][j];
      for (int k = 0; k < n; ++k)
        if (w[k]) out[k] = static_cast<std::uint8_t>(addp(out[k], mulp(coef, w[k])));
    }
  }
}

int gauss_rank(std::uint8_t* m, int rows, int cols, int stride, int p) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * stride + col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c2 = 0; c2 < cols; ++c2)
        std::swap(m[piv * stride + c2], m[rank * stride + c2]);
    int inv = static_cast<int>(inverse_mod(m[rank * stride + col], p));
    for (int c2 = col; c2 < cols; ++c2)
      m[rank * stride + c2] =
          static_cast<std::uint8_t>(m[rank * stride + c2] * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      int f = m[r * stride + col];
      if (!f) continue;
      for (int c2 = col; c2 < cols; ++c2)
        m[r * stride + c2] = static_cast<std::uint8_t>(
            (m[r * stride + c2] + (p - f) * m[rank * stride + c2]) % p);
    }
    ++rank;
  }
  return rank;
}

int Packed::ad_rank(const V& v) const {
  std::uint8_t m[MAXN * MAXN];
  for (int j = 0; j < n; ++j) {
    V col{};
    V ej{};
    ej[j] = 1;
    bracket(v, ej, col);
    for (int k = 0; k < n; ++k) m[j * MAXN + k] = col[k];
  }
  return gauss_rank(m, n, n, MAXN, p);
}

std::pair<int, int> Packed::ad_profile(const V& v, const std::uint8_t zbasis[][MAXN],
                                       int zdim) const {
  // image rows of ad v
  std::uint8_t img[MAXN * MAXN];
  int nrows = 0;
  for (int j = 0; j < n; ++j) {
    V col{};
    V ej{};
    ej[j] = 1;
    bracket(v, ej, col);
    bool nz = false;
    for (int k = 0; k < n; ++k) {
      img[nrows * MAXN + k] = col[k];
      nz |= col[k] != 0;
    }
    if (nz) ++nrows;
  }
  std::uint8_t work[MAXN * MAXN];
  for (int i = 0; i < nrows * MAXN; ++i) work[i] = img[i];
  int rank = gauss_rank(work, nrows, n, MAXN, p);
  // dim(im ∩ Z) = rank(im) + zdim − rank(im ∪ Z)
  std::uint8_t joint[2 * MAXN * MAXN];
  for (int i = 0; i < nrows; ++i)
    for (int k = 0; k < n; ++k) joint[i * MAXN + k] = img[i * MAXN + k];
  for (int i = 0; i < zdim; ++i)
    for (int k = 0; k < n; ++k) joint[(nrows + i) * MAXN + k] = zbasis[i][k];
  int rj = gauss_rank(joint, nrows + zdim, n, MAXN, p);
  return {rank, rank + zdim - rj};
}

int Packed::center_dim() const {
  std::uint8_t base[MAXN][MAXN];
  return center_basis(base);
}

int Packed::center_basis(std::uint8_t out[][MAXN]) const {
  // kernel of the stacked maps v -> [e_k, v]
  std::uint8_t m[MAXN * MAXN * MAXN];
  int rows = 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      bool nz = false;
      for (int j = 0; j < n; ++j) {
        m[rows * MAXN + j] = c[k][j][i];  // coefficient of e_i in [e_k, e_j]
        nz |= m[rows * MAXN + j] != 0;
      }
      if (nz) ++rows;
    }
  int rank = gauss_rank(m, rows, n, MAXN, p);
  // free columns give the kernel basis
  bool is_piv[MAXN] = {};
  int pivcol[MAXN];
  for (int r = 0; r < rank; ++r) {
    int col = 0;
    while (col < n && m[r * MAXN + col] == 0) ++col;
    pivcol[r] = col;
    is_piv[col] = true;
  }
  int zdim = 0;
  for (int col = 0; col < n; ++col) {
    if (is_piv[col]) continue;
    for (int k = 0; k < n; ++k) out[zdim][k] = 0;
    out[zdim][col] = 1;
    for (int r = 0; r < rank; ++r)
      out[zdim][pivcol[r]] =
          static_cast<std::uint8_t>((p - m[r * MAXN + col] % p) % p);
    ++zdim;
  }
  return zdim;
}

int Packed::gamma_dims(std::array<int, MAXN + 1>& dims) const {
  // rows of the current term, reduced
  std::uint8_t cur[MAXN * MAXN];
  int cdim = n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) cur[i * MAXN + k] = i == k ? 1 : 0;
  int cls = 0;
  dims.fill(0);
  while (cdim > 0) {
    dims[cls++] = cdim;
    if (cls > n) return -1;
    // next = span of [g, e_j]
    std::uint8_t next[MAXN * MAXN * MAXN];
    int rows = 0;
    for (int g = 0; g < cdim; ++g) {
      V gv{};
      for (int k = 0; k < n; ++k) gv[k] = cur[g * MAXN + k];
      for (int j = 0; j < n; ++j) {
        V ej{};
        ej[j] = 1;
        V w{};
        bracket(gv, ej, w);
        bool nz = false;
        for (int k = 0; k < n; ++k) nz |= w[k] != 0;
        if (!nz) continue;
        for (int k = 0; k < n; ++k) next[rows * MAXN + k] = w[k];
        ++rows;
      }
    }
    int r = gauss_rank(next, rows, n, MAXN, p);
    if (r == cdim) return -1;  // stalled above zero
    for (int i = 0; i < r * MAXN; ++i) cur[i] = next[i];
    cdim = r;
  }
  return cls;
}

int Packed::h2_dim() const {
  int npairs = n * (n - 1) / 2;
  int pidx[MAXN][MAXN];
  {
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pidx[i][j] = t++;
  }
  // rank ∂2
  std::uint8_t d2[(MAXN * MAXN / 2) * MAXN];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) d2[pidx[i][j] * MAXN + k] = c[i][j][k];
  int r2 = gauss_rank(d2, npairs, n, MAXN, p);
  // rank ∂3: rows = triples, cols = pairs
  static thread_local std::vector<std::uint8_t> d3;
  int ntrip = n * (n - 1) * (n - 2) / 6;
  int stride = npairs;
  d3.assign(static_cast<std::size_t>(ntrip) * stride, 0);
  int row = 0;
  auto wedge = [&](int r, const std::uint8_t* val, int k, int sgn) {
    for (int m2 = 0; m2 < n; ++m2) {
      if (!val[m2] || m2 == k) continue;
      int col = m2 < k ? pidx[m2][k] : pidx[k][m2];
      int s = m2 < k ? sgn : -sgn;
      int add = s > 0 ? val[m2] : (p - val[m2]) % p;
      d3[static_cast<std::size_t>(r) * stride + col] =
          static_cast<std::uint8_t>((d3[static_cast<std::size_t>(r) * stride + col] + add) % p);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        wedge(row, c[i][j], k, +1);
        wedge(row, c[i][k], j, -1);
        wedge(row, c[j][k], i, +1);
        ++row;
      }
  int r3 = gauss_rank(d3.data(), ntrip, npairs, stride, p);
  return npairs - r2 - r3;
}

}  // namespace liealg
