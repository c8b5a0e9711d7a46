#ifndef LIEALG_ISOMORPHISM_HPP
#define LIEALG_ISOMORPHISM_HPP

#include <map>
#include <optional>
#include <string>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Invertible change of basis; columns are the new basis in old coordinates.
struct BasisChange {
  Matrix matrix;
};

/// Throws SingularError when P is not invertible.
BasisChange make_basis_change(Matrix P);

/// Structure constants conjugated by P: [e'_i,e'_j] = P⁻¹ [P_i, P_j].
LieAlgebra apply_basis_change(const LieAlgebra& L, const BasisChange& P);

/// True iff apply_basis_change(L, P) matches Lp's table exactly.
bool check_isomorphism(const LieAlgebra& L, const LieAlgebra& Lp, const BasisChange& P);

/// Basis-invariant data used as a fast non-isomorphism certificate.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_dims;
  std::vector<std::size_t> upper_dims;
  std::size_t dim_m = 0;
  long long t_l = 0;
  long long t_l2 = 0;
  bool has_profile = false;  // counting profile computed (finite field, |F|^dim <= 1e6)
  /// multiset over x in L of (rank ad x, dim([x,L] ∩ Z(L))), as (pair, count)
  std::map<std::pair<int, int>, long long> profile;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.lower_dims == b.lower_dims && a.upper_dims == b.upper_dims &&
           a.dim_m == b.dim_m && a.t_l == b.t_l && a.t_l2 == b.t_l2 &&
           a.has_profile == b.has_profile && a.profile == b.profile;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

Fingerprint fingerprint(const LieAlgebra& L);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<BasisChange> witness;  // present iff Isomorphic; verified
  std::vector<std::string> notes;      // certificates, guard reports
};

struct IsoOptions {
  /// Skip the invariant short-circuit and always run the image search
  /// (exhaustive non-isomorphism proof over a finite field).
  bool force_search = false;
  /// Cap on solution-coset combinations explored per generator prefix;
  /// exceeding it downgrades a would-be NotIsomorphic to Inconclusive.
  long long coset_guard = 1 << 17;
};

/// Over a finite field: complete decision by searching images of the first
/// two generators, deriving bracket-generated basis elements and solving
/// the remaining generators' images linearly.  Over Q: certificate-based
/// (fingerprints, finite-field evidence), never a complete search.
IsoResult find_isomorphism(const LieAlgebra& L, const LieAlgebra& Lp,
                           const IsoOptions& opt = {});

}  // namespace liealg

#endif
