#ifndef LIEALG_THEOREM_B_HPP
#define LIEALG_THEOREM_B_HPP

#include <functional>
#include <map>

#include "liealg/normal_form.hpp"

namespace liealg {

struct ClassificationReport {
  FieldSpec field;
  long long total_tuples = 0;
  long long surviving = 0;
  std::size_t class_count = 0;
  std::vector<std::string> representatives;      // catalog names, stable order
  std::map<std::string, long long> class_sizes;  // surviving = Σ sizes when no anomalies
  struct Anomaly {
    std::array<int, 10> alpha;
    std::string transcript;  // fingerprint + failed search notes, re-checkable
  };
  std::vector<Anomaly> anomalies;
  /// per-tuple assertion: hypothesis_check ⟺ dim Z(L) = 2
  bool filter_equivalence_ok = true;

  bool matches_catalog_classification() const {
    return anomalies.empty() && class_count == 4 && filter_equivalence_ok;
  }
  std::string to_text() const;
  std::string to_json() const;

  friend bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    return a.field == b.field && a.total_tuples == b.total_tuples &&
           a.surviving == b.surviving && a.class_count == b.class_count &&
           a.representatives == b.representatives && a.class_sizes == b.class_sizes &&
           a.anomalies.size() == b.anomalies.size() &&
           a.filter_equivalence_ok == b.filter_equivalence_ok;
  }
};

enum class EnumMode {
  PackedParallel,  // byte-matrix kernels, OpenMP over tuples
  GenericSerial,   // exact Scalar pipeline, single thread; the reference
};

/// Enumerate all |F|^10 normal-form tuples, filter by the hypotheses,
/// classify every survivor against the catalog representatives.
ClassificationReport verify_theorem_b(
    FieldSpec field, EnumMode mode = EnumMode::PackedParallel, int threads = 0,
    const std::function<void(long long, long long)>& progress = nullptr);

struct Dim5Report {
  bool unique_class = false;
  bool forced_is_l59 = false;
  int random_roundtrips_ok = 0;
  int random_roundtrips = 0;
  bool ok() const {
    return unique_class && forced_is_l59 && random_roundtrips_ok == random_roundtrips;
  }
};

/// The 5-dimensional analogue: the forced table has no free parameters and
/// must be isomorphic to L5_9; also round-trips random basis changes.
Dim5Report verify_dim5(FieldSpec field, int roundtrips = 100, unsigned seed = 12345);

}  // namespace liealg

#endif
