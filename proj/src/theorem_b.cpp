#include "liealg/theorem_b.hpp"

#include <atomic>
#include <random>
#include <sstream>

#include "liealg/construct.hpp"
#include "liealg/isomorphism.hpp"
#include "liealg/multiplier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liealg {

namespace {

// Full hypothesis check on packed data: class 3, dim γ2 = 3, Z = γ3 ≅ A(2),
// stem.  Computed, not assumed from the normal-form shape.
bool packed_hypotheses(const Packed& P) {
  std::array<int, Packed::MAXN + 1> dims{};
  int cls = P.gamma_dims(dims);
  if (cls != 3) return false;
  if (dims[1] != 3 || dims[2] != 2) return false;
  std::uint8_t zb[Packed::MAXN][Packed::MAXN];
  int zdim = P.center_basis(zb);
  if (zdim != 2) return false;
  // γ3 rows: brackets [γ2, L] — recompute spans explicitly
  std::uint8_t rows[2 * Packed::MAXN * Packed::MAXN];
  int nrows = 0;
  // γ2 span
  std::uint8_t g2[Packed::MAXN * Packed::MAXN];
  int g2rows = 0;
  for (int i = 0; i < P.n; ++i)
    for (int j = i + 1; j < P.n; ++j) {
      bool nz = false;
      for (int k = 0; k < P.n; ++k) nz |= P.c[i][j][k] != 0;
      if (!nz) continue;
      for (int k = 0; k < P.n; ++k) g2[g2rows * Packed::MAXN + k] = P.c[i][j][k];
      ++g2rows;
    }
  int g2rank = gauss_rank(g2, g2rows, P.n, Packed::MAXN, P.p);
  // stem: Z ⊆ γ2 — append z rows to the echelon of γ2, rank must stay
  {
    std::uint8_t m[3 * Packed::MAXN * Packed::MAXN];
    for (int i = 0; i < g2rank; ++i)
      for (int k = 0; k < P.n; ++k) m[i * Packed::MAXN + k] = g2[i * Packed::MAXN + k];
    for (int i = 0; i < zdim; ++i)
      for (int k = 0; k < P.n; ++k) m[(g2rank + i) * Packed::MAXN + k] = zb[i][k];
    if (gauss_rank(m, g2rank + zdim, P.n, Packed::MAXN, P.p) != g2rank) return false;
  }
  // Z = γ3: brackets of γ2 rows with basis vectors
  for (int g = 0; g < g2rank; ++g) {
    Packed::V gv{};
    for (int k = 0; k < P.n; ++k) gv[k] = g2[g * Packed::MAXN + k];
    for (int j = 0; j < P.n; ++j) {
      Packed::V ej{};
      ej[j] = 1;
      Packed::V w{};
      P.bracket(gv, ej, w);
      bool nz = false;
      for (int k = 0; k < P.n; ++k) nz |= w[k] != 0;
      if (!nz) continue;
      for (int k = 0; k < P.n; ++k) rows[nrows * Packed::MAXN + k] = w[k];
      ++nrows;
    }
  }
  int g3rank = gauss_rank(rows, nrows, P.n, Packed::MAXN, P.p);
  if (g3rank != zdim) return false;
  // same space: adjoin z rows, rank must not grow
  for (int i = 0; i < zdim; ++i)
    for (int k = 0; k < P.n; ++k) rows[(g3rank + i) * Packed::MAXN + k] = zb[i][k];
  return gauss_rank(rows, g3rank + zdim, P.n, Packed::MAXN, P.p) == g3rank;
}

struct Rep {
  std::string name;
  LieAlgebra algebra;
  int h2;
};

std::vector<Rep> make_reps(FieldSpec f) {
  std::vector<Rep> reps;
  for (const char* nm : {"L1", "L2", "L3", "L4"}) {
    Rep r{nm, catalog(nm, f), 0};
    r.h2 = Packed::from(r.algebra).h2_dim();
    reps.push_back(std::move(r));
  }
  return reps;
}

// classify one survivor; returns rep index or -1 (anomaly)
int classify_survivor(const LieAlgebra& survivor, int h2, const std::vector<Rep>& reps,
                      std::string* transcript) {
  IsoOptions opt;
  opt.force_search = true;
  // largest classes first so an exhausted search is the exception
  static const std::size_t order[4] = {3, 1, 2, 0};  // L4, L2, L3, L1
  for (std::size_t r : order) {
    if (r >= reps.size() || reps[r].h2 != h2) continue;
    IsoResult res = find_isomorphism(survivor, reps[r].algebra, opt);
    if (res.verdict == IsoVerdict::Isomorphic) return static_cast<int>(r);
  }
  if (transcript) {
    std::ostringstream os;
    Fingerprint fp = fingerprint(survivor);
    os << "fingerprint: gamma(";
    for (auto d : fp.lower_dims) os << d << " ";
    os << ") dimM=" << fp.dim_m << "; ";
    for (const auto& rep : reps) {
      IsoResult res = find_isomorphism(survivor, rep.algebra, opt);
      os << rep.name << ": "
         << (res.verdict == IsoVerdict::Isomorphic
                 ? "isomorphic"
                 : res.verdict == IsoVerdict::NotIsomorphic ? "not isomorphic"
                                                            : "inconclusive");
      for (const auto& nt : res.notes) os << " [" << nt << "]";
      os << "; ";
    }
    *transcript = os.str();
  }
  return -1;
}

}  // namespace

ClassificationReport verify_theorem_b(FieldSpec field, EnumMode mode, int threads,
                                      const std::function<void(long long, long long)>& progress) {
  if (!field.is_finite()) throw UnsupportedFieldError("enumeration requires GF(p)");
  int p = static_cast<int>(field.p);
  ClassificationReport rep;
  rep.field = field;
  rep.total_tuples = 1;
  for (int i = 0; i < 10; ++i) rep.total_tuples *= p;

  std::vector<Rep> reps = make_reps(field);

  std::atomic<long long> surviving{0};
  std::atomic<long long> done{0};
  std::array<std::atomic<long long>, 4> class_counts{};
  std::atomic<bool> equivalence_ok{true};
  std::vector<ClassificationReport::Anomaly> anomalies;

  auto handle_tuple = [&](long long idx) {
    std::array<int, 10> a = tuple_of_index(idx, p);
    bool survives, full;
    LieAlgebra gen;  // only materialized when needed
    if (mode == EnumMode::GenericSerial) {
      std::array<long long, 10> al{};
      for (int i = 0; i < 10; ++i) al[i] = a[i];
      gen = NormalForm::from_ints(field, al).expand();
      full = hypothesis_check(gen).satisfies_hypotheses;
      survives = center(gen).dim() == 2;
    } else {
      Packed P = expand_packed(p, a);
      full = packed_hypotheses(P);
      survives = P.center_dim() == 2;
    }
    if (full != survives) equivalence_ok.store(false);
    if (!survives) return;
    surviving.fetch_add(1, std::memory_order_relaxed);
    Packed P = expand_packed(p, a);
    int h2 = P.h2_dim();
    LieAlgebra L = mode == EnumMode::GenericSerial ? gen : P.to_algebra();
    L.mark_validated();
    std::string transcript;
    int cls = classify_survivor(L, h2, reps, &transcript);
    if (cls >= 0) {
      class_counts[cls].fetch_add(1, std::memory_order_relaxed);
    } else {
#ifdef _OPENMP
#pragma omp critical
#endif
      anomalies.push_back({a, transcript});
    }
  };

  const long long total = rep.total_tuples;
  const long long step = 1 << 12;
  if (mode == EnumMode::PackedParallel) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long long idx = 0; idx < total; ++idx) {
      handle_tuple(idx);
      long long d = done.fetch_add(1, std::memory_order_relaxed) + 1;
      if (progress && d % step == 0) {
#ifdef _OPENMP
        if (omp_get_thread_num() == 0) progress(d, total);
#else
        progress(d, total);
#endif
      }
    }
  } else {
    for (long long idx = 0; idx < total; ++idx) {
      handle_tuple(idx);
      if (progress && (idx + 1) % step == 0) progress(idx + 1, total);
    }
  }

  rep.surviving = surviving.load();
  rep.filter_equivalence_ok = equivalence_ok.load();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    long long c = class_counts[r].load();
    if (c > 0) {
      rep.representatives.push_back(reps[r].name);
      rep.class_sizes[reps[r].name] = c;
    }
  }
  std::sort(anomalies.begin(), anomalies.end(),
            [](const auto& x, const auto& y) { return x.alpha < y.alpha; });
  // survivors matching no catalog entry are clustered pairwise into their
  // own classes (expected: none)
  std::vector<LieAlgebra> anomaly_reps;
  IsoOptions opt;
  opt.force_search = true;
  for (const auto& a : anomalies) {
    std::array<long long, 10> al{};
    for (int i = 0; i < 10; ++i) al[i] = a.alpha[i];
    LieAlgebra L = NormalForm::from_ints(field, al).expand();
    std::size_t cls = anomaly_reps.size();
    for (std::size_t r = 0; r < anomaly_reps.size(); ++r)
      if (find_isomorphism(L, anomaly_reps[r], opt).verdict == IsoVerdict::Isomorphic) {
        cls = r;
        break;
      }
    if (cls == anomaly_reps.size()) {
      anomaly_reps.push_back(L);
      std::ostringstream nm;
      nm << "anomaly-" << cls + 1;
      rep.representatives.push_back(nm.str());
    }
    std::ostringstream nm;
    nm << "anomaly-" << cls + 1;
    rep.class_sizes[nm.str()]++;
  }
  rep.anomalies = std::move(anomalies);
  rep.class_count = rep.representatives.size();
  return rep;
}

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  os << "normal-form enumeration over " << field.name() << "\n";
  os << "  tuples:      " << total_tuples << "\n";
  os << "  survivors:   " << surviving << "\n";
  os << "  filter equivalence (hypotheses <=> dim Z = 2): "
     << (filter_equivalence_ok ? "verified" : "VIOLATED") << "\n";
  os << "  classes:     " << class_count << "\n";
  for (const auto& r : representatives)
    os << "    " << r << ": " << class_sizes.at(r) << " tuples\n";
  os << "  anomalies:   " << anomalies.size() << "\n";
  std::size_t shown = std::min<std::size_t>(anomalies.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    os << "    alpha=(";
    for (int k = 0; k < 10; ++k) os << anomalies[i].alpha[k] << (k < 9 ? "," : "");
    os << ") " << anomalies[i].transcript << "\n";
  }
  if (anomalies.size() > shown)
    os << "    ... " << anomalies.size() - shown
       << " more (full transcripts in the JSON report)\n";
  return os.str();
}

std::string ClassificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"field\":\"" << field.name() << "\",\"total_tuples\":" << total_tuples
     << ",\"surviving\":" << surviving << ",\"class_count\":" << class_count
     << ",\"filter_equivalence\":" << (filter_equivalence_ok ? "true" : "false")
     << ",\"representatives\":[";
  for (std::size_t i = 0; i < representatives.size(); ++i)
    os << (i ? "," : "") << "\"" << representatives[i] << "\"";
  os << "],\"per_class_sizes\":{";
  bool first = true;
  for (const auto& [k, v] : class_sizes) {
    os << (first ? "" : ",") << "\"" << k << "\":" << v;
    first = false;
  }
  os << "},\"anomalies\":[";
  for (std::size_t i = 0; i < anomalies.size(); ++i) {
    os << (i ? "," : "") << "{\"alpha\":[";
    for (int k = 0; k < 10; ++k) os << (k ? "," : "") << anomalies[i].alpha[k];
    os << "],\"transcript\":\"" << anomalies[i].transcript << "\"}";
  }
  os << "]}";
  return os.str();
}

Dim5Report verify_dim5(FieldSpec field, int roundtrips, unsigned seed) {
  if (!field.is_finite()) throw UnsupportedFieldError("verify_dim5 requires GF(p)");
  Dim5Report rep;
  // forced structure: x3 = [x1,x2], z1 = [x1,x3], z2 = [x2,x3]
  LieAlgebra forced(field, 5);
  forced.set_bracket(0, 1, unit_vec(field, 5, 2));
  forced.set_bracket(0, 2, unit_vec(field, 5, 3));
  forced.set_bracket(1, 2, unit_vec(field, 5, 4));
  validate(forced);
  LieAlgebra l59 = catalog("L5_9", field);
  IsoResult base = find_isomorphism(l59, forced);
  rep.forced_is_l59 = base.verdict == IsoVerdict::Isomorphic;
  rep.unique_class = rep.forced_is_l59;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(field.p) - 1);
  rep.random_roundtrips = roundtrips;
  for (int t = 0; t < roundtrips; ++t) {
    Matrix P(field, 5, 5);
    do {
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) P.at(r, c) = Scalar(field, dist(rng));
    } while (!inverse(P));
    LieAlgebra conj = apply_basis_change(l59, BasisChange{P});
    IsoResult res = find_isomorphism(l59, conj);
    if (res.verdict == IsoVerdict::Isomorphic &&
        check_isomorphism(l59, conj, *res.witness))
      ++rep.random_roundtrips_ok;
  }
  return rep;
}

}  // namespace liealg
