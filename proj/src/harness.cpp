#include "bfa/harness.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "bfa/bits.hpp"
#include "bfa/generate.hpp"
#include "bfa/influence.hpp"
#include "bfa/spectral.hpp"

namespace bfa {

void ClassStats::add(const Dyadic& influence) {
  ++count;
  if (!min_influence || influence < *min_influence) min_influence = influence;
  if (!max_influence || influence > *max_influence) max_influence = influence;
}

void ClassStats::merge(const ClassStats& other) {
  count += other.count;
  if (other.min_influence && (!min_influence || *other.min_influence < *min_influence))
    min_influence = other.min_influence;
  if (other.max_influence && (!max_influence || *other.max_influence > *max_influence))
    max_influence = other.max_influence;
}

void IntersectionCell::add(const std::string& hex) {
  ++count;
  if (witnesses.size() < max_witnesses) witnesses.push_back(hex);
}

void IntersectionCell::merge(const IntersectionCell& other) {
  // workers scan ascending disjoint ranges merged in range order, so
  // concatenation keeps the numerically smallest witnesses first
  count += other.count;
  for (const std::string& w : other.witnesses) {
    if (witnesses.size() >= max_witnesses) break;
    witnesses.push_back(w);
  }
}

Dyadic fact2_bound(int n) {
  std::int64_t binom = 1;
  for (int i = 1; i <= n / 2; ++i) binom = binom * (n - i + 1) / i;
  return Dyadic(binom * ((n + 1) / 2), n - 1);
}

bool influence_sq_le(const Dyadic& influence, std::int64_t bound_sq) {
  __int128 lhs = static_cast<__int128>(influence.num) * influence.num;
  __int128 rhs = static_cast<__int128>(bound_sq) << (2 * influence.exp);
  return lhs <= rhs;
}

namespace {

struct TableFlags {
  bool bent = false;
  bool sac = false;  // PC(1) coincides with SAC (singleton influences)
  bool monotone = false;
  bool ltf = false;
  std::optional<int> plateaued;
  Dyadic influence;
};

// Scratch-carrying classifier for the exhaustive sweep. Tables at n <= 5
// live in a single word.
class CensusWorker {
 public:
  explicit CensusWorker(int n) : n_(n), tt_(n) {}

  CensusResult result;

  void run(std::uint64_t first, std::uint64_t last) {
    result = CensusResult{};
    result.n = n_;
    Dyadic half_n(n_, 1);
    Dyadic bound = fact2_bound(n_);
    for (std::uint64_t bits = first; bits < last; ++bits) {
      TableFlags f = classify_bits(bits);
      ++result.total;
      if (f.bent) result.bent.add(f.influence);
      if (f.sac) {
        result.sac.add(f.influence);
        result.pc1.add(f.influence);
      }
      if (f.monotone) result.monotone.add(f.influence);
      if (f.ltf) result.ltf.add(f.influence);
      if (f.plateaued) result.plateaued[*f.plateaued].add(f.influence);

      bool in_union = f.bent || f.sac;
      if (in_union && !(f.influence == half_n)) result.prop1_holds = false;
      if (f.monotone && !(f.influence <= bound)) result.fact2_holds = false;

      if (f.monotone || f.ltf) {
        std::string hex = to_hex(tt_);
        if (f.monotone) {
          if (f.bent) result.monotone_bent.add(hex);
          if (f.sac) {
            result.monotone_sac.add(hex);
            result.monotone_pc1.add(hex);
          }
          if (in_union) result.monotone_union.add(hex);
        }
        if (f.ltf) {
          if (f.bent) result.ltf_bent.add(hex);
          if (f.sac) {
            result.ltf_sac.add(hex);
            result.ltf_pc1.add(hex);
          }
          if (in_union) result.ltf_union.add(hex);
        }
      }
    }
  }

 private:
  TableFlags classify_bits(std::uint64_t word) {
    tt_.words[0] = word;
    TableFlags f;

    wht_into(tt_, spec_);
    if (n_ % 2 == 0) {
      std::int64_t expected = std::int64_t{1} << (n_ / 2);
      f.bent = true;
      for (std::int64_t w : spec_)
        if (w != expected && w != -expected) {
          f.bent = false;
          break;
        }
    }
    std::int64_t magnitude = 0;
    bool flat = true;
    for (std::int64_t w : spec_) {
      if (w == 0) continue;
      std::int64_t a = w < 0 ? -w : w;
      if (magnitude == 0)
        magnitude = a;
      else if (a != magnitude) {
        flat = false;
        break;
      }
    }
    if (flat && std::has_single_bit(static_cast<std::uint64_t>(magnitude))) {
      int k = 2 * std::countr_zero(static_cast<std::uint64_t>(magnitude)) - n_;
      if (k >= 0 && k <= n_) f.plateaued = k;
    }

    // single-word bit tricks: census tables (n <= 5) fit in one word
    std::uint64_t w = word;
    std::uint64_t half = tt_.size() / 2;
    std::int64_t flips = 0;
    bool unate = true;
    f.sac = true;
    f.monotone = true;
    for (int t = 0; t < n_; ++t) {
      std::uint64_t u = bits::xor_permute_word(w, 1u << t);
      std::uint64_t p = ~bits::swap_masks[t];  // positions with a_{t+1} = 1
      std::uint64_t c = std::popcount(w ^ u);
      flips += static_cast<std::int64_t>(c);
      if (c != half) f.sac = false;
      bool nondec = (p & ~w & u) == 0;
      bool noninc = (p & w & ~u) == 0;
      if (!nondec) f.monotone = false;
      if (!nondec && !noninc) unate = false;
    }
    f.influence = Dyadic(flips, n_);
    // unateness is necessary for LTF membership; the LP certifies the rest
    f.ltf = unate && is_ltf(tt_).member;
    return f;
  }

  int n_;
  TruthTable tt_;
  std::vector<std::int64_t> spec_;
};

void merge_census(CensusResult& into, const CensusResult& part) {
  into.total += part.total;
  into.bent.merge(part.bent);
  into.sac.merge(part.sac);
  into.pc1.merge(part.pc1);
  into.monotone.merge(part.monotone);
  into.ltf.merge(part.ltf);
  for (const auto& [k, stats] : part.plateaued) into.plateaued[k].merge(stats);
  into.monotone_bent.merge(part.monotone_bent);
  into.monotone_sac.merge(part.monotone_sac);
  into.monotone_pc1.merge(part.monotone_pc1);
  into.monotone_union.merge(part.monotone_union);
  into.ltf_bent.merge(part.ltf_bent);
  into.ltf_sac.merge(part.ltf_sac);
  into.ltf_pc1.merge(part.ltf_pc1);
  into.ltf_union.merge(part.ltf_union);
  into.prop1_holds = into.prop1_holds && part.prop1_holds;
  into.fact2_holds = into.fact2_holds && part.fact2_holds;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream_id) {
  return Rng::stream(seed, stream_id).next();
}

}  // namespace

CensusResult census(int n, bool allow_long, int threads) {
  if (n < 1 || n > 5) throw guard_error("census: n must be in [1, 5]");
  if (n == 5 && !allow_long)
    throw guard_error("census: n = 5 requires the long-run flag");

  std::uint64_t tables = std::uint64_t{1} << (1 << n);  // 2^(2^n); n=5 -> 2^32
  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (static_cast<std::uint64_t>(threads) > tables / 1024 + 1)
    threads = static_cast<int>(tables / 1024 + 1);

  std::vector<CensusWorker> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) workers.emplace_back(n);

  std::vector<std::thread> pool;
  std::uint64_t chunk = tables / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t first = chunk * t;
    std::uint64_t last = t == threads - 1 ? tables : chunk * (t + 1);
    pool.emplace_back([&workers, t, first, last] { workers[t].run(first, last); });
  }
  for (auto& th : pool) th.join();

  CensusResult result;
  result.n = n;
  for (const CensusWorker& w : workers) merge_census(result, w.result);

  bool expect_nonempty = n == 2 || n == 3;
  bool nonempty = result.monotone_union.count > 0;
  result.union_monotone_as_expected = nonempty == expect_nonempty;
  return result;
}

bool all_pass(const std::vector<ExperimentRow>& rows) {
  for (const ExperimentRow& row : rows)
    if (row.status == "fail") return false;
  return true;
}

namespace {

ExperimentRow row(std::string experiment, int n, std::string param,
                  std::string statistic, std::optional<Dyadic> exact,
                  std::optional<double> value, std::optional<double> bound,
                  std::string status) {
  return ExperimentRow{std::move(experiment), n,     std::move(param),
                       std::move(statistic),  exact, value,
                       bound,                 std::move(status)};
}

}  // namespace

std::vector<ExperimentRow> census_rows(const CensusResult& r) {
  std::vector<ExperimentRow> rows;
  int n = r.n;
  rows.push_back(row("census", n, "", "total_functions", {},
                     static_cast<double>(r.total), {}, "report"));
  rows.push_back(row("census", n, "", "bent_count", {},
                     static_cast<double>(r.bent.count), {}, "report"));
  rows.push_back(row("census", n, "", "sac_count", {},
                     static_cast<double>(r.sac.count), {}, "report"));
  rows.push_back(row("census", n, "", "pc1_count", {},
                     static_cast<double>(r.pc1.count), {}, "report"));
  rows.push_back(row("census", n, "", "monotone_count", {},
                     static_cast<double>(r.monotone.count), {}, "report"));
  rows.push_back(row("census", n, "", "ltf_count", {},
                     static_cast<double>(r.ltf.count), {}, "report"));
  for (const auto& [k, stats] : r.plateaued)
    rows.push_back(row("census", n, "k=" + std::to_string(k), "plateaued_count", {},
                       static_cast<double>(stats.count), {}, "report"));
  rows.push_back(row("census", n, "", "prop1_influence_n_half", {},
                     r.prop1_holds ? 1.0 : 0.0, {}, r.prop1_holds ? "pass" : "fail"));
  rows.push_back(row("census", n, "", "fact2_bound_all_monotone", {},
                     r.fact2_holds ? 1.0 : 0.0, {}, r.fact2_holds ? "pass" : "fail"));
  rows.push_back(row("census", n, "", "monotone_union_count", {},
                     static_cast<double>(r.monotone_union.count), {},
                     r.union_monotone_as_expected ? "pass" : "fail"));
  rows.push_back(row("census", n, "", "ltf_union_count", {},
                     static_cast<double>(r.ltf_union.count), {}, "report"));
  return rows;
}

std::vector<ExperimentRow> fact2_experiment(int n, bool allow_long) {
  if (n < 1 || n > 6) throw guard_error("fact2: n must be in [1, 6]");
  if (n == 6 && !allow_long)
    throw guard_error("fact2: n = 6 requires the long-run flag");

  Dyadic bound = fact2_bound(n);
  std::uint64_t count = 0;
  std::uint64_t violations = 0;
  std::optional<Dyadic> max_influence;
  enumerate_monotone(
      n,
      [&](const TruthTable& tt) {
        Dyadic influence = total_influence(tt);
        if (influence == Dyadic()) return;  // the fact2 bound concerns non-constant functions
        ++count;
        if (!max_influence || *max_influence < influence) max_influence = influence;
        if (!(influence <= bound)) ++violations;
      },
      allow_long);

  std::vector<ExperimentRow> rows;
  rows.push_back(row("fact2", n, "", "nonconstant_monotone_count", {},
                     static_cast<double>(count), {}, "report"));
  rows.push_back(row("fact2", n, "", "bound_value", bound, bound.value(), {}, "report"));
  rows.push_back(row("fact2", n, "", "max_influence", max_influence,
                     max_influence ? max_influence->value() : 0.0, bound.value(),
                     violations == 0 ? "pass" : "fail"));
  bool below = bound < Dyadic(n, 1);
  rows.push_back(row("fact2", n, "", "bound_below_n_half", {}, below ? 1.0 : 0.0,
                     n / 2.0, n >= 4 ? (below ? "pass" : "fail") : "report"));
  return rows;
}

std::vector<ExperimentRow> fact3_experiment(int n, std::uint64_t samples,
                                            std::uint64_t seed) {
  if (n < 1 || n > 16) throw guard_error("fact3: n must be in [1, 16]");
  std::vector<ExperimentRow> rows;
  double root_bound = 2.0 * std::sqrt(static_cast<double>(n));
  for (WeightModel kind : {WeightModel::uniform_pm1, WeightModel::standard_normal}) {
    std::string param =
        kind == WeightModel::uniform_pm1 ? "model=uniform" : "model=normal";
    std::uint64_t tag = kind == WeightModel::uniform_pm1 ? 1 : 2;
    std::uint64_t violations = 0;
    std::optional<Dyadic> max_influence;
    for (std::uint64_t i = 0; i < samples; ++i) {
      RandomModel model{kind, derived_seed(seed, tag * samples + i)};
      LtfSample sample = random_ltf(n, model);
      Dyadic influence = total_influence(sample.table);
      if (!max_influence || *max_influence < influence) max_influence = influence;
      if (!influence_sq_le(influence, 4 * n)) ++violations;  // (2I)^2 <= 16n
    }
    rows.push_back(row("fact3", n, param, "samples", {},
                       static_cast<double>(samples), {}, "report"));
    rows.push_back(row("fact3", n, param, "max_influence", max_influence,
                       max_influence ? max_influence->value() : 0.0, root_bound,
                       violations == 0 ? "pass" : "fail"));
    rows.push_back(row("fact3", n, param, "bound_violations", {},
                       static_cast<double>(violations), 0.0,
                       violations == 0 ? "pass" : "fail"));
  }
  // separation threshold: 2*sqrt(n) < n/2 from n = 17 on (16n < n^2)
  bool threshold = 16 * 17 < 17 * 17;
  rows.push_back(row("fact3", 17, "", "threshold_2sqrtn_below_n_half", {},
                     threshold ? 1.0 : 0.0, {}, threshold ? "pass" : "fail"));
  return rows;
}

std::vector<ExperimentRow> fact4_experiment(int k, const std::vector<int>& n_list) {
  if (k < 0) throw guard_error("fact4: k must be >= 0");
  std::vector<ExperimentRow> rows;
  for (int n : n_list) {
    if (n > 14) throw guard_error("fact4: n must be <= 14");
    if ((n - k) % 2 != 0 || n - k < 2)
      throw std::invalid_argument(
          "fact4: need n - k even and >= 2 for a padded bent base");
    std::string param = "k=" + std::to_string(k);
    TruthTable base = mm_bent(random_mm_spec((n - k) / 2,
                                             0x1234 + 1000ULL * n + k));
    TruthTable padded = padded_plateaued(base, k);
    Dyadic influence = total_influence(padded);
    Dyadic expected(n - k, 1);
    bool order_ok = plateaued_order(wht(padded)) == k;
    bool influence_ok = influence == expected;
    rows.push_back(row("fact4", n, param, "plateaued_order", {},
                       static_cast<double>(k), static_cast<double>(k),
                       order_ok ? "pass" : "fail"));
    rows.push_back(row("fact4", n, param, "influence_exact", influence,
                       influence.value(), expected.value(),
                       influence_ok ? "pass" : "fail"));
    // report-only comparisons against the monotone and LTF bounds
    Dyadic mono_bound = fact2_bound(n);
    rows.push_back(row("fact4", n, param, "exceeds_fact2_bound", influence,
                       influence > mono_bound ? 1.0 : 0.0, mono_bound.value(),
                       "report"));
    bool within_ltf = influence_sq_le(influence, 4 * n);
    rows.push_back(row("fact4", n, param, "exceeds_fact3_bound", influence,
                       within_ltf ? 0.0 : 1.0,
                       2.0 * std::sqrt(static_cast<double>(n)), "report"));
  }
  return rows;
}

std::vector<ExperimentRow> conjecture_probe(int n, int degree, std::uint64_t samples,
                                            std::uint64_t seed) {
  if (n < 1 || n > 12) throw guard_error("probe: n must be in [1, 12]");
  if (degree < 1 || degree > 3) throw guard_error("probe: d must be in [1, 3]");
  std::vector<ExperimentRow> rows;
  double root_bound = degree * std::sqrt(static_cast<double>(n));
  for (WeightModel kind : {WeightModel::uniform_pm1, WeightModel::standard_normal}) {
    std::string param = std::string("d=") + std::to_string(degree) +
                        (kind == WeightModel::uniform_pm1 ? ",model=uniform"
                                                          : ",model=normal");
    std::uint64_t tag = kind == WeightModel::uniform_pm1 ? 1 : 2;
    std::uint64_t conjecture_violations = 0;
    std::uint64_t fact3_violations = 0;
    std::optional<Dyadic> max_influence;
    for (std::uint64_t i = 0; i < samples; ++i) {
      RandomModel model{kind, derived_seed(seed, tag * samples + i)};
      LtfSample sample = random_ptf(n, degree, model);
      Dyadic influence = total_influence(sample.table);
      if (!max_influence || *max_influence < influence) max_influence = influence;
      if (!influence_sq_le(influence, static_cast<std::int64_t>(degree) * degree * n))
        ++conjecture_violations;
      if (degree == 1 && !influence_sq_le(influence, 4 * n)) ++fact3_violations;
    }
    rows.push_back(row("probe", n, param, "samples", {},
                       static_cast<double>(samples), {}, "report"));
    rows.push_back(row("probe", n, param, "max_influence", max_influence,
                       max_influence ? max_influence->value() : 0.0, root_bound,
                       "report"));
    rows.push_back(row("probe", n, param, "conjecture_violation_fraction", {},
                       samples ? static_cast<double>(conjecture_violations) /
                                     static_cast<double>(samples)
                               : 0.0,
                       0.0, "report"));
    if (degree == 1)
      rows.push_back(row("probe", n, param, "fact3_bound_violations", {},
                         static_cast<double>(fact3_violations), 0.0,
                         fact3_violations == 0 ? "pass" : "fail"));
  }
  return rows;
}

}  // namespace bfa
