#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfa/classify.hpp"
#include "bfa/dyadic.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

// scale guards on censuses and enumerations; the CLI maps these to exit 2
struct guard_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClassStats {
  std::uint64_t count = 0;
  std::optional<Dyadic> min_influence;
  std::optional<Dyadic> max_influence;

  void add(const Dyadic& influence);
  void merge(const ClassStats& other);
};

struct IntersectionCell {
  static constexpr std::size_t max_witnesses = 16;
  std::uint64_t count = 0;
  std::vector<std::string> witnesses;  // hex of the numerically smallest tables

  void add(const std::string& hex);
  void merge(const IntersectionCell& other);
};

struct CensusResult {
  int n = 0;
  std::uint64_t total = 0;
  ClassStats bent, sac, pc1, monotone, ltf;
  std::map<int, ClassStats> plateaued;  // per order k

  IntersectionCell monotone_bent, monotone_sac, monotone_pc1, monotone_union;
  IntersectionCell ltf_bent, ltf_sac, ltf_pc1, ltf_union;

  // outcome of the built-in verifications
  bool prop1_holds = true;             // B∪S∪PC1 members all have I = n/2
  bool fact2_holds = true;             // monotone members obey the fact2 bound
  bool union_monotone_as_expected = true;  // empty for n >= 4, nonempty for n in {2,3}
};

// Classify every n-variable function. n <= 4 by default, n = 5 behind
// allow_long; threads = 0 picks the hardware count.
CensusResult census(int n, bool allow_long = false, int threads = 0);

struct ExperimentRow {
  std::string experiment;
  int n = 0;
  std::string param;      // "k=1", "d=2", "model=normal", ... or empty
  std::string statistic;
  std::optional<Dyadic> exact;
  std::optional<double> value;
  std::optional<double> bound;
  std::string status;  // "pass", "fail", "report"
};

bool all_pass(const std::vector<ExperimentRow>& rows);

// C(n, floor(n/2)) * ceil(n/2) / 2^{n-1}
Dyadic fact2_bound(int n);
// I <= sqrt(bound_sq), decided by integer squaring
bool influence_sq_le(const Dyadic& influence, std::int64_t bound_sq);

std::vector<ExperimentRow> census_rows(const CensusResult& result);
std::vector<ExperimentRow> fact2_experiment(int n, bool allow_long = false);
std::vector<ExperimentRow> fact3_experiment(int n, std::uint64_t samples,
                                            std::uint64_t seed);
std::vector<ExperimentRow> fact4_experiment(int k, const std::vector<int>& n_list);
std::vector<ExperimentRow> conjecture_probe(int n, int degree, std::uint64_t samples,
                                            std::uint64_t seed);

}  // namespace bfa
