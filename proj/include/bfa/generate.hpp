#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bfa/rational.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

// SplitMix64. Substream s of seed starts from the finalizer applied to
// seed ^ (s+1)*0x9e3779b97f4a7c15; normal variates are Box-Muller (cosine
// branch, two uniforms per draw).
struct Rng {
  std::uint64_t state = 0;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1p-53; }
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
  double normal();
};

enum class WeightModel { uniform_pm1, standard_normal };

struct RandomModel {
  WeightModel kind = WeightModel::uniform_pm1;
  std::uint64_t seed = 0;
};

// Maiorana-McFarland data: f(x, y) = (-1)^{<a_x, pi(a_y)> ⊕ g(a_y)} on
// n = 2m variables, x on the low m indices.
struct MMSpec {
  int m = 1;
  std::vector<std::uint32_t> pi;  // permutation of [0, 2^m)
  TruthTable g;                   // arbitrary m-variable table
};

TruthTable mm_bent(const MMSpec& spec);
MMSpec random_mm_spec(int m, std::uint64_t seed);

// g on n-k variables padded with k ignored high-indexed variables; output is
// exactly k-plateaued with I = (n-k)/2.
TruthTable padded_plateaued(const TruthTable& bent_g, int k);

// sign(w_0 + sum_i w_i x_i) with sign(0) = -1, exact rational arithmetic
TruthTable ltf_truth_table(int n, const std::vector<BigRat>& weights);

struct LtfSample {
  TruthTable table;
  std::vector<BigRat> weights;  // one per feature, (degree, mask) order
};

// Random models draw weights on a 2^{-40} dyadic grid, so the emitted table
// is the exact sign pattern of the emitted rational weights.
LtfSample random_ltf(int n, const RandomModel& model);
LtfSample random_ptf(int n, int degree, const RandomModel& model);

// Every monotone function exactly once, via the half-table recursion.
// n <= 5 by default, n = 6 behind allow_long.
void enumerate_monotone(int n, const std::function<void(const TruthTable&)>& sink,
                        bool allow_long = false);
// b-bit masks of all monotone functions (n <= 5)
std::vector<std::uint64_t> monotone_masks(int n);

TruthTable random_function(int n, std::uint64_t seed);
void random_function_into(TruthTable& tt, Rng& rng);

}  // namespace bfa
