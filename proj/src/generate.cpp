#include "bfa/generate.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bfa/bits.hpp"
#include "bfa/classify.hpp"
#include "bfa/spectral.hpp"

namespace bfa {

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream_id) {
  Rng r(seed ^ ((stream_id + 1) * 0x9e3779b97f4a7c15ULL));
  r.state = r.next();
  return r;
}

double Rng::normal() {
  // u1 in (0,1] so the log is finite
  double u1 = static_cast<double>((next() >> 11) + 1) * 0x1p-53;
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

TruthTable mm_bent(const MMSpec& spec) {
  int m = spec.m;
  if (m < 1 || 2 * m > 16)
    throw std::invalid_argument("mm_bent: need 1 <= m and 2m <= 16");
  std::size_t half = std::size_t{1} << m;
  if (spec.pi.size() != half)
    throw std::invalid_argument("mm_bent: pi must have 2^m entries");
  std::vector<bool> seen(half, false);
  for (std::uint32_t v : spec.pi) {
    if (v >= half || seen[v]) throw std::invalid_argument("mm_bent: pi is not a bijection");
    seen[v] = true;
  }
  if (spec.g.n != m) throw std::invalid_argument("mm_bent: g must have m variables");

  TruthTable out(2 * m);
  for (std::size_t ay = 0; ay < half; ++ay) {
    std::uint32_t image = spec.pi[ay];
    int gy = spec.g.bit(ay);
    for (std::size_t ax = 0; ax < half; ++ax) {
      int b = (std::popcount(static_cast<std::uint32_t>(ax) & image) & 1) ^ gy;
      out.set_bit(ax | (ay << m), b);
    }
  }
  return out;
}

MMSpec random_mm_spec(int m, std::uint64_t seed) {
  if (m < 1 || 2 * m > 16)
    throw std::invalid_argument("random_mm_spec: need 1 <= m and 2m <= 16");
  MMSpec spec{m, {}, TruthTable(m)};
  std::size_t half = std::size_t{1} << m;
  spec.pi.resize(half);
  for (std::size_t i = 0; i < half; ++i) spec.pi[i] = static_cast<std::uint32_t>(i);
  Rng rng = Rng::stream(seed, 0);
  for (std::size_t i = half - 1; i > 0; --i)
    std::swap(spec.pi[i], spec.pi[rng.below(i + 1)]);
  random_function_into(spec.g, rng);
  return spec;
}

TruthTable padded_plateaued(const TruthTable& bent_g, int k) {
  if (k < 0) throw std::invalid_argument("padded_plateaued: k must be >= 0");
  int n = bent_g.n + k;
  if (n > 16) throw std::invalid_argument("padded_plateaued: n = vars(g) + k must be <= 16");
  if (is_bent(wht(bent_g)) != Verdict::yes)
    throw std::invalid_argument("padded_plateaued: base table is not bent");
  if (k == 0) return bent_g;
  TruthTable out(n);
  std::size_t base = bent_g.size();
  for (std::size_t j = 0; j < out.size(); ++j)
    out.set_bit(j, bent_g.bit(j & (base - 1)));
  return out;
}

TruthTable ltf_truth_table(int n, const std::vector<BigRat>& weights) {
  if (weights.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("ltf_truth_table: need n+1 weights");
  TruthTable out(n);
  for (std::size_t j = 0; j < out.size(); ++j) {
    BigRat z = weights[0];
    for (int i = 1; i <= n; ++i) {
      if ((j >> (i - 1)) & 1)
        z -= weights[i];
      else
        z += weights[i];
    }
    out.set_bit(j, !(z > 0));
  }
  return out;
}

namespace {

constexpr int weight_grid_bits = 40;

std::int64_t draw_quantized(Rng& rng, WeightModel kind) {
  double w = kind == WeightModel::uniform_pm1 ? rng.uniform_pm1() : rng.normal();
  return std::llround(std::ldexp(w, weight_grid_bits));
}

}  // namespace

LtfSample random_ltf(int n, const RandomModel& model) {
  if (n < 1 || n > 16) throw std::invalid_argument("random_ltf: n must be in [1, 16]");
  Rng rng = Rng::stream(model.seed, 0);
  std::vector<std::int64_t> q(n + 1);
  for (auto& v : q) v = draw_quantized(rng, model.kind);

  LtfSample sample{TruthTable(n), {}};
  sample.weights.reserve(n + 1);
  for (std::int64_t v : q)
    sample.weights.push_back(BigRat(v, std::int64_t{1} << weight_grid_bits));

  // Gray-code walk: one add per point, exact in int64
  std::size_t points = sample.table.size();
  std::int64_t sum = q[0];
  for (int i = 1; i <= n; ++i) sum += q[i];
  std::size_t gray = 0;
  for (std::size_t i = 0;; ++i) {
    sample.table.set_bit(gray, sum <= 0);
    if (i + 1 == points) break;
    int t = std::countr_zero(i + 1);
    std::size_t bit = std::size_t{1} << t;
    gray ^= bit;
    if (gray & bit)
      sum -= 2 * q[t + 1];
    else
      sum += 2 * q[t + 1];
  }
  return sample;
}

LtfSample random_ptf(int n, int degree, const RandomModel& model) {
  if (n < 1 || n > 14) throw std::invalid_argument("random_ptf: n must be in [1, 14]");
  if (degree < 1 || degree > 4 || degree > n)
    throw std::invalid_argument("random_ptf: degree must be in [1, min(n, 4)]");
  Rng rng = Rng::stream(model.seed, 0);

  std::vector<std::uint32_t> features = ptf_features(n, degree);
  LtfSample sample{TruthTable(n), {}};
  sample.weights.reserve(features.size());
  std::vector<std::int64_t> coeffs(std::size_t{1} << n, 0);
  for (std::uint32_t mask : features) {
    std::int64_t v = draw_quantized(rng, model.kind);
    coeffs[mask] = v;
    sample.weights.push_back(BigRat(v, std::int64_t{1} << weight_grid_bits));
  }
  // butterfly turns the coefficient vector into the evaluations of p
  walsh_butterfly(coeffs);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    sample.table.set_bit(j, coeffs[j] <= 0);
  return sample;
}

std::vector<std::uint64_t> monotone_masks(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("monotone_masks: n must be in [1, 5]");
  // monotone f = (g1 on the x_v=+1 half, g0 on the x_v=-1 half) with
  // g0, g1 monotone and g1's negative set contained in g0's
  std::vector<std::uint64_t> layer = {0, 1};  // the two constants on 0 variables
  for (int v = 1; v <= n; ++v) {
    std::vector<std::uint64_t> next;
    int shift = 1 << (v - 1);
    for (std::uint64_t b0 : layer)
      for (std::uint64_t b1 : layer)
        if ((b1 & ~b0) == 0) next.push_back(b1 | (b0 << shift));
    layer = std::move(next);
  }
  return layer;
}

void enumerate_monotone(int n, const std::function<void(const TruthTable&)>& sink,
                        bool allow_long) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("enumerate_monotone: n must be in [1, 6]");
  if (n == 6 && !allow_long)
    throw std::invalid_argument("enumerate_monotone: n = 6 requires the long-run flag");
  if (n <= 5) {
    TruthTable tt(n);
    for (std::uint64_t mask : monotone_masks(n)) {
      tt.words[0] = mask;
      sink(tt);
    }
    return;
  }
  TruthTable tt(6);
  std::vector<std::uint64_t> half = monotone_masks(5);
  for (std::uint64_t b0 : half) {
    for (std::uint64_t b1 : half) {
      if ((b1 & ~b0) != 0) continue;
      tt.words[0] = b1 | (b0 << 32);
      sink(tt);
    }
  }
}

void random_function_into(TruthTable& tt, Rng& rng) {
  for (auto& w : tt.words) w = rng.next();
  if (tt.n < 6) tt.words[0] &= (1ULL << (1 << tt.n)) - 1;
}

TruthTable random_function(int n, std::uint64_t seed) {
  TruthTable tt(n);
  Rng rng = Rng::stream(seed, 0);
  random_function_into(tt, rng);
  return tt;
}

}  // namespace bfa
