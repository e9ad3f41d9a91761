#include "bfa/influence.hpp"

#include <bit>
#include <stdexcept>

namespace bfa {

Dyadic influence_var(const TruthTable& tt, int i) {
  if (i < 1 || i > tt.n)
    throw std::out_of_range("influence_var: variable index out of range");
  return Dyadic(static_cast<std::int64_t>(flip_disagreements(tt, 1u << (i - 1))),
                tt.n);
}

Dyadic influence_var_fourier(const Spectrum& spec, int i) {
  if (i < 1 || i > spec.n)
    throw std::out_of_range("influence_var_fourier: variable index out of range");
  std::uint32_t bit = 1u << (i - 1);
  std::int64_t total = 0;
  for (std::size_t m = 0; m < spec.size(); ++m)
    if (m & bit) total += spec.w[m] * spec.w[m];
  return Dyadic(total, 2 * spec.n);
}

Dyadic influence_set(const TruthTable& tt, std::uint32_t subset_mask) {
  if (subset_mask == 0) return Dyadic();
  return Dyadic(static_cast<std::int64_t>(flip_disagreements(tt, subset_mask)), tt.n);
}

Dyadic total_influence(const TruthTable& tt) {
  std::int64_t count = 0;
  for (int i = 1; i <= tt.n; ++i)
    count += static_cast<std::int64_t>(flip_disagreements(tt, 1u << (i - 1)));
  return Dyadic(count, tt.n);
}

Dyadic total_influence_fourier(const Spectrum& spec) {
  std::int64_t total = 0;
  for (std::size_t m = 0; m < spec.size(); ++m)
    total += static_cast<std::int64_t>(std::popcount(m)) * spec.w[m] * spec.w[m];
  return Dyadic(total, 2 * spec.n);
}

InfluenceProfile influence_profile(const TruthTable& tt, bool cross_check) {
  InfluenceProfile p;
  p.n = tt.n;
  p.per_variable.reserve(tt.n);
  std::int64_t count = 0;
  for (int i = 1; i <= tt.n; ++i) {
    std::int64_t c = static_cast<std::int64_t>(flip_disagreements(tt, 1u << (i - 1)));
    count += c;
    p.per_variable.push_back(Dyadic(c, tt.n));
  }
  p.total = Dyadic(count, tt.n);
  if (cross_check) {
    Spectrum s = wht(tt);
    for (int i = 1; i <= tt.n; ++i)
      if (!(influence_var_fourier(s, i) == p.per_variable[i - 1]))
        throw std::logic_error("influence_profile: flip and Fourier forms disagree");
    if (!(total_influence_fourier(s) == p.total))
      throw std::logic_error("influence_profile: total influence forms disagree");
  }
  return p;
}

int sensitivity(const TruthTable& tt, std::size_t j) {
  if (j >= tt.size()) throw std::out_of_range("sensitivity: index out of range");
  int s = 0;
  int fj = tt.bit(j);
  for (int i = 0; i < tt.n; ++i)
    if (tt.bit(j ^ (std::size_t{1} << i)) != fj) ++s;
  return s;
}

Dyadic average_sensitivity(const TruthTable& tt) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < tt.size(); ++j) total += sensitivity(tt, j);
  return Dyadic(total, tt.n);
}

}  // namespace bfa
