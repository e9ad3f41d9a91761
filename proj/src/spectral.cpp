#include "bfa/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace bfa {

void walsh_butterfly(std::span<std::int64_t> v) {
  std::size_t len = v.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        std::int64_t a = v[j];
        std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

void wht_into(const TruthTable& tt, std::vector<std::int64_t>& out) {
  out.resize(tt.size());
  for (std::size_t j = 0; j < tt.size(); ++j) out[j] = tt.value(j);
  walsh_butterfly(out);
}

Spectrum wht(const TruthTable& tt) {
  Spectrum s;
  s.n = tt.n;
  wht_into(tt, s.w);
  return s;
}

Dyadic fourier_coefficient(const Spectrum& spec, std::uint32_t subset_mask) {
  if (subset_mask >= spec.size())
    throw std::out_of_range("fourier_coefficient: mask out of range");
  return Dyadic(spec.w[subset_mask], spec.n);
}

bool parseval_holds(const Spectrum& spec) {
  unsigned __int128 total = 0;
  for (std::int64_t w : spec.w)
    total += static_cast<unsigned __int128>(w * w);
  return total == (static_cast<unsigned __int128>(1) << (2 * spec.n));
}

double fourier_entropy(const Spectrum& spec) {
  double h = 0.0;
  for (std::int64_t w : spec.w) {
    if (w == 0) continue;
    double p = std::ldexp(static_cast<double>(w * w), -2 * spec.n);
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

AutocorrelationTable autocorrelation(const TruthTable& tt) {
  // 2^n C(u) = sum_S W(S)^2 (-1)^{<u,S>}, so one more butterfly on the
  // squared spectrum recovers C exactly.
  Spectrum s = wht(tt);
  AutocorrelationTable ac;
  ac.n = tt.n;
  ac.c.resize(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) ac.c[m] = s.w[m] * s.w[m];
  walsh_butterfly(ac.c);
  for (auto& v : ac.c) {
    // each entry is divisible by 2^n
    v >>= tt.n;
  }
  return ac;
}

}  // namespace bfa
