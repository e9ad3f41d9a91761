#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfa/dyadic.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

// Unnormalized Walsh-Hadamard spectrum: W(S) = sum_x f(x) prod_{i in S} x_i
// = 2^n * fhat(S), indexed by subset bitmask. All values are exact integers.
struct Spectrum {
  int n = 0;
  std::vector<std::int64_t> w;

  std::size_t size() const { return w.size(); }
  std::int64_t operator[](std::size_t mask) const { return w[mask]; }
};

// C(u) = sum_x f(x) f(x ⊙ w_u), indexed by the mask u of negated coordinates.
// C(0) = 2^n always.
struct AutocorrelationTable {
  int n = 0;
  std::vector<std::int64_t> c;

  std::size_t size() const { return c.size(); }
  std::int64_t operator[](std::size_t mask) const { return c[mask]; }
};

// In-place unnormalized butterfly; applying it twice scales by 2^n.
void walsh_butterfly(std::span<std::int64_t> v);

Spectrum wht(const TruthTable& tt);
// scratch-reusing variant for bulk loops
void wht_into(const TruthTable& tt, std::vector<std::int64_t>& out);

// W(S) / 2^n as an exact dyadic in [-1, 1]
Dyadic fourier_coefficient(const Spectrum& spec, std::uint32_t subset_mask);

// exact check of sum_S W(S)^2 == 4^n
bool parseval_holds(const Spectrum& spec);

// H(f) = -sum_S (W^2/4^n) log2(W^2/4^n), zero terms skipped. Bits; in [0, n].
double fourier_entropy(const Spectrum& spec);

// O(n 2^n) via the spectrum; agrees with the direct O(4^n) sum.
AutocorrelationTable autocorrelation(const TruthTable& tt);

}  // namespace bfa
