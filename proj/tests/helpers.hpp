#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

#include "bfa/truth_table.hpp"

namespace testutil {

// local generator so test fixtures don't depend on the library's RNG
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

inline bfa::TruthTable random_table(int n, Rng& rng) {
  bfa::TruthTable tt(n);
  for (auto& w : tt.words) w = rng.next();
  if (n < 6) tt.words[0] &= (1ULL << (1 << n)) - 1;
  return tt;
}

// table from the set of indices j with f(j) = -1
inline bfa::TruthTable table_of(int n, std::initializer_list<std::size_t> neg) {
  bfa::TruthTable tt(n);
  for (std::size_t j : neg) tt.set_bit(j, true);
  return tt;
}

// b = a1 AND a2: f(x) = -1 only at x = (-1,-1)
inline bfa::TruthTable and_table() { return table_of(2, {3}); }

// majority of three ±1 inputs
inline bfa::TruthTable maj3() { return table_of(3, {3, 5, 6, 7}); }

inline bfa::TruthTable parity(int n) {
  bfa::TruthTable tt(n);
  for (std::size_t j = 0; j < tt.size(); ++j)
    tt.set_bit(j, std::popcount(j) & 1);
  return tt;
}

inline bfa::TruthTable dictator(int n, int i) {
  bfa::TruthTable tt(n);
  for (std::size_t j = 0; j < tt.size(); ++j)
    tt.set_bit(j, (j >> (i - 1)) & 1);
  return tt;
}

inline bfa::TruthTable constant(int n, int value) {
  bfa::TruthTable tt(n);
  if (value == -1)
    for (std::size_t j = 0; j < tt.size(); ++j) tt.set_bit(j, true);
  return tt;
}

}  // namespace testutil
