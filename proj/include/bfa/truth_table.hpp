#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bfa {

// n-variable Boolean function f : {-1,1}^n -> {-1,1}, stored as 2^n packed bits.
// Bit b_j at input index j encodes f(j) = (-1)^{b_j}. Index j decodes to the
// assignment a_i = (j >> (i-1)) & 1 and x_i = (-1)^{a_i} for i = 1..n.
struct TruthTable {
  static constexpr int max_vars = 20;

  int n = 0;
  std::vector<std::uint64_t> words;  // bit j at words[j/64], position j%64

  explicit TruthTable(int n_vars);

  std::size_t size() const { return std::size_t{1} << n; }
  std::size_t word_count() const { return words.size(); }

  int bit(std::size_t j) const { return (words[j >> 6] >> (j & 63)) & 1; }
  void set_bit(std::size_t j, bool v) {
    std::uint64_t m = 1ULL << (j & 63);
    if (v)
      words[j >> 6] |= m;
    else
      words[j >> 6] &= ~m;
  }
  // f(j) in {-1,1}
  int value(std::size_t j) const { return bit(j) ? -1 : 1; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

// Canonical hex wire format: 2*max(1, 2^n/8) digits, bytes by increasing input
// index, bit j at byte j/8, bit position j%8 (LSB first). For n < 3 the unused
// high bits of the single byte must be zero.
TruthTable from_hex(const std::string& hex, int n);
std::string to_hex(const TruthTable& tt);

int evaluate(const TruthTable& tt, std::size_t index);
// point given as a ±1 assignment (x_1, ..., x_n)
int evaluate(const TruthTable& tt, std::span<const int> x);

// Fix variables to ±1 values; survivors are renumbered in increasing original
// order. 1 <= k <= n-1 variables may be fixed.
TruthTable restrict_table(const TruthTable& tt,
                          const std::vector<std::pair<int, int>>& fixed);

// x^{\oplus S}: negating the coordinates in S is an XOR on the input index.
std::size_t flip_point(const TruthTable& tt, std::size_t j, std::uint32_t subset_mask);

// #{ j : f(j) != f(j ^ mask) }, word-parallel. Used by influence and SAC/PC code.
std::uint64_t flip_disagreements(const TruthTable& tt, std::uint32_t mask);

}  // namespace bfa
