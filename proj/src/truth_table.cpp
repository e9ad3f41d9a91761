#include "bfa/truth_table.hpp"

#include <bit>
#include <stdexcept>

#include "bfa/bits.hpp"

namespace bfa {

TruthTable::TruthTable(int n_vars) : n(n_vars) {
  if (n < 1 || n > max_vars)
    throw std::invalid_argument("TruthTable: n must be in [1, 20]");
  words.assign(n <= 6 ? 1 : (std::size_t{1} << (n - 6)), 0);
}

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

TruthTable from_hex(const std::string& hex, int n) {
  if (n < 1 || n > TruthTable::max_vars)
    throw std::invalid_argument("from_hex: n must be in [1, 20]");
  std::size_t points = std::size_t{1} << n;
  std::size_t bytes = points >= 8 ? points / 8 : 1;
  if (hex.size() != 2 * bytes)
    throw std::invalid_argument("from_hex: expected " + std::to_string(2 * bytes) +
                                " hex digits, got " + std::to_string(hex.size()));
  TruthTable tt(n);
  for (std::size_t k = 0; k < bytes; ++k) {
    int hi = hex_digit(hex[2 * k]);
    int lo = hex_digit(hex[2 * k + 1]);
    if (hi < 0 || lo < 0)
      throw std::invalid_argument("from_hex: non-hex character at position " +
                                  std::to_string(hi < 0 ? 2 * k : 2 * k + 1));
    std::uint64_t byte = static_cast<std::uint64_t>(hi << 4 | lo);
    if (points < 8 && (byte & ~((1ULL << points) - 1)) != 0)
      throw std::invalid_argument("from_hex: nonzero padding bits for n=" +
                                  std::to_string(n));
    tt.words[k / 8] |= byte << (8 * (k % 8));
  }
  return tt;
}

std::string to_hex(const TruthTable& tt) {
  static const char* digits = "0123456789abcdef";
  std::size_t points = tt.size();
  std::size_t bytes = points >= 8 ? points / 8 : 1;
  std::string out(2 * bytes, '0');
  for (std::size_t k = 0; k < bytes; ++k) {
    unsigned byte = (tt.words[k / 8] >> (8 * (k % 8))) & 0xff;
    out[2 * k] = digits[byte >> 4];
    out[2 * k + 1] = digits[byte & 0xf];
  }
  return out;
}

int evaluate(const TruthTable& tt, std::size_t index) {
  if (index >= tt.size()) throw std::out_of_range("evaluate: index out of range");
  return tt.value(index);
}

int evaluate(const TruthTable& tt, std::span<const int> x) {
  if (static_cast<int>(x.size()) != tt.n)
    throw std::invalid_argument("evaluate: assignment length != n");
  std::size_t j = 0;
  for (int i = 0; i < tt.n; ++i) {
    if (x[i] == -1)
      j |= std::size_t{1} << i;
    else if (x[i] != 1)
      throw std::invalid_argument("evaluate: assignment values must be ±1");
  }
  return tt.value(j);
}

TruthTable restrict_table(const TruthTable& tt,
                          const std::vector<std::pair<int, int>>& fixed) {
  int k = static_cast<int>(fixed.size());
  if (k < 1 || k > tt.n - 1)
    throw std::invalid_argument("restrict_table: must fix between 1 and n-1 variables");
  std::uint32_t fixed_mask = 0;
  std::size_t fixed_bits = 0;
  for (auto [var, val] : fixed) {
    if (var < 1 || var > tt.n)
      throw std::invalid_argument("restrict_table: variable index out of range");
    std::uint32_t m = 1u << (var - 1);
    if (fixed_mask & m)
      throw std::invalid_argument("restrict_table: duplicate variable");
    fixed_mask |= m;
    if (val == -1)
      fixed_bits |= m;  // x_i = -1 means a_i = 1
    else if (val != 1)
      throw std::invalid_argument("restrict_table: values must be ±1");
  }
  int m = tt.n - k;
  TruthTable out(m);
  // positions of surviving variables, in increasing original order
  std::vector<int> free_pos;
  for (int i = 0; i < tt.n; ++i)
    if (!(fixed_mask & (1u << i))) free_pos.push_back(i);
  for (std::size_t r = 0; r < out.size(); ++r) {
    std::size_t j = fixed_bits;
    for (int i = 0; i < m; ++i)
      if ((r >> i) & 1) j |= std::size_t{1} << free_pos[i];
    out.set_bit(r, tt.bit(j));
  }
  return out;
}

std::size_t flip_point(const TruthTable& tt, std::size_t j, std::uint32_t subset_mask) {
  if (j >= tt.size()) throw std::out_of_range("flip_point: index out of range");
  if (subset_mask >= tt.size())
    throw std::out_of_range("flip_point: subset mask out of range");
  return j ^ subset_mask;
}

std::uint64_t flip_disagreements(const TruthTable& tt, std::uint32_t mask) {
  if (mask >= tt.size())
    throw std::out_of_range("flip_disagreements: mask out of range");
  std::size_t word_xor = mask >> 6;
  unsigned low = mask & 63;
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < tt.words.size(); ++k) {
    std::uint64_t permuted = bits::xor_permute_word(tt.words[k ^ word_xor], low);
    count += std::popcount(tt.words[k] ^ permuted);
  }
  return count;
}

}  // namespace bfa
