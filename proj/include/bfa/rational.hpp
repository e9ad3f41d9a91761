#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfa {

using BigRat = boost::multiprecision::cpp_rational;

struct rat_overflow : std::overflow_error {
  rat_overflow() : std::overflow_error("Rat64 overflow") {}
};

namespace detail {

inline unsigned __int128 wide_abs(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

inline unsigned __int128 wide_gcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Reduced fraction on int64 with overflow detection; the LP falls back to
// BigRat when a reduction no longer fits.
struct Rat64 {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, gcd(num, den) = 1

  Rat64() = default;
  Rat64(std::int64_t v) : num(v), den(1) {}
  Rat64(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rat64 make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rat64: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rat64();
    unsigned __int128 g = detail::wide_gcd(detail::wide_abs(n), static_cast<unsigned __int128>(d));
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n > hi || n < -hi || d > hi) throw rat_overflow();
    Rat64 r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  bool is_zero() const { return num == 0; }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat64 operator-(const Rat64& a, const Rat64& b) {
    return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  Rat64 operator-() const {
    Rat64 r;
    r.num = -num;
    r.den = den;
    return r;
  }
  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    return make(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat64 operator/(const Rat64& a, const Rat64& b) {
    if (b.num == 0) throw std::invalid_argument("Rat64: division by zero");
    return make(static_cast<__int128>(a.num) * b.den,
                static_cast<__int128>(a.den) * b.num);
  }

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat64& a, const Rat64& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rat64& a, const Rat64& b) { return a == b || a < b; }
  friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
  friend bool operator>=(const Rat64& a, const Rat64& b) { return b <= a; }
};

inline BigRat to_bigrat(const Rat64& r) { return BigRat(r.num, r.den); }
inline BigRat to_bigrat(const BigRat& r) { return r; }

inline std::string rat_str(const BigRat& r) { return r.str(); }

}  // namespace bfa
