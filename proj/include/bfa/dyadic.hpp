#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <cmath>

namespace bfa {

// Exact rational of the form num / 2^exp.
// Canonical form: num is odd, or num == 0 and exp == 0.
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;

  Dyadic() = default;

  Dyadic(std::int64_t numerator, int exponent) : num(numerator), exp(exponent) {
    if (exponent < 0) throw std::invalid_argument("Dyadic: negative exponent");
    if (num == 0) {
      exp = 0;
      return;
    }
    while (exp > 0 && (num & 1) == 0) {
      num >>= 1;
      --exp;
    }
  }

  static Dyadic from_int(std::int64_t v) { return Dyadic(v, 0); }

  double value() const { return std::ldexp(static_cast<double>(num), -exp); }

  std::string str() const {
    if (exp == 0) return std::to_string(num);
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    __int128 s = (static_cast<__int128>(a.num) << (e - a.exp)) +
                 (static_cast<__int128>(b.num) << (e - b.exp));
    return from_wide(s, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic operator-() const {
    Dyadic r;
    r.num = -num;
    r.exp = exp;
    return r;
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    __int128 p = static_cast<__int128>(a.num) * b.num;
    return from_wide(p, a.exp + b.exp);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.exp == b.exp;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return (static_cast<__int128>(a.num) << (e - a.exp)) <
           (static_cast<__int128>(b.num) << (e - b.exp));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a == b || a < b; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

private:
  static Dyadic from_wide(__int128 v, int e) {
    if (v == 0) return Dyadic();
    while (e > 0 && (v & 1) == 0) {
      v >>= 1;
      --e;
    }
    constexpr __int128 lo = -(static_cast<__int128>(1) << 62);
    constexpr __int128 hi = static_cast<__int128>(1) << 62;
    if (v <= lo || v >= hi) throw std::overflow_error("Dyadic: numerator overflow");
    Dyadic r;
    r.num = static_cast<std::int64_t>(v);
    r.exp = e;
    return r;
  }
};

}  // namespace bfa
