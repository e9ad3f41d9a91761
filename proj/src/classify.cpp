#include "bfa/classify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "bfa/simplex.hpp"

namespace bfa {

Verdict is_bent(const Spectrum& spec) {
  if (spec.n % 2 != 0) return Verdict::not_applicable;
  std::int64_t expected = std::int64_t{1} << (spec.n / 2);
  for (std::int64_t w : spec.w)
    if (w != expected && w != -expected) return Verdict::no;
  return Verdict::yes;
}

std::optional<int> plateaued_order(const Spectrum& spec) {
  std::int64_t magnitude = 0;
  for (std::int64_t w : spec.w) {
    if (w == 0) continue;
    std::int64_t a = w < 0 ? -w : w;
    if (magnitude == 0)
      magnitude = a;
    else if (a != magnitude)
      return std::nullopt;
  }
  // Parseval rules out the all-zero spectrum
  if (!std::has_single_bit(static_cast<std::uint64_t>(magnitude))) return std::nullopt;
  int log_m = std::countr_zero(static_cast<std::uint64_t>(magnitude));
  int k = 2 * log_m - spec.n;
  if (k < 0 || k > spec.n) return std::nullopt;
  return k;
}

bool satisfies_sac(const TruthTable& tt) {
  std::uint64_t half = tt.size() / 2;
  for (int i = 0; i < tt.n; ++i)
    if (flip_disagreements(tt, 1u << i) != half) return false;
  return true;
}

std::optional<int> max_sac_order(const TruthTable& tt) {
  if (!satisfies_sac(tt)) return std::nullopt;
  int best = 0;
  for (int k = 1; k <= tt.n - 2; ++k) {
    // every choice of k variables, every ±1 assignment to them
    for (std::uint32_t vars = 0; vars < tt.size(); ++vars) {
      if (std::popcount(vars) != k) continue;
      for (std::uint32_t vals = 0; vals < (1u << k); ++vals) {
        std::vector<std::pair<int, int>> fixed;
        int bit_index = 0;
        for (int i = 0; i < tt.n; ++i) {
          if (!(vars & (1u << i))) continue;
          fixed.push_back({i + 1, (vals >> bit_index) & 1 ? -1 : 1});
          ++bit_index;
        }
        if (!satisfies_sac(restrict_table(tt, fixed))) return best;
      }
    }
    best = k;
  }
  return best;
}

int max_pc_degree(const AutocorrelationTable& ac) {
  for (int weight = 1; weight <= ac.n; ++weight)
    for (std::size_t u = 0; u < ac.size(); ++u)
      if (std::popcount(u) == weight && ac.c[u] != 0) return weight - 1;
  return ac.n;
}

int max_pc_degree(const TruthTable& tt) { return max_pc_degree(autocorrelation(tt)); }

bool is_monotone(const TruthTable& tt) {
  // covering pairs: for j with a_i = 1 (x_i = -1), need f(j) <= f(j ^ e_i),
  // i.e. never b_j = 0 and b_{j^e_i} = 1
  for (int i = 0; i < tt.n; ++i) {
    std::size_t m = std::size_t{1} << i;
    for (std::size_t j = 0; j < tt.size(); ++j)
      if ((j & m) && !tt.bit(j) && tt.bit(j ^ m)) return false;
  }
  return true;
}

std::vector<std::uint32_t> ptf_features(int n, int degree) {
  std::vector<std::uint32_t> features;
  for (int d = 0; d <= degree; ++d)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == d) features.push_back(mask);
  return features;
}

namespace {

int chi(std::uint32_t point, std::uint32_t mask) {
  return std::popcount(point & mask) & 1 ? -1 : 1;
}

// Alternative system for the separation LP: find y >= 0 with
//   sum_j y_j f(j) chi_S(j) = 0 for every feature S, and
//   sum_{j : f(j)=+1} y_j = 1.
// Feasible -> the nonnegative combination refutes every weight vector.
// Infeasible -> the Farkas multipliers yield member weights.
template <class Q>
LtfCertificate decide_ptf(const TruthTable& tt, int degree,
                          const std::vector<std::uint32_t>& features) {
  const std::size_t points = tt.size();
  const std::size_t m = features.size();
  std::vector<std::vector<Q>> a(m + 1, std::vector<Q>(points));
  for (std::size_t j = 0; j < points; ++j) {
    int fj = tt.value(j);
    for (std::size_t s = 0; s < m; ++s)
      a[s][j] = Q{fj * chi(static_cast<std::uint32_t>(j), features[s])};
    a[m][j] = Q{fj == 1 ? 1 : 0};
  }
  std::vector<Q> b(m + 1, Q{});
  b[m] = Q{1};

  auto lp = solve_equality_feasibility<Q>(a, b);

  LtfCertificate cert;
  cert.degree = degree;
  cert.features = features;
  if (lp.feasible) {
    cert.member = false;
    cert.witness.reserve(points);
    for (const Q& y : lp.solution) cert.witness.push_back(to_bigrat(y));
  } else {
    cert.member = true;
    // pi = (z | t) with t = pi^T b > 0; weights are -z/t
    Q t = lp.multipliers[m];
    cert.weights.reserve(m);
    for (std::size_t s = 0; s < m; ++s)
      cert.weights.push_back(to_bigrat(-(lp.multipliers[s] / t)));
  }
  return cert;
}

}  // namespace

bool verify_certificate(const TruthTable& tt, const LtfCertificate& cert) {
  const std::size_t points = tt.size();
  const std::size_t m = cert.features.size();
  if (cert.member) {
    if (cert.weights.size() != m) return false;
    for (std::size_t j = 0; j < points; ++j) {
      BigRat p = 0;
      for (std::size_t s = 0; s < m; ++s)
        if (chi(static_cast<std::uint32_t>(j), cert.features[s]) == 1)
          p += cert.weights[s];
        else
          p -= cert.weights[s];
      int predicted = p > 0 ? 1 : -1;  // sign(0) = -1
      if (predicted != tt.value(j)) return false;
    }
    return true;
  }
  if (cert.witness.size() != points) return false;
  BigRat rhs = 0;
  for (std::size_t j = 0; j < points; ++j) {
    if (cert.witness[j] < 0) return false;
    if (tt.value(j) == 1) rhs += cert.witness[j];
  }
  if (!(rhs > 0)) return false;
  for (std::size_t s = 0; s < m; ++s) {
    BigRat total = 0;
    for (std::size_t j = 0; j < points; ++j) {
      int sign = tt.value(j) * chi(static_cast<std::uint32_t>(j), cert.features[s]);
      if (sign == 1)
        total += cert.witness[j];
      else
        total -= cert.witness[j];
    }
    if (total != 0) return false;
  }
  return true;
}

LtfCertificate is_ptf(const TruthTable& tt, int degree) {
  if (degree < 1 || degree > tt.n)
    throw std::invalid_argument("is_ptf: degree must be in [1, n]");
  if (tt.n > ltf_max_vars)
    throw std::invalid_argument("is_ptf: n exceeds the feasibility guard");
  std::vector<std::uint32_t> features = ptf_features(tt.n, degree);
  if (features.size() > ptf_max_features)
    throw std::invalid_argument("is_ptf: feature count exceeds the guard");

  LtfCertificate cert;
  try {
    cert = decide_ptf<Rat64>(tt, degree, features);
  } catch (const rat_overflow&) {
    cert = decide_ptf<BigRat>(tt, degree, features);
  }
  if (!verify_certificate(tt, cert))
    throw std::logic_error("is_ptf: certificate failed exact re-verification");
  return cert;
}

LtfCertificate is_ltf(const TruthTable& tt) { return is_ptf(tt, 1); }

ClassReport classify(const TruthTable& tt) {
  ClassReport report;
  report.n = tt.n;
  Spectrum spec = wht(tt);
  report.bent = is_bent(spec);
  report.plateaued_order = plateaued_order(spec);
  report.sac = satisfies_sac(tt);
  report.sac_order = max_sac_order(tt);
  report.pc_degree = max_pc_degree(tt);
  report.monotone = is_monotone(tt);
  if (tt.n <= ltf_max_vars) report.ltf = is_ltf(tt);
  report.chow.push_back(spec.w[0]);
  for (int i = 0; i < tt.n; ++i) report.chow.push_back(spec.w[std::size_t{1} << i]);
  return report;
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double inverse_binary_entropy(double y) {
  if (y < 0.0 || y > 1.0)
    throw std::invalid_argument("inverse_binary_entropy: y must be in [0, 1]");
  if (y == 1.0) return 0.5;  // h is flat at 1/2; bisection would stall on rounding
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

LheReport lhe_bound(const TruthTable& tt, double c) {
  if (!(c > 0.0 && c < 0.5))
    throw std::invalid_argument("lhe_bound: c must lie in (0, 1/2)");
  LheReport r;
  r.c = c;
  r.entropy = fourier_entropy(wht(tt));
  r.member = r.entropy >= c * tt.n;
  r.hinv_c2 = inverse_binary_entropy(c * c);
  r.total_influence = total_influence(tt).value();
  r.bound = (1.0 + c) / r.hinv_c2 * r.total_influence;
  r.inequality_holds = r.entropy <= r.bound + 1e-9;
  return r;
}

}  // namespace bfa
