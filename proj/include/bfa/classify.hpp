#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfa/influence.hpp"
#include "bfa/rational.hpp"
#include "bfa/spectral.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

enum class Verdict { yes, no, not_applicable };

// Membership certificate for threshold functions, always re-verified exactly.
// Member: weights over the feature monomials reproduce f via
// sign(p(x)) with sign(0) = -1. Non-member: a nonnegative rational
// combination of the constraints that sums to a contradiction.
struct LtfCertificate {
  bool member = false;
  int degree = 1;
  std::vector<std::uint32_t> features;  // monomial masks, (degree, mask) order
  std::vector<BigRat> weights;          // member: one per feature
  std::vector<BigRat> witness;          // non-member: one per input point
};

struct ClassReport {
  int n = 0;
  Verdict bent = Verdict::no;
  std::optional<int> plateaued_order;
  bool sac = false;
  std::optional<int> sac_order;
  int pc_degree = 0;
  bool monotone = false;
  std::optional<LtfCertificate> ltf;  // absent when n exceeds the LP guard
  std::vector<std::int64_t> chow;     // W(∅), W({1}), ..., W({n})
};

// f is bent iff n is even and |W(S)| = 2^{n/2} for every S ⊆ [n].
Verdict is_bent(const Spectrum& spec);

// k such that W(S) ∈ {0, ±2^{(n+k)/2}} for all S, if any.
std::optional<int> plateaued_order(const Spectrum& spec);

// SAC: Inf_i = 1/2 for every variable.
bool satisfies_sac(const TruthTable& tt);
// Largest k <= n-2 such that every restriction fixing k variables satisfies
// SAC; nullopt when SAC itself fails.
std::optional<int> max_sac_order(const TruthTable& tt);

// Largest k with Inf_S = 1/2 for all 1 <= |S| <= k, via C(w_S) = 0.
int max_pc_degree(const TruthTable& tt);
int max_pc_degree(const AutocorrelationTable& ac);

bool is_monotone(const TruthTable& tt);

inline constexpr int ltf_max_vars = 12;
inline constexpr int ptf_max_features = 800;

LtfCertificate is_ltf(const TruthTable& tt);
LtfCertificate is_ptf(const TruthTable& tt, int degree);

// Exact re-verification of either certificate side against the table.
bool verify_certificate(const TruthTable& tt, const LtfCertificate& cert);

// Feature monomials of degree <= d in (degree, mask) order; features[0] = 0.
std::vector<std::uint32_t> ptf_features(int n, int degree);

ClassReport classify(const TruthTable& tt);

struct LheReport {
  double c = 0;
  double entropy = 0;
  bool member = false;  // H(f) >= c*n
  double hinv_c2 = 0;
  double bound = 0;  // (1+c)/h^{-1}(c^2) * I(f)
  double total_influence = 0;
  bool inequality_holds = false;
};

double binary_entropy(double p);
// inverse of h on [0, 1/2]; bisection to 1e-12
double inverse_binary_entropy(double y);
LheReport lhe_bound(const TruthTable& tt, double c);

}  // namespace bfa
