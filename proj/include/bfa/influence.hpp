#pragma once

#include <cstdint>
#include <vector>

#include "bfa/dyadic.hpp"
#include "bfa/spectral.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

struct InfluenceProfile {
  int n = 0;
  std::vector<Dyadic> per_variable;  // Inf_i, i = 1..n
  Dyadic total;                      // I(f) = sum_i Inf_i
};

// Pr_x[f(x) != f(x^{⊕i})], computed from flip counts. 1-based i.
Dyadic influence_var(const TruthTable& tt, int i);

// Fourier form sum_{S∋i} W(S)^2 / 4^n; must equal influence_var exactly.
Dyadic influence_var_fourier(const Spectrum& spec, int i);

// Pr_x[f(x) != f(x^{⊕S})]; empty S yields 0 (not an error).
Dyadic influence_set(const TruthTable& tt, std::uint32_t subset_mask);

Dyadic total_influence(const TruthTable& tt);
Dyadic total_influence_fourier(const Spectrum& spec);

// Both routes, with the Fourier form as a mandatory cross-check when
// cross_check is set (throws std::logic_error on disagreement).
InfluenceProfile influence_profile(const TruthTable& tt, bool cross_check = true);

// s(f,x) = #{ i : f(x) != f(x^{⊕i}) }
int sensitivity(const TruthTable& tt, std::size_t j);
// s(f) = 2^{-n} sum_x s(f,x); equals I(f) exactly, by an independent
// per-point route.
Dyadic average_sensitivity(const TruthTable& tt);

}  // namespace bfa
