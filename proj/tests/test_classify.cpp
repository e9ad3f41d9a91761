#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>
#include <vector>

#include "bfa/classify.hpp"
#include "bfa/simplex.hpp"
#include "helpers.hpp"

using namespace bfa;
using testutil::Rng;

namespace {

// all LTFs on n <= 3 variables, by exhaustive integer weights |w_i| <= 3
std::set<std::uint64_t> brute_force_ltfs(int n) {
  std::set<std::uint64_t> out;
  int combos = 1;
  for (int i = 0; i <= n; ++i) combos *= 7;
  for (int c = 0; c < combos; ++c) {
    int rest = c;
    std::vector<int> w(n + 1);
    for (int i = 0; i <= n; ++i) {
      w[i] = rest % 7 - 3;
      rest /= 7;
    }
    std::uint64_t bits = 0;
    for (std::uint32_t j = 0; j < (1u << n); ++j) {
      int z = w[0];
      for (int i = 1; i <= n; ++i) z += (j >> (i - 1)) & 1 ? -w[i] : w[i];
      if (z <= 0) bits |= 1ULL << j;  // sign(z) = -1 iff z <= 0
    }
    out.insert(bits);
  }
  return out;
}

TruthTable table_from_bits(int n, std::uint64_t bits) {
  TruthTable tt(n);
  tt.words[0] = bits;
  return tt;
}

}  // namespace

TEST_CASE("is_bent") {
  CHECK(is_bent(wht(testutil::and_table())) == Verdict::yes);
  CHECK(is_bent(wht(testutil::parity(2))) == Verdict::no);
  CHECK(is_bent(wht(testutil::maj3())) == Verdict::not_applicable);
  CHECK(is_bent(wht(testutil::constant(4, 1))) == Verdict::no);
}

TEST_CASE("plateaued_order") {
  CHECK(plateaued_order(wht(testutil::maj3())) == 1);
  CHECK(plateaued_order(wht(testutil::and_table())) == 0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(plateaued_order(wht(testutil::constant(n, 1))) == n);
    CHECK(plateaued_order(wht(testutil::parity(n))) == n);
  }
  // OR of three variables has spectrum magnitudes {6, 2}: not plateaued
  TruthTable or3 = testutil::table_of(3, {1, 2, 3, 4, 5, 6, 7});
  CHECK(!plateaued_order(wht(or3)).has_value());
}

TEST_CASE("satisfies_sac") {
  CHECK(satisfies_sac(testutil::maj3()));
  CHECK(satisfies_sac(testutil::and_table()));
  CHECK(!satisfies_sac(testutil::dictator(2, 1)));
  CHECK(!satisfies_sac(testutil::parity(3)));  // Inf_i = 1, not 1/2
}

TEST_CASE("max_sac_order") {
  // brute-force oracle: check every k-restriction of MAJ3
  TruthTable m = testutil::maj3();
  int oracle = -1;
  for (int k = 0; k <= 1; ++k) {
    bool all_ok = true;
    if (k == 0) {
      all_ok = satisfies_sac(m);
    } else {
      for (int var = 1; var <= 3 && all_ok; ++var)
        for (int val : {-1, 1})
          if (!satisfies_sac(restrict_table(m, {{var, val}}))) all_ok = false;
    }
    if (all_ok)
      oracle = k;
    else
      break;
  }
  CHECK(oracle == 1);  // every single-variable restriction of MAJ3 is SAC
  CHECK(max_sac_order(m) == oracle);

  // n = 2: the only admissible order is 0
  CHECK(max_sac_order(testutil::and_table()) == 0);
  CHECK(!max_sac_order(testutil::dictator(3, 2)).has_value());
}

TEST_CASE("max_pc_degree") {
  // oracle for MAJ3 by direct 8-term autocorrelation sums
  TruthTable m = testutil::maj3();
  int oracle = 3;
  for (int weight = 1; weight <= 3 && oracle == 3; ++weight) {
    for (std::uint32_t u = 1; u < 8; ++u) {
      if (std::popcount(u) != weight) continue;
      std::int64_t c = 0;
      for (std::uint32_t j = 0; j < 8; ++j) c += m.value(j) * m.value(j ^ u);
      if (c != 0) {
        oracle = weight - 1;
        break;
      }
    }
  }
  CHECK(oracle == 2);  // singletons and pairs vanish, the triple does not
  CHECK(max_pc_degree(m) == oracle);

  CHECK(max_pc_degree(testutil::and_table()) == 2);  // bent: PC(n)
  for (int n = 2; n <= 5; ++n) CHECK(max_pc_degree(testutil::parity(n)) == 0);
}

TEST_CASE("is_monotone") {
  CHECK(is_monotone(testutil::and_table()));
  CHECK(is_monotone(testutil::maj3()));
  CHECK(!is_monotone(testutil::parity(2)));
  CHECK(is_monotone(testutil::constant(3, -1)));
  CHECK(is_monotone(testutil::dictator(4, 2)));
  CHECK(!is_monotone(testutil::table_of(2, {0})));  // NOR-like: f(-1,-1)=+1 only? f(1,1)=-1
}

TEST_CASE("is_ltf on named functions") {
  LtfCertificate maj = is_ltf(testutil::maj3());
  CHECK(maj.member);
  CHECK(verify_certificate(testutil::maj3(), maj));

  // the classical weights (0,1,1,1) also verify
  LtfCertificate classical;
  classical.member = true;
  classical.degree = 1;
  classical.features = ptf_features(3, 1);
  classical.weights = {BigRat(0), BigRat(1), BigRat(1), BigRat(1)};
  CHECK(verify_certificate(testutil::maj3(), classical));

  LtfCertificate par = is_ltf(testutil::parity(2));
  CHECK(!par.member);
  CHECK(verify_certificate(testutil::parity(2), par));

  LtfCertificate par2 = is_ptf(testutil::parity(2), 2);
  CHECK(par2.member);
  CHECK(verify_certificate(testutil::parity(2), par2));

  LtfCertificate cneg = is_ltf(testutil::constant(3, -1));
  CHECK(cneg.member);

  // sign(0) = -1: the constant -1 is realizable with all-zero weights
  LtfCertificate zero;
  zero.member = true;
  zero.degree = 1;
  zero.features = ptf_features(3, 1);
  zero.weights = {BigRat(0), BigRat(0), BigRat(0), BigRat(0)};
  CHECK(verify_certificate(testutil::constant(3, -1), zero));
  CHECK(!verify_certificate(testutil::constant(3, 1), zero));
}

TEST_CASE("is_ltf agrees with exhaustive small-weight search on n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::uint64_t> truth = brute_force_ltfs(n);
    std::uint64_t member_count = 0;
    for (std::uint64_t bits = 0; bits < (1ULL << (1 << n)); ++bits) {
      TruthTable tt = table_from_bits(n, bits);
      LtfCertificate cert = is_ltf(tt);
      CHECK(verify_certificate(tt, cert));
      CHECK(cert.member == (truth.count(bits) == 1));
      if (cert.member) ++member_count;
    }
    // known threshold-function counts
    if (n == 1) CHECK(member_count == 4);
    if (n == 2) CHECK(member_count == 14);
    if (n == 3) CHECK(member_count == 104);
  }
}

TEST_CASE("flipping a certificate weight breaks re-verification") {
  TruthTable m = testutil::maj3();
  LtfCertificate cert = is_ltf(m);
  REQUIRE(cert.member);
  for (std::size_t s = 0; s < cert.weights.size(); ++s) {
    if (cert.weights[s] == 0) continue;
    LtfCertificate bad = cert;
    bad.weights[s] = -bad.weights[s];
    CHECK(!verify_certificate(m, bad));
  }
}

TEST_CASE("is_ptf guards") {
  TruthTable m = testutil::maj3();
  CHECK_THROWS_AS(is_ptf(m, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_ptf(m, 4), std::invalid_argument);
  TruthTable big(13);
  CHECK_THROWS_AS(is_ltf(big), std::invalid_argument);
}

TEST_CASE("parity needs full degree") {
  for (int n = 2; n <= 4; ++n) {
    TruthTable p = testutil::parity(n);
    CHECK(!is_ltf(p).member);
    LtfCertificate full = is_ptf(p, n);
    CHECK(full.member);
    CHECK(verify_certificate(p, full));
  }
}

TEST_CASE("classify assembles a coherent report") {
  ClassReport r = classify(testutil::and_table());
  CHECK(r.bent == Verdict::yes);
  CHECK(r.plateaued_order == 0);
  CHECK(r.sac);
  CHECK(r.sac_order == 0);
  CHECK(r.pc_degree == 2);
  CHECK(r.monotone);
  REQUIRE(r.ltf.has_value());
  CHECK(r.ltf->member);
  CHECK(r.chow == std::vector<std::int64_t>{2, 2, 2});

  // every bent function at n=2 satisfies the implication chain
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    TruthTable tt = table_from_bits(2, bits);
    Spectrum s = wht(tt);
    if (is_bent(s) != Verdict::yes) continue;
    CHECK(plateaued_order(s) == 0);
    CHECK(max_pc_degree(tt) == 2);
    CHECK(satisfies_sac(tt));
  }
}

TEST_CASE("simplex over big rationals") {
  using Q = BigRat;
  // y1 + y2 = 1, y1 - y2 = 0 has the unique solution (1/2, 1/2)
  std::vector<std::vector<Q>> a{{1, 1}, {1, -1}};
  std::vector<Q> b{1, 0};
  auto r = solve_equality_feasibility<Q>(a, b);
  REQUIRE(r.feasible);
  CHECK(r.solution[0] == BigRat(1, 2));
  CHECK(r.solution[1] == BigRat(1, 2));

  // contradictory right-hand sides: the multipliers refute the system
  std::vector<std::vector<Q>> a2{{1, 1}, {1, 1}};
  std::vector<Q> b2{1, 3};
  auto r2 = solve_equality_feasibility<Q>(a2, b2);
  REQUIRE(!r2.feasible);
  for (int j = 0; j < 2; ++j)
    CHECK(r2.multipliers[0] * a2[0][j] + r2.multipliers[1] * a2[1][j] <= 0);
  CHECK(r2.multipliers[0] * b2[0] + r2.multipliers[1] * b2[1] > 0);
}

TEST_CASE("binary entropy inverse") {
  CHECK(inverse_binary_entropy(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(inverse_binary_entropy(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  for (double y : {0.1, 0.16, 0.3, 0.5, 0.8, 0.997}) {
    double p = inverse_binary_entropy(y);
    CHECK(binary_entropy(p) == doctest::Approx(y).epsilon(1e-10));
    CHECK(p <= 0.5);
  }
  CHECK_THROWS_AS(inverse_binary_entropy(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(inverse_binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("lhe_bound") {
  // a 4-variable bent function: product of two 2-variable bent pieces
  TruthTable bent4(4);
  for (std::uint32_t j = 0; j < 16; ++j) {
    int b = ((j & 1) & ((j >> 1) & 1)) ^ (((j >> 2) & 1) & ((j >> 3) & 1));
    bent4.set_bit(j, b);
  }
  REQUIRE(is_bent(wht(bent4)) == Verdict::yes);
  LheReport r = lhe_bound(bent4, 0.4);
  CHECK(r.member);  // H = 4 >= 1.6
  CHECK(r.entropy == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.inequality_holds);

  LheReport p = lhe_bound(testutil::parity(5), 0.25);
  CHECK(!p.member);  // H = 0

  CHECK_THROWS_AS(lhe_bound(bent4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lhe_bound(bent4, 0.5), std::invalid_argument);
}
