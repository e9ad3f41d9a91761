#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bfa/classify.hpp"
#include "bfa/generate.hpp"
#include "bfa/influence.hpp"
#include "helpers.hpp"

using namespace bfa;

TEST_CASE("mm_bent small instances") {
  // m=1, identity pi, g ≡ 0: f = (-1)^{a1 a2}, the AND-type bent function
  MMSpec s1{1, {0, 1}, TruthTable(1)};
  CHECK(mm_bent(s1) == testutil::and_table());

  // m=2, identity pi, g ≡ 0: inner-product bent on n=4
  MMSpec s2{2, {0, 1, 2, 3}, TruthTable(2)};
  TruthTable ip = mm_bent(s2);
  CHECK(is_bent(wht(ip)) == Verdict::yes);

  // transposed pi with a nonzero g
  TruthTable g(2);
  g.set_bit(1, true);
  g.set_bit(2, true);
  MMSpec s3{2, {1, 0, 2, 3}, g};
  CHECK(is_bent(wht(mm_bent(s3))) == Verdict::yes);
}

TEST_CASE("mm_bent validates pi") {
  CHECK_THROWS_AS(mm_bent(MMSpec{1, {0, 0}, TruthTable(1)}), std::invalid_argument);
  CHECK_THROWS_AS(mm_bent(MMSpec{1, {0}, TruthTable(1)}), std::invalid_argument);
  CHECK_THROWS_AS(mm_bent(MMSpec{2, {0, 1, 2, 5}, TruthTable(2)}), std::invalid_argument);
  CHECK_THROWS_AS(mm_bent(MMSpec{1, {0, 1}, TruthTable(2)}), std::invalid_argument);
  CHECK_THROWS_AS(mm_bent(MMSpec{9, {}, TruthTable(9)}), std::invalid_argument);
}

TEST_CASE("random MM instances are bent") {
  for (int m : {1, 2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      MMSpec spec = random_mm_spec(m, seed * 7919 + m);
      TruthTable tt = mm_bent(spec);
      CHECK(is_bent(wht(tt)) == Verdict::yes);
      CHECK(total_influence(tt) == Dyadic(m, 0));  // I = n/2 = m
    }
  }
}

TEST_CASE("padded_plateaued") {
  TruthTable bent2 = testutil::and_table();

  TruthTable p1 = padded_plateaued(bent2, 1);
  CHECK(p1.n == 3);
  CHECK(plateaued_order(wht(p1)) == 1);
  CHECK(total_influence(p1) == Dyadic(1, 0));

  CHECK(padded_plateaued(bent2, 0) == bent2);

  TruthTable p2 = padded_plateaued(bent2, 2);
  CHECK(p2.n == 4);
  CHECK(plateaued_order(wht(p2)) == 2);
  CHECK(total_influence(p2) == Dyadic(1, 0));

  CHECK_THROWS_AS(padded_plateaued(testutil::maj3(), 1), std::invalid_argument);
  CHECK_THROWS_AS(padded_plateaued(testutil::parity(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(padded_plateaued(bent2, 15), std::invalid_argument);
}

TEST_CASE("padded_plateaued across the valid (n, k) range") {
  for (int k = 0; k <= 10; ++k) {
    for (int base = 2; base + k <= 12; base += 2) {
      TruthTable bent = mm_bent(random_mm_spec(base / 2, 31 * base + k));
      TruthTable padded = padded_plateaued(bent, k);
      CHECK(plateaued_order(wht(padded)) == k);
      CHECK(total_influence(padded) == Dyadic(base, 1));  // (n-k)/2 = base/2
    }
  }
}

TEST_CASE("ltf_truth_table with forced weights gives MAJ3") {
  std::vector<BigRat> w{BigRat(0), BigRat(1), BigRat(1), BigRat(1)};
  CHECK(ltf_truth_table(3, w) == testutil::maj3());

  // sign(0) = -1: all-zero weights give the constant -1
  std::vector<BigRat> zero(4, BigRat(0));
  CHECK(ltf_truth_table(3, zero) == testutil::constant(3, -1));

  CHECK_THROWS_AS(ltf_truth_table(3, {BigRat(1)}), std::invalid_argument);
}

TEST_CASE("random_ltf is reproducible and self-consistent") {
  RandomModel normal{WeightModel::standard_normal, 42};
  LtfSample a = random_ltf(8, normal);
  LtfSample b = random_ltf(8, normal);
  CHECK(a.table == b.table);
  CHECK(a.weights == b.weights);

  RandomModel uniform{WeightModel::uniform_pm1, 42};
  LtfSample c = random_ltf(8, uniform);
  CHECK(!(c.table == a.table));  // different models, same seed

  // the emitted table is exactly the sign pattern of the emitted weights
  CHECK(ltf_truth_table(8, a.weights) == a.table);
  CHECK(ltf_truth_table(8, c.weights) == c.table);

  // and the classifier confirms membership
  CHECK(is_ltf(a.table).member);
  CHECK(is_ltf(c.table).member);
}

TEST_CASE("random_ptf degree 1 coincides with random_ltf") {
  for (std::uint64_t seed : {1ULL, 99ULL, 123456ULL}) {
    RandomModel m{WeightModel::standard_normal, seed};
    CHECK(random_ptf(6, 1, m).table == random_ltf(6, m).table);
    RandomModel u{WeightModel::uniform_pm1, seed};
    CHECK(random_ptf(6, 1, u).table == random_ltf(6, u).table);
  }
}

TEST_CASE("random_ptf members pass is_ptf") {
  RandomModel m{WeightModel::standard_normal, 7};
  LtfSample s = random_ptf(6, 2, m);
  LtfCertificate cert = is_ptf(s.table, 2);
  CHECK(cert.member);
  CHECK(verify_certificate(s.table, cert));
}

TEST_CASE("top-coefficient-only PTF is a parity") {
  // a single forced coefficient on the top monomial gives ±parity
  for (int n : {2, 3, 4}) {
    TruthTable p = testutil::parity(n);
    LtfCertificate top;
    top.member = true;
    top.degree = n;
    top.features = ptf_features(n, n);
    top.weights.assign(top.features.size(), BigRat(0));
    top.weights.back() = BigRat(1);  // features are (degree, mask)-ordered
    CHECK(verify_certificate(p, top));

    TruthTable negated(n);
    for (std::size_t j = 0; j < p.size(); ++j) negated.set_bit(j, !p.bit(j));
    top.weights.back() = BigRat(-1);
    CHECK(verify_certificate(negated, top));
  }
}

TEST_CASE("monotone enumeration counts") {
  CHECK(monotone_masks(1).size() == 3);
  CHECK(monotone_masks(2).size() == 6);
  CHECK(monotone_masks(3).size() == 20);
  CHECK(monotone_masks(4).size() == 168);
  CHECK(monotone_masks(5).size() == 7581);
}

TEST_CASE("monotone enumeration agrees with brute-force filtering") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::uint64_t> brute;
    TruthTable tt(n);
    for (std::uint64_t bits = 0; bits < (1ULL << (1 << n)); ++bits) {
      tt.words[0] = bits;
      if (is_monotone(tt)) brute.insert(bits);
    }
    std::set<std::uint64_t> enumerated;
    std::size_t emitted = 0;
    enumerate_monotone(n, [&](const TruthTable& f) {
      CHECK(is_monotone(f));
      enumerated.insert(f.words[0]);
      ++emitted;
    });
    CHECK(enumerated == brute);
    CHECK(emitted == brute.size());  // no duplicates
  }
}

TEST_CASE("monotone enumeration guards") {
  auto sink = [](const TruthTable&) {};
  CHECK_THROWS_AS(enumerate_monotone(7, sink), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_monotone(6, sink), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_monotone(6, sink, false), std::invalid_argument);
  // n = 6 behind the flag: count only (Dedekind)
  std::size_t count = 0;
  enumerate_monotone(6, [&](const TruthTable&) { ++count; }, true);
  CHECK(count == 7828354);
}

TEST_CASE("random_function determinism") {
  for (int n : {1, 6, 9}) {
    TruthTable a = random_function(n, 5);
    TruthTable b = random_function(n, 5);
    TruthTable c = random_function(n, 6);
    CHECK(a == b);
    CHECK(a.size() == (std::size_t{1} << n));
    CHECK(!(a == c));
  }
}

TEST_CASE("rng substreams are independent and fixed") {
  Rng a = Rng::stream(11, 0);
  Rng b = Rng::stream(11, 1);
  Rng c = Rng::stream(11, 0);
  std::uint64_t a1 = a.next();
  CHECK(a1 != b.next());
  CHECK(a1 == c.next());

  // uniform draws are in range
  Rng u = Rng::stream(3, 0);
  for (int i = 0; i < 1000; ++i) {
    double v = u.uniform_pm1();
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
}
