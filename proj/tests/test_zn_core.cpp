#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumfree/cyclic_set.hpp"
#include "sumfree/errors.hpp"

using namespace sumfree;

namespace {

CyclicSet range_set(Int n, Int lo, Int hi) {
  CyclicSet s(n);
  for (Int x = lo; x <= hi; ++x) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("interval") {
  CHECK(interval(27, 12, 15).elements() == std::vector<Int>{12, 13, 14, 15});
  CHECK(interval(61, 26, 35) == range_set(61, 26, 35));
  CHECK(interval(8, 7, 9).elements() == std::vector<Int>{0, 1, 7});
  CHECK(interval(8, -2, 1).elements() == std::vector<Int>{0, 1, 6, 7});
  CHECK(interval(5, 0, 4).size() == 5);
  CHECK_THROWS_AS(interval(8, 0, 8), DomainError);
  CHECK_THROWS_AS(interval(8, 3, 2), DomainError);
}

TEST_CASE("construction rejects out-of-range residues") {
  CHECK_THROWS_AS(CyclicSet(0), DomainError);
  CHECK_THROWS_AS(CyclicSet::from_elements(8, {8}), DomainError);
  CHECK_THROWS_AS(CyclicSet::from_elements(8, {-1}), DomainError);
  CHECK(CyclicSet::from_elements(8, {5, 3, 3}).elements() == std::vector<Int>{3, 5});
}

TEST_CASE("sumset examples") {
  CHECK(sumset(CyclicSet::from_elements(2, {1}), CyclicSet::from_elements(2, {1})).elements() == std::vector<Int>{0});
  const CyclicSet block = interval(61, 26, 35);
  CHECK(sumset(block, block) == (range_set(61, 0, 9) | range_set(61, 52, 60)));
  const CyclicSet s = CyclicSet::from_elements(8, {3, 4, 5});
  CHECK((s + s).elements() == std::vector<Int>{0, 1, 2, 6, 7});
  CHECK_THROWS_AS(sumset(CyclicSet(5), CyclicSet(6)), DomainError);
  CHECK(sumset(CyclicSet(9), CyclicSet::full(9)).empty());
}

TEST_CASE("sumset matches the double loop on random sets, n <= 64") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<Int> modulus(1, 64);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 12000; ++trial) {
    const Int n = modulus(rng);
    const CyclicSet a = oracle::random_set(rng, n, density(rng) * density(rng));
    const CyclicSet b = oracle::random_set(rng, n, density(rng));
    REQUIRE(sumset(a, b) == oracle::sumset(a, b));
  }
}

TEST_CASE("sumset on multi-word moduli") {
  std::mt19937_64 rng(7);
  for (Int n : {65, 127, 128, 129, 200, 257, 1000}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CyclicSet a = oracle::random_set(rng, n, 0.05 + 0.02 * trial);
      const CyclicSet b = oracle::random_set(rng, n, 0.03);
      REQUIRE(sumset(a, b) == oracle::sumset(a, b));
    }
    const CyclicSet runs = interval(n, n / 4, n / 4 + n / 5) | interval(n, n / 2, n / 2 + 3);
    CHECK(sumset(runs, runs) == oracle::sumset(runs, runs));
  }
}

TEST_CASE("negate") {
  CHECK(negate(CyclicSet::from_elements(2, {1})).elements() == std::vector<Int>{1});
  CHECK(negate(CyclicSet::from_elements(61, {18, 22, 23, 24})).elements() == std::vector<Int>{37, 38, 39, 43});
  CHECK(negate(CyclicSet(10)).empty());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const CyclicSet a = oracle::random_set(rng, 1 + i % 90, 0.4);
    CHECK(negate(negate(a)) == a);
    CHECK(-a == negate(a));
  }
}

TEST_CASE("predicates") {
  const auto p2 = classify(CyclicSet::from_elements(2, {1}));
  CHECK(p2.symmetric);
  CHECK(p2.sum_free);
  CHECK(p2.complete);

  const CyclicSet s3 = CyclicSet::from_elements(3, {1, 2});
  CHECK(is_symmetric(s3));
  CHECK_FALSE(is_sum_free(s3));

  const auto p8 = classify(CyclicSet::from_elements(8, {3, 4, 5}));
  CHECK(p8 == Properties{true, true, true, 3});
  CHECK(p8.symmetric_complete_sum_free());
}

TEST_CASE("Z_1 and the empty set") {
  CHECK(is_sum_free(CyclicSet(1)));
  CHECK_FALSE(is_complete(CyclicSet(1)));
  CHECK_FALSE(is_sum_free(CyclicSet::full(1)));
  CHECK(is_complete(CyclicSet::full(1)));
}

TEST_CASE("predicates agree with the oracle and with the sumset identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const Int n = 1 + static_cast<Int>(rng() % 64);
    const bool symmetric_draw = trial % 2 == 0;
    const CyclicSet s = symmetric_draw ? oracle::random_symmetric(rng, n, 0.3) : oracle::random_set(rng, n, 0.3);
    const auto bools = oracle::to_bools(s);
    const Properties p = classify(s);
    REQUIRE(p.symmetric == oracle::symmetric(bools));
    REQUIRE(p.sum_free == oracle::sum_free(bools));
    REQUIRE(p.complete == oracle::complete(bools));
    REQUIRE(p.symmetric == is_symmetric(s));
    REQUIRE(p.sum_free == is_sum_free(s));
    REQUIRE(p.complete == is_complete(s));
    REQUIRE((p.sum_free && p.complete) == (sumset(s, s) == complement(s)));
    if (p.sum_free) REQUIRE_FALSE(s.contains(0));
  }
}

TEST_CASE("half-range predicates") {
  const CyclicSet s = CyclicSet::from_elements(8, {3, 4, 5});
  const CyclicSet g1 = interval(8, 0, 4);
  CHECK(half_range_sum_free(s, g1));
  CHECK(half_range_complete(s, g1));

  const CyclicSet s3 = CyclicSet::from_elements(3, {1, 2});
  CHECK_FALSE(half_range_sum_free(s3, interval(3, 0, 1)));

  for (Int n = 2; n <= 12; ++n) {
    const CyclicSet half = interval(n, 0, (n + 1) / 2);
    CHECK(half_range_sum_free(CyclicSet(n), half));
    CHECK_FALSE(half_range_complete(CyclicSet(n), half));
  }

  CHECK_THROWS_AS(half_range_sum_free(CyclicSet::from_elements(8, {3}), g1), DomainError);
  CHECK_THROWS_AS(half_range_complete(s, interval(8, 0, 2)), DomainError);
}

TEST_CASE("half-range predicates agree with full predicates on symmetric sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const Int n = 1 + static_cast<Int>(rng() % 64);
    const CyclicSet s = oracle::random_symmetric(rng, n, 0.25);
    const CyclicSet half = interval(n, 0, std::min<Int>((n + 1) / 2, n - 1));
    REQUIRE(half_range_sum_free(s, half) == is_sum_free(s));
    REQUIRE(half_range_complete(s, half) == is_complete(s));
  }
}

TEST_CASE("units and dilation") {
  CHECK(units(8) == std::vector<Int>{1, 3, 5, 7});
  CHECK(units(1) == std::vector<Int>{0});
  CHECK(unit_inverse(3, 8) == 3);
  CHECK(unit_inverse(5, 13) == 8);

  const CyclicSet s = CyclicSet::from_elements(8, {3, 4, 5});
  CHECK(dilate(s, 1) == s);
  CHECK(dilate(s, 7) == negate(s));
  CHECK(dilate(s, 7) == s);
  const CyclicSet d = dilate(s, 3);
  CHECK(d.elements() == std::vector<Int>{1, 4, 7});
  CHECK(oracle::scsf(d));
  CHECK_THROWS_AS(dilate(s, 2), DomainError);
  CHECK_THROWS_WITH(dilate(s, 4), doctest::Contains("not a unit"));
}

TEST_CASE("dilations preserve predicates and invert") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 63);
    const CyclicSet s = trial % 2 ? oracle::random_symmetric(rng, n, 0.3) : oracle::random_set(rng, n, 0.3);
    const auto us = units(n);
    const Int u = us[rng() % us.size()];
    const CyclicSet d = dilate(s, u);
    REQUIRE(dilate(d, unit_inverse(u, n)) == s);
    REQUIRE(classify(d) == classify(s));
  }
}

TEST_CASE("canonical dilation class") {
  CHECK(canonical_dilation_class(CyclicSet::from_elements(2, {1})).elements() == std::vector<Int>{1});

  const CyclicSet s = CyclicSet::from_elements(8, {3, 4, 5});
  const auto orbit = dilation_orbit(s);
  CHECK(4 % orbit.size() == 0);
  CHECK(orbit.size() == 2);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 40);
    const CyclicSet a = oracle::random_set(rng, n, 0.35);
    const CyclicSet canon = canonical_dilation_class(a);
    CHECK(canonical_dilation_class(canon) == canon);
    for (Int u : units(n)) REQUIRE(canonical_dilation_class(dilate(a, u)) == canon);
    for (Int u : units(n)) REQUIRE_FALSE(lex_less(dilate(a, u), canon));
  }
}

TEST_CASE("lexicographic order reads bits from index 0") {
  // At index 0 the first set has 0 and the second 1, so the first sorts first.
  CHECK(lex_less(CyclicSet::from_elements(5, {1}), CyclicSet::from_elements(5, {0})));
  CHECK(lex_less(CyclicSet::from_elements(5, {2, 3}), CyclicSet::from_elements(5, {1, 4})));
  CHECK_FALSE(lex_less(CyclicSet::from_elements(5, {1}), CyclicSet::from_elements(5, {1})));
}
