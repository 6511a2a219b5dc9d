#include <doctest.h>

#include <numeric>
#include <random>

#include "scover/constructions.hpp"
#include "scover/family.hpp"

using namespace scover;

TEST_CASE("make_family accepts the vacuous family") {
  const CoverFamily f = make_family(5, 3, {});
  CHECK(f.n() == 5);
  CHECK(f.s() == 3);
  CHECK(f.m() == 0);
}

TEST_CASE("make_family rejects malformed input") {
  CHECK_THROWS_AS(make_family(5, 3, {{0, 1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(5, 3, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(5, 3, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(5, 3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(0, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(4, 1, {}), std::invalid_argument);
  // Duplicate lines are named by both input indices.
  CHECK_THROWS_WITH_AS(make_family(5, 3, {{0, 1}, {2, 3}, {1, 0}}),
                       "make_family: duplicate line at input indices 0 and 2",
                       std::invalid_argument);
}

TEST_CASE("make_family canonical order and the Fano family") {
  const std::vector<Line> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  const CoverFamily f = make_family(7, 2, fano);
  CHECK(f.m() == 7);
  for (int a : f.line_sizes()) CHECK(a == 3);

  // Unsorted input lines and shuffled order land in the same canonical form.
  const CoverFamily g = make_family(
      7, 2, {{5, 3, 1}, {6, 4, 1}, {2, 1, 0}, {4, 3, 0}, {6, 5, 0},
             {6, 3, 2}, {5, 4, 2}});
  CHECK(f == g);
  CHECK(f.lines().front() == Line{0, 1, 2});
}

TEST_CASE("canonical order puts larger lines first") {
  const CoverFamily f = make_family(6, 2, {{0, 5}, {1, 2, 3}, {0, 4}});
  CHECK(f.lines()[0] == Line{1, 2, 3});
  CHECK(f.lines()[1] == Line{0, 4});
  CHECK(f.lines()[2] == Line{0, 5});
}

TEST_CASE("canonicalization is idempotent on random families") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    std::vector<Line> lines;
    std::vector<PointId> points(n);
    std::iota(points.begin(), points.end(), 0);
    const int m = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < m; ++i) {
      std::shuffle(points.begin(), points.end(), rng);
      const int size = std::uniform_int_distribution<int>(2, n)(rng);
      lines.emplace_back(points.begin(), points.begin() + size);
    }
    CoverFamily f = [&]() {
      try {
        return make_family(n, 2, lines);
      } catch (const std::invalid_argument&) {
        return make_family(n, 2, {});  // duplicate line drawn; skip trial
      }
    }();
    const CoverFamily again = make_family(f.n(), f.s(), f.lines());
    CHECK(f == again);
  }
}

TEST_CASE("cap_of examples") {
  CHECK(cap_of(16, 4) == 5);
  CHECK(cap_of(7, 3) == 3);
  CHECK(cap_of(6, 3) == 2);
  CHECK_THROWS_AS(cap_of(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(cap_of(7, 1), std::invalid_argument);
}

TEST_CASE("cap_of bracketing invariant") {
  for (int s = 2; s <= 7; ++s)
    for (int n = 2; n <= 120; ++n) {
      const std::int64_t cap = cap_of(n, s);
      CHECK(cap * (s - 1) <= n - 1);
      CHECK((cap + 1) * (s - 1) > n - 1);
    }
}

TEST_CASE("bound_of examples") {
  CHECK(bound_of(13, 3) == Rational(8));
  CHECK(bound_of(16, 4) == Rational(8));
  CHECK(bound_of(8, 3) == Rational(11, 2));  // 7/2 + 2
}

TEST_CASE("bound_of is integral exactly at divisible sizes") {
  for (int s = 2; s <= 6; ++s)
    for (int n = 2; n <= 150; ++n) {
      const Rational b = bound_of(n, s);
      if ((n - 1) % (s - 1) == 0) {
        CHECK(b.denominator() == 1);
        CHECK(b == Rational(cap_of(n, s) + s - 1));
      }
    }
}

TEST_CASE("binom2") {
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(2) == 1);
  CHECK(binom2(7) == 21);
}
