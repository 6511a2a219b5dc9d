#include <doctest.h>

#include <algorithm>
#include <map>

#include "scover/constructions.hpp"
#include "scover/field.hpp"
#include "scover/verify.hpp"

using namespace scover;

namespace {

// Brute-force cover check: every s-subset contains two points on a line.
// Independent of the K_s-free reformulation used by verify_cover.
bool covers_by_scan(const CoverFamily& f) {
  const int n = f.n();
  const int s = f.s();
  if (s > n) return true;
  std::vector<PointId> pick(s);
  for (int i = 0; i < s; ++i) pick[i] = i;
  auto subset_ok = [&]() {
    for (const Line& line : f.lines()) {
      int inside = 0;
      for (PointId p : pick)
        inside += std::binary_search(line.begin(), line.end(), p) ? 1 : 0;
      if (inside >= 2) return true;
    }
    return false;
  };
  while (true) {
    if (!subset_ok()) return false;
    int i = s - 1;
    while (i >= 0 && pick[i] == n - s + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::map<std::pair<PointId, PointId>, int> pair_multiplicities(
    const CoverFamily& f) {
  std::map<std::pair<PointId, PointId>, int> count;
  for (const Line& line : f.lines())
    for (std::size_t a = 0; a + 1 < line.size(); ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b)
        ++count[{line[a], line[b]}];
  return count;
}

}  // namespace

TEST_CASE("grid examples") {
  const CoverFamily fig1 = grid_construction(5, 4);
  CHECK(fig1.n() == 16);
  CHECK(fig1.m() == 8);
  CHECK(fig1.line_sizes() == std::vector<int>{5, 5, 5, 4, 4, 4, 4, 4});
  CHECK(verify_cover(fig1, CapMode::standard).all_ok());

  const CoverFamily small = grid_construction(3, 3);
  CHECK(small.n() == 7);
  CHECK(small.m() == 5);
  CHECK(small.line_sizes() == std::vector<int>(5, 3));
  CHECK(covers_by_scan(small));

  CHECK(grid_construction(4, 3).m() == 6);
  CHECK(grid_construction(4, 3).n() == 9);
}

TEST_CASE("grid rejects t < s and s < 3") {
  CHECK_THROWS_AS(grid_construction(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(grid_construction(5, 2), std::invalid_argument);
}

TEST_CASE("grid size formulas across the parameter box") {
  for (int s = 3; s <= 6; ++s)
    for (int t = s; t <= 12; ++t) {
      const CoverFamily f = grid_construction(t, s);
      CHECK(f.n() == t * (s - 1) + 1);
      CHECK(f.m() == t + s - 1);
      CHECK(verify_cover(f, CapMode::standard).all_ok());
    }
}

TEST_CASE("near pencil examples") {
  const CoverFamily tri = near_pencil(3);
  CHECK(tri.m() == 3);
  CHECK(tri.lines() == std::vector<Line>{{0, 1}, {0, 2}, {1, 2}});

  const CoverFamily four = near_pencil(4);
  CHECK(four.lines() ==
        std::vector<Line>{{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});

  const CoverFamily ten = near_pencil(10);
  CHECK(ten.m() == 10);
  const auto ten_sizes = ten.line_sizes();
  CHECK(ten_sizes.front() == 9);
  CHECK(std::count(ten_sizes.begin(), ten_sizes.end(), 2) == 9);

  CHECK_THROWS_AS(near_pencil(2), std::invalid_argument);
}

TEST_CASE("near pencil is a linear space") {
  for (int n : {3, 4, 5, 8, 12}) {
    const CoverFamily f = near_pencil(n);
    CHECK(f.m() == n);
    const auto mult = pair_multiplicities(f);
    CHECK(mult.size() == static_cast<std::size_t>(binom2(n)));
    for (const auto& [pair, count] : mult) CHECK(count == 1);
  }
}

TEST_CASE("projective plane counts") {
  const CoverFamily fano = projective_plane(2);
  CHECK(fano.n() == 7);
  CHECK(fano.m() == 7);
  for (int a : fano.line_sizes()) CHECK(a == 3);

  const CoverFamily p3 = projective_plane(3);
  CHECK(p3.n() == 13);
  CHECK(p3.m() == 13);
  for (int a : p3.line_sizes()) CHECK(a == 4);

  CHECK_THROWS_AS(projective_plane(4), std::invalid_argument);
  CHECK_THROWS_AS(projective_plane(1), std::invalid_argument);
}

TEST_CASE("projective plane axioms for q in {2,3,5,7,11}") {
  for (std::uint64_t q : {2, 3, 5, 7, 11}) {
    const CoverFamily f = projective_plane(q);
    const int n = static_cast<int>(q * q + q + 1);
    REQUIRE(f.n() == n);
    REQUIRE(f.m() == n);
    for (int a : f.line_sizes()) CHECK(a == static_cast<int>(q) + 1);

    std::vector<int> degree(n, 0);
    for (const Line& line : f.lines())
      for (PointId p : line) ++degree[p];
    for (int d : degree) CHECK(d == static_cast<int>(q) + 1);

    const auto mult = pair_multiplicities(f);
    CHECK(mult.size() == static_cast<std::size_t>(binom2(n)));
    for (const auto& [pair, count] : mult) CHECK(count == 1);

    // Any two lines meet in exactly one point.
    for (int i = 0; i < f.m(); ++i)
      for (int j = i + 1; j < f.m(); ++j) {
        std::vector<PointId> shared;
        std::set_intersection(f.lines()[i].begin(), f.lines()[i].end(),
                              f.lines()[j].begin(), f.lines()[j].end(),
                              std::back_inserter(shared));
        CHECK(shared.size() == 1);
      }
  }
}

TEST_CASE("recursive tight examples") {
  const CoverFamily f13 = recursive_tight(13, 3);
  CHECK(f13.m() == 8);
  CHECK(verify_cover(f13, CapMode::standard).all_ok());

  const CoverFamily f16 = recursive_tight(16, 4);
  CHECK(f16.m() == 8);
  CHECK(verify_cover(f16, CapMode::standard).all_ok());

  const CoverFamily f7 = recursive_tight(7, 2);
  CHECK(f7 == near_pencil(7));

  CHECK_THROWS_AS(recursive_tight(8, 3), std::invalid_argument);   // 2 | 7 fails
  CHECK_THROWS_AS(recursive_tight(5, 3), std::invalid_argument);   // t = 2 < s
}

TEST_CASE("recursive tight hits the bound exactly") {
  for (int s = 2; s <= 6; ++s) {
    for (int t = std::max(s, 2); t <= 14; ++t) {
      const int n = t * (s - 1) + 1;
      const CoverFamily f = recursive_tight(n, s);
      // Integer form of the tight size: m(s-1) = (n-1) + (s-1)^2.
      CHECK(static_cast<std::int64_t>(f.m()) * (s - 1) ==
            (n - 1) + static_cast<std::int64_t>(s - 1) * (s - 1));
      CHECK(Rational(f.m()) == bound_of(n, s));
      const auto tight_sizes = f.line_sizes();
      CHECK(*std::max_element(tight_sizes.begin(), tight_sizes.end()) <= t);
      CHECK(verify_cover(f, CapMode::standard).all_ok());
    }
  }
}

TEST_CASE("asymptotic cover examples") {
  const CoverFamily big = asymptotic_cover(1001, 4);
  CHECK(prime_in_interval(1001, 4).q == 19);
  CHECK(big.m() == 381 + 2);
  auto sizes = big.line_sizes();
  CHECK(sizes[0] == 333);
  CHECK(sizes[1] == 287);
  CHECK(std::count(sizes.begin(), sizes.end(), 20) == 381);
  CHECK(verify_cover(big, CapMode::standard).all_ok());

  const CoverFamily fifty = asymptotic_cover(50, 3);
  CHECK(fifty.m() == 32);
  const auto fifty_sizes = fifty.line_sizes();
  CHECK(fifty_sizes[0] == 19);
  CHECK(std::count(fifty_sizes.begin(), fifty_sizes.end(), 6) == 31);
  CHECK(verify_cover(fifty, CapMode::standard).all_ok());

  // q = 3 leaves a plane of 13 points on n = 13: the residual block would
  // be empty.
  CHECK_THROWS_WITH_AS(asymptotic_cover(13, 3),
                       "asymptotic_cover: residual block size n-x = 0 is "
                       "below 2, not a valid line",
                       std::invalid_argument);
}

TEST_CASE("asymptotic cover size formula on a sample") {
  for (auto [n, s] : std::vector<std::pair<int, int>>{
           {50, 3}, {204, 3}, {1001, 4}, {1200, 5}, {2000, 4}}) {
    const CoverFamily f = asymptotic_cover(n, s);
    const auto w = prime_in_interval(n, s);
    CHECK(f.m() ==
          static_cast<int>(w.q * w.q + w.q + 1) + s - 2);
    CHECK(verify_cover(f, CapMode::standard).all_ok());
  }
}
