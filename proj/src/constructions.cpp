#include "scover/constructions.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "scover/field.hpp"

namespace scover {

CoverFamily grid_construction(int t, int s) {
  if (s < 3) throw std::invalid_argument("grid_construction: s must be >= 3");
  if (t < s)
    throw std::invalid_argument(
        "grid_construction: t must be >= s (rows of size s would violate the "
        "cap t)");
  const int n = t * (s - 1) + 1;
  const PointId z = n - 1;
  std::vector<Line> lines;
  lines.reserve(t + s - 1);
  for (int i = 0; i < s - 1; ++i) {
    Line col;
    col.reserve(t);
    for (int j = 0; j < t; ++j) col.push_back(j * (s - 1) + i);
    lines.push_back(std::move(col));
  }
  for (int j = 0; j < t; ++j) {
    Line row;
    row.reserve(s);
    for (int i = 0; i < s - 1; ++i) row.push_back(j * (s - 1) + i);
    row.push_back(z);
    lines.push_back(std::move(row));
  }
  return make_family(n, s, std::move(lines));
}

CoverFamily near_pencil(int n) {
  if (n < 3) throw std::invalid_argument("near_pencil: n must be >= 3");
  std::vector<Line> lines;
  lines.reserve(n);
  Line long_line(n - 1);
  std::iota(long_line.begin(), long_line.end(), 0);
  lines.push_back(std::move(long_line));
  for (PointId i = 0; i < n - 1; ++i) lines.push_back(Line{i, n - 1});
  return make_family(n, 2, std::move(lines));
}

namespace {

// Normalized homogeneous triples over GF(q) in lexicographic order:
// (0,0,1), then (0,1,c), then (1,b,c).
std::vector<std::array<std::uint64_t, 3>> normalized_triples(std::uint64_t q) {
  std::vector<std::array<std::uint64_t, 3>> out;
  out.reserve(q * q + q + 1);
  out.push_back({0, 0, 1});
  for (std::uint64_t c = 0; c < q; ++c) out.push_back({0, 1, c});
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) out.push_back({1, b, c});
  return out;
}

}  // namespace

CoverFamily projective_plane(std::uint64_t q) {
  if (!is_prime(q))
    throw std::invalid_argument("projective_plane: order " + std::to_string(q) +
                                " is not prime");
  const PrimeField field(q);
  const auto points = normalized_triples(q);
  const auto duals = normalized_triples(q);
  const int n = static_cast<int>(q * q + q + 1);

  std::vector<Line> lines;
  lines.reserve(duals.size());
  for (const auto& l : duals) {
    Line line;
    line.reserve(q + 1);
    for (int id = 0; id < n; ++id) {
      const auto& x = points[id];
      std::uint64_t dot = field.add(field.add(field.mul(l[0], x[0]),
                                              field.mul(l[1], x[1])),
                                    field.mul(l[2], x[2]));
      if (dot == 0) line.push_back(id);
    }
    lines.push_back(std::move(line));
  }
  return make_family(n, 2, std::move(lines));
}

CoverFamily recursive_tight(int n, int s) {
  if (s < 2) throw std::invalid_argument("recursive_tight: s must be >= 2");
  if (n < 3) throw std::invalid_argument("recursive_tight: n must be >= 3");
  if ((n - 1) % (s - 1) != 0)
    throw std::invalid_argument("recursive_tight: (s-1) must divide (n-1)");
  const int t = (n - 1) / (s - 1);
  // t is invariant at every level of the recursion, so t >= max(s, 2)
  // at the top level covers all levels.
  if (t < s || t < 2)
    throw std::invalid_argument(
        "recursive_tight: n too small, needs (n-1)/(s-1) >= max(s, 2)");

  std::vector<Line> lines;
  lines.reserve(t + s - 1);
  int cur_n = n;
  for (int level = s; level >= 3; --level) {
    Line peel(t);
    std::iota(peel.begin(), peel.end(), cur_n - t);
    lines.push_back(std::move(peel));
    cur_n -= t;
  }
  // cur_n == t + 1 here; finish with the near pencil on [0, t].
  Line long_line(cur_n - 1);
  std::iota(long_line.begin(), long_line.end(), 0);
  lines.push_back(std::move(long_line));
  for (PointId i = 0; i < cur_n - 1; ++i) lines.push_back(Line{i, cur_n - 1});
  return make_family(n, s, std::move(lines));
}

CoverFamily asymptotic_cover(int n, int s) {
  if (s < 3) throw std::invalid_argument("asymptotic_cover: s must be >= 3");
  const PrimeWitness w = prime_in_interval(n, s);
  const std::int64_t q = static_cast<std::int64_t>(w.q);
  const std::int64_t t = (n - 1) / (s - 1);
  const std::int64_t plane_size = q * q + q + 1;
  const std::int64_t x = (s - 3) * t + plane_size;

  if (x > n)
    throw std::invalid_argument(
        "asymptotic_cover: precondition (i) fails, x = (s-3)*floor((n-1)/(s-1))"
        " + q^2+q+1 = " + std::to_string(x) + " exceeds n = " +
        std::to_string(n));
  if (n - x > t)
    throw std::invalid_argument(
        "asymptotic_cover: precondition (ii) fails, residual block size n-x = " +
        std::to_string(n - x) + " exceeds floor((n-1)/(s-1)) = " +
        std::to_string(t));
  if (!((q + 1) * (s - 1) < n - 1))
    throw std::invalid_argument(
        "asymptotic_cover: precondition (iii) fails, q+1 = " +
        std::to_string(q + 1) + " is not below (n-1)/(s-1)");
  if (n - x < 2)
    throw std::invalid_argument(
        "asymptotic_cover: residual block size n-x = " + std::to_string(n - x) +
        " is below 2, not a valid line");

  std::vector<Line> lines;
  lines.reserve(plane_size + s - 2);
  PointId next = 0;
  for (int i = 0; i < s - 3; ++i) {
    Line block(t);
    std::iota(block.begin(), block.end(), next);
    next += static_cast<PointId>(t);
    lines.push_back(std::move(block));
  }
  Line residual(n - x);
  std::iota(residual.begin(), residual.end(), next);
  next += static_cast<PointId>(n - x);
  lines.push_back(std::move(residual));

  const CoverFamily plane = projective_plane(w.q);
  for (const Line& pl : plane.lines()) {
    Line shifted;
    shifted.reserve(pl.size());
    for (PointId p : pl) shifted.push_back(p + next);
    lines.push_back(std::move(shifted));
  }
  return make_family(n, s, std::move(lines));
}

}  // namespace scover
