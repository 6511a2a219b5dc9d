#include <algorithm>
#include <limits>
#include <stdexcept>

#include "scover/verify.hpp"

namespace scover {

VerificationReport verify_cover(const CoverFamily& f, CapMode mode) {
  VerificationReport report;
  report.cap_mode = mode;

  if (auto w = check_linearity(f)) {
    report.linear = false;
    report.linear_witness = std::move(w);
  }

  // Coverage as K_s-freeness of the uncovered graph; valid for any
  // family, linear or not.
  UncoveredGraph g = uncovered_graph_unchecked(f);
  if (auto clique = has_clique(g, f.s())) {
    std::sort(clique->begin(), clique->end());
    report.covered = false;
    report.uncovered_witness = std::move(clique);
  }

  if (mode != CapMode::none) {
    const std::int64_t n = f.n();
    const std::int64_t s = f.s();
    for (int i = 0; i < f.m(); ++i) {
      const std::int64_t a = static_cast<std::int64_t>(f.lines()[i].size());
      const std::int64_t lhs = mode == CapMode::standard ? a * (s - 1)
                                                         : (a + 1) * (s - 1);
      if (lhs > n - 1) {
        report.cap_ok = false;
        report.cap_witness = i;
        break;
      }
    }
  }
  return report;
}

StructureProfile compute_profile(const CoverFamily& f) {
  if (f.m() == 0)
    throw std::invalid_argument("compute_profile: empty family");

  StructureProfile pr;
  pr.m = f.m();
  pr.sizes = f.line_sizes();
  pr.a1 = pr.sizes[0];

  std::vector<int> degree(f.n(), 0);
  for (const Line& line : f.lines())
    for (PointId p : line) ++degree[p];

  const Line& a1_line = f.lines()[0];
  pr.v = a1_line[0];
  pr.d = degree[a1_line[0]];
  for (PointId w : a1_line) {
    if (degree[w] < pr.d) {
      pr.d = degree[w];
      pr.v = w;
    }
  }

  boost::dynamic_bitset<> in_p(f.n());
  for (const Line& line : f.lines()) {
    if (std::binary_search(line.begin(), line.end(), pr.v)) {
      for (PointId p : line) in_p.set(p);
    }
  }
  for (PointId p = 0; p < f.n(); ++p) {
    if (in_p.test(p))
      pr.p_set.push_back(p);
    else
      pr.q_set.push_back(p);
  }
  pr.p = static_cast<int>(pr.p_set.size());

  const std::int64_t s = f.s();
  const std::int64_t lhs = (f.n() - 1) + (s - 1) * (s - 2);
  const std::int64_t divisor = (s - 1) * pr.a1;
  pr.q_div = lhs / divisor;
  pr.r_div = lhs % divisor;
  return pr;
}

std::int64_t elementary_symmetric(int k, const std::vector<std::int64_t>& xs) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size())
    throw std::invalid_argument("elementary_symmetric: k out of range");
  std::vector<std::int64_t> e(k + 1, 0);
  e[0] = 1;
  int seen = 0;
  for (std::int64_t x : xs) {
    ++seen;
    for (int j = std::min(k, seen); j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e[k];
}

namespace {

std::int64_t checked_product(const std::vector<std::int64_t>& xs) {
  __int128 prod = 1;
  for (std::int64_t x : xs) {
    prod *= x;
    if (prod > std::numeric_limits<std::int64_t>::max())
      throw std::invalid_argument(
          "lemma_bounds: part 3 subset sizes too large for exact evaluation");
  }
  return static_cast<std::int64_t>(prod);
}

}  // namespace

LemmaReport lemma_bounds(
    const CoverFamily& f, const StructureProfile& profile,
    const std::optional<std::vector<DisjointSubset>>& subsets) {
  const VerificationReport rep = verify_cover(f, CapMode::standard);
  if (!rep.all_ok()) {
    std::string what = "lemma_bounds: family fails verification (";
    if (!rep.linear) what += " linearity";
    if (!rep.covered) what += " coverage";
    if (!rep.cap_ok) what += " cap";
    throw std::invalid_argument(what + " )");
  }

  const std::int64_t n = f.n();
  const std::int64_t s = f.s();
  const std::int64_t m = f.m();
  LemmaReport out;

  out.part1.applicable = true;
  out.part1.bound = Rational(static_cast<long long>(profile.a1) *
                                 (profile.d - 1) + 1);
  out.part1.satisfied = Rational(m) >= out.part1.bound;

  const std::int64_t q_size = static_cast<std::int64_t>(profile.q_set.size());
  if (s >= 3 && q_size * (s - 1) > n * (s - 2)) {
    out.part2.applicable = true;
    out.part2.bound =
        Rational(q_size - 1, s - 2) + (s - 2) + profile.d;
    out.part2.satisfied = Rational(m) >= out.part2.bound;
  }

  if (subsets) {
    const auto& subs = *subsets;
    if (static_cast<std::int64_t>(subs.size()) != s)
      throw std::invalid_argument(
          "lemma_bounds: part 3 needs subsets of exactly s distinct lines");
    std::vector<std::int64_t> sizes;
    boost::dynamic_bitset<> used_points(f.n());
    boost::dynamic_bitset<> used_lines(f.m());
    for (const DisjointSubset& sub : subs) {
      if (sub.line_index < 0 || sub.line_index >= f.m())
        throw std::invalid_argument("lemma_bounds: part 3 line index out of range");
      if (used_lines.test(sub.line_index))
        throw std::invalid_argument("lemma_bounds: part 3 line indices must be distinct");
      used_lines.set(sub.line_index);
      if (sub.points.empty())
        throw std::invalid_argument("lemma_bounds: part 3 subsets must be nonempty");
      const Line& host = f.lines()[sub.line_index];
      for (PointId p : sub.points) {
        if (!std::binary_search(host.begin(), host.end(), p))
          throw std::invalid_argument(
              "lemma_bounds: part 3 subset point " + std::to_string(p) +
              " is not on line " + std::to_string(sub.line_index));
        if (used_points.test(p))
          throw std::invalid_argument(
              "lemma_bounds: part 3 subsets are not pairwise disjoint at point " +
              std::to_string(p));
        used_points.set(p);
      }
      sizes.push_back(static_cast<std::int64_t>(sub.points.size()));
    }
    out.part3.applicable = true;
    out.part3.bound = Rational(
        checked_product(sizes),
        elementary_symmetric(static_cast<int>(s) - 2, sizes));
    out.part3.satisfied = Rational(m) >= out.part3.bound;
  }

  out.pair_sum = 0;
  for (int a : profile.sizes) out.pair_sum += binom2(a);
  out.part4.applicable = true;
  out.part4.bound = Rational(n * n, 2 * (s - 1)) - Rational(n, 2);
  out.part4.satisfied = Rational(out.pair_sum) >= out.part4.bound;

  out.uncovered_edges =
      static_cast<std::int64_t>(uncovered_graph(f).edge_count());
  out.turan_residual = binom2(n) - out.pair_sum - out.uncovered_edges;
  return out;
}

}  // namespace scover
