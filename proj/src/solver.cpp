#include "scover/solver.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace scover {

namespace {

constexpr int kMaxSolverN = 20;
constexpr std::size_t kMaxPairs = kMaxSolverN * (kMaxSolverN - 1) / 2;
using PairSet = std::bitset<kMaxPairs>;

std::size_t pair_index(int n, int u, int v) {
  auto uu = static_cast<std::size_t>(u);
  return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

// Pairs inside the parts of the balanced (s-1)-partition of [n]. By
// Turan's theorem this many pairs must be covered in any s-cover: the
// uncovered graph is K_s-free, so it has at most ex(n, K_s) =
// C(n,2) - (this value) edges.
std::int64_t required_covered_pairs(int n, int s) {
  const int r = s - 1;
  const int q = n / r;
  const int rem = n % r;
  return rem * binom2(q + 1) + (r - rem) * binom2(q);
}

struct Candidate {
  std::vector<PointId> pts;
  int size;
  PairSet pairs;
  bool has_point0;
};

std::vector<Candidate> enumerate_candidates(int n, int cap) {
  std::vector<Candidate> out;
  const int max_size = std::min(cap, n);
  std::vector<PointId> pick;
  for (int size = max_size; size >= 2; --size) {
    pick.assign(size, 0);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Candidate c;
      c.pts = pick;
      c.size = size;
      c.has_point0 = pick[0] == 0;
      for (int a = 0; a + 1 < size; ++a)
        for (int b = a + 1; b < size; ++b)
          c.pairs.set(pair_index(n, pick[a], pick[b]));
      out.push_back(std::move(c));
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

// K_s-freeness of the complement of the covered-pair set, on mask
// adjacency; leaves are rare enough that a direct recursive scan is fine.
bool mask_has_clique(const std::vector<std::uint32_t>& adj, std::uint32_t cand,
                     int have, int s) {
  if (have == s) return true;
  if (have + std::popcount(cand) < s) return false;
  std::uint32_t rest = cand;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    // Extend only upward so every clique is built once, in sorted order.
    if (mask_has_clique(adj, rest & adj[v], have + 1, s)) return true;
  }
  return false;
}

bool uncovered_is_ks_free(const PairSet& covered, int n, int s) {
  std::vector<std::uint32_t> adj(n, 0);
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!covered.test(pair_index(n, u, v))) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  return !mask_has_clique(adj, all, 0, s);
}

struct BudgetExceeded {};

struct LevelSearch {
  const std::vector<Candidate>& cands;
  int n;
  int s;
  int m;
  std::int64_t required;
  std::uint64_t max_nodes;
  double max_seconds;
  std::chrono::steady_clock::time_point start;
  std::uint64_t& nodes;

  PairSet covered;
  std::int64_t covered_count = 0;
  std::vector<int> chosen;

  bool dfs(int first_index) {
    const int k = static_cast<int>(chosen.size());
    if (k == m) return uncovered_is_ks_free(covered, n, s);
    const int slots_left = m - k;
    const int last = static_cast<int>(cands.size()) - slots_left;
    for (int i = first_index; i <= last; ++i) {
      const Candidate& c = cands[i];
      if (k == 0 && !c.has_point0) continue;
      if ((covered & c.pairs).any()) continue;  // two shared points somewhere
      const std::int64_t new_count = covered_count + binom2(c.size);
      // Later candidates are no larger than cands[i+1]; bound the pairs
      // the remaining slots can still cover.
      const std::int64_t future =
          slots_left == 1
              ? 0
              : static_cast<std::int64_t>(slots_left - 1) *
                    binom2(cands[i + 1].size);
      if (new_count + future < required) {
        // Candidate sizes are non-increasing in the index, so every later
        // start does no better: stop the whole loop.
        break;
      }
      if (++nodes >= max_nodes) throw BudgetExceeded{};
      if ((nodes & 0xFFF) == 0) {
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        if (elapsed.count() > max_seconds) throw BudgetExceeded{};
      }
      covered |= c.pairs;
      covered_count = new_count;
      chosen.push_back(i);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
      covered &= ~c.pairs;
      covered_count -= binom2(c.size);
    }
    return false;
  }
};

CoverFamily fallback_family(int n, int s, int /*cap*/) {
  // All pairs inside the parts of the balanced (s-1)-partition: linear,
  // line sizes 2, uncovered graph complete multipartite hence K_s-free.
  const int r = s - 1;
  std::vector<Line> lines;
  int start = 0;
  for (int part = 0; part < r; ++part) {
    const int size = n / r + (part < n % r ? 1 : 0);
    for (int a = start; a < start + size; ++a)
      for (int b = a + 1; b < start + size; ++b)
        lines.push_back(Line{a, b});
    start += size;
  }
  return make_family(n, s, std::move(lines));
}

}  // namespace

std::int64_t counting_lower_bound(int n, int s, int cap) {
  if (s < 2) throw std::invalid_argument("counting_lower_bound: s must be >= 2");
  if (cap < 2) throw std::invalid_argument("counting_lower_bound: cap must be >= 2");
  const Rational need =
      Rational(static_cast<long long>(n) * n, 2 * (s - 1)) - Rational(n, 2);
  if (need <= 0) return 0;
  const Rational per_line(binom2(cap));
  const Rational ratio = need / per_line;
  return (ratio.numerator() + ratio.denominator() - 1) / ratio.denominator();
}

SearchResult min_cover_exact(int n, int s, int cap, SearchBudget budget) {
  if (s < 2) throw std::invalid_argument("min_cover_exact: s must be >= 2");
  if (n < s) throw std::invalid_argument("min_cover_exact: n must be >= s");
  if (cap < 2) throw std::invalid_argument("min_cover_exact: cap must be >= 2");
  if (n > kMaxSolverN)
    throw std::invalid_argument("min_cover_exact: n beyond desk scale (max " +
                                std::to_string(kMaxSolverN) + ")");
  if (budget.max_nodes == 0 || budget.max_seconds <= 0)
    throw std::invalid_argument("min_cover_exact: budget must be positive");

  const auto cands = enumerate_candidates(n, cap);
  const std::int64_t required = required_covered_pairs(n, s);
  const auto start = std::chrono::steady_clock::now();

  const CoverFamily fallback = fallback_family(n, s, cap);
  const int m_upper = fallback.m();

  std::uint64_t nodes = 0;
  std::vector<LevelStats> levels;
  const int m_lo =
      static_cast<int>(std::max<std::int64_t>(counting_lower_bound(n, s, cap), 1));

  for (int m = m_lo; m <= m_upper; ++m) {
    LevelStats stats;
    stats.m = m;
    if (static_cast<std::int64_t>(m) * binom2(cands.empty() ? 0 : cands[0].size) <
        required) {
      stats.outcome = LevelOutcome::skipped_by_bound;
      levels.push_back(stats);
      continue;
    }
    LevelSearch search{.cands = cands,
                       .n = n,
                       .s = s,
                       .m = m,
                       .required = required,
                       .max_nodes = budget.max_nodes,
                       .max_seconds = budget.max_seconds,
                       .start = start,
                       .nodes = nodes,
                       .covered = {},
                       .covered_count = 0,
                       .chosen = {}};
    const std::uint64_t nodes_before = nodes;
    try {
      if (search.dfs(0)) {
        stats.nodes = nodes - nodes_before;
        stats.outcome = LevelOutcome::found;
        levels.push_back(stats);
        std::vector<Line> lines;
        for (int idx : search.chosen) lines.push_back(cands[idx].pts);
        return SearchResult{m, make_family(n, s, std::move(lines)),
                            SolverStatus::optimal, nodes, std::move(levels)};
      }
      stats.nodes = nodes - nodes_before;
      stats.outcome = LevelOutcome::exhausted;
      levels.push_back(stats);
    } catch (const BudgetExceeded&) {
      stats.nodes = nodes - nodes_before;
      stats.outcome = LevelOutcome::aborted;
      levels.push_back(stats);
      return SearchResult{m_upper, fallback, SolverStatus::budget_exhausted,
                          nodes, std::move(levels)};
    }
  }
  // The fallback family is itself feasible at m_upper, so the loop cannot
  // fall through.
  throw std::logic_error("min_cover_exact: search fell through all levels");
}

int brute_oracle(int n, int s, int cap) {
  if (n > 8) throw std::invalid_argument("brute_oracle: n must be <= 8");
  if (n < 1 || s < 2 || cap < 2)
    throw std::invalid_argument("brute_oracle: bad arguments");

  // Candidate lines as bitmasks, ascending mask value.
  std::vector<std::uint16_t> cands;
  for (std::uint16_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= 2 && size <= cap) cands.push_back(mask);
  }
  // Every s-subset of [n].
  std::vector<std::uint16_t> ssets;
  for (std::uint16_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == s) ssets.push_back(mask);

  std::vector<std::uint16_t> chosen;
  auto covers = [&]() {
    for (std::uint16_t sset : ssets) {
      bool hit = false;
      for (std::uint16_t line : chosen)
        if (std::popcount(static_cast<unsigned>(line & sset)) >= 2) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };

  const int K = static_cast<int>(cands.size());
  // Families of size k, increasing k; recursion keeps the pairwise
  // intersection filter and nothing else.
  auto enumerate = [&](auto&& self, int first, int k) -> bool {
    if (k == 0) return covers();
    for (int i = first; i <= K - k; ++i) {
      bool linear = true;
      for (std::uint16_t line : chosen)
        if (std::popcount(static_cast<unsigned>(line & cands[i])) >= 2) {
          linear = false;
          break;
        }
      if (!linear) continue;
      chosen.push_back(cands[i]);
      if (self(self, i + 1, k - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  const int k_max = static_cast<int>(binom2(n)) + 1;
  for (int k = 0; k <= k_max; ++k) {
    chosen.clear();
    if (enumerate(enumerate, 0, k)) return k;
  }
  throw std::logic_error("brute_oracle: no cover found up to the pair family");
}

}  // namespace scover
