#pragma once

#include <cstdint>
#include <vector>

#include "scover/family.hpp"

namespace scover {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 300.0;
};

enum class SolverStatus { optimal, budget_exhausted };

enum class LevelOutcome { skipped_by_bound, exhausted, found, aborted };

struct LevelStats {
  int m = 0;
  std::uint64_t nodes = 0;
  LevelOutcome outcome = LevelOutcome::exhausted;
};

/// Exact minimum with witness. When status is optimal, every level below
/// m_star was either ruled out by the counting bound or exhausted by the
/// search; levels records that accounting. On budget exhaustion m_star is
/// the best known upper bound and the witness is a feasible fallback
/// family.
struct SearchResult {
  int m_star;
  CoverFamily witness;
  SolverStatus status;
  std::uint64_t nodes_explored;
  std::vector<LevelStats> levels;
};

/// ceil((n^2/(2(s-1)) - n/2) / C(cap,2)), floored at 0; exact rationals.
std::int64_t counting_lower_bound(int n, int s, int cap);

/// Iterative-deepening exact search for the minimum number of lines in an
/// s-cover on [n] with line sizes in [2, cap]. Levels are explored from
/// counting_lower_bound upward; within a level, candidate lines (ordered
/// by size descending, lexicographic) are added with strictly increasing
/// index, the first line is pinned to contain point 0, partial families
/// are kept linear incrementally, branches that cannot cover enough pairs
/// (Turan requirement) are cut, and K_s-freeness of the uncovered graph
/// is decided at leaves. Requires n >= s >= 2, cap >= 2, n <= 20.
SearchResult min_cover_exact(int n, int s, int cap, SearchBudget budget = {});

/// Independent oracle for n <= 8: plain enumeration of line families in
/// increasing size with only the pairwise-intersection filter, coverage
/// decided by scanning every s-subset. Shares no pruning logic with
/// min_cover_exact.
int brute_oracle(int n, int s, int cap);

}  // namespace scover
