#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "scover/family.hpp"

namespace scover {

/// Graph on {0,...,n-1} whose edges are the point pairs contained in no
/// line of the source family.
class UncoveredGraph {
 public:
  UncoveredGraph(int n, const std::vector<std::pair<PointId, PointId>>& edges);

  int n() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }
  bool has_edge(PointId u, PointId v) const;
  const boost::dynamic_bitset<>& neighbors(PointId v) const { return adj_[v]; }
  std::vector<std::pair<PointId, PointId>> edges() const;

  friend UncoveredGraph uncovered_graph_unchecked(const CoverFamily& f);

 private:
  explicit UncoveredGraph(int n);
  void finish_counts();

  int n_;
  std::uint64_t edge_count_ = 0;
  std::vector<boost::dynamic_bitset<>> adj_;
};

struct LinearityWitness {
  int line_i;
  int line_j;
  std::vector<PointId> shared;
};

/// nullopt when every two lines share at most one point; otherwise the
/// first violating pair (i, j) in canonical line order with the shared
/// points.
std::optional<LinearityWitness> check_linearity(const CoverFamily& f);

/// The pairs of [n] lying in no line. Requires a linear family (the
/// pair-count identity needs each pair in at most one line);
/// throws std::invalid_argument otherwise.
UncoveredGraph uncovered_graph(const CoverFamily& f);

/// Same computation without the linearity requirement; used where the
/// uncovered pair set is wanted for an arbitrary family.
UncoveredGraph uncovered_graph_unchecked(const CoverFamily& f);

/// Clique of size s in g, if one exists. Dispatches to an exhaustive
/// s-subset scan for n <= 12 and to branch-and-bound with pivoting and a
/// greedy-coloring bound above that. Requires s >= 2.
std::optional<std::vector<PointId>> has_clique(const UncoveredGraph& g, int s);

/// The two search strategies, exposed for cross-checking.
std::optional<std::vector<PointId>> has_clique_branch_bound(
    const UncoveredGraph& g, int s);
std::optional<std::vector<PointId>> has_clique_exhaustive(
    const UncoveredGraph& g, int s);

/// Witnesses are present exactly when the corresponding flag is false.
struct VerificationReport {
  bool linear = true;
  std::optional<LinearityWitness> linear_witness;
  bool covered = true;
  std::optional<std::vector<PointId>> uncovered_witness;  // s-set, no covered pair
  bool cap_ok = true;
  std::optional<int> cap_witness;  // index of the first oversized line
  CapMode cap_mode = CapMode::standard;

  bool all_ok() const { return linear && covered && cap_ok; }
};

/// Decides the three s-cover axioms. Coverage is decided as
/// K_s-freeness of the uncovered graph; failures are reported with
/// witnesses, never thrown.
VerificationReport verify_cover(const CoverFamily& f, CapMode mode);

/// The quantities of the structural analysis: line sizes a_1 >= ... >= a_m,
/// the minimum degree d over A_1 attained at v (smallest index on ties),
/// P = union of the lines through v, Q = [n] \ P, and the division
/// n-1+(s-1)(s-2) = (s-1)*a_1*q_div + r_div with 0 <= r_div < (s-1)*a_1.
struct StructureProfile {
  int m = 0;
  std::vector<int> sizes;
  int a1 = 0;
  PointId v = 0;
  int d = 0;
  std::vector<PointId> p_set;
  std::vector<PointId> q_set;
  int p = 0;
  std::int64_t q_div = 0;
  std::int64_t r_div = 0;
};

/// Throws on an empty family.
StructureProfile compute_profile(const CoverFamily& f);

/// e_k(xs), exact. Throws when k is outside [0, xs.size()].
std::int64_t elementary_symmetric(int k, const std::vector<std::int64_t>& xs);

/// Pairwise-disjoint subset of one line, for the covering-ratio bound.
struct DisjointSubset {
  int line_index = 0;
  std::vector<PointId> points;
};

struct BoundCheck {
  bool applicable = false;
  Rational bound = 0;
  bool satisfied = true;
};

struct LemmaReport {
  BoundCheck part1;  // m >= a1*(d-1) + 1
  BoundCheck part2;  // m >= (|Q|-1)/(s-2) + s-2 + d, when |Q| > n(s-2)/(s-1)
  BoundCheck part3;  // m >= prod(a') / e_{s-2}(a'), over caller subsets
  BoundCheck part4;  // sum C(a_i,2) >= n^2/(2(s-1)) - n/2
  std::int64_t pair_sum = 0;         // sum of C(a_i, 2)
  std::int64_t uncovered_edges = 0;  // |E| of the uncovered graph
  std::int64_t turan_residual = 0;   // C(n,2) - pair_sum - |E|, 0 when linear
};

/// Evaluates the counting bounds on a verified s-cover. The family is
/// re-verified with the standard cap; anything failing verification is
/// rejected. Part 2 is flagged inapplicable when its |Q| hypothesis (or
/// s >= 3) fails; part 3 is evaluated only when subsets for s distinct
/// lines are supplied, after validating membership and disjointness.
LemmaReport lemma_bounds(
    const CoverFamily& f, const StructureProfile& profile,
    const std::optional<std::vector<DisjointSubset>>& subsets = std::nullopt);

}  // namespace scover
