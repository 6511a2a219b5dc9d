#include <algorithm>
#include <stdexcept>

#include "scover/verify.hpp"

namespace scover {

namespace {

std::size_t pair_index(int n, PointId u, PointId v) {
  // u < v assumed; row-major upper triangle.
  auto uu = static_cast<std::size_t>(u);
  return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

}  // namespace

UncoveredGraph::UncoveredGraph(int n) : n_(n) {
  adj_.assign(n, boost::dynamic_bitset<>(n));
}

UncoveredGraph::UncoveredGraph(
    int n, const std::vector<std::pair<PointId, PointId>>& edges)
    : UncoveredGraph(n) {
  if (n < 0) throw std::invalid_argument("UncoveredGraph: negative n");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("UncoveredGraph: bad edge");
    adj_[u].set(v);
    adj_[v].set(u);
  }
  finish_counts();
}

void UncoveredGraph::finish_counts() {
  edge_count_ = 0;
  for (const auto& row : adj_) edge_count_ += row.count();
  edge_count_ /= 2;
}

bool UncoveredGraph::has_edge(PointId u, PointId v) const {
  return adj_[u].test(v);
}

std::vector<std::pair<PointId, PointId>> UncoveredGraph::edges() const {
  std::vector<std::pair<PointId, PointId>> out;
  out.reserve(edge_count_);
  for (PointId u = 0; u < n_; ++u) {
    for (std::size_t v = adj_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<PointId>(v));
    }
  }
  return out;
}

std::optional<LinearityWitness> check_linearity(const CoverFamily& f) {
  const int n = f.n();
  const auto& lines = f.lines();
  // Fast pass: mark covered pairs; a pair seen twice means two lines
  // share two points.
  boost::dynamic_bitset<> seen(static_cast<std::size_t>(n) * (n - 1) / 2);
  bool conflict = false;
  for (const Line& line : lines) {
    for (std::size_t a = 0; a + 1 < line.size() && !conflict; ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        std::size_t idx = pair_index(n, line[a], line[b]);
        if (seen.test(idx)) {
          conflict = true;
          break;
        }
        seen.set(idx);
      }
    if (conflict) break;
  }
  if (!conflict) return std::nullopt;

  // Slow pass, failure path only: locate the first violating pair in
  // canonical order.
  for (int i = 0; i < f.m(); ++i) {
    for (int j = i + 1; j < f.m(); ++j) {
      std::vector<PointId> shared;
      std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(),
                            lines[j].end(), std::back_inserter(shared));
      if (shared.size() >= 2) return LinearityWitness{i, j, std::move(shared)};
    }
  }
  throw std::logic_error("check_linearity: conflict detected but not located");
}

UncoveredGraph uncovered_graph_unchecked(const CoverFamily& f) {
  UncoveredGraph g(f.n());
  for (auto& row : g.adj_) row.set();
  for (PointId u = 0; u < f.n(); ++u) g.adj_[u].reset(u);
  for (const Line& line : f.lines()) {
    for (std::size_t a = 0; a + 1 < line.size(); ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        g.adj_[line[a]].reset(line[b]);
        g.adj_[line[b]].reset(line[a]);
      }
  }
  g.finish_counts();
  return g;
}

UncoveredGraph uncovered_graph(const CoverFamily& f) {
  if (auto w = check_linearity(f)) {
    throw std::invalid_argument(
        "uncovered_graph: family is not linear, lines " +
        std::to_string(w->line_i) + " and " + std::to_string(w->line_j) +
        " share " + std::to_string(w->shared.size()) + " points");
  }
  return uncovered_graph_unchecked(f);
}

}  // namespace scover
