#include <stdexcept>

#include "scover/verify.hpp"

namespace scover {

namespace {

using Bitset = boost::dynamic_bitset<>;
constexpr std::size_t npos = Bitset::npos;

// Greedy proper coloring of the subgraph induced by P, stopping once
// `limit` classes are in use. Any clique inside P has at most one vertex
// per class, so a return value below `limit` proves there is no clique
// of that size.
int greedy_color_bound(const UncoveredGraph& g, const Bitset& P, int limit) {
  std::vector<Bitset> classes;
  for (std::size_t v = P.find_first(); v != npos; v = P.find_next(v)) {
    bool placed = false;
    for (auto& cls : classes) {
      if (!cls.intersects(g.neighbors(static_cast<PointId>(v)))) {
        cls.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (static_cast<int>(classes.size()) + 1 >= limit) return limit;
      classes.emplace_back(P.size());
      classes.back().set(v);
    }
  }
  return static_cast<int>(classes.size());
}

struct CliqueSearch {
  const UncoveredGraph& g;
  int s;
  std::vector<PointId> stack;

  bool expand(const Bitset& P, int rsize) {
    if (rsize + static_cast<int>(P.count()) < s) return false;
    if (rsize == s - 1) {
      stack.push_back(static_cast<PointId>(P.find_first()));
      return true;
    }
    if (rsize == s - 2) {
      // Need one edge inside P.
      for (std::size_t w = P.find_first(); w != npos; w = P.find_next(w)) {
        Bitset t = P & g.neighbors(static_cast<PointId>(w));
        std::size_t z = t.find_next(w);
        if (z != npos) {
          stack.push_back(static_cast<PointId>(w));
          stack.push_back(static_cast<PointId>(z));
          return true;
        }
      }
      return false;
    }
    if (greedy_color_bound(g, P, s - rsize) < s - rsize) return false;

    // Pivot on the vertex covering most of P; only P \ N(pivot) needs
    // branching.
    std::size_t pivot = P.find_first();
    std::size_t best_deg = 0;
    for (std::size_t u = P.find_first(); u != npos; u = P.find_next(u)) {
      std::size_t deg = (P & g.neighbors(static_cast<PointId>(u))).count();
      if (deg > best_deg) {
        best_deg = deg;
        pivot = u;
      }
    }
    Bitset ext = P - g.neighbors(static_cast<PointId>(pivot));
    Bitset live = P;
    for (std::size_t v = ext.find_first(); v != npos; v = ext.find_next(v)) {
      stack.push_back(static_cast<PointId>(v));
      if (expand(live & g.neighbors(static_cast<PointId>(v)), rsize + 1))
        return true;
      stack.pop_back();
      live.reset(v);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<PointId>> has_clique_branch_bound(
    const UncoveredGraph& g, int s) {
  if (s < 2) throw std::invalid_argument("has_clique: s must be >= 2");
  if (s > g.n()) return std::nullopt;
  Bitset all(g.n());
  all.set();
  CliqueSearch search{g, s, {}};
  if (search.expand(all, 0)) return search.stack;
  return std::nullopt;
}

std::optional<std::vector<PointId>> has_clique_exhaustive(
    const UncoveredGraph& g, int s) {
  if (s < 2) throw std::invalid_argument("has_clique: s must be >= 2");
  const int n = g.n();
  if (s > n) return std::nullopt;
  std::vector<PointId> pick(s);
  // Lexicographically first s-subset forming a clique, by direct scan.
  for (int i = 0; i < s; ++i) pick[i] = i;
  auto is_clique = [&]() {
    for (int a = 0; a + 1 < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (!g.has_edge(pick[a], pick[b])) return false;
    return true;
  };
  while (true) {
    if (is_clique()) return pick;
    int i = s - 1;
    while (i >= 0 && pick[i] == n - s + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::optional<std::vector<PointId>> has_clique(const UncoveredGraph& g, int s) {
  if (g.n() <= 12) return has_clique_exhaustive(g, s);
  return has_clique_branch_bound(g, s);
}

}  // namespace scover
