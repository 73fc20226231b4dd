#pragma once

#include <conejac/errors.hpp>
#include <conejac/integer.hpp>
#include <conejac/multigraph.hpp>

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

namespace conejac {

/// Hard limits for the brute-force enumerators. Edges are counted with
/// multiplicity. 24 edges admits the cone over C_8(1,2).
inline constexpr std::size_t kOracleMaxVertices = 10;
inline constexpr std::size_t kOracleMaxEdges = 24;

namespace detail {

/// Union-find with union by size and no path compression, so that every
/// union can be undone in LIFO order during backtracking.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void rollback() {
    const std::size_t b = history_.back();
    history_.pop_back();
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

  std::size_t component_size(std::size_t root) const { return size_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

using EdgeVector = std::vector<std::pair<std::size_t, std::size_t>>;

/// Depth-first walk over acyclic edge subsets. With `exact_size` set, only
/// subsets of exactly that many edges are reported; otherwise every forest is.
template <class Visit>
class ForestWalker {
 public:
  ForestWalker(std::size_t n, const EdgeVector& edges, Visit& visit, long exact_size)
      : edges_(edges), uf_(n), visit_(visit), exact_(exact_size) {}

  void run() { step(0, 0, 0); }

 private:
  void step(std::size_t i, std::size_t chosen, std::uint64_t mask) {
    const std::size_t m = edges_.size();
    if (exact_ >= 0) {
      const auto target = static_cast<std::size_t>(exact_);
      if (chosen == target) {
        visit_(mask, uf_);
        return;
      }
      if (chosen + (m - i) < target) return;
    } else if (i == m) {
      visit_(mask, uf_);
      return;
    }
    if (uf_.unite(edges_[i].first, edges_[i].second)) {
      step(i + 1, chosen + 1, mask | (std::uint64_t{1} << i));
      uf_.rollback();
    }
    step(i + 1, chosen, mask);
  }

  const EdgeVector& edges_;
  RollbackUnionFind uf_;
  Visit& visit_;
  long exact_;
};

template <class Visit>
void for_each_forest(std::size_t n, const EdgeVector& edges, Visit&& visit, long exact_size = -1) {
  ForestWalker<std::remove_reference_t<Visit>> walker(n, edges, visit, exact_size);
  walker.run();
}

inline void check_guard(std::size_t vertices, std::size_t edges, const char* who) {
  if (vertices > kOracleMaxVertices || edges > kOracleMaxEdges)
    throw GuardViolation(std::string(who) + ": graph with " + std::to_string(vertices) + " vertices and " +
                         std::to_string(edges) + " edges exceeds the enumeration limit of " +
                         std::to_string(kOracleMaxVertices) + " vertices and " + std::to_string(kOracleMaxEdges) +
                         " edges");
}

inline EdgeVector cone_edge_vector(const Multigraph& g) {
  EdgeVector edges = g.edge_list();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, g.vertex_count());
  return edges;
}

} // namespace detail

/// Counts spanning trees by exhaustive search; parallel edges are distinct.
inline Integer enumerate_spanning_trees(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  detail::check_guard(n, g.edge_count(), "enumerate_spanning_trees");
  if (n == 0) return 0;
  std::uint64_t count = 0;
  detail::for_each_forest(
      n, g.edge_list(), [&](std::uint64_t, const detail::RollbackUnionFind&) { ++count; },
      static_cast<long>(n - 1));
  return Integer(static_cast<unsigned long>(count));
}

/// Sums, over all spanning forests, the product of the component sizes: the
/// number of ways to root every tree.
inline Integer enumerate_rooted_forests(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  detail::check_guard(n, g.edge_count(), "enumerate_rooted_forests");
  std::uint64_t total = 0;
  detail::for_each_forest(n, g.edge_list(), [&](std::uint64_t, const detail::RollbackUnionFind& uf) {
    std::uint64_t ways = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (uf.find(v) == v) ways *= uf.component_size(v);
    total += ways;
  });
  return Integer(static_cast<unsigned long>(total));
}

struct BijectionReport {
  Integer cone_trees = 0;
  Integer rooted_forests = 0;
  bool well_formed = true;  // every forest component got exactly one root
  bool injective = true;
  bool surjective = true;
  std::string counterexample;

  bool ok() const { return well_formed && injective && surjective && cone_trees == rooted_forests; }
};

/// Maps every spanning tree t of cone(g) to the rooted forest (t minus the
/// apex, each tree rooted at its neighbour of the apex) and checks that the map
/// hits every rooted spanning forest of g exactly once.
inline BijectionReport bijection_check(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  detail::check_guard(n, g.edge_count(), "bijection_check");
  detail::check_guard(n + 1, g.edge_count() + n, "bijection_check (cone)");
  const detail::EdgeVector g_edges = g.edge_list();
  const std::size_t m = g_edges.size();
  const std::uint64_t forest_bits = (std::uint64_t{1} << m) - 1;
  auto key = [](std::uint64_t forest, std::uint64_t roots) { return forest | (roots << 32); };
  auto describe = [&](std::uint64_t forest, std::uint64_t roots) {
    std::ostringstream os;
    os << "forest edges {";
    bool first = true;
    for (std::size_t i = 0; i < m; ++i)
      if (forest >> i & 1U) {
        os << (first ? "" : ", ") << g_edges[i].first << "-" << g_edges[i].second;
        first = false;
      }
    os << "} roots {";
    first = true;
    for (std::size_t v = 0; v < n; ++v)
      if (roots >> v & 1U) {
        os << (first ? "" : ", ") << v;
        first = false;
      }
    os << "}";
    return os.str();
  };

  BijectionReport report;
  std::unordered_set<std::uint64_t> image;
  std::uint64_t trees = 0;
  detail::for_each_forest(
      n + 1, detail::cone_edge_vector(g),
      [&](std::uint64_t mask, const detail::RollbackUnionFind&) {
        ++trees;
        const std::uint64_t forest = mask & forest_bits;
        const std::uint64_t roots = mask >> m;
        detail::RollbackUnionFind parts(n);
        for (std::size_t i = 0; i < m; ++i)
          if (forest >> i & 1U) parts.unite(g_edges[i].first, g_edges[i].second);
        std::vector<int> roots_in(n, 0);
        for (std::size_t v = 0; v < n; ++v)
          if (roots >> v & 1U) ++roots_in[parts.find(v)];
        for (std::size_t v = 0; v < n; ++v) {
          if (parts.find(v) == v && roots_in[v] != 1 && report.well_formed) {
            report.well_formed = false;
            report.counterexample = "component without a unique root: " + describe(forest, roots);
          }
        }
        if (!image.insert(key(forest, roots)).second && report.injective) {
          report.injective = false;
          report.counterexample = "two cone trees map to " + describe(forest, roots);
        }
      },
      static_cast<long>(n));
  report.cone_trees = static_cast<unsigned long>(trees);

  std::uint64_t rooted = 0;
  detail::for_each_forest(n, g_edges, [&](std::uint64_t forest, const detail::RollbackUnionFind& uf) {
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t v = 0; v < n; ++v) members[uf.find(v)].push_back(v);
    std::vector<const std::vector<std::size_t>*> comps;
    for (const auto& c : members)
      if (!c.empty()) comps.push_back(&c);
    // Odometer over one root choice per component.
    std::vector<std::size_t> pick(comps.size(), 0);
    for (;;) {
      std::uint64_t roots = 0;
      for (std::size_t c = 0; c < comps.size(); ++c) roots |= std::uint64_t{1} << (*comps[c])[pick[c]];
      ++rooted;
      if (!image.count(key(forest, roots)) && report.surjective) {
        report.surjective = false;
        report.counterexample = "rooted forest not reached: " + describe(forest, roots);
      }
      std::size_t c = 0;
      while (c < comps.size() && ++pick[c] == comps[c]->size()) pick[c++] = 0;
      if (c == comps.size()) break;
    }
  });
  report.rooted_forests = static_cast<unsigned long>(rooted);
  return report;
}

} // namespace conejac
