#pragma once

#include <conejac/int_matrix.hpp>

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conejac {

/// Finite loopless multigraph on vertices 0..n-1. Edges are stored once per
/// unordered pair (u < v) together with their multiplicity.
class Multigraph {
 public:
  using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

  Multigraph() = default;
  explicit Multigraph(std::size_t n) : n_(n), degree_(n, 0) {}

  void add_edge(std::size_t u, std::size_t v, std::size_t multiplicity = 1) {
    if (u >= n_ || v >= n_)
      throw std::out_of_range("Multigraph: vertex index out of range in edge (" + std::to_string(u) +
                              "," + std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("Multigraph: loop at vertex " + std::to_string(u));
    if (multiplicity == 0) return;
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += multiplicity;
    degree_[u] += multiplicity;
    degree_[v] += multiplicity;
    edge_count_ += multiplicity;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  /// Number of edges counted with multiplicity.
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(std::size_t v) const { return degree_.at(v); }
  const EdgeMap& edges() const noexcept { return edges_; }

  std::size_t multiplicity(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
  }

  /// One entry per parallel edge, in (u, v) order.
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (const auto& [uv, mult] : edges_)
      for (std::size_t k = 0; k < mult; ++k) out.push_back(uv);
    return out;
  }

  std::size_t component_count() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n_;
    for (const auto& [uv, mult] : edges_) {
      auto a = find(uv.first), b = find(uv.second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components;
  }

  bool connected() const { return n_ > 0 && component_count() == 1; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> degree_;
  EdgeMap edges_;
};

inline Multigraph graph_from_edge_list(std::size_t n,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Multigraph g(n);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

/// C_n(s_1, ..., s_k): vertex i adjacent to i +- s_l (mod n).
struct CirculantSpec {
  std::size_t n = 0;
  std::vector<std::size_t> jumps;

  void validate() const {
    if (n < 3) throw std::invalid_argument("circulant: need at least 3 vertices, got " + std::to_string(n));
    if (jumps.empty()) throw std::invalid_argument("circulant: jump list is empty");
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      if (jumps[i] == 0 || 2 * jumps[i] > n)
        throw std::invalid_argument("circulant: jump " + std::to_string(jumps[i]) + " outside [1, " +
                                    std::to_string(n / 2) + "]");
      if (i > 0 && jumps[i] <= jumps[i - 1])
        throw std::invalid_argument("circulant: jumps must be strictly increasing");
    }
  }

  /// True for C_{2m}(s_1, ..., s_k, m): the last jump is exactly half the order.
  bool has_half_jump() const { return !jumps.empty() && 2 * jumps.back() == n; }

  /// gcd(s_1, ..., s_k, n) == 1
  bool connected() const {
    std::size_t g = n;
    for (auto s : jumps) g = std::gcd(g, s);
    return g == 1;
  }

  std::string to_string() const {
    std::string s = "C" + std::to_string(n) + "(";
    for (std::size_t i = 0; i < jumps.size(); ++i) s += (i ? "," : "") + std::to_string(jumps[i]);
    return s + ")";
  }

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// Two circulant layers C_n(jumps1), C_n(jumps2) joined by the matching {i, n+i}.
struct CobordismSpec {
  std::size_t n = 0;
  std::vector<std::size_t> jumps1;
  std::vector<std::size_t> jumps2;

  void validate() const {
    for (const auto* jumps : {&jumps1, &jumps2}) {
      CirculantSpec layer{n, *jumps};
      layer.validate();
      if (layer.has_half_jump())
        throw std::invalid_argument("cobordism: layer jumps must stay below n/2");
    }
  }

  std::string to_string() const {
    auto list = [](const std::vector<std::size_t>& js) {
      std::string s;
      for (std::size_t i = 0; i < js.size(); ++i) s += (i ? "," : "") + std::to_string(js[i]);
      return s;
    };
    return "COB" + std::to_string(n) + "(" + list(jumps1) + "|" + list(jumps2) + ")";
  }

  friend bool operator==(const CobordismSpec&, const CobordismSpec&) = default;
};

inline Multigraph circulant(const CirculantSpec& spec) {
  spec.validate();
  Multigraph g(spec.n);
  for (auto s : spec.jumps) {
    if (2 * s == spec.n) {
      for (std::size_t i = 0; i < spec.n / 2; ++i) g.add_edge(i, i + s);
    } else {
      for (std::size_t i = 0; i < spec.n; ++i) g.add_edge(i, (i + s) % spec.n);
    }
  }
  return g;
}

/// G plus an apex (index n) joined once to every vertex.
inline Multigraph cone(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  Multigraph c(n + 1);
  for (const auto& [uv, mult] : g.edges()) c.add_edge(uv.first, uv.second, mult);
  for (std::size_t v = 0; v < n; ++v) c.add_edge(v, n);
  return c;
}

/// Disjoint union of g1 (0..m-1) and g2 (m..m+n-1) plus every cross edge.
inline Multigraph join(const Multigraph& g1, const Multigraph& g2) {
  const std::size_t m = g1.vertex_count();
  const std::size_t n = g2.vertex_count();
  Multigraph j(m + n);
  for (const auto& [uv, mult] : g1.edges()) j.add_edge(uv.first, uv.second, mult);
  for (const auto& [uv, mult] : g2.edges()) j.add_edge(m + uv.first, m + uv.second, mult);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < n; ++v) j.add_edge(u, m + v);
  return j;
}

inline Multigraph cobordism(const CobordismSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  Multigraph g(2 * n);
  const Multigraph layer1 = circulant({n, spec.jumps1});
  const Multigraph layer2 = circulant({n, spec.jumps2});
  for (const auto& [uv, mult] : layer1.edges()) g.add_edge(uv.first, uv.second, mult);
  for (const auto& [uv, mult] : layer2.edges()) g.add_edge(n + uv.first, n + uv.second, mult);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, n + i);
  return g;
}

/// L = D - A.
inline IntMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, n);
  for (std::size_t v = 0; v < n; ++v) l(v, v) = static_cast<unsigned long>(g.degree(v));
  for (const auto& [uv, mult] : g.edges()) {
    const Integer a = static_cast<unsigned long>(mult);
    l(uv.first, uv.second) -= a;
    l(uv.second, uv.first) -= a;
  }
  return l;
}

} // namespace conejac
