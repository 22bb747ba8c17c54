#pragma once

// Suborbits of G relative to alpha = H, and the basic orbital graphs
// Y(i) = X(G, O_i) for the five long (self-paired) suborbits alpha^{t^i ell H}.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "action.hpp"

namespace hamlift {

enum class SuborbitKind { singleton, long_orbit };

struct Suborbit {
  SuborbitKind kind;
  std::uint32_t i;                  // 0..4
  std::vector<OmegaPoint> points;   // in vertex order
};

// H-orbits on Omega, computed by applying every element of H. Returned as
// the five singletons {alpha^{t^i}} followed by the five long suborbits
// alpha^{t^i ell H}, each group in order of i.
inline std::vector<Suborbit> suborbits(const CosetSpace& space, const std::vector<GroupElement>& h) {
  const Psl2& g = space.group();
  const std::uint32_t k = space.field().order();
  std::vector<int> seen(space.size(), -1);
  std::vector<std::vector<OmegaPoint>> orbits;
  for (std::uint32_t idx = 0; idx < space.size(); ++idx) {
    if (seen[idx] >= 0) continue;
    const OmegaPoint w = space.point(idx);
    std::vector<std::uint32_t> members;
    for (const auto& x : h) {
      const std::uint32_t j = space.index(space.act(w, x));
      if (seen[j] < 0) {
        seen[j] = static_cast<int>(orbits.size());
        members.push_back(j);
      } else if (seen[j] != static_cast<int>(orbits.size())) {
        throw invariant_violation("orbital", "H-orbits are not disjoint");
      }
    }
    std::ranges::sort(members);
    std::vector<OmegaPoint> pts;
    for (auto j : members) pts.push_back(space.point(j));
    orbits.push_back(std::move(pts));
  }
  if (orbits.size() != 10) throw invariant_violation("orbital", std::to_string(orbits.size()) + " suborbits, expected 10");

  std::vector<Suborbit> out;
  for (std::uint32_t i = 0; i < 5; ++i) {
    const auto& o = orbits[seen[space.index(space.point_of(g.t_power(i)))]];
    if (o.size() != 1) throw invariant_violation("orbital", "suborbit of alpha^{t^i} is not a singleton");
    out.push_back({SuborbitKind::singleton, i, o});
  }
  const GroupElement ell = g.ell();
  for (std::uint32_t i = 0; i < 5; ++i) {
    const auto& o = orbits[seen[space.index(space.point_of(g.mul(g.t_power(i), ell)))]];
    if (o.size() != k) throw invariant_violation("orbital", "long suborbit has wrong size");
    out.push_back({SuborbitKind::long_orbit, i, o});
  }
  return out;
}

// Neighbours of w in Y(i): { point_of(m_x rep(w)) : x in F_k } with
// m_x = [[0, -theta^i], [theta^{-i}, x]]. Sorted in vertex order.
inline std::vector<OmegaPoint> neighborhood(const CosetSpace& space, std::uint32_t i, const OmegaPoint& w) {
  if (i > 4) throw parameter_error("orbital: orbital index must be in 0..4");
  const Psl2& g = space.group();
  const Field& f = space.field();
  const GroupElement rep = space.representative(w);
  const FieldElement top = f.neg(f.theta_pow(i));
  const FieldElement bottom = f.theta_pow(-static_cast<std::int64_t>(i));
  std::vector<OmegaPoint> out;
  out.reserve(f.order());
  for (auto x : f.elements()) out.push_back(space.point_of(g.mul(g.make(f.zero(), top, bottom, x), rep)));
  std::ranges::sort(out, {}, [&](const OmegaPoint& v) { return space.index(v); });
  return out;
}

// Union of the basic orbital graphs Y(i), i in `orbitals`, as sorted
// neighbour lists over the fixed vertex order.
class OrbitalGraph {
 public:
  OrbitalGraph(std::vector<std::uint32_t> orbitals, std::vector<std::vector<std::uint32_t>> adj)
      : orbitals_(std::move(orbitals)), adj_(std::move(adj)) {}

  const std::vector<std::uint32_t>& orbitals() const { return orbitals_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj_.size()); }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }
  std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adj_[v].size()); }

  bool has_edge(std::uint32_t u, std::uint32_t v) const { return std::ranges::binary_search(adj_[u], v); }

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& n : adj_) twice += n.size();
    return twice / 2;
  }

  // Common degree, or nullopt if irregular.
  std::optional<std::uint32_t> regular_degree() const {
    if (adj_.empty()) return 0;
    const auto d = degree(0);
    for (const auto& n : adj_)
      if (n.size() != d) return std::nullopt;
    return d;
  }

  bool is_symmetric() const {
    for (std::uint32_t u = 0; u < vertex_count(); ++u)
      for (auto v : adj_[u])
        if (!has_edge(v, u)) return false;
    return true;
  }

  bool is_loop_free() const {
    for (std::uint32_t u = 0; u < vertex_count(); ++u)
      if (has_edge(u, u)) return false;
    return true;
  }

  bool is_connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::uint32_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj_[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
    return reached == adj_.size();
  }

 private:
  std::vector<std::uint32_t> orbitals_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

// X = union of Y(i) over `orbitals` (nonempty, each in 0..4). Validates
// symmetry, loop-freeness, |orbitals|*k-regularity and connectivity.
inline OrbitalGraph build_union_graph(const CosetSpace& space, std::vector<std::uint32_t> orbitals) {
  if (orbitals.empty()) throw parameter_error("orbital: need at least one orbital index");
  std::ranges::sort(orbitals);
  if (std::ranges::adjacent_find(orbitals) != orbitals.end())
    throw parameter_error("orbital: repeated orbital index");
  for (auto i : orbitals)
    if (i > 4) throw parameter_error("orbital: orbital index must be in 0..4");

  std::vector<std::vector<std::uint32_t>> adj(space.size());
  for (std::uint32_t v = 0; v < space.size(); ++v) {
    const OmegaPoint w = space.point(v);
    for (auto i : orbitals)
      for (const auto& x : neighborhood(space, i, w)) adj[v].push_back(space.index(x));
    std::ranges::sort(adj[v]);
    if (std::ranges::adjacent_find(adj[v]) != adj[v].end())
      throw invariant_violation("orbital", "orbitals overlap or neighbourhood has repeats");
  }
  OrbitalGraph graph(std::move(orbitals), std::move(adj));

  const std::uint32_t expected = static_cast<std::uint32_t>(graph.orbitals().size()) * space.field().order();
  if (graph.regular_degree() != expected) throw invariant_violation("orbital", "graph is not " + std::to_string(expected) + "-regular");
  if (!graph.is_loop_free()) throw invariant_violation("orbital", "graph has a loop");
  if (!graph.is_symmetric()) throw invariant_violation("orbital", "adjacency is not symmetric");
  if (!graph.is_connected()) throw invariant_violation("orbital", "graph is disconnected");
  return graph;
}

inline OrbitalGraph build_graph(const CosetSpace& space, std::uint32_t i) { return build_union_graph(space, {i}); }

// One "u v" line per edge (u before v in vertex order).
inline void write_edge_list(std::ostream& os, const CosetSpace& space, const OrbitalGraph& graph) {
  for (std::uint32_t u = 0; u < graph.vertex_count(); ++u)
    for (auto v : graph.neighbors(u))
      if (u < v) os << space.to_string(space.point(u)) << ' ' << space.to_string(space.point(v)) << '\n';
}

inline void write_dot(std::ostream& os, const CosetSpace& space, const OrbitalGraph& graph) {
  os << "graph \"Y";
  for (auto i : graph.orbitals()) os << i;
  os << "\" {\n";
  for (std::uint32_t u = 0; u < graph.vertex_count(); ++u)
    os << "  \"" << space.to_string(space.point(u)) << "\";\n";
  for (std::uint32_t u = 0; u < graph.vertex_count(); ++u)
    for (auto v : graph.neighbors(u))
      if (u < v)
        os << "  \"" << space.to_string(space.point(u)) << "\" -- \"" << space.to_string(space.point(v)) << "\";\n";
  os << "}\n";
}

}  // namespace hamlift
