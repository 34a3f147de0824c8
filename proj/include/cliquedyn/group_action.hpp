#pragma once

// Finitely generated automorphism actions on graphs: orbits, closure,
// quotient graphs.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// A vertex permutation stored as its image table.
using Permutation = std::vector<VertexId>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  return p;
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<VertexId>(i);
  return out;
}

inline bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (VertexId x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (!is_permutation_of(p, g.vertex_count())) return false;
  for (const auto& [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;  // finite + injective on edges => bijective on edges
}

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000;

class GroupAction {
 public:
  GroupAction() = default;
  GroupAction(std::size_t vertex_count, std::vector<Permutation> generators)
      : vertex_count_(vertex_count), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (!is_permutation_of(g, vertex_count_))
        throw ActionError("generator is not a permutation of " + std::to_string(vertex_count_) +
                          " vertices");
  }

  static GroupAction trivial(std::size_t vertex_count) { return GroupAction(vertex_count, {}); }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Index of the first generator that is not an automorphism of g, if any.
  std::optional<std::size_t> first_non_automorphism(const Graph& g) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (!is_automorphism(g, generators_[i])) return i;
    return std::nullopt;
  }

  /// All group elements, identity first, in BFS order over generator words.
  std::vector<Permutation> closure(std::size_t cap = kDefaultClosureCap) const {
    std::vector<Permutation> elements{identity_permutation(vertex_count_)};
    std::set<Permutation> seen(elements.begin(), elements.end());
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& g : generators_) {
        Permutation next = compose(g, elements[head]);
        if (seen.insert(next).second) {
          if (elements.size() >= cap)
            throw ActionError("group closure exceeds cap of " + std::to_string(cap) + " elements");
          elements.push_back(std::move(next));
        }
      }
    }
    return elements;
  }

  /// Orbit id per vertex; orbit ids are numbered by their smallest vertex.
  std::vector<VertexId> orbit_ids() const {
    std::vector<VertexId> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_)
      for (VertexId v = 0; v < vertex_count_; ++v) {
        VertexId a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<VertexId> id(vertex_count_, kUnreachable);
    VertexId next = 0;
    for (VertexId v = 0; v < vertex_count_; ++v) {
      VertexId r = find(v);
      if (id[r] == kUnreachable) id[r] = next++;
      id[v] = id[r];
    }
    return id;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Permutation> generators_;
};

struct QuotientResult {
  Graph quotient;
  std::vector<VertexId> projection;  // vertex -> orbit id
  std::size_t dropped_loops = 0;     // edges inside one orbit
  std::size_t collapsed_edges = 0;   // parallel orbit edges merged
};

/// Orbit graph: orbits adjacent iff they contain adjacent representatives.
inline QuotientResult quotient_graph(const Graph& g, const GroupAction& action,
                                     std::size_t cap = kDefaultClosureCap) {
  if (action.vertex_count() != g.vertex_count())
    throw ActionError("action and graph disagree on vertex count");
  (void)action.closure(cap);  // enforces the cap
  QuotientResult out;
  out.projection = action.orbit_ids();
  std::size_t orbit_count = 0;
  for (VertexId id : out.projection) orbit_count = std::max<std::size_t>(orbit_count, id + 1);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    VertexId a = out.projection[u], b = out.projection[v];
    if (a == b) {
      ++out.dropped_loops;
      continue;
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  auto unique_end = std::unique(edges.begin(), edges.end());
  out.collapsed_edges = static_cast<std::size_t>(edges.end() - unique_end);
  edges.erase(unique_end, edges.end());
  out.quotient = Graph::from_edges(orbit_count, edges);
  return out;
}

}  // namespace cliquedyn
