#pragma once

// Maximal cliques, the clique graph operator k and its iterates, and the
// structures k inherits from group actions and covering maps.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquedyn/covering.hpp"
#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"
#include "cliquedyn/parallel.hpp"

namespace cliquedyn {

using Clique = VertexSet;

inline constexpr std::size_t kDefaultVertexBudget = 2'000'000;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (VertexId v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// Lookup from a sorted vertex set to its position in a list.
class SetIndex {
 public:
  SetIndex() = default;
  explicit SetIndex(const std::vector<VertexSet>& sets) {
    map_.reserve(sets.size());
    for (VertexId i = 0; i < sets.size(); ++i) map_.emplace(sets[i], i);
  }
  std::optional<VertexId> find(const VertexSet& s) const {
    auto it = map_.find(s);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::unordered_map<VertexSet, VertexId, VertexSetHash> map_;
};

namespace detail {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::atomic<std::size_t>& found, std::size_t limit)
      : g_(g), found_(found), limit_(limit) {}

  bool aborted() const { return aborted_; }
  std::vector<Clique>& out() { return out_; }

  void run(VertexSet& r, VertexSet p, VertexSet x) {
    if (aborted_) return;
    if (p.empty()) {
      if (x.empty()) emit(r);
      return;
    }
    // Pivot: maximises |N(u) & P| over P u X, lowest id on ties.
    VertexId pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](VertexId u) {
      std::size_t c = intersection_size(g_.neighbours(u), p);
      if (!have || c > best || (c == best && u < pivot)) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    for (VertexId u : p) consider(u);
    for (VertexId u : x) consider(u);

    VertexSet branch;
    auto pn = g_.neighbours(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(branch));
    for (VertexId v : branch) {
      auto nv = g_.neighbours(v);
      VertexSet p2, x2;
      std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(), std::back_inserter(p2));
      std::set_intersection(x.begin(), x.end(), nv.begin(), nv.end(), std::back_inserter(x2));
      r.push_back(v);
      run(r, std::move(p2), std::move(x2));
      r.pop_back();
      if (aborted_) return;
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

 private:
  static std::size_t intersection_size(std::span<const VertexId> a, const VertexSet& b) {
    std::size_t c = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else {
        ++c;
        ++i;
        ++j;
      }
    }
    return c;
  }

  void emit(const VertexSet& r) {
    if (found_.fetch_add(1) >= limit_) {
      aborted_ = true;
      return;
    }
    Clique c = r;
    std::sort(c.begin(), c.end());
    out_.push_back(std::move(c));
  }

  const Graph& g_;
  std::atomic<std::size_t>& found_;
  std::size_t limit_;
  bool aborted_ = false;
  std::vector<Clique> out_;
};

/// Degeneracy ordering by repeated removal of a minimum-degree vertex
/// (bucket queue, ties by lowest id).
inline std::vector<VertexId> degeneracy_order(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::size_t maxd = 0;
  for (VertexId v = 0; v < n; ++v) maxd = std::max(maxd, deg[v] = g.degree(v));
  std::vector<std::vector<VertexId>> buckets(maxd + 1);
  for (VertexId v = n; v-- > 0;) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = std::min(d, maxd);
    while (buckets[d].empty()) ++d;
    VertexId v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || deg[v] != d) continue;  // stale entry
    removed[v] = 1;
    order.push_back(v);
    for (VertexId w : g.neighbours(v))
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
        if (deg[w] < d) d = deg[w];
      }
  }
  return order;
}

}  // namespace detail

struct CliqueEnumeration {
  std::vector<Clique> cliques;  // sorted lexicographically
  bool budget_hit = false;
};

/// All maximal cliques, stopping once more than `limit` have been found.
inline CliqueEnumeration enumerate_max_cliques(const Graph& g,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  auto order = detail::degeneracy_order(g);
  std::vector<std::size_t> rank(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::atomic<std::size_t> found{0};
  std::vector<std::vector<Clique>> parts(chunk_count(order.size()));
  std::vector<char> aborted(parts.size(), 0);
  parallel_chunks(order.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    detail::BronKerbosch bk(g, found, limit);
    VertexSet r;
    for (std::size_t i = begin; i < end && !bk.aborted(); ++i) {
      VertexId v = order[i];
      VertexSet p, x;
      for (VertexId w : g.neighbours(v)) (rank[w] > i ? p : x).push_back(w);
      r.assign(1, v);
      bk.run(r, std::move(p), std::move(x));
    }
    parts[chunk] = std::move(bk.out());
    aborted[chunk] = bk.aborted();
  });

  CliqueEnumeration result;
  for (auto& part : parts)
    for (auto& c : part) result.cliques.push_back(std::move(c));
  result.budget_hit = std::any_of(aborted.begin(), aborted.end(), [](char a) { return a != 0; });
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

inline std::vector<Clique> max_cliques(const Graph& g) { return enumerate_max_cliques(g).cliques; }

struct CliqueGraphResult {
  Graph graph;                    // vertex i is membership[i]
  std::vector<Clique> membership;
};

/// Intersection graph on the given vertex sets.
inline Graph intersection_graph(std::size_t host_vertices, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<VertexId>> containing(host_vertices);
  for (VertexId i = 0; i < sets.size(); ++i)
    for (VertexId v : sets[i]) containing[v].push_back(i);
  std::vector<Edge> edges;
  for (const auto& list : containing)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
  return Graph::from_edges(sets.size(), edges);
}

inline CliqueGraphResult clique_graph_from(const Graph& g, std::vector<Clique> cliques) {
  CliqueGraphResult out;
  out.graph = intersection_graph(g.vertex_count(), cliques);
  out.membership = std::move(cliques);
  return out;
}

inline CliqueGraphResult clique_graph(const Graph& g) { return clique_graph_from(g, max_cliques(g)); }

struct IterationResult {
  std::vector<CliqueGraphResult> levels;  // levels[i] is k^{i+1} G
  bool budget_hit = false;
};

/// k G, ..., k^n G. Stops early, flagging the result, when a level would
/// exceed `vertex_budget` vertices; completed levels are kept.
inline IterationResult iterate_clique_graph(const Graph& g, std::size_t n,
                                            std::size_t vertex_budget = kDefaultVertexBudget) {
  IterationResult result;
  const Graph* current = &g;
  for (std::size_t level = 1; level <= n; ++level) {
    auto e = enumerate_max_cliques(*current, vertex_budget);
    if (e.budget_hit) {
      result.budget_hit = true;
      break;
    }
    result.levels.push_back(clique_graph_from(*current, std::move(e.cliques)));
    current = &result.levels.back().graph;
  }
  return result;
}

inline std::optional<Permutation> induced_clique_permutation(const Permutation& gamma,
                                                             const std::vector<Clique>& cliques,
                                                             const SetIndex& index) {
  Permutation out(cliques.size());
  VertexSet image;
  for (VertexId i = 0; i < cliques.size(); ++i) {
    image.clear();
    for (VertexId v : cliques[i]) image.push_back(gamma.at(v));
    std::sort(image.begin(), image.end());
    auto j = index.find(image);
    if (!j) return std::nullopt;
    out[i] = *j;
  }
  return out;
}

/// The action gamma Q = {gamma v : v in Q} on the clique graph.
inline GroupAction induced_clique_action(const GroupAction& action, const CliqueGraphResult& kg) {
  SetIndex index(kg.membership);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < action.generators().size(); ++i) {
    auto p = induced_clique_permutation(action.generators()[i], kg.membership, index);
    if (!p)
      throw ActionError("generator " + std::to_string(i) +
                        " maps a clique to a non-clique; it is not an automorphism");
    gens.push_back(std::move(*p));
  }
  return GroupAction(kg.graph.vertex_count(), std::move(gens));
}

/// p_k(Q) = {p(v) : v in Q}. When p carries a domain, p_k's domain is the set
/// of cliques whose vertices and all their neighbours lie in p's domain.
inline CoveringMap map_pk(const CoveringMap& p, const CliqueGraphResult& kg_cover,
                          const CliqueGraphResult& kg_base) {
  SetIndex index(kg_base.membership);
  CoveringMap out{kg_cover.graph, kg_base.graph, {}, std::nullopt};
  out.vertex_map.resize(kg_cover.membership.size());
  VertexSet domain;
  VertexSet image;
  for (VertexId i = 0; i < kg_cover.membership.size(); ++i) {
    const Clique& q = kg_cover.membership[i];
    bool inside = true;
    if (p.domain)
      for (VertexId v : q) {
        if (!p.in_domain(v)) inside = false;
        for (VertexId w : p.source.neighbours(v))
          if (!p.in_domain(w)) inside = false;
      }
    image.clear();
    for (VertexId v : q) image.push_back(p.vertex_map.at(v));
    std::sort(image.begin(), image.end());
    auto j = index.find(image);
    if (!j) {
      if (p.domain && !inside) {
        out.vertex_map[i] = 0;  // outside the validated region; left unchecked
        continue;
      }
      throw CoverError("image of clique " + std::to_string(i) + " is not a maximal clique of the base");
    }
    out.vertex_map[i] = *j;
    if (inside) domain.push_back(i);
  }
  if (p.domain) out.domain = std::move(domain);
  return out;
}

}  // namespace cliquedyn
