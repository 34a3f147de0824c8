#pragma once

// Walks up to elementary moves: triangle and dead-end insertions/removals,
// a bounded search for null-homotopy certificates, and the transport of
// closed walks from kG down to G.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/covering.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MoveKind { triangle_insert, triangle_remove, deadend_insert, deadend_remove };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::triangle_insert: return "triangle_insert";
    case MoveKind::triangle_remove: return "triangle_remove";
    case MoveKind::deadend_insert: return "deadend_insert";
    case MoveKind::deadend_remove: return "deadend_remove";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::triangle_insert, MoveKind::triangle_remove, MoveKind::deadend_insert,
                 MoveKind::deadend_remove})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

/// Position semantics:
///   triangle_remove i  drops w[i] when w[i-1], w[i], w[i+1] form a triangle;
///   triangle_insert i  puts v between w[i] and w[i+1], v adjacent to both;
///   deadend_remove  i  drops w[i], w[i+1] when w[i-1] == w[i+1];
///   deadend_insert  i  puts v, w[i] right after w[i], v adjacent to w[i].
struct ElementaryMove {
  MoveKind kind;
  std::size_t position = 0;
  std::optional<VertexId> inserted_vertex;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

inline bool is_walk(const Graph& g, const Walk& w) {
  if (w.empty()) return false;
  for (VertexId v : w)
    if (!g.valid(v)) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!g.adjacent(w[i - 1], w[i])) return false;
  return true;
}

inline bool is_closed(const Walk& w) { return !w.empty() && w.front() == w.back(); }

inline Walk apply_move(const Graph& g, const Walk& w, const ElementaryMove& m) {
  const std::size_t i = m.position;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw MoveError(std::string(to_string(m.kind)) + " at " + std::to_string(i) + ": " + what);
  };
  Walk out = w;
  switch (m.kind) {
    case MoveKind::triangle_remove:
      need(i >= 1 && i + 1 < w.size(), "position must be an inner index");
      need(g.adjacent(w[i - 1], w[i]) && g.adjacent(w[i], w[i + 1]) && g.adjacent(w[i - 1], w[i + 1]),
           "w[i-1], w[i], w[i+1] are not pairwise adjacent");
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    case MoveKind::triangle_insert: {
      need(i + 1 < w.size(), "position must index an edge of the walk");
      need(m.inserted_vertex.has_value(), "missing inserted vertex");
      VertexId v = *m.inserted_vertex;
      need(g.valid(v), "inserted vertex out of range");
      need(g.adjacent(w[i], w[i + 1]) && g.adjacent(v, w[i]) && g.adjacent(v, w[i + 1]),
           "inserted vertex does not span a triangle with the edge");
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
      break;
    }
    case MoveKind::deadend_remove:
      need(i >= 1 && i + 1 < w.size(), "position must be an inner index");
      need(w[i - 1] == w[i + 1], "w[i-1] != w[i+1]");
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    case MoveKind::deadend_insert: {
      need(i < w.size(), "position out of range");
      need(m.inserted_vertex.has_value(), "missing inserted vertex");
      VertexId v = *m.inserted_vertex;
      need(g.valid(v) && g.adjacent(v, w[i]), "inserted vertex is not adjacent to w[i]");
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 1), {v, w[i]});
      break;
    }
  }
  return out;
}

inline Walk apply_moves(const Graph& g, Walk w, const std::vector<ElementaryMove>& moves) {
  for (const auto& m : moves) w = apply_move(g, w, m);
  return w;
}

/// Every move applicable to w, removals first.
inline std::vector<ElementaryMove> applicable_moves(const Graph& g, const Walk& w, bool with_insertions) {
  std::vector<ElementaryMove> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] == w[i + 1]) out.push_back({MoveKind::deadend_remove, i, std::nullopt});
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] != w[i + 1] && g.adjacent(w[i - 1], w[i + 1]))
      out.push_back({MoveKind::triangle_remove, i, std::nullopt});
  if (!with_insertions) return out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    for (VertexId v : common_neighbours(g, w[i], w[i + 1]))
      out.push_back({MoveKind::triangle_insert, i, v});
  for (std::size_t i = 0; i < w.size(); ++i)
    for (VertexId v : g.neighbours(w[i])) out.push_back({MoveKind::deadend_insert, i, v});
  return out;
}

struct ReduceOptions {
  std::size_t budget = 100'000;  // expanded search nodes
  std::size_t extra_length = 6;  // how far above the greedy length the search may grow
};

struct ReduceResult {
  bool trivial = false;
  Walk final;
  std::vector<ElementaryMove> moves;  // certificate: applied in order to the input
  std::size_t expanded = 0;
  bool budget_exhausted = false;
};

/// Semi-decision for null-homotopy of a closed walk: greedy removals, then a
/// best-first search ordered by (length, lexicographic walk) with memoised
/// states. Returns a certificate when the one-vertex walk is reached.
inline ReduceResult reduce_walk(const Graph& g, const Walk& w, ReduceOptions opts = {}) {
  if (!is_walk(g, w)) throw MoveError("input is not a walk of the graph");
  if (!is_closed(w)) throw MoveError("input walk is not closed");

  ReduceResult result;
  Walk cur = w;
  for (bool changed = true; changed;) {
    changed = false;
    auto moves = applicable_moves(g, cur, false);
    if (!moves.empty()) {
      cur = apply_move(g, cur, moves.front());
      result.moves.push_back(moves.front());
      changed = true;
    }
  }
  if (cur.size() == 1) {
    result.trivial = true;
    result.final = cur;
    return result;
  }

  struct Node {
    Walk walk;
    std::size_t parent;
    ElementaryMove move;
  };
  std::vector<Node> nodes{{cur, 0, {}}};
  std::unordered_map<Walk, std::size_t, VertexSetHash> seen{{cur, 0}};
  auto worse = [&](std::size_t a, std::size_t b) {
    const Walk& x = nodes[a].walk;
    const Walk& y = nodes[b].walk;
    if (x.size() != y.size()) return x.size() > y.size();
    return x > y;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
  open.push(0);
  const std::size_t max_len = cur.size() + opts.extra_length;
  std::size_t best = 0;
  std::optional<std::size_t> goal;

  while (!open.empty()) {
    if (result.expanded >= opts.budget) {
      result.budget_exhausted = true;
      break;
    }
    std::size_t id = open.top();
    open.pop();
    ++result.expanded;
    Walk here = nodes[id].walk;
    for (const auto& m : applicable_moves(g, here, true)) {
      Walk next = apply_move(g, here, m);
      if (next.size() > max_len || seen.count(next)) continue;
      nodes.push_back({next, id, m});
      std::size_t nid = nodes.size() - 1;
      seen.emplace(std::move(next), nid);
      if (nodes[nid].walk.size() < nodes[best].walk.size() ||
          (nodes[nid].walk.size() == nodes[best].walk.size() && nodes[nid].walk < nodes[best].walk))
        best = nid;
      if (nodes[nid].walk.size() == 1) {
        goal = nid;
        break;
      }
      open.push(nid);
    }
    if (goal) break;
  }

  std::size_t end = goal ? *goal : best;
  std::vector<ElementaryMove> tail;
  for (std::size_t at = end; at != 0; at = nodes[at].parent) tail.push_back(nodes[at].move);
  result.moves.insert(result.moves.end(), tail.rbegin(), tail.rend());
  result.final = nodes[end].walk;
  result.trivial = result.final.size() == 1;
  return result;
}

/// Transports a closed walk Q_0, ..., Q_l of kG to G: w_i is the least vertex
/// of Q_{i-1} & Q_i, the walk is closed with w_1, and consecutive repeats are
/// dropped. Each step stays inside a single clique.
inline Walk corresponding_walk(const CliqueGraphResult& kg, const Walk& w) {
  if (!is_walk(kg.graph, w)) throw MoveError("input is not a walk of the clique graph");
  if (!is_closed(w)) throw MoveError("input walk is not closed");
  if (w.size() == 1) return Walk{kg.membership[w[0]].front()};
  Walk picks;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Clique& a = kg.membership[w[i - 1]];
    const Clique& b = kg.membership[w[i]];
    VertexSet meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    picks.push_back(meet.front());
  }
  picks.push_back(picks.front());
  Walk out;
  for (VertexId v : picks)
    if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

}  // namespace cliquedyn
