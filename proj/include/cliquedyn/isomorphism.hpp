#pragma once

// Isomorphism testing for desk-scale graphs: joint colour refinement with
// individualisation, plus an equivariant variant for graphs with group
// actions. Every witness is re-checked before it is returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"

namespace cliquedyn {

class IsoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kIsoSizeCap = 100'000;

struct IsoWitness {
  std::vector<VertexId> bijection;  // source vertex -> target vertex
};

/// Bijection check: adjacency preserved in both directions.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& f) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (!is_permutation_of(f, h.vertex_count())) return false;
  for (const auto& [u, v] : g.edges())
    if (!h.adjacent(f[u], f[v])) return false;
  return true;  // injective on a same-size edge set, so onto as well
}

namespace detail {

/// Colour refinement on the disjoint union of g (ids 0..n-1) and h (ids n..2n-1).
class JointRefiner {
 public:
  JointRefiner(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.vertex_count()) {}

  std::size_t size() const { return 2 * n_; }

  std::span<const VertexId> neighbours(VertexId x) const {
    return x < n_ ? g_.neighbours(x) : h_.neighbours(x - static_cast<VertexId>(n_));
  }
  VertexId offset(VertexId x, bool in_h) const { return in_h ? x + static_cast<VertexId>(n_) : x; }

  /// Refines to the coarsest equitable colouring; colours are renumbered
  /// canonically so both halves get comparable ids.
  void refine(std::vector<std::uint32_t>& colour) const {
    std::size_t classes = count(colour);
    std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> sig(size());
    while (true) {
      for (VertexId x = 0; x < size(); ++x) {
        auto& s = sig[x].first;
        s.clear();
        s.push_back(colour[x]);
        for (VertexId y : neighbours(x)) s.push_back(colour[offset(y, x >= n_)]);
        std::sort(s.begin() + 1, s.end());
        sig[x].second = x;
      }
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      for (const auto& [s, x] : sig) ids.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (VertexId x = 0; x < size(); ++x) colour[x] = ids[sig[x].first];
      std::size_t now = ids.size();
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count(const std::vector<std::uint32_t>& colour) {
    std::vector<std::uint32_t> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  /// Class sizes agree on both halves.
  bool balanced(const std::vector<std::uint32_t>& colour) const {
    std::map<std::uint32_t, std::int64_t> diff;
    for (VertexId x = 0; x < size(); ++x) diff[colour[x]] += x < n_ ? 1 : -1;
    for (const auto& [c, d] : diff)
      if (d != 0) return false;
    return true;
  }

  std::size_t n() const { return n_; }

 private:
  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
};

inline std::optional<std::vector<VertexId>> search(const JointRefiner& jr, const Graph& g, const Graph& h,
                                                   std::vector<std::uint32_t> colour) {
  jr.refine(colour);
  if (!jr.balanced(colour)) return std::nullopt;
  const std::size_t n = jr.n();
  // Smallest non-singleton class, lowest colour id on ties.
  std::map<std::uint32_t, std::size_t> size;
  for (VertexId x = 0; x < n; ++x) ++size[colour[x]];
  std::optional<std::uint32_t> pick;
  for (const auto& [c, s] : size)
    if (s > 1 && (!pick || s < size[*pick])) pick = c;
  if (!pick) {
    std::vector<VertexId> f(n);
    std::vector<VertexId> of_colour(jr.size(), kUnreachable);
    for (VertexId y = 0; y < n; ++y) of_colour[colour[y + n]] = y;
    for (VertexId x = 0; x < n; ++x) f[x] = of_colour[colour[x]];
    if (is_isomorphism(g, h, f)) return f;
    return std::nullopt;
  }
  VertexId v = 0;
  while (colour[v] != *pick) ++v;
  const std::uint32_t fresh = static_cast<std::uint32_t>(jr.size());
  for (VertexId w = 0; w < n; ++w) {
    if (colour[w + n] != *pick) continue;
    auto next = colour;
    next[v] = fresh;
    next[w + n] = fresh;
    if (auto f = search(jr, g, h, std::move(next))) return f;
  }
  return std::nullopt;
}

}  // namespace detail

/// Deterministic isomorphism search; nullopt is a definitive negative.
inline std::optional<IsoWitness> are_isomorphic(const Graph& g, const Graph& h, std::size_t cap = kIsoSizeCap) {
  if (g.vertex_count() > cap || h.vertex_count() > cap)
    throw IsoError("graph exceeds the isomorphism size cap of " + std::to_string(cap) + " vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.vertex_count() == 0) return IsoWitness{};
  detail::JointRefiner jr(g, h);
  std::vector<std::uint32_t> colour(jr.size());
  for (VertexId x = 0; x < jr.size(); ++x) colour[x] = static_cast<std::uint32_t>(jr.neighbours(x).size());
  auto f = detail::search(jr, g, h, std::move(colour));
  if (!f) return std::nullopt;
  return IsoWitness{std::move(*f)};
}

/// phi(gamma_i v) = gamma'_i phi(v) for every paired generator i.
inline bool is_equivariant(const std::vector<VertexId>& f, const GroupAction& ag, const GroupAction& ah) {
  if (ag.generators().size() != ah.generators().size()) return false;
  for (std::size_t i = 0; i < ag.generators().size(); ++i)
    for (VertexId v = 0; v < f.size(); ++v)
      if (f[ag.generators()[i][v]] != ah.generators()[i][f[v]]) return false;
  return true;
}

namespace detail {

class GammaSearch {
 public:
  GammaSearch(const Graph& g, const Graph& h, const GroupAction& ag, const GroupAction& ah,
              std::vector<std::uint32_t> colour)
      : g_(g), h_(h), n_(g.vertex_count()), colour_(std::move(colour)) {
    for (std::size_t i = 0; i < ag.generators().size(); ++i) {
      gens_g_.push_back(ag.generators()[i]);
      gens_h_.push_back(ah.generators()[i]);
      gens_g_.push_back(inverse(ag.generators()[i]));
      gens_h_.push_back(inverse(ah.generators()[i]));
    }
    f_.assign(n_, kUnreachable);
    finv_.assign(n_, kUnreachable);
  }

  std::optional<std::vector<VertexId>> run() {
    if (solve(0)) return f_;
    return std::nullopt;
  }

 private:
  bool assign(VertexId v, VertexId w, std::vector<VertexId>& trail) {
    std::vector<std::pair<VertexId, VertexId>> queue{{v, w}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [x, y] = queue[head];
      if (f_[x] != kUnreachable) {
        if (f_[x] != y) return false;
        continue;
      }
      if (finv_[y] != kUnreachable) return false;
      if (colour_[x] != colour_[y + n_]) return false;
      for (VertexId u : g_.neighbours(x))
        if (f_[u] != kUnreachable && !h_.adjacent(y, f_[u])) return false;
      std::size_t mapped_nb = 0, mapped_nb_h = 0;
      for (VertexId u : g_.neighbours(x)) mapped_nb += f_[u] != kUnreachable;
      for (VertexId z : h_.neighbours(y)) mapped_nb_h += finv_[z] != kUnreachable;
      if (mapped_nb != mapped_nb_h) return false;
      f_[x] = y;
      finv_[y] = x;
      trail.push_back(x);
      for (std::size_t i = 0; i < gens_g_.size(); ++i) queue.emplace_back(gens_g_[i][x], gens_h_[i][y]);
    }
    return true;
  }

  void undo(std::vector<VertexId>& trail) {
    for (VertexId x : trail) {
      finv_[f_[x]] = kUnreachable;
      f_[x] = kUnreachable;
    }
    trail.clear();
  }

  bool solve(VertexId from) {
    VertexId v = from;
    while (v < n_ && f_[v] != kUnreachable) ++v;
    if (v == n_) return true;
    // Prefer a vertex adjacent to the mapped part: it has few candidates.
    std::vector<VertexId> candidates;
    std::optional<VertexId> anchor;
    for (VertexId u : g_.neighbours(v))
      if (f_[u] != kUnreachable) {
        anchor = u;
        break;
      }
    if (anchor)
      for (VertexId z : h_.neighbours(f_[*anchor])) candidates.push_back(z);
    else
      for (VertexId z = 0; z < n_; ++z) candidates.push_back(z);
    for (VertexId w : candidates) {
      if (finv_[w] != kUnreachable || colour_[v] != colour_[w + n_]) continue;
      std::vector<VertexId> trail;
      if (assign(v, w, trail) && solve(v + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
  std::vector<std::uint32_t> colour_;
  std::vector<Permutation> gens_g_, gens_h_;
  std::vector<VertexId> f_, finv_;
};

}  // namespace detail

/// Isomorphism commuting with paired generators. nullopt means none exists.
inline std::optional<IsoWitness> are_gamma_isomorphic(const Graph& g, const Graph& h, const GroupAction& ag,
                                                      const GroupAction& ah, std::size_t cap = kIsoSizeCap) {
  if (g.vertex_count() > cap || h.vertex_count() > cap)
    throw IsoError("graph exceeds the isomorphism size cap of " + std::to_string(cap) + " vertices");
  if (ag.vertex_count() != g.vertex_count() || ah.vertex_count() != h.vertex_count())
    throw IsoError("actions do not match the graphs");
  if (ag.generators().size() != ah.generators().size())
    throw IsoError("generator lists must be paired one to one");
  if (ag.generators().empty()) return are_isomorphic(g, h, cap);
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  detail::JointRefiner jr(g, h);
  std::vector<std::uint32_t> colour(jr.size());
  for (VertexId x = 0; x < jr.size(); ++x) colour[x] = static_cast<std::uint32_t>(jr.neighbours(x).size());
  jr.refine(colour);
  if (!jr.balanced(colour)) return std::nullopt;
  detail::GammaSearch search(g, h, ag, ah, std::move(colour));
  auto f = search.run();
  if (!f || !is_isomorphism(g, h, *f) || !is_equivariant(*f, ag, ah)) return std::nullopt;
  return IsoWitness{std::move(*f)};
}

}  // namespace cliquedyn
