#pragma once

// Batch front end: a validated RunConfig in, artifact text out. The tool in
// tools/ only parses flags; everything else happens here so it can be tested.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliquedyn/cliquedyn.hpp"
#include "cliquedyn/io.hpp"

namespace cliquedyn::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCsvVersion = "1";

enum class Status : int { ok = 0, verification_failed = 1, bad_input = 2 };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  // generate
  std::string kind;                       // torus | window | cone | delta | octahedron | icosahedron
  std::vector<std::int64_t> basis;        // a1 a2 b1 b2 (axial)
  std::vector<std::int64_t> center{0, 0, 0};
  std::uint32_t degree = 7;
  std::uint32_t side = 0;
  // inputs
  std::string host;
  std::string torus;
  std::string action;
  std::string walk;
  // numeric parameters
  std::uint32_t level = 0;
  std::uint32_t radius = 0;
  std::uint32_t margin = kClassifyMargin;
  std::uint32_t base = 0;
  std::size_t budget = 100'000;
  std::size_t vertex_budget = kDefaultVertexBudget;
  std::string probes = "central";         // central | all | sample
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  // outputs
  std::string out;                        // main artifact; stdout when empty
  std::string witness;                    // verify-structure witness file
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"generate", "iterate",       "geoclique",        "census",   "invariant-D",
                                          "cover",    "quotient",      "reduce",           "verify-structure",
                                          "verify-C"};
  return c;
}

inline Json config_echo(const RunConfig& c) {
  Json j{{"command", c.command}, {"tool_version", kToolVersion}};
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  put("kind", c.kind);
  put("host", c.host);
  put("torus", c.torus);
  put("action", c.action);
  put("walk", c.walk);
  if (!c.basis.empty()) j["basis"] = c.basis;
  j["level"] = c.level;
  j["radius"] = c.radius;
  j["margin"] = c.margin;
  j["budget"] = c.budget;
  j["vertex_budget"] = c.vertex_budget;
  j["probes"] = c.probes;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  return j;
}

/// Rejects inconsistent parameters before any work starts.
inline void validate(const RunConfig& c) {
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end())
    throw ConfigError("unknown command '" + c.command + "'");
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(c.command + ": " + msg);
  };
  if (c.command == "generate") {
    static const std::vector<std::string> kinds{"torus", "window", "cone", "delta", "octahedron", "icosahedron"};
    need(std::find(kinds.begin(), kinds.end(), c.kind) != kinds.end(), "unknown kind '" + c.kind + "'");
    if (c.kind == "torus") need(c.basis.size() == 4, "--basis needs four integers a1 a2 b1 b2");
    if (c.kind == "window") need(c.center.size() == 3, "--center needs three integers");
    if (c.kind == "cone") need(c.degree >= 6 && c.radius >= 1, "cone needs --degree >= 6 and --radius >= 1");
    return;
  }
  if (c.command == "verify-structure") {
    need(!c.torus.empty() || c.basis.size() == 4, "needs --torus spec.json or --basis a1 a2 b1 b2");
    need(c.level >= 1, "--level must be >= 1");
    return;
  }
  need(!c.host.empty(), "--host is required");
  if (c.command == "quotient") need(!c.action.empty(), "--action is required");
  if (c.command == "reduce") need(!c.walk.empty(), "--walk is required");
  if (c.command == "cover") need(c.radius >= 1, "--radius must be >= 1");
  if (c.command == "verify-C") need(c.level >= 1, "--level must be >= 1 (checks C_level: G_level -> kG_{level-1})");
  if (c.command == "invariant-D")
    need(c.probes == "central" || c.probes == "all" || c.probes == "sample", "--probes must be central, all or sample");
}

namespace detail {

inline Graph load_host(const RunConfig& c) { return graph_from_json(read_json_file(c.host)); }

inline TorusSpec torus_from_config(const RunConfig& c) {
  if (!c.torus.empty()) return torus_spec_from_json(read_json_file(c.torus));
  return {{c.basis[0], c.basis[1]}, {c.basis[2], c.basis[3]}};
}

inline Json side_counts(const GeoCliqueGraph& g) {
  Json j = Json::object();
  for (std::uint32_t m = 0; m <= g.level; ++m)
    if (g.count_of_side(m)) j[std::to_string(m)] = g.count_of_side(m);
  return j;
}

inline std::string profile_string(const std::map<int, std::size_t>& p) {
  std::ostringstream s;
  bool first = true;
  for (auto [t, k] : p) {
    s << (first ? "" : ",") << (t > 0 ? "+" : "") << t << ":" << k;
    first = false;
  }
  return s.str();
}

inline Json census_json(const GeoCliqueGraph& g, const Deg26Census& c) {
  Json by_side = Json::object();
  auto count = [&](const VertexSet& set, const char* key) {
    for (VertexId s : set) {
      auto& e = by_side[std::to_string(g.shapes[s].side)];
      if (!e.contains("deg26")) e = {{"deg26", 0}, {"not26", 0}, {"excluded", 0}};
      e[key] = e[key].get<std::size_t>() + 1;
    }
  };
  count(c.deg26, "deg26");
  count(c.not26, "not26");
  count(c.excluded, "excluded");
  return {{"margin", c.boundary_margin},
          {"deg26", c.deg26.size()},
          {"not26", c.not26.size()},
          {"excluded", c.excluded.size()},
          {"by_side", by_side}};
}

inline Json violations_json(const GeoCliqueGraph& g, const std::vector<LemmaViolation>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back({{"shape", x.shape}, {"side", g.shapes[x.shape].side}, {"what", x.what}});
  return a;
}

/// Classifiable shapes of side closest to level/2 (matching parity), deepest first.
inline VertexSet central_probe(const GeoCliqueGraph& g, std::uint32_t margin) {
  std::uint32_t want = g.level / 2;
  if (want % 2 != g.level % 2) ++want;
  std::optional<VertexId> best;
  for (VertexId s = 0; s < g.shapes.size(); ++s) {
    if (!g.classifiable(s, margin)) continue;
    auto gap = [&](VertexId x) {
      std::int64_t d = static_cast<std::int64_t>(g.shapes[x].side) - want;
      return d < 0 ? -d : d;
    };
    auto depth = [&](VertexId x) {
      return g.rim_distance[x] == kUnreachable ? std::int64_t{1} << 40 : std::int64_t{g.rim_distance[x]};
    };
    if (!best || gap(s) < gap(*best) || (gap(s) == gap(*best) && depth(s) > depth(*best))) best = s;
  }
  return best ? VertexSet{*best} : VertexSet{};
}

inline std::string iterate_csv(const Graph& g, const IterationResult& r) {
  std::ostringstream out;
  out << "# cliquedyn iterate csv v" << kCsvVersion << "\n";
  out << "level,n_vertices,n_edges,max_degree,budget_hit\n";
  out << 0 << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << g.max_degree() << ",0\n";
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    const Graph& h = r.levels[i].graph;
    out << i + 1 << ',' << h.vertex_count() << ',' << h.edge_count() << ',' << h.max_degree() << ",0\n";
  }
  if (r.budget_hit) out << r.levels.size() + 1 << ",,,,1\n";
  return out.str();
}

}  // namespace detail

struct RunResult {
  Status status = Status::ok;
  std::string artifact;   // written to config.out, or stdout
  std::string message;    // one-line summary for stderr
};

/// Executes one command. Input problems surface as exceptions from the
/// library and are mapped to bad_input by run().
inline RunResult execute(const RunConfig& c) {
  RunResult r;
  Json report{{"config", config_echo(c)}};
  const std::string& cmd = c.command;

  if (cmd == "generate") {
    Graph g;
    if (c.kind == "torus") g = torus_graph({{c.basis[0], c.basis[1]}, {c.basis[2], c.basis[3]}}).graph;
    else if (c.kind == "window") g = hex_window({{c.center[0], c.center[1], c.center[2]}, c.radius});
    else if (c.kind == "cone") g = cone_lattice(c.degree, c.radius);
    else if (c.kind == "delta") g = delta_host(c.side);
    else if (c.kind == "octahedron") g = octahedron();
    else g = icosahedron();
    r.artifact = dump(graph_to_json(g));
    r.message = c.kind + ": " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                " edges";
    return r;
  }

  if (cmd == "verify-structure") {
    Torus t = torus_graph(detail::torus_from_config(c));
    auto s = verify_structure(t, c.level, c.vertex_budget);
    const bool pass = s.pass();
    if (!c.witness.empty()) {
      Json w{{"config", config_echo(c)}, {"pass", pass}};
      if (s.witness) w["bijection"] = s.witness->bijection;
      write_text_file(c.witness, dump(w));
    }
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " verify-structure level=" << c.level << " k^n T: " << s.iterate_vertices
        << " vertices/" << s.iterate_edges << " edges; shape quotient (window radius " << s.window_radius
        << "): " << s.quotient_vertices << " vertices/" << s.quotient_edges << " edges"
        << (s.budget_hit ? "; vertex budget hit" : "") << "\n";
    r.artifact = out.str();
    r.status = pass ? Status::ok : Status::verification_failed;
    r.message = pass ? "PASS" : "FAIL";
    return r;
  }

  Graph host = detail::load_host(c);

  if (cmd == "iterate") {
    auto it = iterate_clique_graph(host, c.level, c.vertex_budget);
    r.artifact = detail::iterate_csv(host, it);
    r.message = std::to_string(it.levels.size()) + " levels" + (it.budget_hit ? " (budget hit)" : "");
    return r;
  }

  if (cmd == "geoclique" || cmd == "census" || cmd == "invariant-D") {
    auto g = geo_clique_graph(host, c.level);
    if (cmd == "geoclique") {
      std::map<std::size_t, std::size_t> hist;
      for (VertexId s = 0; s < g.shapes.size(); ++s) ++hist[g.graph.degree(s)];
      Json h = Json::object();
      for (auto [d, k] : hist) h[std::to_string(d)] = k;
      std::map<std::uint32_t, std::map<std::string, std::size_t>> profiles;
      for (VertexId s = 0; s < g.shapes.size(); ++s)
        if (g.classifiable(s, c.margin)) ++profiles[g.shapes[s].side][detail::profile_string(neighbour_type_profile(g, s))];
      Json p = Json::object();
      for (auto& [side, m] : profiles) p[std::to_string(side)] = m;
      report["shapes"] = g.shapes.size();
      report["edges"] = g.graph.edge_count();
      report["shape_counts_by_side"] = detail::side_counts(g);
      report["degree_histogram"] = h;
      report["census"] = detail::census_json(g, deg26_census(g, c.margin));
      report["type_profiles_by_side"] = p;
      r.artifact = dump(report);
      r.message = std::to_string(g.shapes.size()) + " shapes";
      return r;
    }
    if (cmd == "census") {
      auto census = deg26_census(g, c.margin);
      report["census"] = detail::census_json(g, census);
      report["degree_bound_violations_side_ge_6"] = detail::violations_json(g, check_degree_bound(g, 6, g.level, c.margin));
      report["degree_bound_violations_side_2_4"] = detail::violations_json(g, check_degree_bound(g, 2, 4, c.margin));
      report["side0_violations"] = detail::violations_json(g, check_vertex_degrees(g, c.margin));
      r.artifact = dump(report);
      r.message = std::to_string(census.not26.size()) + " not-26 shapes";
      return r;
    }
    // invariant-D: bounds use the exact-degree census; probes must be classifiable.
    auto census = deg26_census(g, kExactMargin);
    VertexSet probes;
    if (c.probes == "central") {
      probes = detail::central_probe(g, c.margin);
    } else {
      for (VertexId s = 0; s < g.shapes.size(); ++s)
        if (g.classifiable(s, c.margin)) probes.push_back(s);
      if (c.probes == "sample" && probes.size() > c.samples) {
        std::mt19937_64 rng(c.seed);
        std::shuffle(probes.begin(), probes.end(), rng);
        probes.resize(c.samples);
        std::sort(probes.begin(), probes.end());
      }
    }
    auto d = invariant_D(g, census, probes);
    std::ostringstream out;
    out << "# cliquedyn invariant-D csv v" << kCsvVersion << " level=" << c.level << " margin=" << c.margin
        << " probes=" << c.probes << " seed=" << c.seed << "\n";
    out << "probe,side,upper,lower\n";
    auto cell = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string("inf"); };
    for (const auto& p : d.probes) out << p.probe << ',' << g.shapes[p.probe].side << ',' << cell(p.upper) << ',' << cell(p.lower) << '\n';
    r.artifact = out.str();
    r.message = "max upper " + cell(d.max_upper) + ", max lower " + cell(d.max_lower) + (d.infinite ? " (no not-26 shape)" : "");
    return r;
  }

  if (cmd == "cover") {
    auto dev = develop_universal_cover(host, c.radius, c.base);
    auto check = is_covering_map(dev.projection);
    report["ball_vertices"] = dev.ball.vertex_count();
    report["ball_edges"] = dev.ball.edge_count();
    report["closed"] = dev.closed;
    report["interior_vertices"] = dev.projection.domain ? dev.projection.domain->size() : dev.ball.vertex_count();
    report["covering_check"] = {{"ok", check.ok}, {"restricted_to_interior", check.restricted}, {"reason", check.reason}};
    if (dev.conflict) report["conflict"] = *dev.conflict;
    if (dev.closed) report["closed_cover_isomorphic_to_host"] = are_isomorphic(dev.ball, host).has_value();
    report["ball"] = graph_to_json(dev.ball);
    report["projection"] = dev.projection.vertex_map;
    r.artifact = dump(report);
    r.status = check.ok && !dev.conflict ? Status::ok : Status::verification_failed;
    r.message = std::to_string(dev.ball.vertex_count()) + " developed vertices";
    return r;
  }

  if (cmd == "quotient") {
    auto action = action_from_json(read_json_file(c.action));
    if (auto bad = action.first_non_automorphism(host))
      throw ActionError("generator " + std::to_string(*bad) + " is not an automorphism of the host");
    auto q = quotient_graph(host, action);
    report["quotient"] = graph_to_json(q.quotient);
    report["projection"] = q.projection;
    report["dropped_loops"] = q.dropped_loops;
    report["collapsed_edges"] = q.collapsed_edges;
    r.artifact = dump(report);
    r.message = std::to_string(q.quotient.vertex_count()) + " orbits";
    return r;
  }

  if (cmd == "reduce") {
    Walk w = walk_from_json(read_json_file(c.walk));
    ReduceOptions opts;
    opts.budget = c.budget;
    auto red = reduce_walk(host, w, opts);
    Json moves = Json::array();
    for (const auto& m : red.moves) {
      Json e{{"kind", to_string(m.kind)}, {"position", m.position}};
      if (m.inserted_vertex) e["inserted_vertex"] = *m.inserted_vertex;
      moves.push_back(std::move(e));
    }
    report["trivial"] = red.trivial;
    report["final"] = red.final;
    report["moves"] = moves;
    report["expanded"] = red.expanded;
    report["budget_exhausted"] = red.budget_exhausted;
    r.artifact = dump(report);
    r.message = red.trivial ? "trivial" : "not reduced within budget";
    return r;
  }

  // verify-C
  auto upper = geo_clique_graph(host, c.level);
  auto lower = geo_clique_graph(host, c.level - 1, {false});
  auto kg = clique_graph(lower.graph);
  auto map = explicit_C(upper, lower, host, c.margin);
  auto v = verify_C(map, upper, lower, kg);
  report["checks"] = {{"maximal_cliques", v.maximal_cliques},
                      {"injective", v.injective},
                      {"adjacency", v.adjacency},
                      {"part_sizes", v.part_sizes}};
  report["ok"] = v.ok;
  report["bijective"] = v.bijective;
  report["checked"] = v.checked;
  report["excluded"] = v.excluded;
  report["observed_part_sizes"] = v.observed_part_sizes;
  report["failures"] = v.failures;
  if (v.witness_clique) report["witness_clique"] = *v.witness_clique;
  r.artifact = dump(report);
  r.status = v.ok ? Status::ok : Status::verification_failed;
  r.message = v.ok ? "all four checks pass" : "verification failed";
  return r;
}

/// validate + execute + write. Returns the process exit status.
inline int run(const RunConfig& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    validate(c);
    RunResult r = execute(c);
    if (c.out.empty()) out << r.artifact;
    else write_text_file(c.out, r.artifact);
    if (!r.message.empty()) err << c.command << ": " << r.message << "\n";
    return static_cast<int>(r.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Status::bad_input);
  }
}

}  // namespace cliquedyn::cli
