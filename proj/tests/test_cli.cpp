#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cliquedyn/cli.hpp"
#include "cliquedyn/io.hpp"

using namespace cliquedyn;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("cliquedyn_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text = "") const {
    auto p = (path_ / name).string();
    if (!text.empty()) write_text_file(p, text);
    return p;
  }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_cli(const cli::RunConfig& c) {
  std::ostringstream out, err;
  int s = cli::run(c, out, err);
  return {s, out.str(), err.str()};
}

cli::RunConfig with(const std::string& command) {
  cli::RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST(Io, GraphRoundTripWithLabels) {
  Graph w = hex_window({{0, 0, 0}, 2});
  Json j = graph_to_json(w);
  EXPECT_EQ(j["vertices"], 19);
  EXPECT_TRUE(j["labels"].is_object());
  Graph back = graph_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, w);
  EXPECT_EQ(back.labels(), w.labels());
}

TEST(Io, GraphLoaderNormalises) {
  Graph g = graph_from_json(Json::parse(R"({"vertices": 3, "edges": [[2,1],[0,1],[1,2]], "labels": [[0],[1],[2]]})"));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.label(2), (Label{2}));
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,2]]})")), GraphError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), IoError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0]]})")), IoError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [], "labels": [[0]]})")), IoError);
}

TEST(Io, SpecsActionsAndWalks) {
  TorusSpec t{{5, 0}, {0, 5}};
  EXPECT_EQ(torus_spec_to_json(t), Json::parse(R"({"basis": [[5,0],[0,5]]})"));
  TorusSpec back = torus_spec_from_json(torus_spec_to_json({{4, 2}, {-2, 6}}));
  EXPECT_EQ(back.a.q, 4);
  EXPECT_EQ(back.b.r, 6);
  EXPECT_THROW(torus_spec_from_json(Json::parse(R"({"basis": [[1,2]]})")), IoError);

  WindowSpec w{{1, -1, 0}, 3};
  WindowSpec wb = window_spec_from_json(window_spec_to_json(w));
  EXPECT_EQ(wb.center, w.center);
  EXPECT_EQ(wb.radius, 3u);

  GroupAction a(3, {{1, 2, 0}});
  GroupAction ab = action_from_json(action_to_json(a));
  EXPECT_EQ(ab.generators(), a.generators());
  EXPECT_EQ(action_from_json(Json::parse("[[1,0]]")).vertex_count(), 2u);
  EXPECT_THROW(action_from_json(Json::parse(R"({"generators": [[0,0]]})")), ActionError);

  EXPECT_EQ(walk_from_json(Json::parse("[0,1,0]")), (Walk{0, 1, 0}));
  EXPECT_EQ(walk_from_json(Json::parse(R"({"walk": [4]})")), (Walk{4}));
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), IoError);
}

TEST(Cli, ValidationRejectsBadConfigs) {
  EXPECT_THROW(cli::validate(with("frobnicate")), cli::ConfigError);
  auto g = with("generate");
  g.kind = "torus";
  EXPECT_THROW(cli::validate(g), cli::ConfigError);
  g.basis = {5, 0, 0, 5};
  EXPECT_NO_THROW(cli::validate(g));
  EXPECT_THROW(cli::validate(with("iterate")), cli::ConfigError);
  auto vs = with("verify-structure");
  vs.basis = {5, 0, 0, 5};
  EXPECT_THROW(cli::validate(vs), cli::ConfigError);
  auto inv = with("invariant-D");
  inv.host = "h.json";
  inv.probes = "some";
  EXPECT_THROW(cli::validate(inv), cli::ConfigError);
}

TEST(Cli, GenerateTorus) {
  auto c = with("generate");
  c.kind = "torus";
  c.basis = {5, 0, 0, 5};
  auto r = run_cli(c);
  EXPECT_EQ(r.status, 0);
  Graph g = graph_from_json(Json::parse(r.out));
  EXPECT_EQ(g.vertex_count(), 25u);
  EXPECT_EQ(g.edge_count(), 75u);
}

TEST(Cli, GenerateRejectsBadTorus) {
  auto c = with("generate");
  c.kind = "torus";
  c.basis = {2, 0, 0, 2};
  auto r = run_cli(c);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, IterateCsv) {
  TempDir d;
  auto host = d.file("t.json", dump(graph_to_json(torus_graph({}).graph)));
  auto c = with("iterate");
  c.host = host;
  c.level = 2;
  c.vertex_budget = 100000;
  auto r = run_cli(c);
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string header, cols, l0, l1, l2;
  std::getline(lines, header);
  std::getline(lines, cols);
  std::getline(lines, l0);
  std::getline(lines, l1);
  std::getline(lines, l2);
  EXPECT_EQ(header, "# cliquedyn iterate csv v1");
  EXPECT_EQ(cols, "level,n_vertices,n_edges,max_degree,budget_hit");
  EXPECT_EQ(l0.rfind("0,25,75,6,0", 0), 0u);
  EXPECT_EQ(l1.rfind("1,50,", 0), 0u);
  EXPECT_EQ(l2.rfind("2,", 0), 0u);

  c.vertex_budget = 60;
  auto b = run_cli(c);
  EXPECT_EQ(b.status, 0);
  EXPECT_NE(b.out.find("2,,,,1"), std::string::npos);
}

TEST(Cli, MissingHostFileIsBadInput) {
  auto c = with("iterate");
  c.host = "/nonexistent/host.json";
  c.level = 1;
  EXPECT_EQ(run_cli(c).status, 2);
}

TEST(Cli, GeocliqueCensusAndInvariantD) {
  TempDir d;
  auto host = d.file("w.json", dump(graph_to_json(hex_window({{0, 0, 0}, 14}))));
  auto g = with("geoclique");
  g.host = host;
  g.level = 2;
  auto r = run_cli(g);
  ASSERT_EQ(r.status, 0);
  Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["shape_counts_by_side"]["0"], 631);
  EXPECT_TRUE(rep["type_profiles_by_side"]["0"].contains("0:6,+2:12"));
  EXPECT_EQ(rep["config"]["command"], "geoclique");

  auto cen = with("census");
  cen.host = host;
  cen.level = 2;
  auto cr = run_cli(cen);
  ASSERT_EQ(cr.status, 0);
  EXPECT_TRUE(Json::parse(cr.out)["side0_violations"].empty());

  auto inv = with("invariant-D");
  inv.host = host;
  inv.level = 2;
  inv.probes = "sample";
  inv.samples = 5;
  inv.seed = 9;
  auto a = run_cli(inv);
  auto b = run_cli(inv);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("probe,side,upper,lower"), std::string::npos);
  std::size_t rows = std::count(a.out.begin(), a.out.end(), '\n');
  EXPECT_EQ(rows, 2u + 5u);
}

TEST(Cli, CoverQuotientReduce) {
  TempDir d;
  Torus t = torus_graph({});
  auto host = d.file("t.json", dump(graph_to_json(t.graph)));
  auto cov = with("cover");
  cov.host = host;
  cov.radius = 3;
  auto r = run_cli(cov);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["ball_vertices"], 37);

  auto act = d.file("a.json", dump(action_to_json(GroupAction(25, {t.translation({1, 0})}))));
  auto q = with("quotient");
  q.host = host;
  q.action = act;
  auto qr = run_cli(q);
  ASSERT_EQ(qr.status, 0) << qr.err;
  EXPECT_EQ(Json::parse(qr.out)["quotient"]["vertices"], 5);

  auto bad = d.file("b.json");
  Permutation swap = identity_permutation(25);
  std::swap(swap[0], swap[1]);
  write_text_file(bad, dump(action_to_json(GroupAction(25, {swap}))));
  q.action = bad;
  EXPECT_EQ(run_cli(q).status, 2);

  auto link = *link_cycle(t.graph, 0);
  Walk hex(link.begin(), link.end());
  hex.push_back(hex.front());
  auto w = d.file("w.json", dump(Json{{"walk", hex}}));
  auto red = with("reduce");
  red.host = host;
  red.walk = w;
  auto rr = run_cli(red);
  ASSERT_EQ(rr.status, 0) << rr.err;
  EXPECT_TRUE(Json::parse(rr.out)["trivial"].get<bool>());
}

TEST(Cli, VerifyStructureAndC) {
  TempDir d;
  auto vs = with("verify-structure");
  vs.basis = {5, 0, 0, 5};
  vs.level = 2;
  vs.witness = d.file("witness.json");
  auto r = run_cli(vs);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
  Json w = Json::parse(slurp(vs.witness));
  EXPECT_TRUE(w["pass"].get<bool>());
  EXPECT_EQ(w["bijection"].size(), 75u);

  auto host = d.file("t.json", dump(graph_to_json(torus_graph({{7, 0}, {0, 7}}).graph)));
  auto vc = with("verify-C");
  vc.host = host;
  vc.level = 2;
  auto cr = run_cli(vc);
  ASSERT_EQ(cr.status, 0) << cr.err;
  Json rep = Json::parse(cr.out);
  EXPECT_TRUE(rep["ok"].get<bool>());
  EXPECT_TRUE(rep["bijective"].get<bool>());
}

TEST(Cli, OutputsAreByteIdentical) {
  TempDir d;
  auto host = d.file("t.json", dump(graph_to_json(torus_graph({{7, 0}, {0, 7}}).graph)));
  auto c = with("geoclique");
  c.host = host;
  c.level = 3;
  c.out = d.file("one.json");
  ASSERT_EQ(run_cli(c).status, 0);
  auto first = slurp(c.out);
  c.out = d.file("two.json");
  ASSERT_EQ(run_cli(c).status, 0);
  EXPECT_EQ(first, slurp(c.out));
}
