// Command line front end: flag parsing only; see cliquedyn/cli.hpp.

#include <CLI11.hpp>

#include "cliquedyn/cli.hpp"

namespace {

using cliquedyn::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("-o,--out", c.out, "Output file (default: stdout)");
}

void add_host(CLI::App* sub, RunConfig& c) {
  sub->add_option("--host", c.host, "Host graph JSON")->required()->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-graph dynamics on locally cyclic graphs"};
  app.set_version_flag("--version", std::string(cliquedyn::cli::kToolVersion));
  app.require_subcommand(1);
  RunConfig c;

  auto* gen = app.add_subcommand("generate", "Write a generated host graph as JSON");
  gen->add_option("kind", c.kind, "torus | window | cone | delta | octahedron | icosahedron")->required();
  gen->add_option("--basis", c.basis, "Torus basis a1 a2 b1 b2 in axial steps")->expected(4);
  gen->add_option("--center", c.center, "Window center x1 x2 x3")->expected(3);
  gen->add_option("--radius", c.radius, "Window or cone radius");
  gen->add_option("--degree", c.degree, "Cone apex degree");
  gen->add_option("--side", c.side, "Side length of a triangular region");
  add_common(gen, c);

  auto* it = app.add_subcommand("iterate", "Iterate the clique operator; per-level CSV");
  add_host(it, c);
  it->add_option("-n,--n,--level", c.level, "Number of iterations")->required();
  it->add_option("--vertex-budget", c.vertex_budget, "Abort a level above this many vertices");
  add_common(it, c);

  auto* geo = app.add_subcommand("geoclique", "Build G_n and report counts, degrees, census and profiles");
  add_host(geo, c);
  geo->add_option("-n,--n,--level", c.level, "Level n")->required();
  geo->add_option("--margin", c.margin, "Rim distance for classifiable shapes");
  geo->add_option("--report", c.out, "Report JSON file (default: stdout)");

  auto* cen = app.add_subcommand("census", "Degree-26 census with degree-bound checks");
  add_host(cen, c);
  cen->add_option("-n,--n,--level", c.level, "Level n")->required();
  cen->add_option("--margin", c.margin, "Rim distance for classifiable shapes");
  add_common(cen, c);

  auto* inv = app.add_subcommand("invariant-D", "Per-probe distance bounds to the not-26 set (CSV)");
  add_host(inv, c);
  inv->add_option("-n,--n,--level", c.level, "Level n")->required();
  inv->add_option("--probes", c.probes, "central | all | sample");
  inv->add_option("--samples", c.samples, "Probe count for --probes sample");
  inv->add_option("--seed", c.seed, "Seed for probe sampling");
  inv->add_option("--margin", c.margin, "Rim distance for classifiable probes");
  add_common(inv, c);

  auto* cov = app.add_subcommand("cover", "Develop a ball of the universal triangular cover");
  add_host(cov, c);
  cov->add_option("--radius", c.radius, "Development radius")->required();
  cov->add_option("--base", c.base, "Base vertex");
  add_common(cov, c);

  auto* quo = app.add_subcommand("quotient", "Quotient by a group action given as permutations");
  add_host(quo, c);
  quo->add_option("--action", c.action, "Action JSON")->required()->check(CLI::ExistingFile);
  add_common(quo, c);

  auto* red = app.add_subcommand("reduce", "Search a null-homotopy certificate for a closed walk");
  add_host(red, c);
  red->add_option("--walk", c.walk, "Walk JSON")->required()->check(CLI::ExistingFile);
  red->add_option("--budget", c.budget, "Expanded search nodes");
  add_common(red, c);

  auto* vs = app.add_subcommand("verify-structure", "Compare k^n T with the shape quotient of a covering window");
  vs->add_option("--torus", c.torus, "Torus spec JSON")->check(CLI::ExistingFile);
  vs->add_option("--basis", c.basis, "Torus basis a1 a2 b1 b2 (instead of --torus)")->expected(4);
  vs->add_option("-n,--n,--level", c.level, "Level n")->required();
  vs->add_option("--vertex-budget", c.vertex_budget, "Clique iteration budget");
  vs->add_option("--witness", c.witness, "Write the isomorphism witness here");
  add_common(vs, c);

  auto* vc = app.add_subcommand("verify-C", "Check the explicit map C_n: G_n -> kG_{n-1}");
  add_host(vc, c);
  vc->add_option("-n,--n,--level", c.level, "Upper level n")->required();
  vc->add_option("--margin", c.margin, "Rim distance for checked shapes");
  add_common(vc, c);

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return cliquedyn::cli::run(c);
}
