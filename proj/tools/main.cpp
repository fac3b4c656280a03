// The `cryst` command-line tool.  Exit codes: 0 pass, 1 verification failure,
// 2 usage or config error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cryst/cli.hpp"

namespace {

void add_weight_flags(CLI::App* cmd, cryst::Int& n, cryst::Int& l,
                      std::vector<cryst::Int>& lambda) {
  cmd->add_option("--n", n, "number of colors")->required();
  cmd->add_option("--l", l, "level; checked against --lambda when given");
  cmd->add_option("--lambda", lambda, "fundamental-weight multiplicities, one per color")
      ->delimiter(',')
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial models of cylindric crystals: explore, verify, export"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the artifact to this file instead of stdout");

  cryst::GraphRun graph_cfg;
  CLI::App* graph = app.add_subcommand(
      "graph", "explore a crystal ball, check its local structure, export DOT/JSON/text");
  graph->add_option("--model", graph_cfg.model, "abacus | partition | cpp | kyoto")
      ->capture_default_str();
  add_weight_flags(graph, graph_cfg.n, graph_cfg.l, graph_cfg.lambda);
  graph->add_option("--deg", graph_cfg.deg, "ball radius in lowering steps")
      ->capture_default_str();
  graph->add_option("--format", graph_cfg.format, "dot | json | text")->capture_default_str();
  graph->add_flag("--inject-fault", graph_cfg.inject_fault,
                  "corrupt one lowering edge before the check (negative control)");

  CLI::App* genfunc = app.add_subcommand("genfunc", "q-series identities");
  genfunc->require_subcommand(1);
  cryst::GenfuncRun compare_cfg;
  CLI::App* compare = genfunc->add_subcommand(
      "compare", "enumeration vs. character formula vs. product formula");
  add_weight_flags(compare, compare_cfg.n, compare_cfg.l, compare_cfg.lambda);
  compare->add_option("--deg", compare_cfg.deg, "truncation degree")->capture_default_str();
  compare->add_option("--format", compare_cfg.format, "text | json | csv")
      ->capture_default_str();
  cryst::GenfuncRun duality_cfg;
  CLI::App* duality =
      genfunc->add_subcommand("duality", "compare against the reflected-cylinder weight");
  add_weight_flags(duality, duality_cfg.n, duality_cfg.l, duality_cfg.lambda);
  duality->add_option("--deg", duality_cfg.deg, "truncation degree")->capture_default_str();
  duality->add_option("--format", duality_cfg.format, "text | json")->capture_default_str();

  cryst::BijectionRun bij_cfg;
  CLI::App* bijection = app.add_subcommand(
      "bijection", "round-trip and decomposition checks on all small configurations");
  add_weight_flags(bijection, bij_cfg.n, bij_cfg.l, bij_cfg.lambda);
  bijection->add_option("--maxweight", bij_cfg.maxweight, "largest total weight to enumerate")
      ->capture_default_str();
  bijection->add_option("--format", bij_cfg.format, "json | text")->capture_default_str();

  cryst::KyotoRun kyoto_cfg;
  CLI::App* kyoto = app.add_subcommand(
      "kyoto", "verify the strand-residue path transport on a tight ball");
  add_weight_flags(kyoto, kyoto_cfg.n, kyoto_cfg.l, kyoto_cfg.lambda);
  kyoto->add_option("--deg", kyoto_cfg.deg, "ball radius in lowering steps")
      ->capture_default_str();
  kyoto->add_option("--format", kyoto_cfg.format, "json | text")->capture_default_str();

  cryst::CommutorRun comm_cfg;
  CLI::App* commutor = app.add_subcommand(
      "commutor", "certify the tensor swap through string data on small shapes");
  commutor->add_option("--m", comm_cfg.m, "alphabet size")->required();
  commutor->add_option("--maxsize", comm_cfg.maxsize, "largest shape size")
      ->capture_default_str();
  commutor->add_option("--word", comm_cfg.word,
                       "reduced word for the longest permutation (default: staircase)")
      ->delimiter(',');
  commutor->add_option("--format", comm_cfg.format, "json | text")->capture_default_str();

  // lets --out appear after the subcommand it applies to
  for (CLI::App* sub : {graph, genfunc, compare, duality, bijection, kyoto, commutor})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    sink = &file;
  }

  try {
    if (graph->parsed()) return cryst::run_graph(graph_cfg, *sink, std::cerr);
    if (compare->parsed()) return cryst::run_genfunc_compare(compare_cfg, *sink, std::cerr);
    if (duality->parsed()) return cryst::run_genfunc_duality(duality_cfg, *sink, std::cerr);
    if (bijection->parsed()) return cryst::run_bijection(bij_cfg, *sink, std::cerr);
    if (kyoto->parsed()) return cryst::run_kyoto(kyoto_cfg, *sink, std::cerr);
    if (commutor->parsed()) return cryst::run_commutor(comm_cfg, *sink, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
