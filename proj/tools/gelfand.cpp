// gelfand: certification runs for the (GL_2n, Sp_2n) pair over finite fields.
//
//   gelfand fields --q 9
//   gelfand orbits enumerate --q 3 --n 1 --json out.json
//   gelfand orbits verify-good --q 2 --n 2
//   gelfand hecke --q 3 --n 1
//   gelfand descend --q 3 --n 2 --matrix x.json [--from-g]
//   gelfand verify-all --q 2 --n 2 [--seed S]
//
// Exit status: 0 all checks pass, 1 counterexample, 2 bad input or over budget.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gelfand/run.hpp"

namespace {

void add_context(CLI::App* cmd, gelfand::RunConfig& cfg, std::string& json_path) {
  cmd->add_option("--q", cfg.q, "field order, a prime power")->required();
  cmd->add_option("--n", cfg.n, "half dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--json", json_path, "write the JSON report here");
  cmd->add_option("--seed", cfg.seed, "seed for sampled checks");
  cmd->add_option("--max-group-size", cfg.max_group_size, "largest group or table to materialize");
}

}  // namespace

int main(int argc, char** argv) {
  gelfand::RunConfig cfg;
  cfg.max_group_size = gelfand::default_max_group_size();
  std::string json_path;
  std::string matrix_path;

  CLI::App app{"Finite-field verification of the (GL_2n, Sp_2n) Gelfand pair"};
  app.set_version_flag("--version", gelfand::kToolVersion);
  app.require_subcommand(1);

  auto* fields = app.add_subcommand("fields", "field construction and arithmetic checks");
  add_context(fields, cfg, json_path);

  auto* orbits = app.add_subcommand("orbits", "Sp x Sp double cosets of GL_2n");
  orbits->require_subcommand(1);
  for (const char* name : {"enumerate", "verify-good", "hecke"}) {
    add_context(orbits->add_subcommand(name), cfg, json_path);
  }

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra commutativity");
  add_context(hecke, cfg, json_path);

  auto* descend = app.add_subcommand("descend", "descendant of a sigma-symmetric element");
  add_context(descend, cfg, json_path);
  descend->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  descend->add_flag("--from-g", cfg.from_g, "the input is g; descend from x = s(g)");

  auto* verify_all = app.add_subcommand("verify-all", "every check for one (q, n)");
  add_context(verify_all, cfg, json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) cfg.subcommand = inner->get_name();
  }
  if (!matrix_path.empty()) cfg.input_path = matrix_path;
  if (!json_path.empty()) cfg.output_path = json_path;

  const gelfand::RunResult result = gelfand::run(cfg);
  if (!result.error.empty()) {
    std::cerr << "gelfand: " << result.error << "\n";
    return result.exit_code;
  }
  std::cout << gelfand::render_text(cfg, result);
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path);
    if (!out) {
      std::cerr << "gelfand: cannot write " << *cfg.output_path << "\n";
      return 2;
    }
    out << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
