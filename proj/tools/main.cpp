#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bezsolve/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Polynomial system solver through Bezout matrix families"};
  app.require_subcommand(1);

  bezsolve::RunConfig cfg;
  bool blocks = false;
  bool oracle = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", cfg.input, "system file (JSON)")->required();
    cmd->add_option("--tau", cfg.tau, "relative rank threshold (default size * eps)");
    cmd->add_option("--seed", cfg.seed, "seed for the random matrix combination");
    cmd->add_flag("--blocks,!--no-blocks", blocks, "block-triangularize before rank decisions");
    cmd->add_flag("--oracle,!--no-oracle", oracle, "cross-check the family symbolically");
  };

  CLI::App* solve = app.add_subcommand("solve", "run the pipeline through a stage");
  add_common(solve);
  solve->add_option("--stage", cfg.stage, "bezout | rank | reduce | companions | roots | all")
      ->check(CLI::IsMember({"bezout", "rank", "reduce", "companions", "roots", "all"}));
  solve->add_option("--out", cfg.out_dir, "directory for stage artifacts");

  CLI::App* dump = app.add_subcommand("dump", "print the Bezout family as JSON");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : bezsolve::kParseError;
  }

  cfg.use_blocks = blocks;
  cfg.oracle = oracle;
  if (app.got_subcommand("dump")) return bezsolve::cmd_dump(cfg, std::cout, std::cerr);
  return bezsolve::cmd_solve(cfg, std::cout, std::cerr);
}
