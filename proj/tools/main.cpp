//
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
  using namespace lgm::cli;

  CLI::App app{"lgm: frequent subgraph mining on linear graphs"};
  app.require_subcommand(1);

  MineConfig mine;
  auto *mine_cmd = app.add_subcommand("mine", "enumerate frequent patterns");
  mine_cmd->add_option("-i,--input", mine.input, "graph database")->required();
  mine_cmd->add_option("-o,--output", mine.output, "output file (default stdout)");
  mine_cmd->add_option("--min-support", mine.min_support, "minimum number of graphs")
      ->required();
  mine_cmd->add_option("--max-size", mine.max_size, "maximum pattern edge count")
      ->required();
  mine_cmd->add_option("--cases", mine.cases, "enabled extension cases")
      ->capture_default_str();
  mine_cmd->add_flag("--report-empty", mine.report_empty,
                     "also report the empty pattern");
  mine_cmd->add_option("--stats", mine.stats, "write per-report delay CSV");

  RankConfig rank;
  auto *rank_cmd =
      app.add_subcommand("rank", "rank mined patterns by Fisher exact test");
  rank_cmd->add_option("-i,--input", rank.input, "output of mine")->required();
  rank_cmd->add_option("--classes", rank.classes, "class file (<id> <P|N>)")
      ->required();
  rank_cmd->add_option("-o,--output", rank.output, "output file (default stdout)");
  rank_cmd->add_option("--alpha", rank.alpha, "p-value cutoff")
      ->capture_default_str();

  auto *convert_cmd = app.add_subcommand("convert", "build linear graphs");
  convert_cmd->require_subcommand(1);

  ContactConfig contact;
  auto *contact_cmd =
      convert_cmd->add_subcommand("contact", "residue table to contact graphs");
  contact_cmd->add_option("-i,--input", contact.input, "residue table")
      ->required();
  contact_cmd->add_option("-o,--output", contact.output,
                          "output file (default stdout)");
  contact_cmd->add_option("--threshold", contact.threshold,
                          "contact distance in angstrom")
      ->capture_default_str();
  contact_cmd->add_flag("--exclusive", contact.exclusive,
                        "require distance strictly below the threshold");

  GapConfig gap;
  auto *gap_cmd = convert_cmd->add_subcommand("gap", "add k-gap sequence edges");
  gap_cmd->add_option("-i,--input", gap.input, "graph database")->required();
  gap_cmd->add_option("-o,--output", gap.output, "output file (default stdout)");
  gap_cmd->add_option("--k", gap.k, "gap depth")->capture_default_str();
  gap_cmd->add_option("--gap-label", gap.gap_label, "label of added edges")
      ->capture_default_str();

  SelfcheckConfig selfcheck;
  auto *selfcheck_cmd = app.add_subcommand(
      "selfcheck", "compare the miner with the brute-force oracle");
  selfcheck_cmd->add_option("--seed", selfcheck.seed)->capture_default_str();
  selfcheck_cmd->add_option("--trials", selfcheck.trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParamError;
  }

  if (*mine_cmd)
    return cmd_mine(mine, std::cout, std::cerr);
  if (*rank_cmd)
    return cmd_rank(rank, std::cout, std::cerr);
  if (*contact_cmd)
    return cmd_convert_contact(contact, std::cout, std::cerr);
  if (*gap_cmd)
    return cmd_convert_gap(gap, std::cout, std::cerr);
  if (*selfcheck_cmd)
    return cmd_selfcheck(selfcheck, std::cout, std::cerr);
  return kParamError;
}
