//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lgm::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kParamError = 2,
  kSelfcheckMismatch = 3,
};

struct MineConfig {
  std::string input;
  std::string output; // empty: standard output
  std::size_t min_support = 1;
  std::size_t max_size = 1;
  std::string cases = "ABC";
  bool report_empty = false;
  std::string stats; // CSV of per-report delay counters
};

struct RankConfig {
  std::string input; // output of `mine`
  std::string classes;
  std::string output;
  double alpha = 0.001;
};

struct ContactConfig {
  std::string input;
  std::string output;
  double threshold = 5.0;
  bool exclusive = false;
};

struct GapConfig {
  std::string input;
  std::string output;
  std::size_t k = 1;
  std::string gap_label = "_";
};

struct SelfcheckConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 50;
};

int cmd_mine(const MineConfig &config, std::ostream &out, std::ostream &err);
int cmd_rank(const RankConfig &config, std::ostream &out, std::ostream &err);
int cmd_convert_contact(const ContactConfig &config, std::ostream &out,
                        std::ostream &err);
int cmd_convert_gap(const GapConfig &config, std::ostream &out,
                    std::ostream &err);
int cmd_selfcheck(const SelfcheckConfig &config, std::ostream &out,
                  std::ostream &err);

} // namespace lgm::cli
