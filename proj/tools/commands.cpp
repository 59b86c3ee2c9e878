//
// SPDX-License-Identifier: Apache-2.0
//

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lgm/ingest.hpp"
#include "lgm/miner.hpp"
#include "lgm/oracle.hpp"
#include "lgm/stats.hpp"
#include "lgm/synthetic.hpp"

namespace lgm::cli {
namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return in;
}

// Runs write against the configured file, or `fallback` when path is empty.
void with_output(const std::string &path, std::ostream &fallback,
                 const std::function<void(std::ostream &)> &write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw InputError("cannot write '" + path + "'");
  write(file);
  if (!file)
    throw InputError("write to '" + path + "' failed");
}

// Maps exceptions onto the exit-code contract.
int guarded(std::ostream &err, const std::function<int()> &body) {
  try {
    return body();
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidGraph &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnknownGraph &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kParamError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

std::string format_p_value(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", p);
  return buf;
}

oracle::SupportMap mined_supports(const Database &db, const MiningParams &params,
                                  bool inject_fault) {
  oracle::SupportMap out;
  mine(db, params, [&](const MiningReport &r) {
    out.emplace(canonical_code(r.pattern), r.support);
  });
  if (inject_fault && !out.empty())
    out.erase(std::prev(out.end()));
  return out;
}

} // namespace

int cmd_mine(const MineConfig &config, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    MiningParams params;
    params.min_support = config.min_support;
    params.max_size = config.max_size;
    params.cases = CaseSet::parse(config.cases);
    params.report_empty = config.report_empty;
    params.validate();

    auto in = open_input(config.input);
    const Database db = parse_database(in);

    DelayProfile profile;
    with_output(config.output, out, [&](std::ostream &os) {
      std::size_t rank = 0;
      auto sink = [&](const MiningReport &r) {
        write_pattern_record(os, rank++, r.pattern, r.support,
                             r.occurrence_count, r.graph_ids, db.vertex_labels,
                             db.edge_labels);
      };
      if (config.stats.empty())
        mine(db, params, sink);
      else
        profile = measure_delay(db, params, sink);
    });

    if (!config.stats.empty()) {
      std::ofstream stats(config.stats);
      if (!stats)
        throw InputError("cannot write '" + config.stats + "'");
      stats << "# graphs=" << profile.graphs
            << " max_vertices=" << profile.max_vertices
            << " max_edges=" << profile.max_edges << '\n';
      stats << "report,elapsed_ns,scan_work,invocations\n";
      for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const auto &s = profile.samples[i];
        stats << i << ',' << s.elapsed_ns << ',' << s.scan_work << ','
              << s.invocations << '\n';
      }
      stats << "tail," << profile.tail.elapsed_ns << ','
            << profile.tail.scan_work << ',' << profile.tail.invocations
            << '\n';
    }
    return kOk;
  });
}

int cmd_rank(const RankConfig &config, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (!(config.alpha > 0.0 && config.alpha <= 1.0))
      throw std::invalid_argument("alpha must lie in (0, 1]");
    auto in = open_input(config.input);
    const PatternFile mined = parse_pattern_file(in);
    auto class_in = open_input(config.classes);
    const auto classes = parse_class_file(class_in);

    const auto ranked = rank_patterns(mined.records, classes, config.alpha);
    with_output(config.output, out, [&](std::ostream &os) {
      for (const auto &r : ranked) {
        os << format_p_value(r.p_value) << ' ' << r.table.n_tp << ' '
           << r.table.n_tn << '\n';
        write_graph_body(os, r.pattern.labels(), r.pattern.edges(),
                         mined.vertex_labels, mined.edge_labels);
      }
    });
    return kOk;
  });
}

int cmd_convert_contact(const ContactConfig &config, std::ostream &out,
                        std::ostream &err) {
  return guarded(err, [&] {
    if (!(config.threshold > 0.0))
      throw std::invalid_argument("threshold must be positive");
    auto in = open_input(config.input);
    const auto proteins = parse_residues(in);
    const Database db = build_contact_database(
        proteins, ContactOptions{config.threshold, !config.exclusive});
    with_output(config.output, out,
                [&](std::ostream &os) { write_database(os, db); });
    return kOk;
  });
}

int cmd_convert_gap(const GapConfig &config, std::ostream &out,
                    std::ostream &err) {
  return guarded(err, [&] {
    GapSpec spec{config.k, config.gap_label};
    spec.validate();
    auto in = open_input(config.input);
    const Database db = add_gap_edges(parse_database(in), spec);
    with_output(config.output, out,
                [&](std::ostream &os) { write_database(os, db); });
    return kOk;
  });
}

int cmd_selfcheck(const SelfcheckConfig &config, std::ostream &out,
                  std::ostream &err) {
  return guarded(err, [&] {
#ifdef LGM_SELFCHECK_INJECT_FAULT
    constexpr bool inject_fault = true;
#else
    constexpr bool inject_fault = false;
#endif
    synthetic::Rng rng(config.seed);
    std::uniform_int_distribution<std::size_t> sigma(1, 3), size(1, 4),
        case_bits(1, 7);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      const Database db = synthetic::random_database(rng);
      MiningParams params;
      params.min_support = sigma(rng);
      params.max_size = size(rng);
      // Every fourth trial restricts the extension cases.
      if (trial % 4 == 3) {
        auto bits = case_bits(rng);
        params.cases = CaseSet::none();
        if (bits & 1) params.cases = params.cases.with(ExtensionCase::kNoNewVertex);
        if (bits & 2) params.cases = params.cases.with(ExtensionCase::kOneNewVertex);
        if (bits & 4) params.cases = params.cases.with(ExtensionCase::kTwoNewVertices);
      }

      const auto got = mined_supports(db, params, inject_fault);
      const auto want = oracle::brute_force_mine(
          db, params.min_support, params.max_size, params.cases);
      if (got == want)
        continue;

      out << "mismatch in trial " << trial << " (seed " << config.seed
          << "): min-support=" << params.min_support
          << " max-size=" << params.max_size
          << " cases=" << params.cases.to_string() << '\n';
      auto describe = [&](const char *what, const CanonicalCode &code,
                          std::size_t sup) {
        out << what << " support=" << sup << '\n';
        auto g = decode_pattern(code);
        write_graph_body(out, g.labels(), g.edges(), db.vertex_labels,
                         db.edge_labels);
      };
      for (const auto &[code, sup] : want) {
        auto it = got.find(code);
        if (it == got.end()) {
          describe("missing pattern", code, sup);
          break;
        }
        if (it->second != sup) {
          describe("wrong support, expected", code, sup);
          break;
        }
      }
      for (const auto &[code, sup] : got) {
        if (!want.count(code)) {
          describe("unexpected pattern", code, sup);
          break;
        }
      }
      out << "database:\n";
      write_database(out, db);
      return kSelfcheckMismatch;
    }
    out << "selfcheck passed: " << config.trials << " trials, seed "
        << config.seed << '\n';
    return kOk;
  });
}

} // namespace lgm::cli
