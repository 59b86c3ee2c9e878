//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgm/core.hpp"
#include "lgm/stats.hpp"

namespace lgm {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char *what) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  return value;
}

// Splits input into lines, tracking 1-based numbers; skips blank and comment
// lines. A comment is a '#' at the start of the line.
class LineReader {
public:
  explicit LineReader(std::istream &in) : in_(in) {}

  bool next(std::vector<std::string_view> &tokens) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      if (!buffer_.empty() && buffer_.back() == '\r')
        buffer_.pop_back();
      if (!buffer_.empty() && buffer_.front() == '#')
        continue;
      tokens = split_ws(buffer_);
      if (!tokens.empty())
        return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::istream &in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

// Accumulates the v/e lines of one graph block.
class GraphBuilder {
public:
  GraphBuilder(Alphabet &vertex_labels, Alphabet &edge_labels)
      : vertex_labels_(vertex_labels), edge_labels_(edge_labels) {}

  void add_vertex(const std::vector<std::string_view> &tok, std::size_t line) {
    if (tok.size() != 3)
      throw ParseError(line, "expected 'v <index> <label>'");
    auto index = parse_number<std::uint64_t>(tok[1], line, "vertex index");
    if (index != labels_.size())
      throw ParseError(line, "vertex index " + std::to_string(index) +
                                 " out of sequence, expected " +
                                 std::to_string(labels_.size()));
    labels_.push_back(intern(vertex_labels_, tok[2], line));
  }

  void add_edge(const std::vector<std::string_view> &tok, std::size_t line) {
    if (tok.size() != 4)
      throw ParseError(line, "expected 'e <src> <dst> <label>'");
    auto u = parse_number<VertexId>(tok[1], line, "edge endpoint");
    auto v = parse_number<VertexId>(tok[2], line, "edge endpoint");
    if (u == v)
      throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (v >= labels_.size())
      throw ParseError(line, "edge endpoint " + std::to_string(v) +
                                 " out of range");
    if (!pairs_.emplace(u, v).second)
      throw ParseError(line, "parallel edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
    edges_.push_back(Edge{u, v, intern(edge_labels_, tok[3], line)});
  }

  LinearGraph finish(GraphId id) {
    LinearGraph g(id, std::move(labels_), std::move(edges_));
    labels_.clear();
    edges_.clear();
    pairs_.clear();
    return g;
  }

private:
  static Label intern(Alphabet &a, std::string_view token, std::size_t line) {
    try {
      return a.intern(token);
    } catch (const InvalidGraph &e) {
      throw ParseError(line, e.what());
    }
  }

  Alphabet &vertex_labels_;
  Alphabet &edge_labels_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::set<std::pair<VertexId, VertexId>> pairs_;
};

} // namespace detail

/**
 * Reads the line-oriented graph format:
 *
 *   t # <id>            starts a graph
 *   v <index> <label>   vertex, indices 0,1,2,... in order
 *   e <u> <v> <label>   undirected edge, "_" for unlabeled
 *
 * Lines starting with '#' and blank lines are ignored.
 */
inline Database parse_database(std::istream &in) {
  Database db;
  detail::LineReader reader(in);
  detail::GraphBuilder builder(db.vertex_labels, db.edge_labels);
  std::optional<GraphId> current;
  std::set<GraphId> seen;
  std::vector<std::string_view> tok;

  auto flush = [&] {
    if (current)
      db.graphs.push_back(builder.finish(*current));
  };

  while (reader.next(tok)) {
    const auto line = reader.line();
    if (tok[0] == "t") {
      if (tok.size() != 3 || tok[1] != "#")
        throw ParseError(line, "expected 't # <id>'");
      flush();
      current = detail::parse_number<GraphId>(tok[2], line, "graph id");
      if (!seen.insert(*current).second)
        throw ParseError(line, "duplicate graph id " + std::to_string(*current));
    } else if (tok[0] == "v" || tok[0] == "e") {
      if (!current)
        throw ParseError(line, "declaration before the first 't #' header");
      if (tok[0] == "v")
        builder.add_vertex(tok, line);
      else
        builder.add_edge(tok, line);
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  flush();
  return db;
}

inline Database parse_database(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_database(in);
}

/// Writes the v and e lines of one graph.
inline void write_graph_body(std::ostream &out, std::span<const Label> labels,
                             std::span<const Edge> edges,
                             const Alphabet &vertex_labels,
                             const Alphabet &edge_labels) {
  for (std::size_t v = 0; v < labels.size(); ++v)
    out << "v " << v << ' ' << vertex_labels.symbol(labels[v]) << '\n';
  for (const auto &e : edges)
    out << "e " << e.left << ' ' << e.right << ' '
        << edge_labels.symbol(e.label) << '\n';
}

inline void write_database(std::ostream &out, const Database &db) {
  for (const auto &g : db.graphs) {
    out << "t # " << g.id() << '\n';
    write_graph_body(out, g.labels(), g.edges(), db.vertex_labels,
                     db.edge_labels);
  }
}

inline std::string to_string(const Database &db) {
  std::ostringstream out;
  write_database(out, db);
  return out.str();
}

/// Mined patterns in the graph format with `p #` headers.
struct PatternFile {
  Alphabet vertex_labels;
  Alphabet edge_labels = Alphabet::for_edges();
  std::vector<PatternRecord> records;
};

/**
 * Writes one mined pattern:
 *
 *   p # <rank> support=<n> occ=<m> graphs=<id>,<id>,...
 *
 * followed by its v and e lines.
 */
inline void write_pattern_record(std::ostream &out, std::size_t rank,
                                 const Pattern &g, std::size_t support,
                                 std::size_t occurrences,
                                 std::span<const GraphId> graph_ids,
                                 const Alphabet &vertex_labels,
                                 const Alphabet &edge_labels) {
  out << "p # " << rank << " support=" << support << " occ=" << occurrences
      << " graphs=";
  for (std::size_t i = 0; i < graph_ids.size(); ++i)
    out << (i ? "," : "") << graph_ids[i];
  out << '\n';
  write_graph_body(out, g.labels(), g.edges(), vertex_labels, edge_labels);
}

inline PatternFile parse_pattern_file(std::istream &in) {
  PatternFile file;
  detail::LineReader reader(in);
  detail::GraphBuilder builder(file.vertex_labels, file.edge_labels);
  std::optional<PatternRecord> current;
  std::size_t header_line = 0;
  std::vector<std::string_view> tok;

  auto field = [](std::string_view token, std::string_view key,
                  std::size_t line) {
    if (token.substr(0, key.size()) != key)
      throw ParseError(line, "expected field '" + std::string(key) + "'");
    return token.substr(key.size());
  };
  auto flush = [&] {
    if (!current)
      return;
    auto g = builder.finish(0);
    try {
      current->pattern = Pattern::from_graph(g);
    } catch (const InvalidGraph &e) {
      throw ParseError(header_line, e.what());
    }
    file.records.push_back(std::move(*current));
    current.reset();
  };

  while (reader.next(tok)) {
    const auto line = reader.line();
    if (tok[0] == "p") {
      if (tok.size() != 6 || tok[1] != "#")
        throw ParseError(
            line, "expected 'p # <rank> support=<n> occ=<m> graphs=<ids>'");
      flush();
      header_line = line;
      PatternRecord rec;
      detail::parse_number<std::size_t>(tok[2], line, "rank");
      rec.support = detail::parse_number<std::size_t>(
          field(tok[3], "support=", line), line, "support");
      rec.occurrence_count = detail::parse_number<std::size_t>(
          field(tok[4], "occ=", line), line, "occurrence count");
      auto ids = field(tok[5], "graphs=", line);
      while (!ids.empty()) {
        auto comma = ids.find(',');
        rec.graph_ids.push_back(detail::parse_number<GraphId>(
            ids.substr(0, comma), line, "graph id"));
        ids = comma == std::string_view::npos ? std::string_view{}
                                              : ids.substr(comma + 1);
      }
      current = std::move(rec);
    } else if (tok[0] == "v" || tok[0] == "e") {
      if (!current)
        throw ParseError(line, "declaration before the first 'p #' header");
      if (tok[0] == "v")
        builder.add_vertex(tok, line);
      else
        builder.add_edge(tok, line);
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  flush();
  return file;
}

/// Reads `<graph_id> <P|N>` lines.
inline std::map<GraphId, GraphClass> parse_class_file(std::istream &in) {
  std::map<GraphId, GraphClass> classes;
  detail::LineReader reader(in);
  std::vector<std::string_view> tok;
  while (reader.next(tok)) {
    const auto line = reader.line();
    if (tok.size() != 2 || (tok[1] != "P" && tok[1] != "N"))
      throw ParseError(line, "expected '<graph_id> <P|N>'");
    auto id = detail::parse_number<GraphId>(tok[0], line, "graph id");
    auto cls = tok[1] == "P" ? GraphClass::kPositive : GraphClass::kNegative;
    if (!classes.emplace(id, cls).second)
      throw ParseError(line, "duplicate graph id " + std::to_string(id));
  }
  return classes;
}

// --- protein contact maps -------------------------------------------------

struct ResidueRecord {
  std::size_t index = 0;
  char amino_acid = 'A';
  double x = 0.0, y = 0.0, z = 0.0;
};

struct ProteinResidues {
  GraphId id = 0;
  std::vector<ResidueRecord> residues;
};

/// Physicochemical class 1..6 of a standard amino acid: aliphatic AVLIMC,
/// aromatic FWYH, polar STNQ, positive KR, negative DE, special GP.
inline std::optional<int> residue_class(char amino_acid) noexcept {
  switch (amino_acid) {
  case 'A': case 'V': case 'L': case 'I': case 'M': case 'C': return 1;
  case 'F': case 'W': case 'Y': case 'H': return 2;
  case 'S': case 'T': case 'N': case 'Q': return 3;
  case 'K': case 'R': return 4;
  case 'D': case 'E': return 5;
  case 'G': case 'P': return 6;
  default: return std::nullopt;
  }
}

inline constexpr std::string_view kStandardAminoAcids = "ACDEFGHIKLMNPQRSTVWY";

/// Reads residue tables: `t # <id>` headers, then
/// `<index> <one-letter-code> <x> <y> <z>` with indices 0,1,2,... per protein.
inline std::vector<ProteinResidues> parse_residues(std::istream &in) {
  std::vector<ProteinResidues> proteins;
  detail::LineReader reader(in);
  std::vector<std::string_view> tok;
  std::set<GraphId> seen;
  while (reader.next(tok)) {
    const auto line = reader.line();
    if (tok[0] == "t") {
      if (tok.size() != 3 || tok[1] != "#")
        throw ParseError(line, "expected 't # <id>'");
      auto id = detail::parse_number<GraphId>(tok[2], line, "protein id");
      if (!seen.insert(id).second)
        throw ParseError(line, "duplicate protein id " + std::to_string(id));
      proteins.push_back(ProteinResidues{id, {}});
      continue;
    }
    if (proteins.empty())
      throw ParseError(line, "residue before the first 't #' header");
    if (tok.size() != 5)
      throw ParseError(line, "expected '<index> <code> <x> <y> <z>'");
    auto &block = proteins.back().residues;
    ResidueRecord r;
    r.index = detail::parse_number<std::size_t>(tok[0], line, "residue index");
    if (r.index != block.size())
      throw ParseError(line, "residue index " + std::to_string(r.index) +
                                 " out of sequence");
    if (tok[1].size() != 1 || !residue_class(tok[1][0]))
      throw ParseError(line, "unknown amino acid '" + std::string(tok[1]) +
                                 "'");
    r.amino_acid = tok[1][0];
    r.x = detail::parse_number<double>(tok[2], line, "coordinate");
    r.y = detail::parse_number<double>(tok[3], line, "coordinate");
    r.z = detail::parse_number<double>(tok[4], line, "coordinate");
    block.push_back(r);
  }
  return proteins;
}

struct ContactOptions {
  double threshold = 5.0; // angstrom
  bool inclusive = true;  // distance == threshold counts as contact
};

/// Interns the six class labels "1".."6" so their ids do not depend on input
/// order.
inline void intern_residue_classes(Alphabet &vertex_labels) {
  for (int c = 1; c <= 6; ++c)
    vertex_labels.intern(std::to_string(c));
}

/// One vertex per residue in sequence order, labeled by residue class; an
/// unlabeled edge joins every residue pair within the distance threshold.
inline LinearGraph build_contact_graph(GraphId id,
                                       std::span<const ResidueRecord> residues,
                                       Alphabet &vertex_labels,
                                       const ContactOptions &options = {}) {
  std::vector<Label> labels;
  labels.reserve(residues.size());
  for (const auto &r : residues) {
    auto cls = residue_class(r.amino_acid);
    if (!cls)
      throw std::invalid_argument(std::string("unknown amino acid '") +
                                  r.amino_acid + "'");
    labels.push_back(vertex_labels.intern(std::to_string(*cls)));
  }
  std::vector<Edge> edges;
  const double limit = options.threshold * options.threshold;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = i + 1; j < residues.size(); ++j) {
      const double dx = residues[i].x - residues[j].x;
      const double dy = residues[i].y - residues[j].y;
      const double dz = residues[i].z - residues[j].z;
      const double d2 = dx * dx + dy * dy + dz * dz;
      if (options.inclusive ? d2 <= limit : d2 < limit)
        edges.push_back(Edge{static_cast<VertexId>(i),
                             static_cast<VertexId>(j), kUnlabeled});
    }
  }
  return LinearGraph(id, std::move(labels), std::move(edges));
}

inline Database build_contact_database(std::span<const ProteinResidues> proteins,
                                       const ContactOptions &options = {}) {
  Database db;
  intern_residue_classes(db.vertex_labels);
  for (const auto &p : proteins)
    db.graphs.push_back(
        build_contact_graph(p.id, p.residues, db.vertex_labels, options));
  return db;
}

struct GapSpec {
  std::size_t k = 1;
  std::string gap_label{kUnlabeledToken};

  void validate() const {
    if (k < 1)
      throw std::invalid_argument("gap depth must be at least 1");
    if (!is_valid_token(gap_label))
      throw std::invalid_argument("invalid gap label '" + gap_label + "'");
  }
};

/// Adds the sequence edges (i, i+d) for d = 1..k. Existing edges keep their
/// label.
inline LinearGraph add_gap_edges(const LinearGraph &g, std::size_t k,
                                 Label gap_label) {
  std::vector<Edge> edges = g.edges();
  const auto n = g.vertex_count();
  for (std::size_t d = 1; d <= k && d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const auto u = static_cast<VertexId>(i), v = static_cast<VertexId>(i + d);
      if (!g.edge_label(u, v))
        edges.push_back(Edge{u, v, gap_label});
    }
  }
  return LinearGraph(g.id(), g.labels(), std::move(edges));
}

inline Database add_gap_edges(const Database &db, const GapSpec &spec) {
  spec.validate();
  Database out{db.vertex_labels, db.edge_labels, {}};
  const Label gap = out.edge_labels.intern(spec.gap_label);
  out.graphs.reserve(db.size());
  for (const auto &g : db.graphs)
    out.graphs.push_back(add_gap_edges(g, spec.k, gap));
  return out;
}

} // namespace lgm
