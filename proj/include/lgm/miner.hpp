//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgm/core.hpp"

namespace lgm {

/// Reduces a non-empty pattern to its parent in the search tree: the largest
/// edge is removed, then any vertex left without edges is deleted and the
/// remaining vertices are renumbered in order.
inline Pattern reduce(const Pattern &g) {
  if (g.empty())
    throw std::invalid_argument("cannot reduce the empty pattern");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end() - 1);
  std::vector<bool> keep(g.vertex_count(), false);
  for (const auto &e : edges)
    keep[e.left] = keep[e.right] = true;

  std::vector<VertexId> renumber(g.vertex_count());
  std::vector<Label> labels;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    renumber[v] = static_cast<VertexId>(labels.size());
    if (keep[v])
      labels.push_back(g.label(v));
  }
  for (auto &e : edges) {
    e.left = renumber[e.left];
    e.right = renumber[e.right];
  }
  return Pattern(std::move(labels), std::move(edges));
}

enum class ExtensionCase : std::uint8_t {
  kNoNewVertex = 0,   // A
  kOneNewVertex = 1,  // B
  kTwoNewVertices = 2 // C
};

/// Subset of the extension cases A, B, C. The step from the empty pattern
/// to a single edge is always enabled; the set restricts the growth of
/// non-empty patterns.
class CaseSet {
public:
  constexpr CaseSet() = default;

  static constexpr CaseSet all() { return CaseSet(0b111); }
  static constexpr CaseSet none() { return CaseSet(0); }

  /// Parses a string of case letters such as "ABC" or "AB".
  static CaseSet parse(std::string_view letters) {
    CaseSet s = none();
    for (char c : letters) {
      switch (c) {
      case 'A': case 'a': s = s.with(ExtensionCase::kNoNewVertex); break;
      case 'B': case 'b': s = s.with(ExtensionCase::kOneNewVertex); break;
      case 'C': case 'c': s = s.with(ExtensionCase::kTwoNewVertices); break;
      default:
        throw std::invalid_argument("unknown extension case '" +
                                    std::string(1, c) + "'");
      }
    }
    return s;
  }

  constexpr bool contains(ExtensionCase c) const noexcept {
    return (bits_ >> static_cast<unsigned>(c)) & 1u;
  }
  constexpr CaseSet with(ExtensionCase c) const noexcept {
    return CaseSet(bits_ | (1u << static_cast<unsigned>(c)));
  }
  constexpr CaseSet without(ExtensionCase c) const noexcept {
    return CaseSet(bits_ & ~(1u << static_cast<unsigned>(c)));
  }

  std::string to_string() const {
    std::string s;
    if (contains(ExtensionCase::kNoNewVertex)) s += 'A';
    if (contains(ExtensionCase::kOneNewVertex)) s += 'B';
    if (contains(ExtensionCase::kTwoNewVertices)) s += 'C';
    return s;
  }

  friend constexpr bool operator==(CaseSet, CaseSet) = default;

private:
  constexpr explicit CaseSet(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0b111;
};

/// Case of the search-tree step from reduce(g) to g, determined by the number
/// of vertices the reduction deletes.
inline ExtensionCase extension_case_of(const Pattern &g) {
  if (g.empty())
    throw std::invalid_argument("the empty pattern has no parent");
  auto e = g.edges().back();
  std::size_t deg_left = 0, deg_right = 0;
  for (const auto &f : g.edges()) {
    deg_left += (f.left == e.left) + (f.right == e.left);
    deg_right += (f.left == e.right) + (f.right == e.right);
  }
  return static_cast<ExtensionCase>((deg_left == 1) + (deg_right == 1));
}

/**
 * Embeddings of one pattern across a database, stored flat. Entry i is the
 * pair (graph(i), mapping(i)) where graph(i) is the graph's position in the
 * database. Kept sorted by (graph, mapping).
 */
class OccurrenceList {
public:
  explicit OccurrenceList(std::size_t width = 0) : width_(width) {}

  /// The empty pattern occurs once, with the empty mapping, in every graph.
  static OccurrenceList of_empty_pattern(const Database &db) {
    OccurrenceList list(0);
    for (std::uint32_t i = 0; i < db.size(); ++i)
      list.push_back(i, {});
    return list;
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return graphs_.size(); }
  bool empty() const noexcept { return graphs_.empty(); }

  std::uint32_t graph(std::size_t i) const { return graphs_[i]; }
  std::span<const VertexId> mapping(std::size_t i) const {
    return {vertices_.data() + i * width_, width_};
  }

  void push_back(std::uint32_t graph, std::span<const VertexId> mapping) {
    if (mapping.size() != width_)
      throw std::invalid_argument("occurrence width mismatch");
    graphs_.push_back(graph);
    vertices_.insert(vertices_.end(), mapping.begin(), mapping.end());
  }

  void reserve(std::size_t n) {
    graphs_.reserve(n);
    vertices_.reserve(n * width_);
  }

  bool is_sorted() const {
    for (std::size_t i = 1; i < size(); ++i)
      if (!less(i - 1, i))
        return false;
    return true;
  }

  void sort() {
    if (is_sorted())
      return;
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return less(a, b); });
    OccurrenceList sorted(width_);
    sorted.reserve(size());
    for (auto i : order)
      sorted.push_back(graphs_[i], mapping(i));
    *this = std::move(sorted);
  }

  std::vector<Occurrence> to_occurrences(const Database &db) const {
    std::vector<Occurrence> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      auto m = mapping(i);
      out.push_back(Occurrence{db.graphs[graph(i)].id(),
                               std::vector<VertexId>(m.begin(), m.end())});
    }
    return out;
  }

private:
  bool less(std::size_t a, std::size_t b) const {
    if (graphs_[a] != graphs_[b])
      return graphs_[a] < graphs_[b];
    auto ma = mapping(a), mb = mapping(b);
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                        mb.end());
  }

  std::size_t width_;
  std::vector<std::uint32_t> graphs_;
  std::vector<VertexId> vertices_;
};

/// Number of distinct graphs in the list.
inline std::size_t support(const OccurrenceList &list) {
  std::vector<std::uint32_t> graphs;
  graphs.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    graphs.push_back(list.graph(i));
  std::sort(graphs.begin(), graphs.end());
  return static_cast<std::size_t>(
      std::unique(graphs.begin(), graphs.end()) - graphs.begin());
}

/**
 * One inverse step of the reduction map. Fields by case:
 *  - A: `first` < `second` are existing vertices joined by the new edge.
 *  - B: a vertex labeled `first_label` is inserted at position `first` and
 *    joined to existing vertex `second` (numbered before the insertion).
 *  - C: vertices labeled `first_label`, `second_label` are inserted at
 *    positions `first` < `second` (numbered after the insertion) and joined.
 */
struct Extension {
  ExtensionCase kind = ExtensionCase::kNoNewVertex;
  VertexId first = 0;
  VertexId second = 0;
  Label first_label = 0;
  Label second_label = 0;
  Label edge_label = 0;

  friend bool operator==(const Extension &, const Extension &) = default;
};

struct ExtensionHash {
  std::size_t operator()(const Extension &x) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(x.kind);
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(x.first);
    mix(x.second);
    mix(x.first_label);
    mix(x.second_label);
    mix(x.edge_label);
    return static_cast<std::size_t>(h);
  }
};

/// Applies an extension to its parent pattern. For extensions the miner
/// generates, the new edge is the largest edge of the result.
inline Pattern apply_extension(const Pattern &g, const Extension &x) {
  std::vector<Label> labels = g.labels();
  std::vector<Edge> edges = g.edges();
  auto shift = [](std::vector<Edge> &es, VertexId at) {
    for (auto &e : es) {
      e.left += e.left >= at;
      e.right += e.right >= at;
    }
  };
  switch (x.kind) {
  case ExtensionCase::kNoNewVertex:
    edges.push_back(Edge{x.first, x.second, x.edge_label});
    break;
  case ExtensionCase::kOneNewVertex: {
    shift(edges, x.first);
    labels.insert(labels.begin() + x.first, x.first_label);
    VertexId u = x.second + (x.second >= x.first);
    edges.push_back(Edge::make(x.first, u, x.edge_label));
    break;
  }
  case ExtensionCase::kTwoNewVertices:
    shift(edges, x.first);
    labels.insert(labels.begin() + x.first, x.first_label);
    shift(edges, x.second);
    labels.insert(labels.begin() + x.second, x.second_label);
    edges.push_back(Edge{x.first, x.second, x.edge_label});
    break;
  }
  std::sort(edges.begin(), edges.end(), edge_order_less);
  return Pattern(std::move(labels), std::move(edges));
}

struct ExtendedPattern {
  Pattern pattern;
  Extension extension;
  std::size_t support = 0;
  std::size_t occurrence_count = 0;
  /// Database positions containing the pattern, ascending.
  std::vector<std::uint32_t> graphs;
  /// Empty unless occurrence lists were requested.
  OccurrenceList occurrences;
};

namespace detail {

struct Tally {
  std::size_t support = 0;
  std::size_t count = 0;
  std::uint32_t last_graph = std::numeric_limits<std::uint32_t>::max();
  std::size_t slot = std::numeric_limits<std::size_t>::max();
};

// Extension -> Tally. Keys index a flat array when the key space
// (3 cases x positions^2 x vertex labels^2 x edge labels) is small enough,
// and a hash map otherwise.
class TallyTable {
public:
  static constexpr std::size_t kMaxDense = std::size_t{1} << 22;

  void reset(std::size_t positions, std::size_t vertex_labels,
             std::size_t edge_labels) {
    for (const auto &[index, x] : touched_)
      dense_[index] = Tally{};
    touched_.clear();
    sparse_.clear();
    positions_ = positions;
    vertex_labels_ = std::max<std::size_t>(vertex_labels, 1);
    edge_labels_ = std::max<std::size_t>(edge_labels, 1);
    const std::size_t space = 3 * positions_ * positions_ * vertex_labels_ *
                              vertex_labels_ * edge_labels_;
    dense_mode_ = space <= kMaxDense;
    if (dense_mode_ && dense_.size() < space)
      dense_.resize(space);
  }

  Tally &operator[](const Extension &x) {
    if (!dense_mode_)
      return sparse_[x];
    const auto i = index(x);
    auto &t = dense_[i];
    if (t.count == 0 && t.slot == std::numeric_limits<std::size_t>::max() &&
        t.support == 0)
      touched_.emplace_back(i, x);
    return t;
  }

  template <class F> void for_each(F &&f) {
    if (!dense_mode_) {
      for (auto &[x, t] : sparse_)
        f(x, t);
      return;
    }
    for (const auto &[i, x] : touched_)
      f(x, dense_[i]);
  }

private:
  std::size_t index(const Extension &x) const {
    std::size_t i = static_cast<std::size_t>(x.kind);
    i = i * positions_ + x.first;
    i = i * positions_ + x.second;
    i = i * vertex_labels_ + x.first_label;
    i = i * vertex_labels_ + x.second_label;
    return i * edge_labels_ + x.edge_label;
  }

  bool dense_mode_ = true;
  std::size_t positions_ = 0, vertex_labels_ = 1, edge_labels_ = 1;
  std::vector<Tally> dense_;
  std::vector<std::pair<std::size_t, Extension>> touched_;
  std::unordered_map<Extension, Tally, ExtensionHash> sparse_;
};

} // namespace detail

/**
 * Generates the children of a pattern in the reverse-search tree directly from
 * its occurrence list. Each occurrence is scanned once per pass; candidate
 * edges come from data edges incident to, or lying after, the mapped vertices.
 */
class Extender {
public:
  static constexpr VertexId kUnmapped = std::numeric_limits<VertexId>::max();

  Extender(const Database &db, CaseSet cases)
      : db_(&db), cases_(cases), position_(db.max_vertex_count(), kUnmapped) {}

  /// Calls visit(extension, occurrence_index, w1, w2) for every child
  /// embedding reachable from the list, where w1, w2 are the data vertices
  /// bound to newly inserted pattern vertices (unused ones are 0).
  template <class Visit>
  void scan(const Pattern &g, const OccurrenceList &occ, Visit &&visit) {
    const std::size_t k = g.vertex_count();
    if (occ.width() != k)
      throw std::invalid_argument("occurrence list does not match pattern");

    std::vector<bool> adjacent(k * k, false);
    for (const auto &e : g.edges())
      adjacent[e.left * k + e.right] = true;
    const auto top = largest_edge(g);
    const bool do_a = cases_.contains(ExtensionCase::kNoNewVertex);
    const bool do_b = cases_.contains(ExtensionCase::kOneNewVertex);
    // Seeding single edges from the empty pattern is never disabled.
    const bool do_c = !top || cases_.contains(ExtensionCase::kTwoNewVertices);

    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ.graph(i) >= db_->size())
        throw std::out_of_range("occurrence refers to a missing graph");
      const LinearGraph &data = db_->graphs[occ.graph(i)];
      const auto m = occ.mapping(i);
      for (VertexId t = 0; t < k; ++t) {
        if (m[t] >= data.vertex_count())
          throw std::out_of_range("occurrence maps outside its graph");
        position_[m[t]] = t;
      }
      ++work_;

      // Insertion position of a data vertex among the mapped ones.
      auto slot = [&m](VertexId w) {
        return static_cast<VertexId>(std::lower_bound(m.begin(), m.end(), w) -
                                     m.begin());
      };

      if (top) {
        const VertexId big_l = top->left, big_r = top->right;
        // Both A and B need the new edge's left end at or after big_l.
        for (VertexId a = big_l; a < k; ++a) {
          for (const auto &nb : data.neighbors(m[a])) {
            ++work_;
            const VertexId b = position_[nb.vertex];
            if (b != kUnmapped) {
              if (!do_a || b <= a || (a == big_l && b <= big_r) ||
                  adjacent[a * k + b])
                continue;
              visit(Extension{ExtensionCase::kNoNewVertex, a, b, 0, 0,
                              nb.label},
                    i, VertexId{0}, VertexId{0});
              continue;
            }
            if (!do_b)
              continue;
            const VertexId p = slot(nb.vertex);
            const VertexId u = a + (a >= p);
            const Edge added = Edge::make(p, u);
            const Edge shifted{big_l + (big_l >= p), big_r + (big_r >= p)};
            if (!edge_order_less(shifted, added))
              continue;
            visit(Extension{ExtensionCase::kOneNewVertex, p, a,
                            data.label(nb.vertex), 0, nb.label},
                  i, nb.vertex, VertexId{0});
          }
        }
      }

      if (do_c) {
        // The new edge is largest iff its left end lies after the image of
        // the current largest edge's left end.
        const auto &edges = data.edges();
        auto it = edges.begin();
        if (top) {
          const VertexId after = m[top->left];
          it = std::upper_bound(
              edges.begin(), edges.end(), after,
              [](VertexId x, const Edge &e) { return x < e.left; });
        }
        for (; it != edges.end(); ++it) {
          ++work_;
          if (position_[it->left] != kUnmapped ||
              position_[it->right] != kUnmapped)
            continue;
          const VertexId p = slot(it->left);
          const VertexId q = slot(it->right) + 1;
          visit(Extension{ExtensionCase::kTwoNewVertices, p, q,
                          data.label(it->left), data.label(it->right),
                          it->label},
                i, it->left, it->right);
        }
      }

      for (VertexId t = 0; t < k; ++t)
        position_[m[t]] = kUnmapped;
    }
  }

  /**
   * Children of g with support >= min_support, sorted by canonical code.
   * Occurrence lists are built only when with_occurrences is set; supports,
   * embedding counts and graph sets are always filled in.
   */
  std::vector<ExtendedPattern> expand(const Pattern &g,
                                      const OccurrenceList &occ,
                                      std::size_t min_support,
                                      bool with_occurrences) {
    auto &tallies = tallies_;
    tallies.reset(g.vertex_count() + 2, db_->vertex_labels.size(),
                  db_->edge_labels.size());

    scan(g, occ, [&](const Extension &x, std::size_t i, VertexId, VertexId) {
      auto &t = tallies[x];
      ++t.count;
      if (t.last_graph != occ.graph(i)) {
        t.last_graph = occ.graph(i);
        ++t.support;
      }
    });

    std::vector<ExtendedPattern> children;
    tallies.for_each([&](const Extension &x, detail::Tally &t) {
      if (t.support < std::max<std::size_t>(min_support, 1))
        return;
      t.slot = children.size();
      ExtendedPattern child{apply_extension(g, x), x, t.support, t.count,
                            {}, OccurrenceList(0)};
      child.graphs.reserve(t.support);
      if (with_occurrences) {
        child.occurrences = OccurrenceList(child.pattern.vertex_count());
        child.occurrences.reserve(t.count);
      }
      children.push_back(std::move(child));
    });
    if (children.empty())
      return children;

    std::vector<VertexId> mapping;
    scan(g, occ,
         [&](const Extension &x, std::size_t i, VertexId w1, VertexId w2) {
           const auto &t = tallies[x];
           if (t.slot == std::numeric_limits<std::size_t>::max())
             return;
           auto &child = children[t.slot];
           const auto graph = occ.graph(i);
           if (child.graphs.empty() || child.graphs.back() != graph)
             child.graphs.push_back(graph);
           if (!with_occurrences)
             return;
           const auto m = occ.mapping(i);
           mapping.assign(m.begin(), m.end());
           switch (x.kind) {
           case ExtensionCase::kNoNewVertex:
             break;
           case ExtensionCase::kOneNewVertex:
             mapping.insert(mapping.begin() + x.first, w1);
             break;
           case ExtensionCase::kTwoNewVertices:
             mapping.insert(mapping.begin() + x.first, w1);
             mapping.insert(mapping.begin() + x.second, w2);
             break;
           }
           child.occurrences.push_back(graph, mapping);
         });

    std::vector<std::pair<CanonicalCode, std::size_t>> order;
    order.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
      order.emplace_back(canonical_code(children[i].pattern), i);
    std::sort(order.begin(), order.end());
    std::vector<ExtendedPattern> sorted;
    sorted.reserve(children.size());
    for (auto &[code, i] : order) {
      children[i].occurrences.sort();
      sorted.push_back(std::move(children[i]));
    }
    return sorted;
  }

  /// Scan steps performed so far: one per occurrence visited plus one per
  /// data edge or adjacency entry inspected.
  std::uint64_t work() const noexcept { return work_; }

private:
  const Database *db_;
  CaseSet cases_;
  std::vector<VertexId> position_;
  detail::TallyTable tallies_;
  std::uint64_t work_ = 0;
};

/// Every child of g (reduce(child) == g) that occurs in the database, with
/// its exact occurrence list, sorted by canonical code.
inline std::vector<ExtendedPattern> extend(const Pattern &g,
                                           const OccurrenceList &occ,
                                           const Database &db,
                                           CaseSet cases = CaseSet::all()) {
  Extender extender(db, cases);
  return extender.expand(g, occ, 1, true);
}

struct MiningParams {
  std::size_t min_support = 1;
  std::size_t max_size = 1;
  CaseSet cases = CaseSet::all();
  bool report_empty = false;

  void validate() const {
    if (min_support < 1)
      throw std::invalid_argument("minimum support must be at least 1");
    if (max_size < 1)
      throw std::invalid_argument("maximum pattern size must be at least 1");
  }
};

struct MiningReport {
  Pattern pattern;
  std::size_t support = 0;
  std::size_t occurrence_count = 0;
  /// Declared ids of the graphs containing the pattern, ascending by
  /// database position.
  std::vector<GraphId> graph_ids;
  /// Full embeddings; only valid during the sink call and null for patterns
  /// at the maximum size, whose lists are never materialized.
  const OccurrenceList *occurrences = nullptr;
};

/// Costs accumulated between two consecutive reports.
struct DelaySample {
  std::int64_t elapsed_ns = 0;
  std::uint64_t scan_work = 0;
  std::size_t invocations = 0;
};

struct MiningSummary {
  std::size_t patterns = 0;
  std::size_t invocations = 0;
  std::size_t expanded = 0;
  std::size_t max_depth = 0;
  std::uint64_t scan_work = 0;
  std::uint64_t max_scan_work_between_reports = 0;
  std::size_t max_invocations_between_reports = 0;
  std::int64_t max_delay_ns = 0;
  /// Largest occurrence list seen at any node.
  std::size_t max_occurrence_list = 0;
};

namespace detail {

template <class Sink>
class MineRun {
public:
  MineRun(const Database &db, const MiningParams &params, Sink &sink,
          std::vector<DelaySample> *samples)
      : db_(db), params_(params), sink_(sink), samples_(samples),
        extender_(db, params.cases), last_(Clock::now()) {}

  MiningSummary run() {
    auto root = OccurrenceList::of_empty_pattern(db_);
    std::vector<std::uint32_t> graphs(db_.size());
    for (std::uint32_t i = 0; i < graphs.size(); ++i)
      graphs[i] = i;
    visit(Pattern{}, &root, db_.size(), root.size(), graphs, 0);
    summary_.scan_work = extender_.work();
    return summary_;
  }

  /// Costs since the last report, i.e. the work done before mining finished.
  DelaySample tail() const { return since_last(); }

private:
  using Clock = std::chrono::steady_clock;

  void visit(const Pattern &g, const OccurrenceList *occ, std::size_t support,
             std::size_t count, const std::vector<std::uint32_t> &graphs,
             std::size_t depth) {
    ++summary_.invocations;
    ++invocations_;
    summary_.max_depth = std::max(summary_.max_depth, depth);
    if (occ)
      summary_.max_occurrence_list =
          std::max(summary_.max_occurrence_list, occ->size());
    if (support < params_.min_support)
      return;
    if (!g.empty() || params_.report_empty)
      report(g, occ, support, count, graphs);
    if (g.size() >= params_.max_size)
      return;

    const bool leaf_children = g.size() + 1 >= params_.max_size;
    ++summary_.expanded;
    auto children =
        extender_.expand(g, *occ, params_.min_support, !leaf_children);
    for (const auto &child : children) {
      visit(child.pattern, leaf_children ? nullptr : &child.occurrences,
            child.support, child.occurrence_count, child.graphs, depth + 1);
    }
  }

  void report(const Pattern &g, const OccurrenceList *occ, std::size_t support,
              std::size_t count, const std::vector<std::uint32_t> &graphs) {
    auto sample = since_last();
    summary_.max_delay_ns = std::max(summary_.max_delay_ns, sample.elapsed_ns);
    summary_.max_scan_work_between_reports =
        std::max(summary_.max_scan_work_between_reports, sample.scan_work);
    summary_.max_invocations_between_reports =
        std::max(summary_.max_invocations_between_reports, sample.invocations);
    if (samples_)
      samples_->push_back(sample);

    MiningReport r{g, support, count, {}, occ};
    r.graph_ids.reserve(graphs.size());
    for (auto i : graphs)
      r.graph_ids.push_back(db_.graphs[i].id());
    sink_(std::as_const(r));
    ++summary_.patterns;

    invocations_ = 0;
    work_mark_ = extender_.work();
    if (samples_)
      last_ = Clock::now();
  }

  DelaySample since_last() const {
    DelaySample s;
    if (samples_)
      s.elapsed_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                               last_)
              .count();
    s.scan_work = extender_.work() - work_mark_;
    s.invocations = invocations_;
    return s;
  }

  const Database &db_;
  const MiningParams &params_;
  Sink &sink_;
  std::vector<DelaySample> *samples_;
  Extender extender_;
  MiningSummary summary_;
  std::size_t invocations_ = 0;
  std::uint64_t work_mark_ = 0;
  Clock::time_point last_;
};

} // namespace detail

/**
 * Depth-first traversal of the reverse-search tree rooted at the empty
 * pattern. Every pattern with support >= min_support and size <= max_size
 * (reachable through the enabled cases) is passed to sink exactly once;
 * siblings are visited in canonical-code order. Children are filtered by
 * support while they are generated, so every call of the recursion on a
 * non-root node reports.
 */
template <class Sink>
MiningSummary mine(const Database &db, const MiningParams &params,
                   Sink &&sink) {
  params.validate();
  detail::MineRun<std::remove_reference_t<Sink>> run(db, params, sink,
                                                     nullptr);
  return run.run();
}

struct DelayProfile {
  MiningSummary summary;
  /// One sample per report, covering the work since the previous report.
  std::vector<DelaySample> samples;
  /// Work after the final report until mining finished.
  DelaySample tail;
  std::size_t max_vertices = 0; // M
  std::size_t max_edges = 0;    // F
  std::size_t graphs = 0;       // N
};

/// Runs mine with per-report timing and work counters.
template <class Sink>
DelayProfile measure_delay(const Database &db, const MiningParams &params,
                           Sink &&sink) {
  params.validate();
  DelayProfile profile;
  detail::MineRun<std::remove_reference_t<Sink>> run(db, params, sink,
                                                     &profile.samples);
  profile.summary = run.run();
  profile.tail = run.tail();
  profile.max_vertices = db.max_vertex_count();
  profile.max_edges = db.max_edge_count();
  profile.graphs = db.size();
  return profile;
}

inline DelayProfile measure_delay(const Database &db,
                                  const MiningParams &params) {
  return measure_delay(db, params, [](const MiningReport &) {});
}

} // namespace lgm
