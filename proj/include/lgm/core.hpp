//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgm {

using VertexId = std::uint32_t;
using Label = std::uint32_t;
using GraphId = std::uint64_t;

/// Id of the reserved "_" token in every edge alphabet.
inline constexpr Label kUnlabeled = 0;
inline constexpr std::string_view kUnlabeledToken = "_";

class InvalidGraph : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A label token is non-empty and contains no whitespace.
inline bool is_valid_token(std::string_view token) noexcept {
  if (token.empty())
    return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

/**
 * Interns label tokens into dense integer ids, in order of first appearance.
 * Edge alphabets reserve id 0 for the unlabeled token "_".
 */
class Alphabet {
public:
  Alphabet() = default;

  static Alphabet for_edges() {
    Alphabet a;
    a.intern(kUnlabeledToken);
    return a;
  }

  Label intern(std::string_view token) {
    if (!is_valid_token(token))
      throw InvalidGraph("invalid label token '" + std::string(token) + "'");
    auto it = ids_.find(std::string(token));
    if (it != ids_.end())
      return it->second;
    auto id = static_cast<Label>(symbols_.size());
    symbols_.emplace_back(token);
    ids_.emplace(symbols_.back(), id);
    return id;
  }

  std::optional<Label> find(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end())
      return std::nullopt;
    return it->second;
  }

  const std::string &symbol(Label id) const { return symbols_.at(id); }
  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string> &symbols() const noexcept { return symbols_; }

private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Label> ids_;
};

struct Edge {
  VertexId left = 0;
  VertexId right = 0;
  Label label = kUnlabeled;

  /// Normalizes an undirected edge so that left < right.
  static Edge make(VertexId u, VertexId v, Label label = kUnlabeled) {
    if (u == v)
      throw InvalidGraph("self-loop on vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    return Edge{u, v, label};
  }

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Strict total order on edge endpoints: left endpoint first, then right.
/// Labels do not participate.
constexpr bool edge_order_less(const Edge &a, const Edge &b) noexcept {
  return a.left < b.left || (a.left == b.left && a.right < b.right);
}

struct Neighbor {
  VertexId vertex;
  Label label;
};

/// An ordered, labeled vertex sequence with a set of labeled edges. Vertices
/// are dense indices 0..n-1 and may be isolated. Immutable after construction.
class LinearGraph {
public:
  LinearGraph() = default;

  LinearGraph(GraphId id, std::vector<Label> labels, std::vector<Edge> edges)
      : id_(id), labels_(std::move(labels)), edges_(std::move(edges)) {
    const auto n = labels_.size();
    for (auto &e : edges_) {
      e = Edge::make(e.left, e.right, e.label);
      if (e.right >= n)
        throw InvalidGraph("edge (" + std::to_string(e.left) + "," +
                           std::to_string(e.right) + ") out of range in graph " +
                           std::to_string(id_));
    }
    std::sort(edges_.begin(), edges_.end(), edge_order_less);
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (!edge_order_less(edges_[i - 1], edges_[i]))
        throw InvalidGraph("parallel edge (" + std::to_string(edges_[i].left) +
                           "," + std::to_string(edges_[i].right) +
                           ") in graph " + std::to_string(id_));
    }

    adjacency_offsets_.assign(n + 1, 0);
    for (const auto &e : edges_) {
      ++adjacency_offsets_[e.left + 1];
      ++adjacency_offsets_[e.right + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
      adjacency_offsets_[v + 1] += adjacency_offsets_[v];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(adjacency_offsets_.begin(),
                                  adjacency_offsets_.end() - 1);
    for (const auto &e : edges_) {
      adjacency_[fill[e.left]++] = Neighbor{e.right, e.label};
      adjacency_[fill[e.right]++] = Neighbor{e.left, e.label};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(adjacency_.begin() + adjacency_offsets_[v],
                adjacency_.begin() + adjacency_offsets_[v + 1],
                [](const Neighbor &a, const Neighbor &b) {
                  return a.vertex < b.vertex;
                });
    }
  }

  GraphId id() const noexcept { return id_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label> &labels() const noexcept { return labels_; }

  /// Edges in ascending edge order.
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  /// Neighbors of v in ascending vertex order.
  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + adjacency_offsets_[v],
            adjacency_.data() + adjacency_offsets_[v + 1]};
  }

  std::optional<Label> edge_label(VertexId u, VertexId v) const {
    auto adj = neighbors(u);
    auto it = std::lower_bound(
        adj.begin(), adj.end(), v,
        [](const Neighbor &n, VertexId x) { return n.vertex < x; });
    if (it == adj.end() || it->vertex != v)
      return std::nullopt;
    return it->label;
  }

private:
  GraphId id_ = 0;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<Neighbor> adjacency_;
};

/// A collection of linear graphs sharing one vertex and one edge alphabet.
struct Database {
  Alphabet vertex_labels;
  Alphabet edge_labels = Alphabet::for_edges();
  std::vector<LinearGraph> graphs;

  std::size_t size() const noexcept { return graphs.size(); }

  std::size_t max_vertex_count() const noexcept {
    std::size_t m = 0;
    for (const auto &g : graphs)
      m = std::max(m, g.vertex_count());
    return m;
  }

  std::size_t max_edge_count() const noexcept {
    std::size_t m = 0;
    for (const auto &g : graphs)
      m = std::max(m, g.edge_count());
    return m;
  }
};

/**
 * Canonical linear graph: vertices 0..k-1 each touched by some edge, edges
 * strictly ascending in edge order. The empty pattern has no vertices.
 */
class Pattern {
public:
  Pattern() = default;

  Pattern(std::vector<Label> labels, std::vector<Edge> edges)
      : labels_(std::move(labels)), edges_(std::move(edges)) {
    std::vector<bool> touched(labels_.size(), false);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto &e = edges_[i];
      if (e.left >= e.right || e.right >= labels_.size())
        throw InvalidGraph("malformed pattern edge");
      if (i > 0 && !edge_order_less(edges_[i - 1], e))
        throw InvalidGraph("pattern edges not strictly ascending");
      touched[e.left] = touched[e.right] = true;
    }
    if (std::find(touched.begin(), touched.end(), false) != touched.end())
      throw InvalidGraph("pattern has an isolated vertex");
  }

  /// Builds a pattern from the edge set of a graph; the graph must not have
  /// isolated vertices.
  static Pattern from_graph(const LinearGraph &g) {
    return Pattern(g.labels(), g.edges());
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  /// Pattern size |g| is its edge count.
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label> &labels() const noexcept { return labels_; }
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  LinearGraph to_graph(GraphId id = 0) const {
    return LinearGraph(id, labels_, edges_);
  }

  friend bool operator==(const Pattern &, const Pattern &) = default;

private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
};

inline std::optional<Edge> largest_edge(const Pattern &g) {
  if (g.empty())
    return std::nullopt;
  return g.edges().back();
}

/// Pattern vertex p maps to data vertex mapping[p]; the mapping is strictly
/// increasing.
struct Occurrence {
  GraphId graph_id = 0;
  std::vector<VertexId> mapping;

  friend bool operator==(const Occurrence &, const Occurrence &) = default;
  friend auto operator<=>(const Occurrence &, const Occurrence &) = default;
};

namespace detail {

// Edges of the pattern grouped by their larger endpoint, so a backtracking
// matcher can verify each edge once both endpoints are assigned.
inline std::vector<std::vector<Edge>> back_edges(const Pattern &g) {
  std::vector<std::vector<Edge>> back(g.vertex_count());
  for (const auto &e : g.edges())
    back[e.right].push_back(e);
  return back;
}

template <class Visit>
bool match_recursive(const Pattern &g, const LinearGraph &data,
                     const std::vector<std::vector<Edge>> &back,
                     std::vector<VertexId> &mapping, std::size_t depth,
                     Visit &visit) {
  if (depth == g.vertex_count())
    return visit(std::as_const(mapping));
  const VertexId start = depth == 0 ? 0 : mapping[depth - 1] + 1;
  const std::size_t remaining = g.vertex_count() - depth;
  for (VertexId w = start; w + remaining <= data.vertex_count(); ++w) {
    if (data.label(w) != g.label(static_cast<VertexId>(depth)))
      continue;
    bool ok = true;
    for (const auto &e : back[depth]) {
      auto l = data.edge_label(mapping[e.left], w);
      if (!l || *l != e.label) {
        ok = false;
        break;
      }
    }
    if (!ok)
      continue;
    mapping[depth] = w;
    if (!match_recursive(g, data, back, mapping, depth + 1, visit))
      return false;
  }
  return true;
}

} // namespace detail

/// Calls visit(mapping) for every order-preserving embedding of g in data,
/// in lexicographic order. visit returns false to stop early.
template <class Visit>
void for_each_embedding(const Pattern &g, const LinearGraph &data,
                        Visit &&visit) {
  if (g.vertex_count() > data.vertex_count())
    return;
  auto back = detail::back_edges(g);
  std::vector<VertexId> mapping(g.vertex_count());
  detail::match_recursive(g, data, back, mapping, 0, visit);
}

/// All order-preserving embeddings of g in data, lexicographically ordered.
inline std::vector<Occurrence> match_pattern(const Pattern &g,
                                             const LinearGraph &data) {
  std::vector<Occurrence> out;
  for_each_embedding(g, data, [&](const std::vector<VertexId> &m) {
    out.push_back(Occurrence{data.id(), m});
    return true;
  });
  return out;
}

inline bool occurs_in(const Pattern &g, const LinearGraph &data) {
  bool found = false;
  for_each_embedding(g, data, [&](const std::vector<VertexId> &) {
    found = true;
    return false;
  });
  return found;
}

/// Byte string with equal patterns <=> equal codes. Integers are written as
/// big-endian u32 so byte order matches numeric order field by field.
using CanonicalCode = std::string;

namespace detail {

inline void put_u32(std::string &out, std::uint32_t x) {
  out.push_back(static_cast<char>((x >> 24) & 0xff));
  out.push_back(static_cast<char>((x >> 16) & 0xff));
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

inline std::uint32_t get_u32(std::string_view in, std::size_t &pos) {
  if (pos + 4 > in.size())
    throw InvalidGraph("truncated canonical code");
  std::uint32_t x = 0;
  for (int i = 0; i < 4; ++i)
    x = (x << 8) | static_cast<unsigned char>(in[pos++]);
  return x;
}

} // namespace detail

/// Layout: vertex count, vertex labels, edge count, (left, right, label)*.
inline CanonicalCode canonical_code(const Pattern &g) {
  CanonicalCode code;
  code.reserve(4 * (2 + g.vertex_count() + 3 * g.size()));
  detail::put_u32(code, static_cast<std::uint32_t>(g.vertex_count()));
  for (auto l : g.labels())
    detail::put_u32(code, l);
  detail::put_u32(code, static_cast<std::uint32_t>(g.size()));
  for (const auto &e : g.edges()) {
    detail::put_u32(code, e.left);
    detail::put_u32(code, e.right);
    detail::put_u32(code, e.label);
  }
  return code;
}

inline Pattern decode_pattern(std::string_view code) {
  std::size_t pos = 0;
  const auto k = detail::get_u32(code, pos);
  if (k > code.size())
    throw InvalidGraph("corrupt canonical code");
  std::vector<Label> labels(k);
  for (auto &l : labels)
    l = detail::get_u32(code, pos);
  const auto m = detail::get_u32(code, pos);
  if (m > code.size())
    throw InvalidGraph("corrupt canonical code");
  std::vector<Edge> edges(m);
  for (auto &e : edges) {
    e.left = detail::get_u32(code, pos);
    e.right = detail::get_u32(code, pos);
    e.label = detail::get_u32(code, pos);
  }
  if (pos != code.size())
    throw InvalidGraph("trailing bytes in canonical code");
  return Pattern(std::move(labels), std::move(edges));
}

} // namespace lgm
