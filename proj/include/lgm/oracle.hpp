//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

// Brute-force reference enumerators. Slow by construction and meant for
// small databases (total vertex count around 100, pattern size up to 5).
// Nothing here shares code with the occurrence-driven extension in miner.hpp.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "lgm/core.hpp"
#include "lgm/miner.hpp"

namespace lgm::oracle {

/// Canonical code -> support.
using SupportMap = std::map<CanonicalCode, std::size_t>;

namespace detail {

inline std::vector<Label> used_vertex_labels(const Database &db) {
  std::set<Label> s;
  for (const auto &g : db.graphs)
    s.insert(g.labels().begin(), g.labels().end());
  return {s.begin(), s.end()};
}

inline std::vector<Label> used_edge_labels(const Database &db) {
  std::set<Label> s;
  for (const auto &g : db.graphs)
    for (const auto &e : g.edges())
      s.insert(e.label);
  return {s.begin(), s.end()};
}

// Builds g with new vertices placed at the given final positions (ascending)
// and then the extra edge.
inline Pattern grow(const Pattern &g, std::span<const VertexId> at,
                    std::span<const Label> new_labels, Edge extra) {
  const std::size_t k = g.vertex_count() + at.size();
  std::vector<Label> labels(k);
  std::vector<VertexId> old_to_new;
  std::size_t next_old = 0, next_new = 0;
  for (VertexId v = 0; v < k; ++v) {
    if (next_new < at.size() && at[next_new] == v) {
      labels[v] = new_labels[next_new++];
    } else {
      labels[v] = g.label(static_cast<VertexId>(next_old++));
      old_to_new.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto &e : g.edges())
    edges.push_back(Edge{old_to_new[e.left], old_to_new[e.right], e.label});
  edges.push_back(extra);
  std::sort(edges.begin(), edges.end(), edge_order_less);
  return Pattern(std::move(labels), std::move(edges));
}

} // namespace detail

/// Every pattern obtained from g by adding one edge: between two existing
/// non-adjacent vertices, from an existing vertex to one new vertex, or
/// between two new vertices, at every insertion position and label choice.
inline std::vector<Pattern> augmentations(const Pattern &g,
                                          std::span<const Label> vertex_labels,
                                          std::span<const Label> edge_labels) {
  std::vector<Pattern> out;
  const auto k = static_cast<VertexId>(g.vertex_count());
  std::set<std::pair<VertexId, VertexId>> present;
  for (const auto &e : g.edges())
    present.emplace(e.left, e.right);

  for (VertexId a = 0; a < k; ++a)
    for (VertexId b = a + 1; b < k; ++b) {
      if (present.count({a, b}))
        continue;
      for (auto el : edge_labels)
        out.push_back(detail::grow(g, {}, {}, Edge{a, b, el}));
    }

  for (VertexId p = 0; p <= k; ++p)
    for (VertexId u = 0; u <= k; ++u) {
      if (u == p)
        continue;
      for (auto vl : vertex_labels)
        for (auto el : edge_labels) {
          VertexId at[1] = {p};
          Label ls[1] = {vl};
          out.push_back(detail::grow(g, at, ls, Edge::make(p, u, el)));
        }
    }

  for (VertexId p = 0; p <= k + 1; ++p)
    for (VertexId q = p + 1; q <= k + 1; ++q)
      for (auto l1 : vertex_labels)
        for (auto l2 : vertex_labels)
          for (auto el : edge_labels) {
            VertexId at[2] = {p, q};
            Label ls[2] = {l1, l2};
            out.push_back(detail::grow(g, at, ls, Edge{p, q, el}));
          }
  return out;
}

inline std::size_t count_support(const Pattern &g, const Database &db) {
  std::size_t n = 0;
  for (const auto &data : db.graphs)
    n += occurs_in(g, data);
  return n;
}

/// True if every step of g's reduction chain above the single-edge level is
/// of an enabled case. The case of a step is the number of vertices the
/// reduction deletes.
inline bool reachable_with(Pattern g, CaseSet cases) {
  while (g.size() > 1) {
    Pattern parent = reduce(g);
    auto removed = g.vertex_count() - parent.vertex_count();
    if (!cases.contains(static_cast<ExtensionCase>(removed)))
      return false;
    g = std::move(parent);
  }
  return true;
}

/**
 * Level-wise closure from the empty pattern under single-edge augmentation.
 * Anti-monotone support makes keeping only frequent patterns at each level
 * complete.
 */
inline SupportMap brute_force_mine(const Database &db, std::size_t min_support,
                                   std::size_t max_size,
                                   CaseSet cases = CaseSet::all()) {
  const auto vls = detail::used_vertex_labels(db);
  const auto els = detail::used_edge_labels(db);
  SupportMap result;
  std::set<CanonicalCode> seen;
  std::vector<Pattern> level{Pattern{}};
  for (std::size_t size = 1; size <= max_size && !level.empty(); ++size) {
    std::vector<Pattern> next;
    for (const auto &g : level) {
      for (auto &child : augmentations(g, vls, els)) {
        auto code = canonical_code(child);
        if (!seen.insert(code).second)
          continue;
        auto sup = count_support(child, db);
        if (sup >= min_support) {
          result.emplace(std::move(code), sup);
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
  for (auto it = result.begin(); it != result.end();) {
    if (reachable_with(decode_pattern(it->first), cases))
      ++it;
    else
      it = result.erase(it);
  }
  return result;
}

/**
 * Enumerates every subset of at most max_size edges of every graph; the
 * subset's edges and endpoints, renumbered in order, form a pattern that
 * occurs in that graph, and every occurring pattern arises this way.
 */
inline SupportMap edge_subset_mine(const Database &db, std::size_t min_support,
                                   std::size_t max_size,
                                   CaseSet cases = CaseSet::all()) {
  std::map<CanonicalCode, std::set<std::size_t>> graphs_of;
  for (std::size_t gi = 0; gi < db.size(); ++gi) {
    const auto &edges = db.graphs[gi].edges();
    const auto &data = db.graphs[gi];
    std::vector<std::size_t> pick;
    auto record = [&] {
      std::vector<VertexId> verts;
      for (auto i : pick) {
        verts.push_back(edges[i].left);
        verts.push_back(edges[i].right);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      auto index = [&](VertexId v) {
        return static_cast<VertexId>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      };
      std::vector<Label> labels;
      for (auto v : verts)
        labels.push_back(data.label(v));
      std::vector<Edge> es;
      for (auto i : pick)
        es.push_back(
            Edge{index(edges[i].left), index(edges[i].right), edges[i].label});
      graphs_of[canonical_code(Pattern(std::move(labels), std::move(es)))]
          .insert(gi);
    };
    // Subsets in increasing index order keep the edges sorted.
    auto rec = [&](auto &self, std::size_t from) -> void {
      if (!pick.empty())
        record();
      if (pick.size() == max_size)
        return;
      for (std::size_t i = from; i < edges.size(); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  SupportMap result;
  for (auto &[code, graphs] : graphs_of)
    if (graphs.size() >= min_support &&
        reachable_with(decode_pattern(code), cases))
      result.emplace(code, graphs.size());
  return result;
}

/// Patterns g' occurring in the database with reduce(g') == g.
inline std::map<CanonicalCode, Pattern> brute_force_children(const Pattern &g,
                                                             const Database &db) {
  const auto vls = detail::used_vertex_labels(db);
  const auto els = detail::used_edge_labels(db);
  std::map<CanonicalCode, Pattern> out;
  for (auto &child : augmentations(g, vls, els)) {
    if (!(reduce(child) == g) || count_support(child, db) == 0)
      continue;
    auto code = canonical_code(child);
    out.emplace(std::move(code), std::move(child));
  }
  return out;
}

/// Occurrence list of g assembled from match_pattern on each graph.
inline OccurrenceList matched_occurrences(const Pattern &g, const Database &db) {
  OccurrenceList list(g.vertex_count());
  for (std::uint32_t gi = 0; gi < db.size(); ++gi)
    for (const auto &occ : match_pattern(g, db.graphs[gi]))
      list.push_back(gi, occ.mapping);
  return list;
}

} // namespace lgm::oracle
