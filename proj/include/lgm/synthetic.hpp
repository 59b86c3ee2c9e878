//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgm/core.hpp"

namespace lgm::synthetic {

using Rng = std::mt19937_64;

/// Tokens "A", "B", ... for vertex labels and "_", "x", "y", ... for edges.
inline std::string vertex_token(std::size_t i) {
  return std::string(1, static_cast<char>('A' + i % 26)) +
         (i >= 26 ? std::to_string(i / 26) : "");
}

inline std::string edge_token(std::size_t i) {
  if (i == 0)
    return std::string(kUnlabeledToken);
  return std::string(1, static_cast<char>('x' + (i - 1) % 3)) +
         (i > 3 ? std::to_string((i - 1) / 3) : "");
}

struct RandomDatabaseOptions {
  std::size_t max_graphs = 10;
  std::size_t max_vertices = 8;
  std::size_t max_vertex_labels = 3;
  std::size_t max_edge_labels = 1;
  double max_density = 0.5;
};

/// Graph count, vertex counts, label counts and edge density are drawn
/// uniformly up to their maxima; each vertex pair becomes an edge with the
/// drawn density.
inline Database random_database(Rng &rng, const RandomDatabaseOptions &opt = {}) {
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Database db;
  const auto graphs = pick(1, opt.max_graphs);
  const auto vlabels = pick(1, opt.max_vertex_labels);
  const auto elabels = pick(1, opt.max_edge_labels);
  const double density =
      std::uniform_real_distribution<double>(0.0, opt.max_density)(rng);
  std::bernoulli_distribution coin(density);
  for (std::size_t gi = 0; gi < graphs; ++gi) {
    const auto n = pick(1, opt.max_vertices);
    std::vector<Label> labels(n);
    for (auto &l : labels)
      l = db.vertex_labels.intern(vertex_token(pick(0, vlabels - 1)));
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (coin(rng))
          edges.push_back(
              Edge{u, v, db.edge_labels.intern(edge_token(pick(0, elabels - 1)))});
    db.graphs.emplace_back(gi, std::move(labels), std::move(edges));
  }
  return db;
}

/// Paths 0-1-2-...-(length-1) with random vertex labels.
inline Database chain_database(Rng &rng, std::size_t graphs, std::size_t length,
                               std::size_t vertex_labels) {
  Database db;
  std::uniform_int_distribution<std::size_t> label(0, vertex_labels - 1);
  for (std::size_t gi = 0; gi < graphs; ++gi) {
    std::vector<Label> labels(length);
    for (auto &l : labels)
      l = db.vertex_labels.intern(vertex_token(label(rng)));
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < length; ++v)
      edges.push_back(Edge{v, v + 1, kUnlabeled});
    db.graphs.emplace_back(gi, std::move(labels), std::move(edges));
  }
  return db;
}

/// Graphs with exactly `edges` distinct unlabeled edges drawn uniformly among
/// all vertex pairs.
inline Database sparse_database(Rng &rng, std::size_t graphs,
                                std::size_t vertices, std::size_t edges,
                                std::size_t vertex_labels) {
  Database db;
  std::uniform_int_distribution<std::size_t> label(0, vertex_labels - 1);
  std::uniform_int_distribution<VertexId> vertex(
      0, static_cast<VertexId>(vertices - 1));
  const auto max_edges = vertices * (vertices - 1) / 2;
  edges = std::min(edges, max_edges);
  for (std::size_t gi = 0; gi < graphs; ++gi) {
    std::vector<Label> labels(vertices);
    for (auto &l : labels)
      l = db.vertex_labels.intern(vertex_token(label(rng)));
    std::set<std::pair<VertexId, VertexId>> pairs;
    while (pairs.size() < edges) {
      auto u = vertex(rng), v = vertex(rng);
      if (u == v)
        continue;
      pairs.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<Edge> es;
    for (auto [u, v] : pairs)
      es.push_back(Edge{u, v, kUnlabeled});
    db.graphs.emplace_back(gi, std::move(labels), std::move(es));
  }
  return db;
}

} // namespace lgm::synthetic
