#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "batchhl/graph.hpp"

namespace batchhl::workload {

using Rng = std::mt19937_64;

/// G(n, p) random graph.
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Barabasi-Albert style graph: each new vertex attaches to `attach` distinct
/// existing vertices chosen proportionally to degree.
Graph preferential_attachment(std::size_t n, std::size_t attach, Rng& rng);

/// Up to `max_updates` raw updates mixing deletions of existing edges, insertions of
/// absent edges and, with small probability, noise that normalisation must remove
/// (duplicates, cancelling pairs, invalid updates). `allow_new_vertices` lets
/// insertions reference one id past the current vertex range.
std::vector<EdgeUpdate> random_mixed_updates(const Graph& g, std::size_t max_updates, Rng& rng,
                                             bool allow_new_vertices = false);

/// Fully dynamic workload: samples `size` distinct existing edges, removes half of
/// them from the returned base graph, and emits a batch that deletes the other half
/// and re-inserts the removed ones.
struct FullyDynamicWorkload {
  Graph base;
  std::vector<EdgeUpdate> updates;
};
FullyDynamicWorkload fully_dynamic(const Graph& g, std::size_t size, Rng& rng);

/// `count` uniformly random vertex pairs.
std::vector<std::pair<Vertex, Vertex>> random_pairs(std::size_t n, std::size_t count, Rng& rng);

}  // namespace batchhl::workload
