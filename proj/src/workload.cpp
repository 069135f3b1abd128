#include "batchhl/workload.hpp"

#include <algorithm>
#include <stdexcept>

namespace batchhl::workload {

namespace {

Vertex uniform_vertex(std::size_t n, Rng& rng) {
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.num_edges());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.adjacency(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph preferential_attachment(std::size_t n, std::size_t attach, Rng& rng) {
  if (attach == 0) throw std::invalid_argument("attach must be positive");
  Graph g(n);
  std::vector<Vertex> endpoints;  // every edge contributes both ends
  const std::size_t seed_size = std::min(n, attach + 1);
  for (Vertex u = 0; u < seed_size; ++u) {
    for (Vertex v = u + 1; v < seed_size; ++v) {
      g.add_edge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> chosen;
  for (Vertex v = static_cast<Vertex>(seed_size); v < n; ++v) {
    chosen.clear();
    const std::size_t want = std::min<std::size_t>(attach, v);
    while (chosen.size() < want) {
      const Vertex target = endpoints.empty()
                                ? uniform_vertex(v, rng)
                                : endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (Vertex target : chosen) {
      g.add_edge(v, target);
      endpoints.push_back(v);
      endpoints.push_back(target);
    }
  }
  return g;
}

std::vector<EdgeUpdate> random_mixed_updates(const Graph& g, std::size_t max_updates, Rng& rng,
                                             bool allow_new_vertices) {
  const std::size_t n = g.num_vertices();
  std::vector<EdgeUpdate> raw;
  if (n < 2 || max_updates == 0) return raw;
  const auto edges = edge_list(g);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, max_updates)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (raw.size() < count) {
    const double roll = unit(rng);
    if (roll < 0.08 && !raw.empty()) {
      // Noise: repeat or cancel an earlier update.
      auto prev = raw[std::uniform_int_distribution<std::size_t>(0, raw.size() - 1)(rng)];
      if (unit(rng) < 0.5) prev.kind = prev.deleted() ? UpdateKind::Insert : UpdateKind::Delete;
      raw.push_back(prev);
    } else if (roll < 0.5 && !edges.empty()) {
      const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      raw.push_back({u, v, UpdateKind::Delete});
    } else {
      const std::size_t span = allow_new_vertices && unit(rng) < 0.1 ? n + 1 : n;
      const Vertex u = uniform_vertex(span, rng);
      const Vertex v = uniform_vertex(n, rng);
      raw.push_back({u, v, unit(rng) < 0.05 ? UpdateKind::Delete : UpdateKind::Insert});
    }
  }
  return raw;
}

FullyDynamicWorkload fully_dynamic(const Graph& g, std::size_t size, Rng& rng) {
  auto edges = edge_list(g);
  if (size > edges.size()) throw std::invalid_argument("batch larger than edge count");
  // Partial Fisher-Yates: the first `size` entries become a uniform sample.
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(i, edges.size() - 1)(rng);
    std::swap(edges[i], edges[j]);
  }
  FullyDynamicWorkload out{g, {}};
  const std::size_t inserts = size / 2;
  for (std::size_t i = 0; i < size; ++i) {
    const auto [u, v] = edges[i];
    if (i < inserts) {
      out.base.remove_edge(u, v);
      out.updates.push_back({u, v, UpdateKind::Insert});
    } else {
      out.updates.push_back({u, v, UpdateKind::Delete});
    }
  }
  std::shuffle(out.updates.begin(), out.updates.end(), rng);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> random_pairs(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(uniform_vertex(n, rng), uniform_vertex(n, rng));
  return pairs;
}

}  // namespace batchhl::workload
