#pragma once

#include <algorithm>
#include <numeric>

#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"
#include "batchhl/workload.hpp"

namespace batchhl::fixtures {

/// One random (G, R, B) triple from the property-test family: Erdos-Renyi or
/// preferential-attachment graphs with 5..60 vertices, 1..5 random landmarks and a
/// normalized batch of at most 12 mixed updates.
struct Instance {
  Graph graph;
  LandmarkSet landmarks;
  Batch batch;
  Graph updated;
};

inline Instance random_instance(std::uint64_t seed, bool allow_new_vertices = true) {
  workload::Rng rng(seed);
  const auto n = std::uniform_int_distribution<std::size_t>(5, 60)(rng);
  Instance inst;
  if (rng() % 2 == 0) {
    const double p = std::uniform_real_distribution<double>(0.02, 0.25)(rng);
    inst.graph = workload::erdos_renyi(n, p, rng);
  } else {
    const auto attach = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    inst.graph = workload::preferential_attachment(n, attach, rng);
  }
  const auto k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  inst.landmarks = LandmarkSet(ids, n);
  const auto raw = workload::random_mixed_updates(inst.graph, 12, rng, allow_new_vertices);
  inst.batch = normalize_batch(inst.graph, raw);
  inst.updated = apply_batch(inst.graph, inst.batch);
  return inst;
}

}  // namespace batchhl::fixtures
