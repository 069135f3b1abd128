#include "batchhl/query.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace batchhl {

Dist upper_bound(const HighwayCoverLabelling& gamma, Vertex s, Vertex t) noexcept {
  const auto& lm = gamma.landmarks();
  const LabelEntry self_s[1] = {{lm.index_of(s), 0}};
  const LabelEntry self_t[1] = {{lm.index_of(t), 0}};
  const auto ls = lm.contains(s) ? std::span<const LabelEntry>(self_s) : gamma.label(s);
  const auto lt = lm.contains(t) ? std::span<const LabelEntry>(self_t) : gamma.label(t);

  Dist best = kInfDist;
  for (const auto& es : ls) {
    const auto row = gamma.highway_row(es.landmark);
    for (const auto& et : lt) {
      best = std::min(best, dist_add(dist_add(es.distance, row[et.landmark]), et.distance));
    }
  }
  return best;
}

QueryEngine::QueryEngine(const Graph& g, const HighwayCoverLabelling& gamma) : graph_(g), gamma_(gamma) {
  for (int side = 0; side < 2; ++side) {
    stamp_[side].assign(g.num_vertices(), 0);
    depth_[side].assign(g.num_vertices(), kInfDist);
  }
}

QueryResult QueryEngine::query(Vertex s, Vertex t) {
  const auto n = graph_.num_vertices();
  if (s >= n || t >= n) {
    throw std::out_of_range("query vertex out of range (n=" + std::to_string(n) + ")");
  }
  QueryResult result;
  if (s == t) {
    result.distance = result.upper_bound = 0;
    return result;
  }
  const auto& lm = gamma_.landmarks();
  if (lm.contains(s) || lm.contains(t)) {
    // The labelling is exact between a landmark and any vertex.
    result.distance = lm.contains(s) ? label_distance(gamma_, lm.index_of(s), t)
                                     : label_distance(gamma_, lm.index_of(t), s);
    result.upper_bound = result.distance;
    return result;
  }
  result.upper_bound = upper_bound(gamma_, s, t);
  result.distance = bidirectional_search(s, t, result.upper_bound);
  result.searched = true;
  return result;
}

// Level-synchronous bidirectional BFS on G minus the landmarks. After each level,
// every path of length <= depth[0] + depth[1] has been seen, so once that sum plus
// one reaches `best` no shorter path remains.
Dist QueryEngine::bidirectional_search(Vertex s, Vertex t, Dist best) {
  if (++epoch_ == 0) {
    for (auto& st : stamp_) std::fill(st.begin(), st.end(), 0);
    epoch_ = 1;
  }
  const auto& lm = gamma_.landmarks();
  const Vertex roots[2] = {s, t};
  Dist level[2] = {0, 0};
  for (int side = 0; side < 2; ++side) {
    stamp_[side][roots[side]] = epoch_;
    depth_[side][roots[side]] = 0;
    frontier_[side].assign(1, roots[side]);
  }

  while (!frontier_[0].empty() && !frontier_[1].empty()) {
    if (is_finite(best) && level[0] + level[1] + 1 >= best) break;
    const int side = frontier_[0].size() <= frontier_[1].size() ? 0 : 1;
    const int other = 1 - side;
    const Dist next_level = level[side] + 1;
    next_.clear();
    for (Vertex u : frontier_[side]) {
      for (Vertex w : graph_.adjacency(u)) {
        if (stamp_[side][w] == epoch_ || lm.contains(w)) continue;
        stamp_[side][w] = epoch_;
        depth_[side][w] = next_level;
        if (observer_) observer_(w);
        if (stamp_[other][w] == epoch_) best = std::min(best, next_level + depth_[other][w]);
        next_.push_back(w);
      }
    }
    frontier_[side].swap(next_);
    level[side] = next_level;
  }
  return best;
}

QueryResult query(const HighwayCoverLabelling& gamma, const Graph& g, Vertex s, Vertex t) {
  QueryEngine engine(g, gamma);
  return engine.query(s, t);
}

}  // namespace batchhl
