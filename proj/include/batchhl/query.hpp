#pragma once

#include <functional>
#include <vector>

#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"

namespace batchhl {

struct QueryResult {
  Dist distance = kInfDist;
  Dist upper_bound = kInfDist;  // d-top from the labelling
  bool searched = false;        // whether the sparsified bidirectional search ran
};

/// Length of the shortest s-t path that goes through the highway, i.e. the minimum
/// over label entries (r_i, ds) of s and (r_j, dt) of t of ds + highway(i,j) + dt.
/// A landmark endpoint contributes itself at distance 0.
Dist upper_bound(const HighwayCoverLabelling& gamma, Vertex s, Vertex t) noexcept;

/// Exact distance oracle over a graph and its labelling. Holds per-query scratch,
/// so one engine must not be shared between threads.
class QueryEngine {
 public:
  QueryEngine(const Graph& g, const HighwayCoverLabelling& gamma);

  /// Throws std::out_of_range for ids outside the graph.
  QueryResult query(Vertex s, Vertex t);

  /// Called for every vertex the bidirectional search discovers (testing hook).
  void set_visit_observer(std::function<void(Vertex)> observer) { observer_ = std::move(observer); }

 private:
  Dist bidirectional_search(Vertex s, Vertex t, Dist best);

  const Graph& graph_;
  const HighwayCoverLabelling& gamma_;
  std::function<void(Vertex)> observer_;
  std::vector<std::uint32_t> stamp_[2];
  std::vector<Dist> depth_[2];
  std::vector<Vertex> frontier_[2];
  std::vector<Vertex> next_;
  std::uint32_t epoch_ = 0;
};

/// One-shot convenience wrapper around QueryEngine.
QueryResult query(const HighwayCoverLabelling& gamma, const Graph& g, Vertex s, Vertex t);

}  // namespace batchhl
