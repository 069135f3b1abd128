#pragma once

// Naive reference implementations used by the test suites. Nothing here shares code
// with the production labelling, query or update paths.

#include <vector>

#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"

namespace batchhl::oracle {

/// Plain BFS hop distances from s; kInfDist where unreachable.
std::vector<Dist> bfs_distances(const Graph& g, Vertex s);

/// d^L_G(r, v) for every v, from an explicitly materialised shortest-path DAG.
/// Landmarks other than r read as flagged (they lie on their own path).
std::vector<LandmarkLength> landmark_distances(const Graph& g, const LandmarkSet& landmarks,
                                               Vertex r);

/// The unique minimal highway cover labelling, assembled from landmark_distances().
HighwayCoverLabelling minimal_labelling_bruteforce(const Graph& g, const LandmarkSet& landmarks);

/// Vertices whose landmark distance to r differs between g and updated (ascending).
/// Vertices missing from g count as unreachable there.
std::vector<Vertex> ld_affected_bruteforce(const Graph& g, const Graph& updated,
                                           const LandmarkSet& landmarks, Vertex r);

/// Vertices whose set of shortest paths to r differs between g and updated, compared
/// as shortest-path sub-DAG edge sets plus distance (ascending).
std::vector<Vertex> affected_bruteforce(const Graph& g, const Graph& updated, Vertex r);

/// Vertices v for which some update's anchor u satisfies
/// d_G(r,v) >= (d_G(r,u') + 1) + d_G'(u,v), with all distances from plain BFS.
std::vector<Vertex> unified_pattern_bruteforce(const Graph& g, const Graph& updated,
                                               const Batch& batch, Vertex r);

/// Exact s-t distance by a full BFS.
Dist distance(const Graph& g, Vertex s, Vertex t);

}  // namespace batchhl::oracle
