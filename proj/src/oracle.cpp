#include "batchhl/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace batchhl::oracle {

std::vector<Dist> bfs_distances(const Graph& g, Vertex s) {
  std::vector<Dist> dist(g.num_vertices(), kInfDist);
  if (s >= g.num_vertices()) return dist;
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<LandmarkLength> landmark_distances(const Graph& g, const LandmarkSet& landmarks,
                                               Vertex r) {
  const auto dist = bfs_distances(g, r);
  const std::size_t n = g.num_vertices();

  // Materialise the shortest-path DAG as explicit (tail, head) pairs.
  std::vector<std::pair<Vertex, Vertex>> dag;
  Dist depth = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (dist[u] == kInfDist) continue;
    depth = std::max(depth, dist[u]);
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == dist[u] + 1) dag.emplace_back(u, w);
    }
  }

  auto other_landmark = [&](Vertex v) { return v != r && landmarks.contains(v); };
  std::vector<bool> flag(n, false);
  for (Vertex v = 0; v < n; ++v) flag[v] = other_landmark(v);
  for (Dist layer = 1; layer <= depth; ++layer) {
    for (const auto& [u, w] : dag) {
      if (dist[w] == layer && flag[u]) flag[w] = true;
    }
  }

  std::vector<LandmarkLength> out(n);
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] == kInfDist) continue;
    out[v] = {dist[v], v != r && static_cast<bool>(flag[v])};
  }
  return out;
}

HighwayCoverLabelling minimal_labelling_bruteforce(const Graph& g, const LandmarkSet& landmarks) {
  HighwayCoverLabelling gamma(landmarks, g.num_vertices());
  for (LandmarkIndex i = 0; i < landmarks.size(); ++i) {
    const auto ld = landmark_distances(g, landmarks, landmarks[i]);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (const auto j = landmarks.index_of(v); j != LandmarkSet::kNone) {
        if (j != i) gamma.set_highway(i, j, ld[v].d);
      } else if (ld[v].d != kInfDist && !ld[v].via_landmark) {
        gamma.set_label(v, i, ld[v].d);
      }
    }
  }
  return gamma;
}

std::vector<Vertex> ld_affected_bruteforce(const Graph& g, const Graph& updated,
                                           const LandmarkSet& landmarks, Vertex r) {
  const auto before = landmark_distances(g, landmarks, r);
  const auto after = landmark_distances(updated, landmarks, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < updated.num_vertices(); ++v) {
    const LandmarkLength old_ld = v < before.size() ? before[v] : LandmarkLength{};
    if (old_ld != after[v]) out.push_back(v);
  }
  return out;
}

namespace {

// Oriented edges (x, y) lying on some shortest r-v path.
std::set<std::pair<Vertex, Vertex>> shortest_path_edges(const Graph& g, const std::vector<Dist>& from_r,
                                                        Vertex v) {
  std::set<std::pair<Vertex, Vertex>> edges;
  if (v >= g.num_vertices() || from_r[v] == kInfDist) return edges;
  const auto from_v = bfs_distances(g, v);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (from_r[x] == kInfDist) continue;
    for (Vertex y : g.neighbors(x)) {
      if (from_r[x] + 1 == from_r[y] && from_v[y] != kInfDist &&
          from_r[y] + from_v[y] == from_r[v]) {
        edges.emplace(x, y);
      }
    }
  }
  return edges;
}

}  // namespace

std::vector<Vertex> affected_bruteforce(const Graph& g, const Graph& updated, Vertex r) {
  const auto before = bfs_distances(g, r);
  const auto after = bfs_distances(updated, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < updated.num_vertices(); ++v) {
    const Dist old_d = v < before.size() ? before[v] : kInfDist;
    if (old_d != after[v] || shortest_path_edges(g, before, v) != shortest_path_edges(updated, after, v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex> unified_pattern_bruteforce(const Graph& g, const Graph& updated,
                                               const Batch& batch, Vertex r) {
  const auto from_r = bfs_distances(g, r);
  auto old_dist = [&](Vertex v) { return v < from_r.size() ? from_r[v] : kInfDist; };
  std::vector<bool> hit(updated.num_vertices(), false);
  for (const auto& up : batch.updates) {
    const Dist da = old_dist(up.u), db = old_dist(up.v);
    if (da == db) continue;
    const Vertex pre = da < db ? up.u : up.v;
    const Vertex anchor = da < db ? up.v : up.u;
    const Dist anchor_distance = old_dist(pre) + 1;
    const auto from_anchor = bfs_distances(updated, anchor);
    for (Vertex v = 0; v < updated.num_vertices(); ++v) {
      if (from_anchor[v] == kInfDist) continue;
      const Dist through = anchor_distance + from_anchor[v];
      if (old_dist(v) == kInfDist || old_dist(v) >= through) hit[v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < hit.size(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

Dist distance(const Graph& g, Vertex s, Vertex t) { return bfs_distances(g, s).at(t); }

}  // namespace batchhl::oracle
