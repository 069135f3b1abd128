#include "batchhl/labelling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace batchhl {

LandmarkSet::LandmarkSet(std::vector<Vertex> landmarks, std::size_t num_vertices)
    : landmarks_(std::move(landmarks)), rank_(num_vertices, kNone) {
  for (LandmarkIndex i = 0; i < landmarks_.size(); ++i) {
    const Vertex v = landmarks_[i];
    if (v >= num_vertices) {
      throw std::invalid_argument("landmark " + std::to_string(v) + " out of range");
    }
    if (rank_[v] != kNone) {
      throw std::invalid_argument("duplicate landmark " + std::to_string(v));
    }
    rank_[v] = i;
  }
}

void LandmarkSet::grow(std::size_t num_vertices) {
  if (num_vertices > rank_.size()) rank_.resize(num_vertices, kNone);
}

HighwayCoverLabelling::HighwayCoverLabelling(LandmarkSet landmarks, std::size_t num_vertices)
    : landmarks_(std::move(landmarks)),
      highway_(landmarks_.size() * landmarks_.size(), kInfDist),
      labels_(num_vertices) {
  landmarks_.grow(num_vertices);
  for (std::size_t i = 0; i < landmarks_.size(); ++i) highway_[i * landmarks_.size() + i] = 0;
}

void HighwayCoverLabelling::set_highway(LandmarkIndex i, LandmarkIndex j, Dist d) {
  const auto k = landmarks_.size();
  highway_[static_cast<std::size_t>(i) * k + j] = d;
  highway_[static_cast<std::size_t>(j) * k + i] = d;
}

std::optional<Dist> HighwayCoverLabelling::label_entry(Vertex v, LandmarkIndex i) const noexcept {
  auto entries = label(v);
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const LabelEntry& e, LandmarkIndex idx) { return e.landmark < idx; });
  if (it == entries.end() || it->landmark != i) return std::nullopt;
  return it->distance;
}

void HighwayCoverLabelling::set_label(Vertex v, LandmarkIndex i, Dist d) {
  if (!is_finite(d)) throw std::invalid_argument("label distance must be finite");
  if (landmarks_.contains(v)) throw std::invalid_argument("landmarks carry no labels");
  grow(static_cast<std::size_t>(v) + 1);
  auto& entries = labels_[v];
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const LabelEntry& e, LandmarkIndex idx) { return e.landmark < idx; });
  if (it != entries.end() && it->landmark == i) {
    it->distance = d;
  } else {
    entries.insert(it, LabelEntry{i, d});
  }
}

void HighwayCoverLabelling::erase_label(Vertex v, LandmarkIndex i) {
  if (v >= labels_.size()) return;
  auto& entries = labels_[v];
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const LabelEntry& e, LandmarkIndex idx) { return e.landmark < idx; });
  if (it != entries.end() && it->landmark == i) entries.erase(it);
}

void HighwayCoverLabelling::grow(std::size_t num_vertices) {
  if (num_vertices > labels_.size()) labels_.resize(num_vertices);
  landmarks_.grow(num_vertices);
}

LandmarkSet select_landmarks(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (k > n) throw std::invalid_argument("k > n");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&g](Vertex a, Vertex b) {
                      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                      return a < b;
                    });
  order.resize(k);
  return LandmarkSet(std::move(order), n);
}

namespace {

struct LandmarkColumn {
  std::vector<Dist> dist;
  std::vector<char> via_landmark;
};

// BFS from landmark r; via_landmark[v] is OR over shortest-path predecessors u of
// (via_landmark[u] or u is a landmark other than r). A vertex's predecessors are all
// dequeued before it is, so its flag is final when it is expanded.
void landmark_bfs(const Graph& g, const LandmarkSet& landmarks, Vertex root, LandmarkColumn& col) {
  const std::size_t n = g.num_vertices();
  col.dist.assign(n, kInfDist);
  col.via_landmark.assign(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  col.dist[root] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Dist next = col.dist[u] + 1;
    const char carried = col.via_landmark[u] || (u != root && landmarks.contains(u));
    for (Vertex w : g.adjacency(u)) {
      if (col.dist[w] == kInfDist) {
        col.dist[w] = next;
        col.via_landmark[w] = carried;
        queue.push_back(w);
      } else if (col.dist[w] == next) {
        col.via_landmark[w] = col.via_landmark[w] || carried;
      }
    }
  }
}

}  // namespace

HighwayCoverLabelling build(const Graph& g, const LandmarkSet& landmarks, unsigned workers) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = landmarks.size();
  for (Vertex r : landmarks.vertices()) {
    if (r >= n) throw std::invalid_argument("landmark outside graph");
  }
  LandmarkSet lm = landmarks;
  lm.grow(n);
  HighwayCoverLabelling gamma(lm, n);

  std::vector<LandmarkColumn> columns(k);
  detail::parallel_tasks(k, workers, [&](unsigned, std::size_t i) {
    landmark_bfs(g, lm, lm[static_cast<LandmarkIndex>(i)], columns[i]);
  });

  for (LandmarkIndex i = 0; i < k; ++i) {
    for (LandmarkIndex j = 0; j < k; ++j) {
      if (i != j) gamma.set_highway(i, j, columns[i].dist[lm[j]]);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (lm.contains(v)) continue;
    for (LandmarkIndex i = 0; i < k; ++i) {
      if (is_finite(columns[i].dist[v]) && !columns[i].via_landmark[v]) {
        gamma.set_label(v, i, columns[i].dist[v]);
      }
    }
  }
  return gamma;
}

Dist label_distance(const HighwayCoverLabelling& gamma, LandmarkIndex i, Vertex v) noexcept {
  const auto& lm = gamma.landmarks();
  if (const auto j = lm.index_of(v); j != LandmarkSet::kNone) return gamma.highway(i, j);
  const auto row = gamma.highway_row(i);
  Dist best = kInfDist;
  for (const auto& e : gamma.label(v)) {
    best = std::min(best, dist_add(e.distance, row[e.landmark]));
  }
  return best;
}

LandmarkLength landmark_distance(const HighwayCoverLabelling& gamma, LandmarkIndex i,
                                 Vertex v) noexcept {
  const auto& lm = gamma.landmarks();
  if (const auto j = lm.index_of(v); j != LandmarkSet::kNone) {
    if (j == i) return {0, false};
    const Dist d = gamma.highway(i, j);
    return {d, is_finite(d)};
  }
  const Dist d = label_distance(gamma, i, v);
  if (!is_finite(d)) return {kInfDist, false};
  return {d, !gamma.label_entry(v, i).has_value()};
}

std::size_t labelling_size(const HighwayCoverLabelling& gamma) noexcept {
  std::size_t total = 0;
  for (Vertex v = 0; v < gamma.num_vertices(); ++v) total += gamma.label(v).size();
  return total;
}

LandmarkLength oplus(LandmarkLength ll, Vertex w, const LandmarkSet& landmarks) noexcept {
  return extend(ll, landmarks.contains(w));
}

}  // namespace batchhl
