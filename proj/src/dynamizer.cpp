#include "batchhl/dynamizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "bucket_queue.hpp"
#include "parallel.hpp"

namespace batchhl {

namespace detail {

/// Per-worker scratch. Membership arrays are epoch-stamped so starting a new
/// landmark costs O(1) instead of O(n).
struct Workspace {
  std::vector<std::uint32_t> member;
  std::vector<std::uint32_t> live;
  std::vector<LandmarkLength> bound;
  std::uint32_t epoch = 0;
  BucketQueue<Vertex, 1> basic_queue;
  BucketQueue<Vertex, 4> improved_queue;
  BucketQueue<Vertex, 1> repair_queue;

  void begin(std::size_t n) {
    if (member.size() < n) {
      member.resize(n, 0);
      live.resize(n, 0);
      bound.resize(n);
    }
    if (++epoch == 0) {
      std::fill(member.begin(), member.end(), 0);
      std::fill(live.begin(), live.end(), 0);
      epoch = 1;
    }
    basic_queue.clear();
    improved_queue.clear();
    repair_queue.clear();
  }
};

}  // namespace detail

namespace {

using detail::Workspace;

constexpr unsigned key_class(bool via_landmark, bool via_deleted) noexcept {
  return static_cast<unsigned>(flag_rank(via_landmark) * 2 + flag_rank(via_deleted));
}

AffectedSet finish(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  return AffectedSet{std::move(members)};
}

AffectedSet search_basic(Workspace& ws, const Graph& g, const Batch& batch, LandmarkIndex r,
                         const HighwayCoverLabelling& gamma) {
  ws.begin(g.num_vertices());
  auto& q = ws.basic_queue;
  for (const auto& seed : anchor_seeds(gamma, batch, r)) q.push(seed.anchor_distance, 0, seed.anchor);

  std::vector<Vertex> found;
  while (!q.empty()) {
    const auto [d, cls, v] = q.pop();
    if (ws.member[v] == ws.epoch) continue;
    ws.member[v] = ws.epoch;
    found.push_back(v);
    for (Vertex w : g.adjacency(v)) {
      if (ws.member[w] == ws.epoch) continue;
      if (d + 1 <= label_distance(gamma, r, w)) q.push(d + 1, 0, w);
    }
  }
  return finish(std::move(found));
}

AffectedSet search_improved(Workspace& ws, const Graph& g, const Batch& batch, LandmarkIndex r,
                            const HighwayCoverLabelling& gamma) {
  ws.begin(g.num_vertices());
  auto& q = ws.improved_queue;
  const auto& lm = gamma.landmarks();
  for (const auto& seed : anchor_seeds(gamma, batch, r)) {
    const auto key = seed.key();
    if (key <= beta(gamma, r, seed.anchor)) {
      q.push(key.d, key_class(key.via_landmark, key.via_deleted), seed.anchor);
    }
  }

  std::vector<Vertex> found;
  while (!q.empty()) {
    const auto [d, cls, v] = q.pop();
    if (ws.member[v] == ws.epoch) continue;
    ws.member[v] = ws.epoch;
    found.push_back(v);
    const LandmarkLength here{d, cls < 2};
    const bool via_deleted = cls % 2 == 0;
    for (Vertex w : g.adjacency(v)) {
      if (ws.member[w] == ws.epoch) continue;
      const auto ext = extend(here, lm.contains(w));
      const ExtendedLandmarkLength key{ext.d, ext.via_landmark, via_deleted};
      if (key <= beta(gamma, r, w)) q.push(key.d, key_class(key.via_landmark, key.via_deleted), w);
    }
  }
  return finish(std::move(found));
}

LandmarkDelta repair(Workspace& ws, const Graph& g, const AffectedSet& affected, LandmarkIndex r,
                     const HighwayCoverLabelling& gamma, RepairTrace* trace) {
  ws.begin(g.num_vertices());
  const auto& lm = gamma.landmarks();
  const Vertex root = lm[r];
  LandmarkDelta delta;
  delta.landmark = r;

  for (Vertex v : affected.members) {
    if (v != root) ws.live[v] = ws.epoch;
  }

  // Bounds from neighbours outside the affected set, whose landmark distance is
  // unchanged and therefore readable from the old labelling.
  auto& q = ws.repair_queue;
  for (Vertex v : affected.members) {
    if (v == root) continue;
    LandmarkLength b;
    const bool v_is_landmark = lm.contains(v);
    for (Vertex w : g.adjacency(v)) {
      if (ws.live[w] == ws.epoch) continue;
      b = std::min(b, extend(landmark_distance(gamma, r, w), v_is_landmark));
    }
    ws.bound[v] = b;
    if (is_finite(b.d)) q.push(b.d, 0, v);
    if (trace) trace->initial_bounds.emplace_back(v, b);
  }

  auto settle = [&](Vertex v) {
    const LandmarkLength b = ws.bound[v];
    if (const auto j = lm.index_of(v); j != LandmarkSet::kNone) {
      delta.highway.emplace_back(j, b.d);
    } else {
      delta.labels.emplace_back(v, is_finite(b.d) && !b.via_landmark ? b.d : kInfDist);
    }
    if (trace) trace->settled.emplace_back(v, b);
  };

  std::vector<Vertex> minimal;
  while (!q.empty()) {
    const Dist d = q.min_distance();
    minimal.clear();
    while (!q.empty() && q.min_distance() == d) {
      const Vertex v = q.pop().item;
      if (ws.live[v] == ws.epoch && ws.bound[v].d == d) {
        ws.live[v] = 0;
        minimal.push_back(v);
      }
    }
    for (Vertex v : minimal) {
      settle(v);
      for (Vertex w : g.adjacency(v)) {
        if (ws.live[w] != ws.epoch) continue;
        const auto relaxed = extend(ws.bound[v], lm.contains(w));
        if (relaxed < ws.bound[w]) {
          if (relaxed.d < ws.bound[w].d) q.push(relaxed.d, 0, w);
          ws.bound[w] = relaxed;
        }
      }
    }
  }
  // Whatever is left never got a finite bound: cut off from r in the updated graph.
  for (Vertex v : affected.members) {
    if (ws.live[v] == ws.epoch) {
      ws.live[v] = 0;
      settle(v);
    }
  }
  return delta;
}

}  // namespace

bool AffectedSet::contains(Vertex v) const noexcept {
  return std::binary_search(members.begin(), members.end(), v);
}

const char* to_string(SearchVariant v) noexcept {
  return v == SearchVariant::Basic ? "basic" : "improved";
}

ExtendedLandmarkLength beta(const HighwayCoverLabelling& gamma, LandmarkIndex r, Vertex v) noexcept {
  const auto ld = landmark_distance(gamma, r, v);
  return {ld.d, ld.via_landmark, true};
}

std::vector<AnchorSeed> anchor_seeds(const HighwayCoverLabelling& gamma, const Batch& batch,
                                     LandmarkIndex r) {
  const auto& lm = gamma.landmarks();
  std::vector<AnchorSeed> seeds;
  for (const auto& up : batch.updates) {
    const Dist du = label_distance(gamma, r, up.u);
    const Dist dv = label_distance(gamma, r, up.v);
    if (du == dv) continue;
    const Vertex pre = du < dv ? up.u : up.v;
    const Vertex anchor = du < dv ? up.v : up.u;
    const auto reach = extend(landmark_distance(gamma, r, pre), lm.contains(anchor));
    seeds.push_back({anchor, reach.d, up.deleted(), reach.via_landmark});
  }
  return seeds;
}

AffectedSet batch_search_basic(const Graph& updated, const Batch& batch, LandmarkIndex r,
                               const HighwayCoverLabelling& gamma) {
  Workspace ws;
  return search_basic(ws, updated, batch, r, gamma);
}

AffectedSet batch_search_improved(const Graph& updated, const Batch& batch, LandmarkIndex r,
                                  const HighwayCoverLabelling& gamma) {
  Workspace ws;
  return search_improved(ws, updated, batch, r, gamma);
}

LandmarkDelta batch_repair(const Graph& updated, const AffectedSet& affected, LandmarkIndex r,
                           const HighwayCoverLabelling& old_gamma, RepairTrace* trace) {
  Workspace ws;
  return repair(ws, updated, affected, r, old_gamma, trace);
}

void apply_delta(HighwayCoverLabelling& gamma, const LandmarkDelta& delta) {
  for (const auto& [v, d] : delta.labels) {
    if (is_finite(d)) {
      gamma.set_label(v, delta.landmark, d);
    } else {
      gamma.erase_label(v, delta.landmark);
    }
  }
  for (const auto& [j, d] : delta.highway) gamma.set_highway(delta.landmark, j, d);
}

std::size_t UpdateReport::total_affected() const noexcept {
  std::size_t total = 0;
  for (auto a : affected) total += a;
  return total;
}

BatchUpdater::BatchUpdater(UpdateOptions options) : options_(options) {
  if (options_.workers == 0) throw std::invalid_argument("workers must be at least 1");
}
BatchUpdater::~BatchUpdater() = default;
BatchUpdater::BatchUpdater(BatchUpdater&&) noexcept = default;
BatchUpdater& BatchUpdater::operator=(BatchUpdater&&) noexcept = default;

UpdateReport BatchUpdater::apply(const Graph& updated, const Batch& batch,
                                 HighwayCoverLabelling& gamma) {
  gamma.grow(updated.num_vertices());
  const std::size_t k = gamma.num_landmarks();
  while (workspaces_.size() < options_.workers) {
    workspaces_.push_back(std::make_unique<Workspace>());
  }

  UpdateReport report;
  report.affected.assign(k, 0);
  std::vector<LandmarkDelta> deltas(k);
  if (!batch.empty()) {
    detail::parallel_tasks(k, options_.workers, [&](unsigned worker, std::size_t task) {
      auto& ws = *workspaces_[worker];
      const auto r = static_cast<LandmarkIndex>(task);
      const auto affected = options_.variant == SearchVariant::Basic
                                ? search_basic(ws, updated, batch, r, gamma)
                                : search_improved(ws, updated, batch, r, gamma);
      report.affected[task] = affected.size();
      deltas[task] = repair(ws, updated, affected, r, gamma, nullptr);
    });
  }

  // Both endpoints' tasks may report the same highway entry; they must agree.
  std::map<std::pair<LandmarkIndex, LandmarkIndex>, Dist> highway_writes;
  for (const auto& delta : deltas) {
    for (const auto& [j, d] : delta.highway) {
      const auto key = std::minmax(delta.landmark, j);
      auto [it, fresh] = highway_writes.try_emplace({key.first, key.second}, d);
      if (!fresh && it->second != d) {
        throw std::logic_error("conflicting highway repairs for landmarks " +
                               std::to_string(key.first) + "," + std::to_string(key.second));
      }
    }
    report.label_writes += delta.labels.size();
    apply_delta(gamma, delta);
  }
  return report;
}

HighwayCoverLabelling batch_update(const Graph& updated, const Batch& batch,
                                   const HighwayCoverLabelling& gamma, SearchVariant variant,
                                   UpdateReport* report) {
  return batch_update_parallel(updated, batch, gamma, 1, variant, report);
}

HighwayCoverLabelling batch_update_parallel(const Graph& updated, const Batch& batch,
                                            const HighwayCoverLabelling& gamma, unsigned workers,
                                            SearchVariant variant, UpdateReport* report) {
  HighwayCoverLabelling out = gamma;
  BatchUpdater updater({variant, workers});
  auto r = updater.apply(updated, batch, out);
  if (report) *report = std::move(r);
  return out;
}

}  // namespace batchhl
