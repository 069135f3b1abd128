#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"
#include "batchhl/types.hpp"

namespace batchhl {

/// Search start derived from one non-trivial update: the endpoint farther from r
/// (anchor) reached through the nearer one (pre-anchor).
struct AnchorSeed {
  Vertex anchor = 0;
  Dist anchor_distance = kInfDist;  // d_G(r, pre-anchor) + 1
  bool deleted = false;
  bool landmark_flag = false;       // flag of d^L_G(r, pre-anchor) (+) anchor

  ExtendedLandmarkLength key() const noexcept { return {anchor_distance, landmark_flag, deleted}; }
  friend bool operator==(const AnchorSeed&, const AnchorSeed&) = default;
};

/// Vertices returned by a batch search for one landmark, ascending.
struct AffectedSet {
  std::vector<Vertex> members;

  bool contains(Vertex v) const noexcept;
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
  friend bool operator==(const AffectedSet&, const AffectedSet&) = default;
};

/// Result of repairing one landmark: final r-label per affected non-landmark
/// (kInfDist meaning "no label") and final highway entries for affected landmarks.
struct LandmarkDelta {
  LandmarkIndex landmark = 0;
  std::vector<std::pair<Vertex, Dist>> labels;
  std::vector<std::pair<LandmarkIndex, Dist>> highway;
};

/// Optional record of a repair run, for inspection in tests.
struct RepairTrace {
  std::vector<std::pair<Vertex, LandmarkLength>> initial_bounds;  // ascending vertex
  std::vector<std::pair<Vertex, LandmarkLength>> settled;         // settlement order
};

enum class SearchVariant { Basic, Improved };

const char* to_string(SearchVariant v) noexcept;

/// beta(r, v) = (d^L_G(r, v), True): the pruning threshold of the improved search.
ExtendedLandmarkLength beta(const HighwayCoverLabelling& gamma, LandmarkIndex r, Vertex v) noexcept;

/// One seed per update whose endpoints sit at different distances from r in the old
/// graph; distances come from gamma.
std::vector<AnchorSeed> anchor_seeds(const HighwayCoverLabelling& gamma, const Batch& batch,
                                     LandmarkIndex r);

/// Best-first search from the anchors over the updated graph, pruning when the path
/// length exceeds the old distance. Returns every vertex whose set of shortest paths
/// to r changes, plus vertices that some path made of an old prefix and a new suffix
/// reaches within their old distance (e.g. past a deleted edge into an inserted one).
AffectedSet batch_search_basic(const Graph& updated, const Batch& batch, LandmarkIndex r,
                               const HighwayCoverLabelling& gamma);

/// Best-first search over extended landmark lengths, pruning against beta. Returns a
/// superset of the vertices whose landmark distance to r changes (the LD-affected
/// ones) and a subset of the basic search's result.
AffectedSet batch_search_improved(const Graph& updated, const Batch& batch, LandmarkIndex r,
                                  const HighwayCoverLabelling& gamma);

/// Recomputes landmark distances of `affected` in the updated graph from their
/// unaffected neighbours, settling vertices in order of distance bound. Reads only
/// `old_gamma`; `affected` must contain every LD-affected vertex.
LandmarkDelta batch_repair(const Graph& updated, const AffectedSet& affected, LandmarkIndex r,
                           const HighwayCoverLabelling& old_gamma, RepairTrace* trace = nullptr);

/// Writes a repair result into a labelling.
void apply_delta(HighwayCoverLabelling& gamma, const LandmarkDelta& delta);

struct UpdateOptions {
  SearchVariant variant = SearchVariant::Improved;
  unsigned workers = 1;
};

struct UpdateReport {
  std::vector<std::size_t> affected;  // per landmark index
  std::size_t label_writes = 0;

  std::size_t total_affected() const noexcept;
};

namespace detail {
struct Workspace;
}

/// Maintains a labelling across batches, reusing per-worker scratch between calls.
///
/// Every landmark's search and repair reads the pre-batch labelling only; their
/// results are merged in landmark order afterwards, so the outcome is identical for
/// any worker count.
class BatchUpdater {
 public:
  explicit BatchUpdater(UpdateOptions options = {});
  ~BatchUpdater();
  BatchUpdater(BatchUpdater&&) noexcept;
  BatchUpdater& operator=(BatchUpdater&&) noexcept;

  const UpdateOptions& options() const noexcept { return options_; }

  /// `updated` must equal apply_batch(G, batch) where gamma is the labelling of G.
  /// gamma is updated in place to the minimal labelling of `updated`.
  UpdateReport apply(const Graph& updated, const Batch& batch, HighwayCoverLabelling& gamma);

 private:
  UpdateOptions options_;
  std::vector<std::unique_ptr<detail::Workspace>> workspaces_;
};

HighwayCoverLabelling batch_update(const Graph& updated, const Batch& batch,
                                   const HighwayCoverLabelling& gamma,
                                   SearchVariant variant = SearchVariant::Improved,
                                   UpdateReport* report = nullptr);

HighwayCoverLabelling batch_update_parallel(const Graph& updated, const Batch& batch,
                                            const HighwayCoverLabelling& gamma, unsigned workers,
                                            SearchVariant variant = SearchVariant::Improved,
                                            UpdateReport* report = nullptr);

}  // namespace batchhl
