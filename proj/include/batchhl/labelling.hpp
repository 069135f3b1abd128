#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "batchhl/graph.hpp"
#include "batchhl/types.hpp"

namespace batchhl {

/// Ordered landmark list plus a dense vertex -> landmark-index lookup.
class LandmarkSet {
 public:
  static constexpr LandmarkIndex kNone = static_cast<LandmarkIndex>(-1);

  LandmarkSet() = default;
  /// Throws std::invalid_argument on duplicates or ids >= num_vertices.
  LandmarkSet(std::vector<Vertex> landmarks, std::size_t num_vertices);

  std::size_t size() const noexcept { return landmarks_.size(); }
  bool empty() const noexcept { return landmarks_.empty(); }
  Vertex operator[](LandmarkIndex i) const noexcept { return landmarks_[i]; }
  std::span<const Vertex> vertices() const noexcept { return landmarks_; }

  bool contains(Vertex v) const noexcept { return v < rank_.size() && rank_[v] != kNone; }
  LandmarkIndex index_of(Vertex v) const noexcept { return v < rank_.size() ? rank_[v] : kNone; }

  void grow(std::size_t num_vertices);

  friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;

 private:
  std::vector<Vertex> landmarks_;
  std::vector<LandmarkIndex> rank_;
};

struct LabelEntry {
  LandmarkIndex landmark = 0;
  Dist distance = 0;

  friend auto operator<=>(const LabelEntry&, const LabelEntry&) = default;
};

/// Highway (landmark-to-landmark distances) plus per-vertex partial labels.
///
/// Labels are kept sorted by landmark index and never hold infinite distances.
/// Vertices beyond num_vertices() read as unlabelled, so a labelling of G can be
/// consulted for ids that only exist in an updated graph.
class HighwayCoverLabelling {
 public:
  HighwayCoverLabelling() = default;
  /// Empty labels, highway with zero diagonal and infinite off-diagonal entries.
  HighwayCoverLabelling(LandmarkSet landmarks, std::size_t num_vertices);

  const LandmarkSet& landmarks() const noexcept { return landmarks_; }
  std::size_t num_landmarks() const noexcept { return landmarks_.size(); }
  std::size_t num_vertices() const noexcept { return labels_.size(); }

  Dist highway(LandmarkIndex i, LandmarkIndex j) const noexcept {
    return highway_[static_cast<std::size_t>(i) * landmarks_.size() + j];
  }
  std::span<const Dist> highway_row(LandmarkIndex i) const noexcept {
    return {highway_.data() + static_cast<std::size_t>(i) * landmarks_.size(), landmarks_.size()};
  }
  /// Writes both (i,j) and (j,i).
  void set_highway(LandmarkIndex i, LandmarkIndex j, Dist d);

  std::span<const LabelEntry> label(Vertex v) const noexcept {
    if (v >= labels_.size()) return {};
    return labels_[v];
  }
  std::optional<Dist> label_entry(Vertex v, LandmarkIndex i) const noexcept;

  /// Inserts or overwrites the i-label of v. d must be finite and v not a landmark.
  void set_label(Vertex v, LandmarkIndex i, Dist d);
  void erase_label(Vertex v, LandmarkIndex i);

  /// Extends the vertex set with unlabelled vertices.
  void grow(std::size_t num_vertices);

  friend bool operator==(const HighwayCoverLabelling&, const HighwayCoverLabelling&) = default;

 private:
  LandmarkSet landmarks_;
  std::vector<Dist> highway_;
  std::vector<std::vector<LabelEntry>> labels_;
};

/// The k highest-degree vertices, ties broken by smaller id, listed in selection order.
/// Throws std::invalid_argument if k == 0 or k > n.
LandmarkSet select_landmarks(const Graph& g, std::size_t k);

/// Minimal highway cover labelling: one BFS per landmark with a layer-wise flag DP
/// recording whether some shortest path runs through another landmark. Landmarks
/// are processed on up to `workers` threads; the result does not depend on it.
HighwayCoverLabelling build(const Graph& g, const LandmarkSet& landmarks, unsigned workers = 1);

/// d_G(r_i, v) decoded from the labelling: highway lookup for landmarks, otherwise
/// min over v's entries (r_j, d) of d + highway(i, j).
Dist label_distance(const HighwayCoverLabelling& gamma, LandmarkIndex i, Vertex v) noexcept;

/// Landmark distance d^L(r_i, v). Landmarks other than r_i count as lying on their
/// own path, so they read as (highway, True); r_i itself is (0, False).
LandmarkLength landmark_distance(const HighwayCoverLabelling& gamma, LandmarkIndex i,
                                 Vertex v) noexcept;

/// Total number of label entries.
std::size_t labelling_size(const HighwayCoverLabelling& gamma) noexcept;

LandmarkLength oplus(LandmarkLength ll, Vertex w, const LandmarkSet& landmarks) noexcept;

}  // namespace batchhl
