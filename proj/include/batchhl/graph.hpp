#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "batchhl/types.hpp"

namespace batchhl {

enum class UpdateKind : std::uint8_t { Insert, Delete };

struct EdgeUpdate {
  Vertex u = 0;
  Vertex v = 0;
  UpdateKind kind = UpdateKind::Insert;

  bool deleted() const noexcept { return kind == UpdateKind::Delete; }
  friend bool operator==(const EdgeUpdate&, const EdgeUpdate&) = default;
};

/// Updates that are valid against a specific graph, free of duplicates and
/// insert/delete cancellations. Produced by normalize_batch().
struct Batch {
  std::vector<EdgeUpdate> updates;

  bool empty() const noexcept { return updates.empty(); }
  std::size_t size() const noexcept { return updates.size(); }
  std::size_t count(UpdateKind kind) const noexcept;
  friend bool operator==(const Batch&, const Batch&) = default;
};

/// Undirected, unweighted simple graph over dense ids 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices) : adj_(num_vertices) {}

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return edges_; }

  /// Sorted neighbours of v. Throws std::out_of_range for v >= n.
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Unchecked variant for inner loops.
  std::span<const Vertex> adjacency(Vertex v) const noexcept { return adj_[v]; }

  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Adds {u,v}, growing the vertex set if needed. Returns false for self-loops and
  /// edges already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  /// Grows the vertex set to at least n isolated vertices; never shrinks.
  void grow(std::size_t n);

  /// Applies a normalized batch in place.
  void apply(const Batch& batch);

  /// Throws std::logic_error if symmetry, sortedness, self-loop or edge-count
  /// invariants are broken.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

/// Bidirectional mapping between external vertex ids and dense ids.
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(std::vector<std::int64_t> externals);

  /// Dense id for ext, allocating the next id on first sight.
  Vertex intern(std::int64_t ext);
  std::optional<Vertex> find(std::int64_t ext) const;
  std::int64_t external(Vertex v) const { return to_external_.at(v); }
  std::size_t size() const noexcept { return to_external_.size(); }
  const std::vector<std::int64_t>& externals() const noexcept { return to_external_; }

 private:
  std::vector<std::int64_t> to_external_;
  std::unordered_map<std::int64_t, Vertex> to_dense_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  IdMap ids;
};

/// Reads "u v" lines ('#' comments and blank lines allowed, extra columns ignored).
/// Ids are densely remapped in first-appearance order, continuing from `seed` when
/// given. Self-loops and duplicate edges are dropped.
LoadedGraph load_edge_list(std::istream& in, IdMap seed = {});

/// Writes one "u v" line per edge using external ids, u < v by dense id.
void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids);

/// Reads "+ u v" / "- u v" lines. Unknown external ids in insertions are interned
/// (new vertices); deletions that mention unknown ids cannot be valid and are skipped.
std::vector<EdgeUpdate> read_batch(std::istream& in, IdMap& ids);

/// Reads "u v" query pairs; unknown ids raise ParseError naming the id.
std::vector<std::pair<Vertex, Vertex>> read_pairs(std::istream& in, const IdMap& ids);

/// Drops self-loops, edges both inserted and deleted in `raw`, updates that are
/// invalid against g, and repeats. Survivors keep their relative order.
Batch normalize_batch(const Graph& g, std::span<const EdgeUpdate> raw);

Graph apply_batch(const Graph& g, const Batch& batch);

/// Flips every update's kind; the result is normalized against apply_batch(g, b).
Batch inverse(const Batch& batch);

}  // namespace batchhl
