#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"

namespace batchhl::fixtures {

// Worked example with two landmarks r1, r2; dense ids below match the external ids
// used in tests/data/worked.*.
namespace ex {
inline constexpr Vertex r1 = 0, r2 = 1, a = 2, b = 3, c = 4, d = 5, e = 6, f = 7, g = 8, h = 9, i = 10;
inline const char* const kNames[] = {"r1", "r2", "a", "b", "c", "d", "e", "f", "g", "h", "i"};
}  // namespace ex

inline Graph example_graph() {
  using namespace ex;
  Graph gr(11);
  const std::pair<Vertex, Vertex> edges[] = {{r1, a}, {r1, b}, {r1, c}, {r2, c}, {r2, d}, {r2, g},
                                             {b, e},  {d, i},  {f, g},  {g, h},  {h, i},  {r1, f}};
  for (auto [u, v] : edges) gr.add_edge(u, v);
  return gr;
}

inline std::vector<EdgeUpdate> example_updates() {
  using namespace ex;
  return {{r1, f, UpdateKind::Delete}, {r2, a, UpdateKind::Insert}, {e, f, UpdateKind::Insert}};
}

inline LandmarkSet example_landmarks() { return LandmarkSet({ex::r1, ex::r2}, 11); }

/// Per-vertex expected labels as (landmark index, distance); landmark 0 = r1, 1 = r2.
using LabelTable = std::vector<std::vector<LabelEntry>>;

inline LabelTable example_initial_labels() {
  LabelTable t(11);
  using namespace ex;
  t[a] = {{0, 1}};
  t[b] = {{0, 1}};
  t[c] = {{0, 1}, {1, 1}};
  t[d] = {{1, 1}};
  t[e] = {{0, 2}};
  t[f] = {{0, 1}, {1, 2}};
  t[g] = {{0, 2}, {1, 1}};
  t[h] = {{0, 3}, {1, 2}};
  t[i] = {{1, 2}};
  return t;
}

inline LabelTable example_final_labels() {
  LabelTable t(11);
  using namespace ex;
  t[a] = {{0, 1}, {1, 1}};
  t[b] = {{0, 1}};
  t[c] = {{0, 1}, {1, 1}};
  t[d] = {{1, 1}};
  t[e] = {{0, 2}, {1, 3}};
  t[f] = {{0, 3}, {1, 2}};
  t[g] = {{1, 1}};
  t[h] = {{1, 2}};
  t[i] = {{1, 2}};
  return t;
}

inline bool labels_match(const HighwayCoverLabelling& gamma, const LabelTable& expected) {
  if (gamma.num_vertices() != expected.size()) return false;
  for (Vertex v = 0; v < expected.size(); ++v) {
    auto got = gamma.label(v);
    if (!std::equal(got.begin(), got.end(), expected[v].begin(), expected[v].end())) return false;
  }
  return true;
}

// Path-shaped example with a single landmark r and four mixed updates.
namespace fig2 {
inline constexpr Vertex r = 0, a = 1, b = 2, c = 3, d = 4, e = 5, f = 6, g = 7;
}

inline Graph fig2_graph() {
  using namespace fig2;
  Graph gr(8);
  const std::pair<Vertex, Vertex> edges[] = {{r, a}, {b, c}, {c, d}, {e, f}, {f, g}, {b, e}, {a, c}};
  for (auto [u, v] : edges) gr.add_edge(u, v);
  return gr;
}

inline std::vector<EdgeUpdate> fig2_updates() {
  using namespace fig2;
  return {{a, b, UpdateKind::Insert}, {d, e, UpdateKind::Insert}, {b, e, UpdateKind::Delete},
          {a, c, UpdateKind::Delete}};
}

}  // namespace batchhl::fixtures
