#include <doctest.h>

#include "batchhl/labelling.hpp"
#include "batchhl/oracle.hpp"
#include "fixtures.hpp"
#include "printing.hpp"
#include "instances.hpp"

using namespace batchhl;
namespace fx = batchhl::fixtures;
using namespace fx::ex;

TEST_CASE("select_landmarks orders by degree, ties by id") {
  Graph star(6);
  for (Vertex leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
  const auto hub = select_landmarks(star, 1);
  CHECK(hub.size() == 1);
  CHECK(hub[0] == 0);

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto lm = select_landmarks(path, 2);
  CHECK(lm[0] == 1);
  CHECK(lm[1] == 0);
  CHECK(lm.index_of(0) == 1);
  CHECK_THROWS_AS(select_landmarks(path, 4), std::invalid_argument);
  CHECK_THROWS_AS(select_landmarks(Graph{}, 1), std::invalid_argument);

  const auto ex_lm = select_landmarks(fx::example_graph(), 2);
  CHECK(ex_lm[0] == r1);
  CHECK(ex_lm[1] == r2);
}

TEST_CASE("LandmarkSet rejects duplicates and out-of-range ids") {
  CHECK_THROWS_AS(LandmarkSet({1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(LandmarkSet({3}, 3), std::invalid_argument);
}

TEST_CASE("build reproduces the worked example's initial labelling") {
  const auto gamma = build(fx::example_graph(), fx::example_landmarks());
  CHECK(gamma.highway(0, 1) == 2);
  CHECK(gamma.highway(1, 0) == 2);
  CHECK(fx::labels_match(gamma, fx::example_initial_labels()));
  CHECK(labelling_size(gamma) == 13);
  CHECK(gamma.label(r1).empty());
  CHECK(gamma.label(r2).empty());
}

TEST_CASE("label_distance decodes through the highway") {
  const auto gamma = build(fx::example_graph(), fx::example_landmarks());
  CHECK(label_distance(gamma, 0, d) == 3);
  CHECK(label_distance(gamma, 0, r1) == 0);
  CHECK(label_distance(gamma, 0, r2) == 2);

  // Single landmark r on the path-shaped example.
  const auto g2 = fx::fig2_graph();
  const auto gamma2 = build(g2, LandmarkSet({fx::fig2::r}, 8));
  const Dist expected[] = {1, 3, 2, 3, 4, 5, 6};
  for (Vertex v = 1; v < 8; ++v) CHECK(label_distance(gamma2, 0, v) == expected[v - 1]);
  CHECK(labelling_size(gamma2) == 7);
}

TEST_CASE("landmark_distance flags paths through other landmarks") {
  const auto gamma = build(fx::example_graph(), fx::example_landmarks());
  CHECK(landmark_distance(gamma, 0, i) == LandmarkLength{4, true});
  CHECK(landmark_distance(gamma, 0, b) == LandmarkLength{1, false});
  CHECK(landmark_distance(gamma, 0, r2) == LandmarkLength{2, true});
  CHECK(landmark_distance(gamma, 0, r1) == LandmarkLength{0, false});

  Graph split(3);
  split.add_edge(0, 1);
  const auto gs = build(split, LandmarkSet({0}, 3));
  CHECK(landmark_distance(gs, 0, 2) == LandmarkLength{kInfDist, false});
  CHECK(label_distance(gs, 0, 2) == kInfDist);
}

TEST_CASE("oplus") {
  const auto lm = fx::example_landmarks();
  CHECK(oplus({1, false}, a, lm) == LandmarkLength{2, false});
  CHECK(oplus({1, false}, r2, lm) == LandmarkLength{2, true});
  CHECK(oplus({2, true}, g, lm) == LandmarkLength{3, true});
  CHECK(oplus({kInfDist, true}, a, lm) == LandmarkLength{kInfDist, true});
  CHECK(LandmarkLength{3, true} < LandmarkLength{3, false});
  CHECK(LandmarkLength{2, false} < LandmarkLength{3, true});
}

TEST_CASE("build matches the brute-force minimal labelling and BFS distances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = fx::random_instance(seed);
    const auto gamma = build(inst.graph, inst.landmarks);
    REQUIRE(gamma == oracle::minimal_labelling_bruteforce(inst.graph, inst.landmarks));
    for (LandmarkIndex r = 0; r < inst.landmarks.size(); ++r) {
      const auto bfs = oracle::bfs_distances(inst.graph, inst.landmarks[r]);
      const auto ld = oracle::landmark_distances(inst.graph, inst.landmarks, inst.landmarks[r]);
      for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
        CHECK(label_distance(gamma, r, v) == bfs[v]);
        CHECK(landmark_distance(gamma, r, v) == ld[v]);
        // Label presence agrees with the landmark flag.
        if (!inst.landmarks.contains(v)) {
          CHECK(gamma.label_entry(v, r).has_value() == (is_finite(ld[v].d) && !ld[v].via_landmark));
        }
      }
    }
    for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) CHECK(gamma.label(v).size() <= inst.landmarks.size());
  }
}

TEST_CASE("parallel build is identical to sequential") {
  workload::Rng rng(11);
  const auto g = workload::preferential_attachment(500, 3, rng);
  const auto lm = select_landmarks(g, 8);
  const auto seq = build(g, lm, 1);
  CHECK(build(g, lm, 4) == seq);
}

TEST_CASE("single landmark labels every reachable vertex") {
  workload::Rng rng(5);
  const auto g = workload::preferential_attachment(50, 2, rng);
  const auto gamma = build(g, LandmarkSet({7}, 50));
  const auto bfs = oracle::bfs_distances(g, 7);
  for (Vertex v = 0; v < 50; ++v) {
    if (v == 7) continue;
    REQUIRE(gamma.label(v).size() == 1);
    CHECK(gamma.label(v)[0].distance == bfs[v]);
  }
}

TEST_CASE("empty graph labelling has size zero") {
  HighwayCoverLabelling gamma(LandmarkSet({}, 0), 0);
  CHECK(labelling_size(gamma) == 0);
}
