#include <doctest.h>

#include <algorithm>

#include "batchhl/dynamizer.hpp"
#include "batchhl/oracle.hpp"
#include "fixtures.hpp"
#include "printing.hpp"
#include "instances.hpp"

using namespace batchhl;
namespace fx = batchhl::fixtures;

namespace {

struct Example {
  Graph before = fx::example_graph();
  Batch batch = normalize_batch(before, fx::example_updates());
  Graph after = apply_batch(before, batch);
  HighwayCoverLabelling gamma = build(before, fx::example_landmarks());
};

std::vector<Vertex> vs(std::initializer_list<Vertex> l) { return l; }

bool subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("anchor seeds on the worked example") {
  using namespace fx::ex;
  const Example x;
  const auto s1 = anchor_seeds(x.gamma, x.batch, 0);
  REQUIRE(s1.size() == 3);
  CHECK(s1[0] == AnchorSeed{f, 1, true, false});
  CHECK(s1[1] == AnchorSeed{r2, 2, false, true});
  CHECK(s1[2] == AnchorSeed{e, 2, false, false});

  // (r1,f) is trivial for r2: both endpoints at distance 2.
  const auto s2 = anchor_seeds(x.gamma, x.batch, 1);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == AnchorSeed{a, 1, false, false});
  CHECK(s2[1] == AnchorSeed{e, 3, false, false});
}

TEST_CASE("beta thresholds") {
  using namespace fx::ex;
  const Example x;
  CHECK(beta(x.gamma, 0, r2) == ExtendedLandmarkLength{2, true, true});
  CHECK(beta(x.gamma, 0, r1) == ExtendedLandmarkLength{0, false, true});
  CHECK(beta(x.gamma, 0, e) == ExtendedLandmarkLength{2, false, true});

  Graph g(3);
  g.add_edge(0, 1);
  const auto gs = build(g, LandmarkSet({0}, 3));
  CHECK(beta(gs, 0, 2) == ExtendedLandmarkLength{kInfDist, false, true});

  // True sorts before False in both flags.
  CHECK(ExtendedLandmarkLength{2, false, true} < ExtendedLandmarkLength{2, false, false});
  CHECK(ExtendedLandmarkLength{2, true, false} < ExtendedLandmarkLength{2, false, true});
  CHECK(ExtendedLandmarkLength{1, false, false} < ExtendedLandmarkLength{2, true, true});
}

TEST_CASE("batch searches on the worked example") {
  using namespace fx::ex;
  const Example x;
  CHECK(batch_search_basic(x.after, x.batch, 0, x.gamma).members == vs({r2, d, e, f, g, h, i}));
  CHECK(batch_search_improved(x.after, x.batch, 0, x.gamma).members == vs({e, f, g, h}));
  CHECK(batch_search_basic(x.after, x.batch, 1, x.gamma).members == vs({r1, a, b, e}));
  CHECK(batch_search_improved(x.after, x.batch, 1, x.gamma).members == vs({a, e}));
}

TEST_CASE("batch repair on the worked example") {
  using namespace fx::ex;
  const Example x;
  const auto aff = batch_search_improved(x.after, x.batch, 0, x.gamma);
  RepairTrace trace;
  const auto delta = batch_repair(x.after, aff, 0, x.gamma, &trace);

  using B = std::pair<Vertex, LandmarkLength>;
  CHECK(trace.initial_bounds == std::vector<B>{{e, {2, false}}, {f, {kInfDist, false}}, {g, {3, true}},
                                               {h, {5, true}}});
  auto settled = trace.settled;
  std::sort(settled.begin(), settled.end());
  // h improves from (5,T) to (4,T) through g before it settles.
  CHECK(settled == std::vector<B>{{e, {2, false}}, {f, {3, false}}, {g, {3, true}}, {h, {4, true}}});
  CHECK(trace.settled.front() == B{e, {2, false}});
  CHECK(trace.settled.back() == B{h, {4, true}});

  CHECK(delta.landmark == 0);
  CHECK(delta.highway.empty());
  auto labels = delta.labels;
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::pair<Vertex, Dist>>{{e, 2}, {f, 3}, {g, kInfDist}, {h, kInfDist}});

  const auto aff2 = batch_search_improved(x.after, x.batch, 1, x.gamma);
  auto labels2 = batch_repair(x.after, aff2, 1, x.gamma).labels;
  std::sort(labels2.begin(), labels2.end());
  CHECK(labels2 == std::vector<std::pair<Vertex, Dist>>{{a, 1}, {e, 3}});
}

TEST_CASE("batch update produces the worked example's final labelling") {
  const Example x;
  for (auto variant : {SearchVariant::Basic, SearchVariant::Improved}) {
    CAPTURE(to_string(variant));
    UpdateReport report;
    const auto next = batch_update(x.after, x.batch, x.gamma, variant, &report);
    CHECK(fx::labels_match(next, fx::example_final_labels()));
    CHECK(next.highway(0, 1) == 2);
    CHECK(next == build(x.after, fx::example_landmarks()));
    REQUIRE(report.affected.size() == 2);
    if (variant == SearchVariant::Improved) {
      CHECK(report.affected[0] == 4);
      CHECK(report.affected[1] == 2);
    } else {
      CHECK(report.total_affected() == 11);
    }
  }
}

TEST_CASE("path-shaped example: seeds, search and repair") {
  using namespace fx::fig2;
  const auto g0 = fx::fig2_graph();
  const auto batch = normalize_batch(g0, fx::fig2_updates());
  const auto g1 = apply_batch(g0, batch);
  const LandmarkSet lm({r}, 8);
  const auto gamma = build(g0, lm);

  const auto seeds = anchor_seeds(gamma, batch, 0);
  REQUIRE(seeds.size() == 4);
  CHECK(seeds[0] == AnchorSeed{b, 2, false, false});
  CHECK(seeds[1] == AnchorSeed{e, 4, false, false});
  CHECK(seeds[2] == AnchorSeed{e, 4, true, false});
  CHECK(seeds[3] == AnchorSeed{c, 2, true, false});

  const auto basic = batch_search_basic(g1, batch, 0, gamma);
  CHECK(basic.members == vs({b, c, d, e, f, g}));
  CHECK(basic.members == oracle::unified_pattern_bruteforce(g0, g1, batch, r));
  CHECK(subset(oracle::affected_bruteforce(g0, g1, r), basic.members));

  const auto improved = batch_search_improved(g1, batch, 0, gamma);
  CHECK(subset(oracle::ld_affected_bruteforce(g0, g1, lm, r), improved.members));
  CHECK(subset(improved.members, basic.members));

  const auto next = batch_update(g1, batch, gamma);
  const Dist expected[] = {1, 2, 3, 4, 5, 6, 7};
  for (Vertex v = 1; v < 8; ++v) CHECK(label_distance(next, 0, v) == expected[v - 1]);
}

TEST_CASE("trivial and empty batches leave the labelling alone") {
  using namespace fx::ex;
  const Example x;
  // a and b sit at equal distance from both landmarks.
  Batch trivial;
  trivial.updates = {{a, b, UpdateKind::Insert}};
  const auto g1 = apply_batch(x.before, trivial);
  CHECK(anchor_seeds(x.gamma, trivial, 0).empty());
  CHECK(batch_search_basic(g1, trivial, 0, x.gamma).empty());
  CHECK(batch_search_improved(g1, trivial, 0, x.gamma).empty());
  CHECK(batch_update(g1, trivial, x.gamma) == build(g1, fx::example_landmarks()));

  UpdateReport report;
  CHECK(batch_update(x.before, Batch{}, x.gamma, SearchVariant::Improved, &report) == x.gamma);
  CHECK(report.total_affected() == 0);
  CHECK(report.label_writes == 0);
}

TEST_CASE("batch update equals a rebuild on random instances") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    CAPTURE(seed);
    const auto inst = fx::random_instance(seed);
    const auto gamma = build(inst.graph, inst.landmarks);
    const auto expected = build(inst.updated, inst.landmarks);
    for (auto variant : {SearchVariant::Basic, SearchVariant::Improved}) {
      CAPTURE(to_string(variant));
      REQUIRE(batch_update(inst.updated, inst.batch, gamma, variant) == expected);
    }
  }
}

TEST_CASE("parallel update is identical to sequential for any worker count") {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    CAPTURE(seed);
    const auto inst = fx::random_instance(seed);
    const auto gamma = build(inst.graph, inst.landmarks);
    const auto seq = batch_update(inst.updated, inst.batch, gamma);
    for (unsigned w : {2u, 4u, 8u}) CHECK(batch_update_parallel(inst.updated, inst.batch, gamma, w) == seq);
  }
}

TEST_CASE("search results are sandwiched between the brute-force affected sets") {
  for (std::uint64_t seed = 2000; seed < 2300; ++seed) {
    CAPTURE(seed);
    const auto inst = fx::random_instance(seed);
    const auto gamma = build(inst.graph, inst.landmarks);
    for (LandmarkIndex r = 0; r < inst.landmarks.size(); ++r) {
      const Vertex root = inst.landmarks[r];
      const auto basic = batch_search_basic(inst.updated, inst.batch, r, gamma).members;
      const auto improved = batch_search_improved(inst.updated, inst.batch, r, gamma).members;
      CHECK(subset(oracle::affected_bruteforce(inst.graph, inst.updated, root), basic));
      CHECK(basic == oracle::unified_pattern_bruteforce(inst.graph, inst.updated, inst.batch, root));
      CHECK(subset(oracle::ld_affected_bruteforce(inst.graph, inst.updated, inst.landmarks, root), improved));
      CHECK(subset(improved, basic));
    }
  }
}

TEST_CASE("applying a batch and then its inverse restores the labelling") {
  for (std::uint64_t seed = 3000; seed < 3200; ++seed) {
    CAPTURE(seed);
    const auto inst = fx::random_instance(seed, /*allow_new_vertices=*/false);
    auto gamma = build(inst.graph, inst.landmarks);
    const auto original = gamma;
    BatchUpdater updater;
    updater.apply(inst.updated, inst.batch, gamma);
    updater.apply(inst.graph, inverse(inst.batch), gamma);
    CHECK(gamma == original);
  }
}

TEST_CASE("a reused updater tracks a sequence of batches") {
  workload::Rng rng(77);
  auto g = workload::preferential_attachment(300, 2, rng);
  const auto lm = select_landmarks(g, 6);
  auto gamma = build(g, lm);
  BatchUpdater updater({SearchVariant::Improved, 3});
  for (int step = 0; step < 20; ++step) {
    const auto batch = normalize_batch(g, workload::random_mixed_updates(g, 25, rng, true));
    g = apply_batch(g, batch);
    updater.apply(g, batch, gamma);
    REQUIRE(gamma == build(g, lm));
  }
}
