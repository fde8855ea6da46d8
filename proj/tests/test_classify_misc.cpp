#include <gtest/gtest.h>

#include "clustervd/classify.hpp"
#include "clustervd/error.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/json_io.hpp"
#include "clustervd/patterns.hpp"
#include "test_util.hpp"

namespace clustervd {
namespace {

TEST(Classify, Examples) {
  EXPECT_EQ(dichotomy_classify(path_graph(4)).side, ComplexitySide::Polynomial);
  EXPECT_FALSE(dichotomy_classify(path_graph(4)).witness);
  EXPECT_EQ(dichotomy_classify(Graph(2)).side, ComplexitySide::Polynomial);

  auto c3 = dichotomy_classify(complete_graph(3));
  EXPECT_EQ(c3.side, ComplexitySide::NpComplete);
  ASSERT_TRUE(c3.witness);
  EXPECT_EQ(c3.witness->kind, PatternKind::Cycle);
  EXPECT_EQ(c3.witness->vertices.size(), 3u);

  auto p5 = dichotomy_classify(path_graph(5));
  ASSERT_TRUE(p5.witness);
  EXPECT_EQ(p5.witness->kind, PatternKind::TwoP2);
  EXPECT_TRUE(witness_is_valid(path_graph(5), *p5.witness));

  auto claw = dichotomy_classify(testing::make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  ASSERT_TRUE(claw.witness);
  EXPECT_EQ(claw.witness->kind, PatternKind::ThreeP1);
  EXPECT_EQ(claw.witness->vertices, (std::vector<int>{1, 2, 3}));

  EXPECT_EQ(to_string(ComplexitySide::Polynomial), "POLYNOMIAL");
  EXPECT_EQ(to_string(ComplexitySide::NpComplete), "NP_COMPLETE");
}

// Polynomial side coincides with "induced subgraph of P4" on every graph
// with at most five vertices.
TEST(ClassifyProperty, MatchesInducedSubgraphOfP4) {
  const Graph p4 = path_graph(4);
  auto embeds_in_p4 = [&](const Graph& h) {
    const int n = h.order();
    if (n > 4) return false;
    std::vector<int> pick(4);
    for (int i = 0; i < 4; ++i) pick[static_cast<std::size_t>(i)] = i;
    // every injective map of h into P4, tried via permutations of 0..3
    do {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          ok = h.adjacent(u, v) == p4.adjacent(pick[static_cast<std::size_t>(u)], pick[static_cast<std::size_t>(v)]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
  };
  for (int n = 1; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& h) {
      auto v = dichotomy_classify(h);
      ASSERT_EQ(v.side == ComplexitySide::Polynomial, embeds_in_p4(h));
      if (v.witness) {
        EXPECT_TRUE(witness_is_valid(h, *v.witness));
      }
    });
  }
}

TEST(Generators, Deterministic) {
  Rng a(7);
  Rng b(7);
  EXPECT_EQ(gnp(20, 0.3, a), gnp(20, 0.3, b));
  EXPECT_EQ(serialize_cotree(random_binary_cotree(30, a)), serialize_cotree(random_binary_cotree(30, b)));
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_int(a, -3, 5);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    const double u = uniform_unit(a);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Generators, Families) {
  Rng rng(8);
  EXPECT_EQ(grid_graph(3, 4).order(), 12);
  EXPECT_EQ(grid_graph(3, 4).size(), 17u);
  EXPECT_EQ(complete_graph(6).size(), 15u);
  for (int trial = 0; trial < 50; ++trial) {
    Graph tf = random_triangle_free(9, 0.6, 10, rng);
    EXPECT_FALSE(find_induced(tf, PatternKind::Triangle));
    EXPECT_LE(tf.size(), 10u);
    Graph sc = random_subcubic_with_c5(8, 0.5, rng);
    EXPECT_LE(sc.max_degree(), 3);
    EXPECT_TRUE(find_induced(sc, PatternKind::OddHole));
    Graph bp = random_bipartite(3, 4, 0.5, rng);
    ASSERT_TRUE(bp.parts());
    EXPECT_EQ(bp.order(), 7);
    auto t = random_binary_cotree(static_cast<int>(uniform_int(rng, 1, 40)), rng);
    EXPECT_EQ(expand(t).order(), t.vertex_count());
  }
}

TEST(Json, SolutionRoundTrip) {
  Solution s;
  s.variant = Variant::ConnectedCvd;
  s.value = 3;
  s.set = std::vector<int>{0, 4, 5};
  auto back = solution_from_json(to_json(s));
  EXPECT_EQ(back.variant, s.variant);
  EXPECT_EQ(back.value, s.value);
  EXPECT_EQ(back.set, s.set);
  EXPECT_EQ(back.method, "cotree-dp");

  Solution inf;
  inf.variant = Variant::ConnectedCliqueDel;
  inf.value = ExtInt::infinity();
  auto j = to_json(inf);
  EXPECT_EQ(j["value"], "infinity");
  EXPECT_FALSE(j.contains("set"));
  EXPECT_TRUE(solution_from_json(j).value.is_infinite());

  auto d = decision_json(s, true, 4);
  EXPECT_EQ(d["decision"], "yes");
  EXPECT_EQ(d["budget"], 4);

  EXPECT_THROW(solution_from_json(nlohmann::json{{"schema", "other"}}), Error);
  EXPECT_THROW(solution_from_json(nlohmann::json::object()), Error);
}

TEST(Json, Sidecar) {
  auto ri = subdivide3(path_graph(3), 1);
  std::vector<int> s{1};
  auto lifted = lift_subdiv(ri, s);
  auto j = sidecar_json(ri, std::span<const int>(lifted));
  EXPECT_EQ(j["schema"], kSchema);
  EXPECT_EQ(j["kind"], "subdiv3");
  EXPECT_EQ(j["k_prime"], 3);
  EXPECT_EQ(j["counts"]["produced_vertices"], 9);
  EXPECT_EQ(j["vertex_origin"].size(), 9u);
  EXPECT_TRUE(j["black_set"].is_null());
  EXPECT_EQ(j["lifted"], nlohmann::json({1, 3, 8}));
  EXPECT_FALSE(j.contains("restricted"));
}

}  // namespace
}  // namespace clustervd
