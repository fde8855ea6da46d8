#include <gtest/gtest.h>
#include <omp.h>

#include "clustervd/error.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/oracle.hpp"
#include "test_util.hpp"

namespace clustervd {
namespace {

Graph two_p3() { return disjoint_union(path_graph(3), path_graph(3)); }

TEST(Oracle, BruteExamples) {
  EXPECT_TRUE(brute_min(two_p3(), TargetPredicate{TargetKind::Cluster, true}).value.is_infinite());
  EXPECT_EQ(brute_min(path_graph(9), Variant::Cvd).value, ExtInt(3));
  EXPECT_EQ(brute_min(Graph(3), Variant::CliqueDel).value, ExtInt(2));
  Solution first = brute_min(path_graph(3), Variant::Cvd);
  EXPECT_EQ(*first.set, (std::vector<int>{0}));
  EXPECT_EQ(first.method, "brute");
  EXPECT_EQ(brute_min(Graph(0), Variant::Cvd).value, ExtInt(0));
}

TEST(Oracle, Guards) {
  Graph big = path_graph(kBruteMaxOrder + 1);
  try {
    brute_min(big, Variant::Cvd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Guard);
    EXPECT_NE(std::string(e.what()).find("22"), std::string::npos);
  }
  EXPECT_THROW(branch_cvd(path_graph(3), kBranchMaxBudget + 1), Error);
  EXPECT_TRUE(branch_cvd(path_graph(3), kBranchMaxBudget + 1, true).yes);
  EXPECT_THROW(branch_cvd(path_graph(3), -1), Error);
}

TEST(Oracle, BranchExamples) {
  auto k5 = branch_cvd(complete_graph(5), 0);
  EXPECT_TRUE(k5.yes);
  EXPECT_TRUE(k5.set.empty());
  EXPECT_FALSE(branch_cvd(path_graph(3), 0).yes);
}

TEST(Oracle, VerifyExamples) {
  std::vector<int> adjacent{0, 1};
  EXPECT_TRUE(verify(cycle_graph(4), adjacent, Variant::Cvd).accepted);
  std::vector<int> one{0};
  auto r = verify(cycle_graph(4), one, Variant::Cvd);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.reason, RejectReason::InducedP3);
  EXPECT_EQ(r.witness.size(), 3u);
  std::vector<int> middles{1, 4};
  auto d = verify(two_p3(), middles, Variant::ConnectedCvd);
  EXPECT_FALSE(d.accepted);
  EXPECT_EQ(d.reason, RejectReason::DeleterDisconnected);
  EXPECT_EQ(d.witness, (std::vector<int>{1}));
  EXPECT_EQ(d.other, (std::vector<int>{4}));
  std::vector<int> none;
  EXPECT_EQ(verify(path_graph(3), none, Variant::CliqueDel).reason, RejectReason::MissingEdge);
  EXPECT_EQ(verify(path_graph(3), none, Variant::VertexCover).reason, RejectReason::RemainingEdge);
  std::vector<int> bad{7};
  EXPECT_THROW(verify(path_graph(3), bad, Variant::Cvd), Error);
}

TEST(OracleProperty, BranchAgreesWithBrute) {
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gnp(static_cast<int>(uniform_int(rng, 1, 10)), uniform_unit(rng), rng);
    const ExtInt best = brute_min(g, Variant::Cvd).value;
    for (int k = 0; k <= 4; ++k) {
      auto r = branch_cvd(g, k);
      ASSERT_EQ(r.yes, best <= ExtInt(k));
      if (r.yes) {
        EXPECT_LE(static_cast<int>(r.set.size()), k);
        EXPECT_TRUE(verify(g, r.set, Variant::Cvd).accepted);
      }
    }
  }
}

TEST(OracleProperty, ParallelMatchesSerial) {
  omp_set_num_threads(4);
  Rng rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gnp(static_cast<int>(uniform_int(rng, 12, 15)), uniform_unit(rng), rng);
    std::vector<std::int64_t> w;
    for (int v = 0; v < g.order(); ++v) w.push_back(uniform_int(rng, 1, 4));
    g.set_weights(w);
    for (TargetPredicate t : {TargetPredicate{TargetKind::Cluster, false}, TargetPredicate{TargetKind::Cluster, true},
                              TargetPredicate{TargetKind::Clique, true}, TargetPredicate{TargetKind::Edgeless, false}}) {
      Solution a = brute_min(g, t);
      Solution b = brute_min_serial(g, t);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.set, b.set);
      if (trial < 8) {
        Solution wa = brute_min(g, t, true);
        Solution wb = brute_min_serial(g, t, true);
        EXPECT_EQ(wa.value, wb.value);
        EXPECT_EQ(wa.set, wb.set);
      }
    }
  }
}

TEST(OracleProperty, Monotonicity) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 2, 9));
    Graph g = gnp(n, uniform_unit(rng), rng);
    // adding an edge never lowers the vertex cover number
    auto edges = g.edges();
    const int u = static_cast<int>(uniform_int(rng, 0, n - 1));
    const int v = static_cast<int>(uniform_int(rng, 0, n - 1));
    if (u != v && !g.adjacent(u, v)) {
      edges.push_back({std::min(u, v), std::max(u, v)});
      EXPECT_LE(brute_min(g, Variant::VertexCover).value, brute_min(Graph(n, edges), Variant::VertexCover).value);
    }
    // deleting a vertex never raises a non-connected value
    std::vector<int> del{static_cast<int>(uniform_int(rng, 0, n - 1))};
    Graph smaller = remove_vertices(g, del).first;
    for (Variant var : {Variant::Cvd, Variant::CliqueDel, Variant::VertexCover}) {
      EXPECT_LE(brute_min(smaller, var).value, brute_min(g, var).value);
    }
  }
}

TEST(OracleProperty, WeightedOrderIsLexicographicWithinTies) {
  // every CVD pair of C4 weighs 2; the lexicographically first one wins
  Graph c4 = cycle_graph(4);
  c4.set_weights({1, 1, 1, 1});
  Solution s = brute_min(c4, Variant::Cvd, true);
  EXPECT_EQ(*s.set, (std::vector<int>{0, 1}));
}

}  // namespace
}  // namespace clustervd
