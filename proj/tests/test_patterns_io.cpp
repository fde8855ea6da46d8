#include <gtest/gtest.h>

#include <functional>

#include <sstream>

#include "clustervd/error.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/graph_io.hpp"
#include "clustervd/patterns.hpp"
#include "test_util.hpp"

namespace clustervd {
namespace {

TEST(Patterns, Examples) {
  EXPECT_FALSE(find_induced(complete_graph(3), PatternKind::P3));
  EXPECT_FALSE(find_induced(path_graph(4), PatternKind::TwoP2));
  auto two = find_induced(path_graph(5), PatternKind::TwoP2);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->vertices, (std::vector<int>{0, 1, 3, 4}));
  auto hole = find_induced(cycle_graph(5), PatternKind::OddHole);
  ASSERT_TRUE(hole);
  EXPECT_EQ(hole->vertices.size(), 5u);
  EXPECT_FALSE(find_induced(cycle_graph(6), PatternKind::OddHole));
  auto p4 = find_induced(path_graph(4), PatternKind::P4);
  ASSERT_TRUE(p4);
  EXPECT_EQ(p4->vertices, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Patterns, NamesRoundTrip) {
  for (PatternKind k : {PatternKind::P3, PatternKind::P4, PatternKind::Triangle, PatternKind::ThreeP1,
                        PatternKind::TwoP2, PatternKind::Cycle, PatternKind::OddHole}) {
    EXPECT_EQ(pattern_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(pattern_kind_from_string("P7"));
}

// Every witness found on random graphs induces exactly its pattern, and a
// miss agrees with a direct scan over vertex tuples.
TEST(Patterns, WitnessesAreInducedAndSearchIsExhaustive) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 7));
    Graph g = gnp(n, uniform_unit(rng), rng);
    for (PatternKind k : {PatternKind::P3, PatternKind::P4, PatternKind::Triangle, PatternKind::ThreeP1,
                          PatternKind::TwoP2, PatternKind::Cycle, PatternKind::OddHole}) {
      auto w = find_induced(g, k);
      if (w) {
        EXPECT_TRUE(witness_is_valid(g, *w)) << describe(*w);
        continue;
      }
      if (k == PatternKind::Cycle) {
        EXPECT_TRUE(is_forest(g));
        continue;
      }
      if (k == PatternKind::OddHole) continue;
      const std::size_t size = (k == PatternKind::P4 || k == PatternKind::TwoP2) ? 4 : 3;
      std::vector<int> idx(size);
      std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int from) {
        if (pos == size) {
          // every ordering of the chosen vertices
          std::vector<int> perm = idx;
          std::sort(perm.begin(), perm.end());
          do {
            EXPECT_FALSE(witness_is_valid(g, PatternWitness{k, perm}));
          } while (std::next_permutation(perm.begin(), perm.end()));
          return;
        }
        for (int v = from; v < n; ++v) {
          idx[pos] = v;
          rec(pos + 1, v + 1);
        }
      };
      rec(0, 0);
    }
  }
}

TEST(GraphIo, ParsesCommentsWeightsAndParts) {
  Graph g = parse_graph("# comment\n3 2\n0 1\n\n1 2\nw 4 5 6\nX 1\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.weight(2), 6);
  ASSERT_TRUE(g.parts());
  EXPECT_EQ((*g.parts())[1], Side::X);
}

TEST(GraphIo, ReportsLineNumbers) {
  auto message = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("3\n"), "line 1: header must be 'n m'");
  EXPECT_NE(message("3 2\n0 1\n0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 1\n0 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("3 1\n0 1\nw 1 0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 1\n0 1\nX 0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("2 2\n0 1\n").find("file ends early"), std::string::npos);
  EXPECT_NE(message("").find("line 1"), std::string::npos);
}

TEST(GraphIo, WriteReadRoundTrip) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gnp(static_cast<int>(uniform_int(rng, 0, 12)), 0.3, rng);
    if (trial % 3 == 0) {
      std::vector<std::int64_t> w;
      for (int v = 0; v < g.order(); ++v) w.push_back(uniform_int(rng, 1, 9));
      g.set_weights(w);
    }
    std::string text = format_graph(g, {"round trip"});
    EXPECT_EQ(parse_graph(text), g);
  }
  Graph b = random_bipartite(3, 4, 0.5, rng);
  EXPECT_EQ(parse_graph(format_graph(b)), b);
}

TEST(GraphIo, WriterSortsEdges) {
  std::vector<Edge> edges{{2, 3}, {1, 0}, {0, 3}};
  EXPECT_EQ(format_graph(Graph(4, edges)), "4 3\n0 1\n0 3\n2 3\n");
}

}  // namespace
}  // namespace clustervd
