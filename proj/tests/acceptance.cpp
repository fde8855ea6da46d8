// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. All checks are exact except the timing check in criterion 8.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <malloc.h>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clustervd/classify.hpp"
#include "clustervd/cluster_dp.hpp"
#include "clustervd/error.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/oracle.hpp"
#include "clustervd/patterns.hpp"
#include "clustervd/reductions.hpp"
#include "test_util.hpp"

using namespace clustervd;

namespace {

// Pinned tolerances for the timing check.
constexpr double kMaxDecadeRatio = 15.0;  // 1.5x of linear growth per decade
constexpr double kMaxSecondsAt1e6 = 10.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// ---- 1 ----

void compare_dp(const BinaryCotree& t, Rng& rng, Outcome& out, long& checks) {
  const Graph g = expand(t);
  const Variant variants[] = {Variant::Cvd, Variant::ConnectedCvd, Variant::CliqueDel, Variant::ConnectedCliqueDel};
  for (Variant v : variants) {
    Solution dp = solve(t, v);
    Solution bf = brute_min(g, v);
    ++checks;
    out.expect(dp.value == bf.value, std::string(to_string(v)) + " on " + serialize_cotree(t));
    if (dp.set) out.expect(verify(g, *dp.set, v).accepted, "DP set rejected on " + serialize_cotree(t));
  }
  std::vector<std::int64_t> w(static_cast<std::size_t>(g.order()));
  for (auto& x : w) x = uniform_int(rng, 1, 6);
  Graph wg = g;
  wg.set_weights(w);
  Solution dp = solve(t, Variant::Cvd, w);
  Solution bf = brute_min(wg, Variant::Cvd, true);
  ++checks;
  out.expect(dp.value == bf.value, "weighted CVD on " + serialize_cotree(t));
  out.expect(dp.set && ExtInt(wg.total_weight(*dp.set)) == dp.value, "weighted set weight");
}

Outcome criterion1() {
  Outcome out;
  Rng rng(1001);
  long checks = 0;
  long infinite = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 10));
    auto t = random_binary_cotree(n, rng, trial % 2 ? LabelMode::Random : LabelMode::Alternating);
    if (dp_stats(t)[static_cast<std::size_t>(t.root())].sigma_c.is_infinite()) ++infinite;
    compare_dp(t, rng, out, checks);
  }
  long shapes = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : testing::all_binary_cotrees(n)) {
      ++shapes;
      compare_dp(t, rng, out, checks);
    }
  }
  out.detail << checks << " value comparisons, " << shapes << " exhaustive labelled shapes, " << infinite
             << " random instances with infinite connected value";
  out.expect(infinite > 0, "no infinite case exercised");
  return out;
}

// ---- 2 ----

Outcome criterion2() {
  Outcome out;
  Graph g = testing::chorded_c6();
  const ExtInt sigma = brute_min(g, Variant::Cvd).value;
  out.expect(sigma == ExtInt(2), "cluster deletion number of the chorded C6 is not 2");
  auto ri = subdivide3(g, 2);
  out.expect(ri.produced.order() == 27, "produced graph has " + std::to_string(ri.produced.order()) + " vertices");
  out.expect(ri.k_prime == 9, "k' = " + std::to_string(ri.k_prime));
  const bool at8 = branch_cvd(ri.produced, 8).yes;
  auto at9 = branch_cvd(ri.produced, 9);
  out.expect(!at8, "budget 8 answered YES");
  out.expect(at9.yes, "budget 9 answered NO");
  if (at9.yes) {
    out.expect(verify(ri.produced, at9.set, Variant::Cvd).accepted, "budget 9 set rejected");
    auto back = restrict_subdiv(ri, at9.set);
    out.expect(back.size() <= 2 && verify(g, back, Variant::Cvd).accepted, "restricted set invalid");
  }
  out.detail << "27-vertex subdivision, NO at 8, YES at 9 with set " << set_text(at9.set);
  return out;
}

// ---- 3 ----

Outcome criterion3() {
  Outcome out;
  Rng rng(1003);
  int decisions = 0;
  int yes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_triangle_free(static_cast<int>(uniform_int(rng, 1, 6)), uniform_unit(rng), 7, rng);
    const auto m = static_cast<std::int64_t>(g.size());
    for (int k = 0; k <= 3; ++k) {
      auto ri = subdivide3(g, k);
      auto src = branch_cvd(g, k);
      auto dst = branch_cvd(ri.produced, static_cast<int>(ri.k_prime));
      ++decisions;
      out.expect(ri.k_prime == k + m, "k' formula");
      out.expect(src.yes == dst.yes, "decisions disagree at trial " + std::to_string(trial));
      if (!src.yes) continue;
      ++yes;
      auto lifted = lift_subdiv(ri, src.set);
      out.expect(verify(ri.produced, lifted, Variant::Cvd).accepted, "lifted set rejected");
      out.expect(static_cast<std::int64_t>(lifted.size()) <= ri.k_prime, "lifted set over budget");
      out.expect(restrict_subdiv(ri, lifted) == src.set, "restrict(lift(S)) != S");
      auto back = restrict_subdiv(ri, dst.set);
      out.expect(verify(g, back, Variant::Cvd).accepted && static_cast<int>(back.size()) <= k,
                 "restricted branch set invalid");
    }
  }
  out.detail << decisions << " decisions agree (" << yes << " YES), round trips verified";
  return out;
}

// ---- 4 ----

Outcome criterion4() {
  Outcome out;
  Rng rng(1004);
  int decisions = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 5, 9));
    Graph g = random_subcubic_with_c5(n, uniform_unit(rng), rng);
    out.expect(g.max_degree() <= 3, "source not subcubic");
    out.expect(!find_induced(g, PatternKind::Triangle), "source has a triangle");
    out.expect(find_induced(g, PatternKind::OddHole).has_value(), "source has no odd hole");
    const ExtInt vc = brute_min(g, Variant::VertexCover).value;
    const int kmax = (n + 1) / 2;
    for (int k = 0; k <= kmax; ++k) {
      auto ri = vc_to_cvd_dense(g, k);
      out.expect(ri.produced.min_degree() >= ri.produced.order() - 4, "min degree below n'-4");
      out.expect(ri.k_prime == 2 * k, "k' != 2k");
      const ExtInt cvd = brute_min(ri.produced, Variant::Cvd).value;
      ++decisions;
      out.expect((vc <= ExtInt(k)) == (cvd <= ExtInt(ri.k_prime)),
                 "VC/CVD answers disagree at trial " + std::to_string(trial) + " k=" + std::to_string(k));
    }
  }
  out.detail << decisions << " (G,k)/(G',2k) decisions agree, min degree bound holds";
  return out;
}

// ---- 5 ----

// Inclusion-minimal CVD set found by dropping vertices of V in random order.
std::vector<int> random_minimal_cvd(const Graph& g, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
  shuffle(rng, order);
  std::vector<int> s = order;
  for (int v : order) {
    std::vector<int> trial;
    for (int x : s) {
      if (x != v) trial.push_back(x);
    }
    if (verify(g, trial, Variant::Cvd).accepted) s = trial;
  }
  std::sort(s.begin(), s.end());
  return s;
}

Outcome criterion5() {
  Outcome out;
  Rng rng(1005);
  for (int g : {3, 5}) {
    for (auto [r, s] : {std::pair{1, 1}, std::pair{4, 3}, std::pair{2, 5}}) {
      const std::string tag = "(g,r,s)=(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
      GadgetTree h = build_gadget_tree(g, r, s);
      out.expect(h.tree.order() == (6 + 3 * g) * (r + s), tag + " |V(H)|");
      out.expect(static_cast<int>(h.black.size()) == (g + 2) * (r + s), tag + " |black|");
      out.expect(is_connected(h.tree) && is_forest(h.tree), tag + " H is not a tree");
      out.expect(verify(h.tree, h.black, Variant::ConnectedCvd).accepted, tag + " black set rejected on H");

      Graph src = random_bipartite(r, s, 0.5, rng);
      auto ri = cvd_to_ccvd(src, 0, g);
      out.expect(ri.produced.order() == (7 + 3 * g) * (r + s), tag + " |V(G(g))|");
      out.expect(bipartition(ri.produced).has_value(), tag + " produced graph not bipartite");
      std::vector<int> h_ids;
      for (int v = src.order(); v < ri.produced.order(); ++v) h_ids.push_back(v);
      Graph restricted = induced_subgraph(ri.produced, h_ids);
      std::vector<int> black_local;
      for (int b : *ri.black_set) black_local.push_back(b - src.order());
      out.expect(verify(restricted, black_local, Variant::ConnectedCvd).accepted,
                 tag + " black set rejected after attachments");
    }
  }

  // the 112-vertex configuration: g = 3, n = 7
  {
    Graph src = random_bipartite(4, 3, 0.5, rng);
    auto ri = cvd_to_ccvd(src, 2, 3);
    out.expect(ri.produced.order() == 112, "g=3, n=7 does not give 112 vertices");
    out.expect(ri.k_prime == 2 + 35, "k' != k + 35");
  }

  int lifted_sets = 0;
  int probes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int nx = static_cast<int>(uniform_int(rng, 1, 5));
    const int ny = static_cast<int>(uniform_int(rng, 1, 5));
    const int g = trial % 2 ? 5 : 3;
    Graph src = random_bipartite(nx, ny, uniform_unit(rng), rng);
    std::vector<int> s = random_minimal_cvd(src, rng);
    auto ri = cvd_to_ccvd(src, static_cast<std::int64_t>(s.size()), g);
    auto lifted = lift_gadget(ri, s);
    ++lifted_sets;
    out.expect(verify(ri.produced, lifted, Variant::ConnectedCvd).accepted, "lifted set rejected");
    out.expect(static_cast<std::int64_t>(lifted.size()) == ri.k_prime, "lifted set size != k'");
    out.expect(restrict_gadget(ri, lifted) == s, "restrict(lift(S)) != S");
    for (std::size_t drop = 0; drop < lifted.size(); ++drop) {
      std::vector<int> smaller;
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (i != drop) smaller.push_back(lifted[i]);
      }
      ++probes;
      out.expect(!verify(ri.produced, smaller, Variant::ConnectedCvd).accepted,
                 "dropping vertex " + std::to_string(lifted[drop]) + " still accepted");
    }
  }
  out.detail << "counts exact for 6 parameter sets, 112-vertex case ok, " << lifted_sets << " lifted sets verified, "
             << probes << " single-vertex removals rejected";
  return out;
}

// ---- 6 ----

Outcome criterion6() {
  Outcome out;
  Rng rng(1006);
  int inputs = 0;
  while (inputs < 50) {
    Graph g = random_triangle_free(static_cast<int>(uniform_int(rng, 4, 10)), 0.5, 14, rng);
    if (is_forest(g)) continue;
    ++inputs;
    const ExtInt base = girth(g);
    const auto n = static_cast<std::int64_t>(g.order());
    const auto m = static_cast<std::int64_t>(g.size());
    std::int64_t pow4 = 1;
    for (int t = 1; t <= 2; ++t) {
      pow4 *= 4;
      auto ri = amplify(g, 1, t);
      out.expect(girth(ri.produced) == ExtInt(pow4 * base.value()), "girth not 4^t times the source girth");
      out.expect(ri.produced.order() == n + (pow4 - 1) * m, "vertex count formula");
    }
  }
  out.detail << inputs << " inputs, t in {1,2}: girth and vertex counts exact";
  return out;
}

// ---- 7 ----

unsigned canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  unsigned best = ~0U;
  do {
    unsigned mask = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) mask |= 1U << bit;
      }
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Outcome criterion7() {
  Outcome out;
  using testing::make_graph;
  std::map<std::pair<int, unsigned>, Graph> classes;
  for (int n = 1; n <= 4; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) { classes.emplace(std::pair{n, canonical_mask(g)}, g); });
  }
  out.expect(classes.size() == 18, "expected 18 isomorphism classes, got " + std::to_string(classes.size()));

  const std::vector<Graph> p4_subgraphs{Graph(1), Graph(2), make_graph(2, {{0, 1}}), make_graph(3, {{0, 1}}),
                                make_graph(3, {{0, 1}, {1, 2}}), make_graph(4, {{0, 1}, {1, 2}, {2, 3}})};
  std::set<std::pair<int, unsigned>> expected;
  for (const Graph& g : p4_subgraphs) expected.insert({g.order(), canonical_mask(g)});
  int poly = 0;
  for (const auto& [key, g] : classes) {
    auto v = dichotomy_classify(g);
    if (v.side == ComplexitySide::Polynomial) {
      ++poly;
      out.expect(expected.count(key) == 1, "unexpected POLYNOMIAL class");
    } else {
      out.expect(v.witness && witness_is_valid(g, *v.witness), "invalid NP_COMPLETE witness");
    }
  }
  out.expect(poly == 6, "POLYNOMIAL count is " + std::to_string(poly));

  struct Named {
    const char* name;
    Graph g;
    PatternKind kind;
  };
  const std::vector<Named> named{
      {"C3", make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), PatternKind::Cycle},
      {"3P1", Graph(3), PatternKind::ThreeP1},
      {"2P2", make_graph(4, {{0, 1}, {2, 3}}), PatternKind::TwoP2},
      {"P5", path_graph(5), PatternKind::TwoP2},
      {"K13", make_graph(4, {{0, 1}, {0, 2}, {0, 3}}), PatternKind::ThreeP1},
  };
  for (const auto& nm : named) {
    auto v = dichotomy_classify(nm.g);
    out.expect(v.side == ComplexitySide::NpComplete, std::string(nm.name) + " not NP_COMPLETE");
    out.expect(v.witness && v.witness->kind == nm.kind && witness_is_valid(nm.g, *v.witness),
               std::string(nm.name) + " witness wrong");
  }
  out.detail << classes.size() << " classes, " << poly << " POLYNOMIAL, named witnesses correct";
  return out;
}

// ---- 8 ----

Outcome criterion8() {
  Outcome out;
  // keep large blocks on the heap so every size reuses warm pages instead of
  // only the ones under glibc's mmap threshold
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
  Rng rng(1008);
  std::vector<double> times;
  for (int n : {10000, 100000, 1000000}) {
    auto t = random_binary_cotree(n, rng, LabelMode::Random);
    const int reps = n == 1000000 ? 5 : n == 100000 ? 15 : 51;
    std::vector<double> samples;
    for (int r = 0; r < reps; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      auto stats = dp_stats(t);
      samples.push_back(seconds_since(t0));
      if (stats.size() != t.node_count()) out.fail("stats size");
    }
    times.push_back(*std::min_element(samples.begin(), samples.end()));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "best-of-reps seconds 1e4=%.5f 1e5=%.5f 1e6=%.5f, decade ratios %.2f %.2f (limit %.1f)",
                times[0], times[1], times[2], times[1] / times[0], times[2] / times[1], kMaxDecadeRatio);
  out.detail << buf;
  out.expect(times[1] / times[0] <= kMaxDecadeRatio, "1e4 -> 1e5 ratio");
  out.expect(times[2] / times[1] <= kMaxDecadeRatio, "1e5 -> 1e6 ratio");
  out.expect(times[2] < kMaxSecondsAt1e6, "1e6 over time limit");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cotree DP matches brute force", criterion1},
      {"chorded C6 subdivision", criterion2},
      {"subdivision equivalence sweep", criterion3},
      {"dense reduction equivalence sweep", criterion4},
      {"gadget counts and validity", criterion5},
      {"girth amplification", criterion6},
      {"dichotomy classifier", criterion7},
      {"linear-time cotree DP", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
