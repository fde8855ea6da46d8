#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clustervd/graph.hpp"

namespace clustervd {

enum class ReductionKind { DenseVcToCvd, Subdiv3, Amplify, CcvdGadget };

std::string_view to_string(ReductionKind k);

struct VertexOrigin {
  enum class Role { Copy1, Copy2, Source, SubdivX, SubdivXY, SubdivY, Gadget };

  Role role = Role::Source;
  int vertex = -1;   // Copy1/Copy2/Source: vertex of the (padded) source
  bool padding = false;
  Edge edge{-1, -1};  // subdivision roles: the edge in that round's input graph
  int round = 0;      // subdivision roles: 1-based round
  std::string gadget;  // gadget roles: coordinate label such as "x[2,0]"

  std::string to_string() const;
};

struct ReducedInstance {
  ReductionKind kind = ReductionKind::DenseVcToCvd;
  Graph source;
  std::int64_t k = 0;
  Graph produced;
  std::int64_t k_prime = 0;
  std::vector<VertexOrigin> vertex_origin;  // indexed by produced vertex
  std::optional<std::vector<int>> black_set;

  int padding = 0;     // dense: isolated vertices added to the source
  int girth = 0;       // gadget: odd girth parameter actually used
  std::vector<Graph> stages;  // subdivision: input graph of each round
};

// Dense VC -> CVD. The source is padded with max(0, 2k - n) isolated vertices
// (N vertices in total); copy 1 of its complement keeps ids 0..N-1, copy 2 is
// shifted by N, and every copy-1 vertex is joined to every copy-2 vertex.
ReducedInstance vc_to_cvd_dense(const Graph& g, std::int64_t k);
/// Both copies of a vertex cover of the source.
std::vector<int> lift_dense(const ReducedInstance& ri, std::span<const int> s);
/// Source vertices of the copy meeting S' less (ties: copy 1), padding dropped.
std::vector<int> restrict_dense(const ReducedInstance& ri, std::span<const int> s_prime);

// 3-subdivision: edge number e (in sorted edge order) = xy with x < y becomes
// the path x, n+3e, n+3e+1, n+3e+2, y (e_x, e_xy, e_y). Rejects graphs with a
// triangle (Error(Triangle) with the witness).
ReducedInstance subdivide3(const Graph& g, std::int64_t k);
/// t rounds of subdivide3 with budgets threaded through.
ReducedInstance amplify(const Graph& g, std::int64_t k, int t);
std::vector<int> lift_subdiv(const ReducedInstance& ri, std::span<const int> s);
std::vector<int> restrict_subdiv(const ReducedInstance& ri, std::span<const int> s_prime);

/// Smallest t with 4^t >= g_target, raised to tree_size if that is larger.
int choose_t(std::int64_t g_target, std::int64_t tree_size);

struct GadgetTree {
  Graph tree;
  std::vector<int> black;  // sorted
  std::vector<std::string> labels;
  std::vector<int> x_end;  // id of x[i,g] for i = 1..r
  std::vector<int> y_end;  // id of y[j,g] for j = 1..s
};

/// H(g, r, s) for odd g >= 3 and r, s >= 1.
GadgetTree build_gadget_tree(int g, int r, int s);

/// CVD -> connected CVD on bipartite graphs. An even `girth` is rounded up to
/// the next odd number. Source vertices keep their ids; H follows.
ReducedInstance cvd_to_ccvd(const Graph& g, std::int64_t k, int girth);
std::vector<int> lift_gadget(const ReducedInstance& ri, std::span<const int> s);
/// Throws Error(NotNormalized) unless S' contains the whole black set.
std::vector<int> restrict_gadget(const ReducedInstance& ri, std::span<const int> s_prime);

/// Dispatch on ri.kind.
std::vector<int> lift(const ReducedInstance& ri, std::span<const int> s);
std::vector<int> restrict_solution(const ReducedInstance& ri, std::span<const int> s_prime);

}  // namespace clustervd
