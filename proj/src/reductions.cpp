#include "clustervd/reductions.hpp"

#include <algorithm>
#include <queue>

#include "clustervd/error.hpp"
#include "clustervd/oracle.hpp"
#include "clustervd/patterns.hpp"

namespace clustervd {

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::DenseVcToCvd: return "dense";
    case ReductionKind::Subdiv3: return "subdiv3";
    case ReductionKind::Amplify: return "amplify";
    case ReductionKind::CcvdGadget: return "ccvd-gadget";
  }
  return "?";
}

std::string VertexOrigin::to_string() const {
  auto edge_str = [&] { return "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")"; };
  auto round_str = [&] { return "@" + std::to_string(round); };
  switch (role) {
    case Role::Copy1: return (padding ? "copy1:pad" : "copy1:") + std::to_string(vertex);
    case Role::Copy2: return (padding ? "copy2:pad" : "copy2:") + std::to_string(vertex);
    case Role::Source: return "v:" + std::to_string(vertex);
    case Role::SubdivX: return "e_x" + edge_str() + round_str();
    case Role::SubdivXY: return "e_xy" + edge_str() + round_str();
    case Role::SubdivY: return "e_y" + edge_str() + round_str();
    case Role::Gadget: return "H:" + gadget;
  }
  return "?";
}

namespace {

std::vector<int> sorted_unique(std::span<const int> s) {
  std::vector<int> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require(const Graph& g, std::span<const int> s, Variant v, const char* what) {
  auto res = verify(g, s, v);
  if (!res.accepted) {
    throw Error(ErrorKind::Rejected, std::string(what) + " is not a valid " + std::string(to_string(v)) +
                                         " set: " + res.message());
  }
}

void require_budget(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::Input, "budget must be >= 0");
}

}  // namespace

ReducedInstance vc_to_cvd_dense(const Graph& g, std::int64_t k) {
  require_budget(k);
  const int n = g.order();
  const int pad = static_cast<int>(std::max<std::int64_t>(0, 2 * k - n));
  const int big_n = n + pad;
  Graph padded = disjoint_union(g, Graph(pad));
  padded.clear_weights();
  padded.clear_parts();
  const Graph co = complement(padded);

  std::vector<Edge> edges;
  for (const Edge& e : co.edges()) {
    edges.push_back(e);
    edges.push_back({e.u + big_n, e.v + big_n});
  }
  for (int i = 0; i < big_n; ++i) {
    for (int j = 0; j < big_n; ++j) edges.push_back({i, j + big_n});
  }

  ReducedInstance ri;
  ri.kind = ReductionKind::DenseVcToCvd;
  ri.source = g;
  ri.k = k;
  ri.produced = Graph(2 * big_n, edges);
  ri.k_prime = 2 * k;
  ri.padding = pad;
  ri.vertex_origin.resize(static_cast<std::size_t>(2 * big_n));
  for (int i = 0; i < big_n; ++i) {
    auto& a = ri.vertex_origin[static_cast<std::size_t>(i)];
    auto& b = ri.vertex_origin[static_cast<std::size_t>(i + big_n)];
    a.role = VertexOrigin::Role::Copy1;
    b.role = VertexOrigin::Role::Copy2;
    a.vertex = b.vertex = i;
    a.padding = b.padding = i >= n;
  }
  return ri;
}

std::vector<int> lift_dense(const ReducedInstance& ri, std::span<const int> s) {
  require(ri.source, s, Variant::VertexCover, "source set");
  const int big_n = ri.source.order() + ri.padding;
  std::vector<int> out = sorted_unique(s);
  const std::size_t half = out.size();
  for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] + big_n);
  return out;
}

std::vector<int> restrict_dense(const ReducedInstance& ri, std::span<const int> s_prime) {
  require(ri.produced, s_prime, Variant::Cvd, "produced set");
  const int n = ri.source.order();
  const int big_n = n + ri.padding;
  std::vector<int> one;
  std::vector<int> two;
  for (int v : sorted_unique(s_prime)) {
    if (v < big_n) {
      one.push_back(v);
    } else {
      two.push_back(v - big_n);
    }
  }
  const std::vector<int>& pick = two.size() < one.size() ? two : one;
  std::vector<int> out;
  for (int v : pick) {
    if (v < n) out.push_back(v);
  }
  return out;
}

namespace {

struct Stage {
  Graph produced;
  std::vector<VertexOrigin> new_origins;  // for ids n .. n+3m-1
};

Stage subdivide_once(const Graph& g, int round) {
  if (auto tri = find_induced(g, PatternKind::Triangle)) {
    throw Error(ErrorKind::Triangle, "3-subdivision needs a triangle-free graph: " + describe(*tri), *tri);
  }
  const int n = g.order();
  const auto es = g.edges();
  std::vector<Edge> edges;
  edges.reserve(4 * es.size());
  Stage st;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const int ex = n + 3 * static_cast<int>(e);
    edges.push_back({es[e].u, ex});
    edges.push_back({ex, ex + 1});
    edges.push_back({ex + 1, ex + 2});
    edges.push_back({ex + 2, es[e].v});
    for (auto role : {VertexOrigin::Role::SubdivX, VertexOrigin::Role::SubdivXY, VertexOrigin::Role::SubdivY}) {
      VertexOrigin o;
      o.role = role;
      o.edge = es[e];
      o.round = round;
      st.new_origins.push_back(o);
    }
  }
  st.produced = Graph(n + 3 * static_cast<int>(es.size()), edges);
  return st;
}

std::vector<int> lift_stage(const Graph& g, const std::vector<int>& s) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out = s;
  const auto es = g.edges();
  for (std::size_t e = 0; e < es.size(); ++e) {
    const int ex = n + 3 * static_cast<int>(e);
    const bool x_in = in[static_cast<std::size_t>(es[e].u)];
    const bool y_in = in[static_cast<std::size_t>(es[e].v)];
    if (x_in == y_in) {
      out.push_back(ex + 1);
    } else if (x_in) {
      out.push_back(ex + 2);
    } else {
      out.push_back(ex);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exchange moves making every edge path carry exactly one subdivision vertex;
// none of them increases the set or breaks the cluster property.
std::vector<int> restrict_stage(const Graph& g, const std::vector<int>& s_prime) {
  const int n = g.order();
  const auto es = g.edges();
  std::vector<char> in(static_cast<std::size_t>(n + 3 * static_cast<int>(es.size())), 0);
  for (int v : s_prime) in[static_cast<std::size_t>(v)] = 1;
  auto has = [&](int v) -> char& { return in[static_cast<std::size_t>(v)]; };
  for (std::size_t e = 0; e < es.size(); ++e) {
    const int x = es[e].u;
    const int y = es[e].v;
    const int ex = n + 3 * static_cast<int>(e);
    const int exy = ex + 1;
    const int ey = ex + 2;
    const int count = has(ex) + has(exy) + has(ey);
    if (count == 3) {
      has(ex) = has(ey) = 0;
      has(x) = has(y) = 1;
    } else if (count == 2) {
      if (has(ex) && has(exy)) {
        has(exy) = 0;
        has(y) = 1;
      } else if (has(exy) && has(ey)) {
        has(exy) = 0;
        has(x) = 1;
      } else {
        has(ex) = 0;
        has(x) = 1;
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (has(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

ReducedInstance amplify(const Graph& g, std::int64_t k, int t) {
  require_budget(k);
  if (t < 1) throw Error(ErrorKind::Input, "amplification needs t >= 1");
  ReducedInstance ri;
  ri.kind = ReductionKind::Amplify;
  ri.source = g;
  ri.k = k;
  Graph cur = g;
  cur.clear_weights();
  cur.clear_parts();
  std::int64_t budget = k;
  ri.vertex_origin.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    ri.vertex_origin[static_cast<std::size_t>(v)].role = VertexOrigin::Role::Source;
    ri.vertex_origin[static_cast<std::size_t>(v)].vertex = v;
  }
  for (int round = 1; round <= t; ++round) {
    Stage st = subdivide_once(cur, round);
    budget += static_cast<std::int64_t>(cur.size());
    ri.stages.push_back(std::move(cur));
    ri.vertex_origin.insert(ri.vertex_origin.end(), st.new_origins.begin(), st.new_origins.end());
    cur = std::move(st.produced);
  }
  ri.produced = std::move(cur);
  ri.k_prime = budget;
  return ri;
}

ReducedInstance subdivide3(const Graph& g, std::int64_t k) {
  ReducedInstance ri = amplify(g, k, 1);
  ri.kind = ReductionKind::Subdiv3;
  return ri;
}

std::vector<int> lift_subdiv(const ReducedInstance& ri, std::span<const int> s) {
  require(ri.source, s, Variant::Cvd, "source set");
  std::vector<int> cur = sorted_unique(s);
  for (const Graph& stage : ri.stages) cur = lift_stage(stage, cur);
  return cur;
}

std::vector<int> restrict_subdiv(const ReducedInstance& ri, std::span<const int> s_prime) {
  require(ri.produced, s_prime, Variant::Cvd, "produced set");
  std::vector<int> cur = sorted_unique(s_prime);
  if (static_cast<std::int64_t>(cur.size()) > ri.k_prime) {
    throw Error(ErrorKind::Rejected, "produced set has " + std::to_string(cur.size()) + " vertices, budget is " +
                                         std::to_string(ri.k_prime));
  }
  for (auto it = ri.stages.rbegin(); it != ri.stages.rend(); ++it) cur = restrict_stage(*it, cur);
  return cur;
}

int choose_t(std::int64_t g_target, std::int64_t tree_size) {
  if (g_target < 3) throw Error(ErrorKind::Input, "girth bound must be >= 3");
  if (tree_size < 1) throw Error(ErrorKind::Input, "tree size must be >= 1");
  int t = 0;
  std::int64_t power = 1;
  while (power < g_target) {
    power *= 4;
    ++t;
  }
  return static_cast<int>(std::max<std::int64_t>(t, tree_size));
}

GadgetTree build_gadget_tree(int g, int r, int s) {
  if (g < 3 || g % 2 == 0) throw Error(ErrorKind::Input, "gadget girth parameter must be odd and >= 3");
  if (r < 1 || s < 1) throw Error(ErrorKind::Input, "gadget needs r >= 1 and s >= 1");
  GadgetTree h;
  std::vector<Edge> edges;
  auto add = [&](std::string label) {
    h.labels.push_back(std::move(label));
    return static_cast<int>(h.labels.size()) - 1;
  };

  // One side: hanging paths p[i,0..g] and spine vertices q[i], spine
  // p[1,0] q[1] p[2,0] q[2] ... p[count,0] q[count]. Returns q[count].
  auto side = [&](char p, char q, int count, std::vector<int>& ends) {
    int prev_q = -1;
    for (int i = 1; i <= count; ++i) {
      int first = -1;
      int prev = -1;
      for (int j = 0; j <= g; ++j) {
        int v = add(std::string(1, p) + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
        if (j == 0) first = v;
        if (prev >= 0) edges.push_back({prev, v});
        prev = v;
      }
      ends.push_back(prev);
      int qi = add(std::string(1, q) + "[" + std::to_string(i) + "]");
      if (prev_q >= 0) edges.push_back({prev_q, first});
      edges.push_back({first, qi});
      prev_q = qi;
    }
    return prev_q;
  };
  const int a_r = side('x', 'a', r, h.x_end);
  const int b_s = side('y', 'b', s, h.y_end);
  edges.push_back({a_r, b_s});

  const int black_count = static_cast<int>(h.labels.size());
  for (int v = 0; v < black_count; ++v) {
    h.black.push_back(v);
    const std::string base = h.labels[static_cast<std::size_t>(v)];
    int p1 = add("pend1(" + base + ")");
    int p2 = add("pend2(" + base + ")");
    edges.push_back({v, p1});
    edges.push_back({p1, p2});
  }
  h.tree = Graph(static_cast<int>(h.labels.size()), edges);
  return h;
}

namespace {

// Odd cycle through a BFS colouring conflict.
std::optional<PatternWitness> odd_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    depth[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (depth[static_cast<std::size_t>(v)] < 0) {
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          q.push(v);
        } else if (depth[static_cast<std::size_t>(v)] == depth[static_cast<std::size_t>(u)]) {
          std::vector<int> left{u};
          std::vector<int> right{v};
          while (left.back() != right.back()) {
            left.push_back(parent[static_cast<std::size_t>(left.back())]);
            right.push_back(parent[static_cast<std::size_t>(right.back())]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          std::reverse(left.begin(), left.end());
          // left runs lca .. u, right runs v's ancestors down to v
          std::vector<int> cycle = left;
          for (auto it = right.rbegin(); it != right.rend(); ++it) cycle.push_back(*it);
          return PatternWitness{PatternKind::Cycle, cycle};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReducedInstance cvd_to_ccvd(const Graph& g, std::int64_t k, int girth) {
  require_budget(k);
  if (girth < 3) throw Error(ErrorKind::Input, "girth parameter must be >= 3");
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::Input, "the gadget reduction needs at least two source vertices");
  auto parts = bipartition(g);
  if (!parts) {
    auto cyc = odd_cycle(g);
    throw Error(ErrorKind::NotBipartite, "source graph is not bipartite" + (cyc ? ": " + describe(*cyc) : ""),
                cyc);
  }
  std::vector<int> xs = parts->x;
  std::vector<int> ys = parts->y;
  if (g.parts()) {
    xs.clear();
    ys.clear();
    for (int v = 0; v < n; ++v) ((*g.parts())[static_cast<std::size_t>(v)] == Side::X ? xs : ys).push_back(v);
  }
  if (ys.empty()) {
    ys.push_back(xs.back());
    xs.pop_back();
  } else if (xs.empty()) {
    xs.push_back(ys.back());
    ys.pop_back();
  }
  const int godd = girth % 2 == 1 ? girth : girth + 1;
  GadgetTree h = build_gadget_tree(godd, static_cast<int>(xs.size()), static_cast<int>(ys.size()));

  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.tree.edges()) edges.push_back({e.u + n, e.v + n});
  for (std::size_t i = 0; i < xs.size(); ++i) edges.push_back({xs[i], h.x_end[i] + n});
  for (std::size_t j = 0; j < ys.size(); ++j) edges.push_back({ys[j], h.y_end[j] + n});

  ReducedInstance ri;
  ri.kind = ReductionKind::CcvdGadget;
  ri.source = g;
  ri.k = k;
  ri.produced = Graph(n + h.tree.order(), edges);
  ri.k_prime = k + static_cast<std::int64_t>(godd + 2) * n;
  ri.girth = godd;
  ri.vertex_origin.resize(static_cast<std::size_t>(ri.produced.order()));
  for (int v = 0; v < n; ++v) {
    ri.vertex_origin[static_cast<std::size_t>(v)].role = VertexOrigin::Role::Source;
    ri.vertex_origin[static_cast<std::size_t>(v)].vertex = v;
  }
  for (int v = 0; v < h.tree.order(); ++v) {
    auto& o = ri.vertex_origin[static_cast<std::size_t>(v + n)];
    o.role = VertexOrigin::Role::Gadget;
    o.gadget = h.labels[static_cast<std::size_t>(v)];
  }
  std::vector<int> black;
  for (int v : h.black) black.push_back(v + n);
  ri.black_set = std::move(black);
  return ri;
}

std::vector<int> lift_gadget(const ReducedInstance& ri, std::span<const int> s) {
  require(ri.source, s, Variant::Cvd, "source set");
  std::vector<int> out = sorted_unique(s);
  out.insert(out.end(), ri.black_set->begin(), ri.black_set->end());
  return out;
}

std::vector<int> restrict_gadget(const ReducedInstance& ri, std::span<const int> s_prime) {
  std::vector<int> sp = sorted_unique(s_prime);
  for (int b : *ri.black_set) {
    if (!std::binary_search(sp.begin(), sp.end(), b)) {
      throw Error(ErrorKind::NotNormalized, "produced set misses black vertex " + std::to_string(b) + " (" +
                                                ri.vertex_origin[static_cast<std::size_t>(b)].to_string() + ")");
    }
  }
  require(ri.produced, sp, Variant::ConnectedCvd, "produced set");
  std::vector<int> out;
  for (int v : sp) {
    if (v < ri.source.order()) out.push_back(v);
  }
  return out;
}

std::vector<int> lift(const ReducedInstance& ri, std::span<const int> s) {
  switch (ri.kind) {
    case ReductionKind::DenseVcToCvd: return lift_dense(ri, s);
    case ReductionKind::Subdiv3:
    case ReductionKind::Amplify: return lift_subdiv(ri, s);
    case ReductionKind::CcvdGadget: return lift_gadget(ri, s);
  }
  return {};
}

std::vector<int> restrict_solution(const ReducedInstance& ri, std::span<const int> s_prime) {
  switch (ri.kind) {
    case ReductionKind::DenseVcToCvd: return restrict_dense(ri, s_prime);
    case ReductionKind::Subdiv3:
    case ReductionKind::Amplify: return restrict_subdiv(ri, s_prime);
    case ReductionKind::CcvdGadget: return restrict_gadget(ri, s_prime);
  }
  return {};
}

}  // namespace clustervd
