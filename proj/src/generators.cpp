#include "clustervd/generators.hpp"

#include <algorithm>

#include "clustervd/error.hpp"

namespace clustervd {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::Input, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void shuffle(Rng& rng, std::vector<int>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

BinaryCotree random_binary_cotree(int n, Rng& rng, LabelMode mode) {
  if (n < 1) throw Error(ErrorKind::Input, "a cotree needs at least one leaf");
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  shuffle(rng, ids);

  std::vector<BinaryNode> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(n) - 1);
  struct Pending {
    int node;
    int leaves;
    NodeLabel parent_label;
  };
  const NodeLabel root_label = uniform_int(rng, 0, 1) ? NodeLabel::Join : NodeLabel::Union;
  auto flip = [](NodeLabel l) { return l == NodeLabel::Union ? NodeLabel::Join : NodeLabel::Union; };
  nodes.push_back({});
  std::vector<Pending> stack{{0, n, flip(root_label)}};
  int next_leaf = 0;
  while (!stack.empty()) {
    Pending p = stack.back();
    stack.pop_back();
    BinaryNode& nd = nodes[static_cast<std::size_t>(p.node)];
    if (p.leaves == 1) {
      nd.label = NodeLabel::Leaf;
      nd.vertex = ids[static_cast<std::size_t>(next_leaf++)];
      continue;
    }
    NodeLabel label = mode == LabelMode::Alternating ? flip(p.parent_label)
                                                     : (uniform_int(rng, 0, 1) ? NodeLabel::Join : NodeLabel::Union);
    const int left_leaves = static_cast<int>(uniform_int(rng, 1, p.leaves - 1));
    const int left = static_cast<int>(nodes.size());
    nodes.push_back({});
    const int right = static_cast<int>(nodes.size());
    nodes.push_back({});
    BinaryNode& cur = nodes[static_cast<std::size_t>(p.node)];
    cur.label = label;
    cur.left = left;
    cur.right = right;
    stack.push_back({right, p.leaves - left_leaves, label});
    stack.push_back({left, left_leaves, label});
  }
  return BinaryCotree(std::move(nodes), 0);
}

Graph gnp(int n, double p, Rng& rng) {
  if (n < 0) throw Error(ErrorKind::Input, "n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::Input, "p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorKind::Input, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::Input, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw Error(ErrorKind::Input, "n must be >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorKind::Input, "grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph(rows * cols, edges);
}

namespace {

std::vector<Edge> shuffled_pairs(int n, Rng& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(pairs[i - 1], pairs[j]);
  }
  return pairs;
}

bool common_neighbor(const std::vector<std::vector<char>>& adj, int u, int v) {
  for (std::size_t w = 0; w < adj.size(); ++w) {
    if (adj[static_cast<std::size_t>(u)][w] && adj[static_cast<std::size_t>(v)][w]) return true;
  }
  return false;
}

}  // namespace

Graph random_triangle_free(int n, double p, int max_edges, Rng& rng) {
  if (n < 0) throw Error(ErrorKind::Input, "n must be >= 0");
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  for (const Edge& e : shuffled_pairs(n, rng)) {
    if (static_cast<int>(edges.size()) >= max_edges) break;
    if (uniform_unit(rng) >= p || common_neighbor(adj, e.u, e.v)) continue;
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    edges.push_back(e);
  }
  return Graph(n, edges);
}

Graph random_subcubic_with_c5(int n, double p, Rng& rng) {
  if (n < 5) throw Error(ErrorKind::Input, "an induced C5 needs n >= 5");
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  shuffle(rng, ids);
  std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  auto connect = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    edges.push_back({std::min(u, v), std::max(u, v)});
  };
  for (int i = 0; i < 5; ++i) {
    on_cycle[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = 1;
    connect(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>((i + 1) % 5)]);
  }
  for (const Edge& e : shuffled_pairs(n, rng)) {
    if (uniform_unit(rng) >= p) continue;
    if (adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)]) continue;
    if (on_cycle[static_cast<std::size_t>(e.u)] && on_cycle[static_cast<std::size_t>(e.v)]) continue;
    if (deg[static_cast<std::size_t>(e.u)] >= 3 || deg[static_cast<std::size_t>(e.v)] >= 3) continue;
    if (common_neighbor(adj, e.u, e.v)) continue;
    connect(e.u, e.v);
  }
  return Graph(n, edges);
}

Graph random_bipartite(int nx, int ny, double p, Rng& rng) {
  if (nx < 0 || ny < 0) throw Error(ErrorKind::Input, "side sizes must be >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < nx; ++u) {
    for (int v = 0; v < ny; ++v) {
      if (uniform_unit(rng) < p) edges.push_back({u, nx + v});
    }
  }
  Graph g(nx + ny, edges);
  std::vector<Side> parts(static_cast<std::size_t>(nx + ny), Side::Y);
  for (int u = 0; u < nx; ++u) parts[static_cast<std::size_t>(u)] = Side::X;
  g.set_parts(std::move(parts));
  return g;
}

}  // namespace clustervd
