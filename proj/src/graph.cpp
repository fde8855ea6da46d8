#include "clustervd/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "clustervd/error.hpp"

namespace clustervd {

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorKind::Input, "negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw Error(ErrorKind::Input, "self-loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw Error(ErrorKind::Input,
                  "duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
    }
  }
  m_ = edges.size();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorKind::Input, "vertex " + std::to_string(v) + " out of range [0," +
                                      std::to_string(order()) + ")");
  }
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  // search the shorter list
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

int Graph::min_degree() const {
  int d = order() == 0 ? 0 : degree(0);
  for (int v = 1; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::int64_t Graph::total_weight(std::span<const int> vertices) const {
  std::int64_t total = 0;
  for (int v : vertices) total += weight(v);
  return total;
}

void Graph::set_weights(std::vector<std::int64_t> w) {
  if (w.size() != adj_.size()) {
    throw Error(ErrorKind::Input, "weight vector has " + std::to_string(w.size()) +
                                      " entries for " + std::to_string(order()) + " vertices");
  }
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w[v] < 1) throw Error(ErrorKind::Input, "weight of vertex " + std::to_string(v) + " < 1");
  }
  weights_ = std::move(w);
}

void Graph::set_parts(std::vector<Side> parts) {
  if (parts.size() != adj_.size()) throw Error(ErrorKind::Input, "bipartition size mismatch");
  for (const Edge& e : edges()) {
    if (parts[static_cast<std::size_t>(e.u)] == parts[static_cast<std::size_t>(e.v)]) {
      throw Error(ErrorKind::Input, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                        " lies inside one side of the bipartition");
    }
  }
  parts_ = std::move(parts);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  edges.reserve(pairs - g.size());
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) mark[static_cast<std::size_t>(v)] = 1;
    for (int v = u + 1; v < n; ++v) {
      if (!mark[static_cast<std::size_t>(v)]) edges.push_back({u, v});
    }
    for (int v : g.neighbors(u)) mark[static_cast<std::size_t>(v)] = 0;
  }
  Graph out(n, edges);
  if (g.weights()) out.set_weights(*g.weights());
  return out;
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + n1, e.v + n1});
  if (cross) {
    for (int u = 0; u < n1; ++u) {
      for (int v = 0; v < n2; ++v) edges.push_back({u, v + n1});
    }
  }
  Graph out(n1 + n2, edges);
  if (g1.weights() && g2.weights()) {
    std::vector<std::int64_t> w = *g1.weights();
    w.insert(w.end(), g2.weights()->begin(), g2.weights()->end());
    out.set_weights(std::move(w));
  }
  if (!cross && g1.parts() && g2.parts()) {
    std::vector<Side> p = *g1.parts();
    p.insert(p.end(), g2.parts()->begin(), g2.parts()->end());
    out.set_parts(std::move(p));
  }
  return out;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return combine(g1, g2, false); }

Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order() || index[static_cast<std::size_t>(v)] != -1) {
      throw Error(ErrorKind::Input, "invalid or repeated vertex in induced subgraph");
    }
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<int>(i), j});
    }
  }
  Graph out(static_cast<int>(vertices.size()), edges);
  if (g.weights()) {
    std::vector<std::int64_t> w;
    w.reserve(vertices.size());
    for (int v : vertices) w.push_back(g.weight(v));
    out.set_weights(std::move(w));
  }
  return out;
}

std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, std::span<const int> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (int v : removed) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::Input, "vertex out of range");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  Graph h = induced_subgraph(g, keep);
  return {std::move(h), std::move(keep)};
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.assign(1, s);
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : g.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

struct CycleSearch {
  ExtInt length = ExtInt::infinity();
  int root = -1;
  int u = -1;
  int w = -1;
};

// BFS from every root; a non-tree edge uw closes a walk of length
// dist[u] + dist[w] + 1 through the root. The minimum over all roots is the
// girth, and at a minimising root the two tree paths are internally disjoint.
CycleSearch find_shortest_cycle(const Graph& g, std::vector<int>* parent_out) {
  const int n = g.order();
  CycleSearch best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    queue.assign(1, root);
    bool improved = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int du = dist[static_cast<std::size_t>(u)];
      if (best.length.is_finite() && 2 * du + 1 >= best.length.value()) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          ExtInt len = du + dist[static_cast<std::size_t>(w)] + 1;
          if (len < best.length) {
            best = {len, root, u, w};
            improved = true;
          }
        }
      }
    }
    if (improved && parent_out) *parent_out = parent;
  }
  return best;
}

}  // namespace

ExtInt girth(const Graph& g) { return find_shortest_cycle(g, nullptr).length; }

std::vector<int> shortest_cycle(const Graph& g) {
  std::vector<int> parent;
  CycleSearch c = find_shortest_cycle(g, &parent);
  if (c.length.is_infinite()) return {};
  std::vector<int> left;
  for (int v = c.u; v != -1; v = parent[static_cast<std::size_t>(v)]) left.push_back(v);
  std::vector<int> right;
  for (int v = c.w; v != -1; v = parent[static_cast<std::size_t>(v)]) right.push_back(v);
  // left = u .. root, right = w .. root; cycle = root .. u, w .. (before root)
  std::vector<int> cycle(left.rbegin(), left.rend());
  for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
  return cycle;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? b.x : b.y).push_back(v);
  return b;
}

bool is_complete(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_cluster_graph(const Graph& g) {
  for (const auto& comp : components(g)) {
    for (int v : comp) {
      if (static_cast<std::size_t>(g.degree(v)) + 1 != comp.size()) return false;
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

}  // namespace clustervd
