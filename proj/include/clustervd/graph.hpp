#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clustervd/ext_int.hpp"

namespace clustervd {

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { X, Y };

/// Simple undirected graph on vertices 0..n-1 with optional positive vertex
/// weights and an optional bipartition. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws Error(Input) on self-loops, duplicate edges or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(int u, int v) const;
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int min_degree() const;
  int max_degree() const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<std::int64_t>>& weights() const noexcept { return weights_; }
  std::int64_t weight(int v) const { return weights_ ? (*weights_)[static_cast<std::size_t>(v)] : 1; }
  std::int64_t total_weight(std::span<const int> vertices) const;
  /// Every vertex needs a weight >= 1.
  void set_weights(std::vector<std::int64_t> w);
  void clear_weights() noexcept { weights_.reset(); }

  const std::optional<std::vector<Side>>& parts() const noexcept { return parts_; }
  /// Every edge must join an X vertex to a Y vertex.
  void set_parts(std::vector<Side> parts);
  void clear_parts() noexcept { parts_.reset(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
  std::optional<std::vector<std::int64_t>> weights_;
  std::optional<std::vector<Side>> parts_;
};

/// Same vertex set, uv an edge iff u != v and uv not an edge of g.
/// Weights are kept, the bipartition is dropped.
Graph complement(const Graph& g);

/// Vertices of g2 are shifted by g1.order(). Weights survive when both sides
/// carry them, and so does the bipartition.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// disjoint_union plus every pair (u in g1, v in g2). Bipartition dropped.
Graph join(const Graph& g1, const Graph& g2);

/// Subgraph induced by `vertices`; new vertex i is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// g minus a vertex set, remaining vertices renumbered in increasing order.
/// Also returns the map new id -> old id.
std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, std::span<const int> removed);

/// Connected components ordered by their smallest vertex; each sorted.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Length of a shortest cycle, infinity for forests.
ExtInt girth(const Graph& g);
/// Vertices of some shortest cycle in traversal order; empty for forests.
std::vector<int> shortest_cycle(const Graph& g);

struct Bipartition {
  std::vector<int> x;
  std::vector<int> y;
};
/// Two-colouring where the smallest vertex of each component goes to X.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_complete(const Graph& g);
/// Every connected component is a clique.
bool is_cluster_graph(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace clustervd
