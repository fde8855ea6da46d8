#pragma once

#include <cstdint>
#include <random>

#include "clustervd/cotree.hpp"
#include "clustervd/graph.hpp"

namespace clustervd {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection sampling on the raw 64-bit
/// output, so sequences do not depend on the standard library's
/// distribution implementation.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
/// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);
void shuffle(Rng& rng, std::vector<int>& v);

enum class LabelMode {
  Alternating,  // root label random, labels alternate by level
  Random,       // every internal label drawn independently
};

/// Random binary cotree on n leaves: a node with c > 1 leaves splits them
/// into 1..c-1 and the rest uniformly; leaf ids are a random permutation.
BinaryCotree random_binary_cotree(int n, Rng& rng, LabelMode mode = LabelMode::Alternating);

/// G(n, p): pairs u < v in lexicographic order, each kept when
/// uniform_unit(rng) < p.
Graph gnp(int n, double p, Rng& rng);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);

/// Visits all vertex pairs in random order and keeps each with probability p
/// when it closes no triangle, stopping at max_edges.
Graph random_triangle_free(int n, double p, int max_edges, Rng& rng);

/// n >= 5: an induced C5 on random vertices plus random extra edges that keep
/// the graph triangle-free, subcubic and the C5 induced.
Graph random_subcubic_with_c5(int n, double p, Rng& rng);

/// Sides 0..nx-1 and nx..nx+ny-1, each cross pair kept with probability p.
Graph random_bipartite(int nx, int ny, double p, Rng& rng);

}  // namespace clustervd
