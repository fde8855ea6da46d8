#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clustervd/cotree.hpp"
#include "clustervd/ext_int.hpp"
#include "clustervd/graph.hpp"

namespace clustervd {

// VertexCover is only reachable through the oracle solvers; the cotree DP
// refuses it.
enum class Variant { Cvd, ConnectedCvd, CliqueDel, ConnectedCliqueDel, ComplementVc, VertexCover };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);
bool is_connected_variant(Variant v);

struct NodeStats {
  std::int64_t n = 0;
  std::int64_t w = 0;
  std::int64_t tau_bar = 0;
  std::int64_t sigma = 0;
  std::int64_t w_tau_bar = 0;
  std::int64_t w_sigma = 0;
  ExtInt theta_c;
  ExtInt sigma_c;
  int min_leaf = -1;
  bool complete = true;
  bool connected = true;
  std::uint8_t ncq = 0;  // non-clique components, saturating at 2

  friend bool operator==(const NodeStats&, const NodeStats&) = default;
};

struct Solution {
  Variant variant = Variant::Cvd;
  ExtInt value;
  std::optional<std::vector<int>> set;
  bool weighted = false;
  std::string method = "cotree-dp";
};

/// Per-node statistics indexed like t.nodes(). `weights` is indexed by vertex
/// id; empty means unit weights. Subtrees are evaluated as OpenMP tasks.
std::vector<NodeStats> dp_stats(const BinaryCotree& t, std::span<const std::int64_t> weights = {});

/// Single-threaded post-order reference for dp_stats.
std::vector<NodeStats> dp_stats_serial(const BinaryCotree& t, std::span<const std::int64_t> weights = {});

/// Root value for `v`. Weighted values exist for Cvd, CliqueDel and
/// ComplementVc only; other requests throw Error(Unsupported).
ExtInt root_value(const NodeStats& root, Variant v, bool weighted);

/// Replays the argmin choices top-down. Returns the sorted deletion set.
/// Throws Error(NoSet) when the requested value is infinite.
std::vector<int> extract_set(const BinaryCotree& t, std::span<const NodeStats> stats, Variant v,
                             bool weighted = false);

Solution solve(const BinaryCotree& t, Variant v, std::span<const std::int64_t> weights = {},
               bool weighted = false);
Solution solve(const Cotree& t, Variant v, std::span<const std::int64_t> weights = {}, bool weighted = false);

/// Builds the cotree first. Non-cographs throw Error(NotCograph) carrying
/// the P4. Weighted runs use g's weights (unit weights when g has none).
Solution solve(const Graph& g, Variant v, bool weighted = false);

}  // namespace clustervd
