#include "clustervd/cluster_dp.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <omp.h>

#include "clustervd/error.hpp"

namespace clustervd {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 6> kVariantNames{{
    {Variant::Cvd, "CVD"},
    {Variant::ConnectedCvd, "CONNECTED_CVD"},
    {Variant::CliqueDel, "CLIQUE_DEL"},
    {Variant::ConnectedCliqueDel, "CONNECTED_CLIQUE_DEL"},
    {Variant::ComplementVc, "COMPLEMENT_VC"},
    {Variant::VertexCover, "VERTEX_COVER"},
}};

}  // namespace

std::string_view to_string(Variant v) {
  for (auto [k, name] : kVariantNames) {
    if (k == v) return name;
  }
  return "?";
}

std::optional<Variant> variant_from_string(std::string_view name) {
  for (auto [k, s] : kVariantNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

bool is_connected_variant(Variant v) { return v == Variant::ConnectedCvd || v == Variant::ConnectedCliqueDel; }

namespace {

NodeStats leaf_stats(int vertex, std::int64_t weight) {
  NodeStats s;
  s.n = 1;
  s.w = weight;
  s.min_leaf = vertex;
  return s;
}

ExtInt theta_c_union(const NodeStats& l, const NodeStats& r) {
  if (!l.connected || !r.connected || (!l.complete && !r.complete)) return ExtInt::infinity();
  ExtInt best = ExtInt::infinity();
  if (r.complete) best = min(best, l.n);
  if (l.complete) best = min(best, r.n);
  return best;
}

ExtInt theta_c_join(const NodeStats& l, const NodeStats& r) {
  if (!l.complete && !r.complete) return l.tau_bar + r.tau_bar;
  ExtInt best = ExtInt::infinity();
  if (l.complete) best = min(best, min(r.theta_c, 1 + r.tau_bar));
  if (r.complete) best = min(best, min(l.theta_c, 1 + l.tau_bar));
  return best;
}

ExtInt sigma_c_join(const NodeStats& l, const NodeStats& r, bool complete) {
  if (complete) return 0;
  if (l.complete) return min(min(l.n + r.sigma, r.theta_c), 1 + r.tau_bar);
  if (r.complete) return min(min(r.n + l.sigma, l.theta_c), 1 + l.tau_bar);
  if (l.connected || r.connected) {
    return std::min({l.n + r.sigma, r.n + l.sigma, l.tau_bar + r.tau_bar});
  }
  return std::min({l.n + std::max<std::int64_t>(r.sigma, 1), r.n + std::max<std::int64_t>(l.sigma, 1),
                   l.tau_bar + r.tau_bar});
}

NodeStats combine(NodeLabel label, const NodeStats& l, const NodeStats& r) {
  NodeStats v;
  v.n = l.n + r.n;
  v.w = l.w + r.w;
  v.min_leaf = std::min(l.min_leaf, r.min_leaf);
  if (label == NodeLabel::Union) {
    v.tau_bar = std::min(l.tau_bar + r.n, r.tau_bar + l.n);
    v.sigma = l.sigma + r.sigma;
    v.w_tau_bar = std::min(l.w_tau_bar + r.w, r.w_tau_bar + l.w);
    v.w_sigma = l.w_sigma + r.w_sigma;
    v.complete = false;
    v.connected = false;
    v.ncq = static_cast<std::uint8_t>(std::min(2, l.ncq + r.ncq));
    v.theta_c = theta_c_union(l, r);
    if (v.ncq == 0) {
      v.sigma_c = 0;
    } else if (v.ncq == 1) {
      v.sigma_c = l.ncq == 1 ? l.sigma_c : r.sigma_c;
    } else {
      v.sigma_c = ExtInt::infinity();
    }
  } else {
    v.tau_bar = l.tau_bar + r.tau_bar;
    v.sigma = std::min({l.sigma + r.n, r.sigma + l.n, v.tau_bar});
    v.w_tau_bar = l.w_tau_bar + r.w_tau_bar;
    v.w_sigma = std::min({l.w_sigma + r.w, r.w_sigma + l.w, v.w_tau_bar});
    v.complete = l.complete && r.complete;
    v.connected = true;
    v.ncq = v.complete ? 0 : 1;
    v.theta_c = theta_c_join(l, r);
    v.sigma_c = sigma_c_join(l, r, v.complete);
  }
  return v;
}

void check_weights(const BinaryCotree& t, std::span<const std::int64_t> weights) {
  if (weights.empty()) return;
  if (weights.size() != static_cast<std::size_t>(t.vertex_count())) {
    throw Error(ErrorKind::Input, "expected " + std::to_string(t.vertex_count()) + " weights, got " +
                                      std::to_string(weights.size()));
  }
  for (auto w : weights) {
    if (w < 1) throw Error(ErrorKind::Input, "weights must be >= 1");
  }
}

// Iterative post-order over the subtree rooted at `top`.
void eval_subtree(const BinaryCotree& t, std::span<const std::int64_t> weights, int top,
                  std::vector<NodeStats>& out) {
  std::vector<std::pair<int, bool>> stack{{top, false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    const BinaryNode& nd = t.node(i);
    auto& slot = out[static_cast<std::size_t>(i)];
    if (nd.label == NodeLabel::Leaf) {
      slot = leaf_stats(nd.vertex, weights.empty() ? 1 : weights[static_cast<std::size_t>(nd.vertex)]);
    } else if (expanded) {
      slot = combine(nd.label, out[static_cast<std::size_t>(nd.left)], out[static_cast<std::size_t>(nd.right)]);
    } else {
      stack.emplace_back(i, true);
      stack.emplace_back(nd.right, false);
      stack.emplace_back(nd.left, false);
    }
  }
}

constexpr int kTaskDepth = 10;
constexpr std::size_t kTaskGrain = 4096;

void eval_tasks(const BinaryCotree& t, std::span<const std::int64_t> weights, const std::vector<int>& size,
                int top, int depth, std::vector<NodeStats>& out) {
  const BinaryNode& nd = t.node(top);
  if (nd.label == NodeLabel::Leaf || depth >= kTaskDepth ||
      static_cast<std::size_t>(size[static_cast<std::size_t>(top)]) < kTaskGrain) {
    eval_subtree(t, weights, top, out);
    return;
  }
#pragma omp task default(shared)
  eval_tasks(t, weights, size, nd.left, depth + 1, out);
  eval_tasks(t, weights, size, nd.right, depth + 1, out);
#pragma omp taskwait
  out[static_cast<std::size_t>(top)] =
      combine(nd.label, out[static_cast<std::size_t>(nd.left)], out[static_cast<std::size_t>(nd.right)]);
}

}  // namespace

std::vector<NodeStats> dp_stats_serial(const BinaryCotree& t, std::span<const std::int64_t> weights) {
  check_weights(t, weights);
  std::vector<NodeStats> out(t.node_count());
  eval_subtree(t, weights, t.root(), out);
  return out;
}

std::vector<NodeStats> dp_stats(const BinaryCotree& t, std::span<const std::int64_t> weights) {
  check_weights(t, weights);
  std::vector<NodeStats> out(t.node_count());
  if (t.node_count() < kTaskGrain || omp_get_max_threads() == 1) {
    eval_subtree(t, weights, t.root(), out);
    return out;
  }
  std::vector<int> size(t.node_count(), 1);
  for (int i : post_order(t)) {
    const BinaryNode& nd = t.node(i);
    if (nd.label != NodeLabel::Leaf) {
      size[static_cast<std::size_t>(i)] =
          size[static_cast<std::size_t>(nd.left)] + size[static_cast<std::size_t>(nd.right)] + 1;
    }
  }
#pragma omp parallel default(shared)
#pragma omp single
  eval_tasks(t, weights, size, t.root(), 0, out);
  return out;
}

ExtInt root_value(const NodeStats& root, Variant v, bool weighted) {
  if (weighted) {
    switch (v) {
      case Variant::Cvd: return root.w_sigma;
      case Variant::CliqueDel:
      case Variant::ComplementVc: return root.w_tau_bar;
      default:
        throw Error(ErrorKind::Unsupported,
                    "weighted " + std::string(to_string(v)) + " is not supported by the cotree DP");
    }
  }
  switch (v) {
    case Variant::Cvd: return root.sigma;
    case Variant::ConnectedCvd: return root.sigma_c;
    case Variant::CliqueDel:
    case Variant::ComplementVc: return root.tau_bar;
    case Variant::ConnectedCliqueDel: return root.theta_c;
    case Variant::VertexCover: break;
  }
  throw Error(ErrorKind::Unsupported, "VERTEX_COVER is only available through the brute or branch methods");
}

Solution solve(const BinaryCotree& t, Variant v, std::span<const std::int64_t> weights, bool weighted) {
  weighted = weighted || !weights.empty();
  if (weighted && (is_connected_variant(v) || v == Variant::VertexCover)) {
    throw Error(ErrorKind::Unsupported,
                "weighted " + std::string(to_string(v)) + " is not supported by the cotree DP");
  }
  auto stats = dp_stats(t, weights);
  Solution s;
  s.variant = v;
  s.weighted = weighted;
  s.value = root_value(stats[static_cast<std::size_t>(t.root())], v, weighted);
  if (s.value.is_finite()) s.set = extract_set(t, stats, v, weighted);
  return s;
}

Solution solve(const Cotree& t, Variant v, std::span<const std::int64_t> weights, bool weighted) {
  return solve(binarize(t), v, weights, weighted);
}

Solution solve(const Graph& g, Variant v, bool weighted) {
  auto built = build_cotree(g);
  if (auto* w = std::get_if<PatternWitness>(&built)) {
    throw Error(ErrorKind::NotCograph, "input is not a cograph: induced " + describe(*w), *w);
  }
  std::vector<std::int64_t> weights;
  if (weighted) {
    weights.resize(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) weights[static_cast<std::size_t>(u)] = g.weight(u);
  }
  return solve(std::get<Cotree>(built), v, weights, weighted);
}

}  // namespace clustervd
