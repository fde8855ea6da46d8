#include "clustervd/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>

#include <omp.h>

#include "clustervd/error.hpp"
#include "clustervd/patterns.hpp"

namespace clustervd {

using Mask = std::uint64_t;

TargetPredicate target_of(Variant v) {
  switch (v) {
    case Variant::Cvd: return {TargetKind::Cluster, false};
    case Variant::ConnectedCvd: return {TargetKind::Cluster, true};
    case Variant::CliqueDel:
    case Variant::ComplementVc: return {TargetKind::Clique, false};
    case Variant::ConnectedCliqueDel: return {TargetKind::Clique, true};
    case Variant::VertexCover: return {TargetKind::Edgeless, false};
  }
  return {};
}

namespace {

Variant variant_of(TargetPredicate t) {
  switch (t.kind) {
    case TargetKind::Cluster: return t.connected_deleter ? Variant::ConnectedCvd : Variant::Cvd;
    case TargetKind::Clique: return t.connected_deleter ? Variant::ConnectedCliqueDel : Variant::CliqueDel;
    case TargetKind::Edgeless: return Variant::VertexCover;
  }
  return Variant::Cvd;
}

class MaskGraph {
 public:
  MaskGraph(const Graph& g, TargetPredicate target) : n_(g.order()), target_(target) {
    for (int v = 0; v < n_; ++v) {
      Mask m = 0;
      for (int u : g.neighbors(v)) m |= Mask{1} << u;
      adj_[static_cast<std::size_t>(v)] = m;
    }
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  bool accepts(Mask deleted) const {
    const Mask rest = full_ & ~deleted;
    if (!remainder_ok(rest)) return false;
    return !target_.connected_deleter || connected(deleted);
  }

  Mask full() const { return full_; }

 private:
  bool remainder_ok(Mask rest) const {
    for (Mask it = rest; it; it &= it - 1) {
      const int v = std::countr_zero(it);
      const Mask bit = Mask{1} << v;
      const Mask nb = adj_[static_cast<std::size_t>(v)] & rest;
      switch (target_.kind) {
        case TargetKind::Edgeless:
          if (nb) return false;
          break;
        case TargetKind::Clique:
          if ((nb | bit) != rest) return false;
          break;
        case TargetKind::Cluster:
          for (Mask jt = nb; jt; jt &= jt - 1) {
            const int u = std::countr_zero(jt);
            if (((adj_[static_cast<std::size_t>(u)] & rest) | (Mask{1} << u)) != (nb | bit)) return false;
          }
          break;
      }
    }
    return true;
  }

  bool connected(Mask s) const {
    if (!s) return true;
    Mask reach = s & (~s + 1);
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask it = frontier; it; it &= it - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(it))];
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach == s;
  }

  int n_;
  TargetPredicate target_;
  std::array<Mask, 64> adj_{};
  Mask full_ = 0;
};

class Binomial {
 public:
  Binomial() {
    for (int n = 0; n <= 64; ++n) {
      c_[n][0] = 1;
      for (int k = 1; k <= n; ++k) c_[n][k] = c_[n - 1][k - 1] + (k < n ? c_[n - 1][k] : 0);
    }
  }
  std::uint64_t operator()(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return c_[n][k];
  }

 private:
  std::uint64_t c_[65][65]{};
};

const Binomial& binom() {
  static const Binomial b;
  return b;
}

// k-subset of {0..n-1} with the given rank in lexicographic order.
Mask unrank(int n, int k, std::uint64_t rank, std::vector<int>& idx) {
  idx.assign(static_cast<std::size_t>(k), 0);
  int c = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t count = binom()(n - c - 1, k - i - 1);
      if (rank < count) break;
      rank -= count;
      ++c;
    }
    idx[static_cast<std::size_t>(i)] = c++;
  }
  Mask m = 0;
  for (int v : idx) m |= Mask{1} << v;
  return m;
}

// Advance idx to the next k-subset in lexicographic order; false at the end.
bool next_combination(std::vector<int>& idx, int n, Mask& m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  m = 0;
  for (int v : idx) m |= Mask{1} << v;
  return true;
}

std::vector<int> to_set(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

struct WeightedKey {
  std::int64_t weight;
  int size;
  Mask mask;
};

// (weight, size, lexicographic order of sorted vertex lists)
bool key_less(const WeightedKey& a, const WeightedKey& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.size != b.size) return a.size < b.size;
  if (a.mask == b.mask) return false;
  const Mask diff = a.mask ^ b.mask;
  return (a.mask & (diff & (~diff + 1))) != 0;
}

void check_order(const Graph& g, bool force) {
  if (g.order() > kBruteHardLimit) {
    throw Error(ErrorKind::Guard, "brute force supports at most " + std::to_string(kBruteHardLimit) + " vertices");
  }
  if (!force && g.order() > kBruteMaxOrder) {
    throw Error(ErrorKind::Guard, "brute force limited to n <= " + std::to_string(kBruteMaxOrder) + " (got " +
                                      std::to_string(g.order()) + "); pass force to override");
  }
}

Solution make_solution(const Graph& g, TargetPredicate target, bool weighted, std::optional<Mask> found) {
  Solution s;
  s.variant = variant_of(target);
  s.weighted = weighted;
  s.method = "brute";
  if (!found) {
    s.value = ExtInt::infinity();
    return s;
  }
  auto set = to_set(*found);
  s.value = weighted ? g.total_weight(set) : static_cast<std::int64_t>(set.size());
  s.set = std::move(set);
  return s;
}

std::vector<std::int64_t> weights_of(const Graph& g) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) w[static_cast<std::size_t>(v)] = g.weight(v);
  return w;
}

std::int64_t mask_weight(const std::vector<std::int64_t>& w, Mask m) {
  std::int64_t total = 0;
  for (; m; m &= m - 1) total += w[static_cast<std::size_t>(std::countr_zero(m))];
  return total;
}

constexpr std::uint64_t kChunk = 1024;

}  // namespace

Solution brute_min_serial(const Graph& g, TargetPredicate target, bool weighted, bool force) {
  check_order(g, force);
  const int n = g.order();
  const MaskGraph mg(g, target);
  if (weighted) {
    const auto w = weights_of(g);
    std::optional<WeightedKey> best;
    for (Mask m = 0;; ++m) {
      if (mg.accepts(m)) {
        WeightedKey key{mask_weight(w, m), std::popcount(m), m};
        if (!best || key_less(key, *best)) best = key;
      }
      if (m == mg.full()) break;
    }
    return make_solution(g, target, true, best ? std::optional<Mask>(best->mask) : std::nullopt);
  }
  std::vector<int> idx;
  for (int k = 0; k <= n; ++k) {
    Mask m = unrank(n, k, 0, idx);
    do {
      if (mg.accepts(m)) return make_solution(g, target, false, m);
    } while (next_combination(idx, n, m));
  }
  return make_solution(g, target, false, std::nullopt);
}

Solution brute_min(const Graph& g, TargetPredicate target, bool weighted, bool force) {
  check_order(g, force);
  const int n = g.order();
  if (omp_get_max_threads() == 1 || n < 12) return brute_min_serial(g, target, weighted, force);
  const MaskGraph mg(g, target);

  if (weighted) {
    const auto w = weights_of(g);
    const std::uint64_t total = n == 64 ? 0 : (std::uint64_t{1} << n);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::optional<WeightedKey> best;
#pragma omp parallel default(shared)
    {
      std::optional<WeightedKey> local;
#pragma omp for schedule(dynamic, 1)
      for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t m = c * kChunk; m < end; ++m) {
          if (!mg.accepts(m)) continue;
          WeightedKey key{mask_weight(w, m), std::popcount(m), m};
          if (!local || key_less(key, *local)) local = key;
        }
      }
#pragma omp critical(clustervd_brute_weighted)
      if (local && (!best || key_less(*local, *best))) best = local;
    }
    return make_solution(g, target, true, best ? std::optional<Mask>(best->mask) : std::nullopt);
  }

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t total = binom()(n, k);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 1) default(shared)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = c * kChunk;
      if (begin >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(total, begin + kChunk);
      std::vector<int> idx;
      Mask m = unrank(n, k, begin, idx);
      for (std::uint64_t r = begin; r < end; ++r) {
        if (r >= best.load(std::memory_order_relaxed)) break;
        if (mg.accepts(m)) {
          std::uint64_t cur = best.load();
          while (r < cur && !best.compare_exchange_weak(cur, r)) {
          }
          break;
        }
        next_combination(idx, n, m);
      }
    }
    if (best.load() != kNone) {
      std::vector<int> idx;
      return make_solution(g, target, false, unrank(n, k, best.load(), idx));
    }
  }
  return make_solution(g, target, false, std::nullopt);
}

Solution brute_min(const Graph& g, Variant v, bool weighted, bool force) {
  Solution s = brute_min(g, target_of(v), weighted, force);
  s.variant = v;
  return s;
}

namespace {

class Brancher {
 public:
  explicit Brancher(const Graph& g) : g_(g), removed_(static_cast<std::size_t>(g.order()), 0) {}

  bool run(int k) { return branch(k); }
  std::vector<int> solution() const {
    std::vector<int> s = chosen_;
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  bool alive(int v) const { return !removed_[static_cast<std::size_t>(v)]; }

  // First induced P3 (a, center, c) in the remaining graph avoiding `used`.
  std::optional<std::array<int, 3>> find_p3(const std::vector<char>* used) const {
    auto ok = [&](int v) { return alive(v) && (!used || !(*used)[static_cast<std::size_t>(v)]); };
    for (int v = 0; v < g_.order(); ++v) {
      if (!ok(v)) continue;
      auto nb = g_.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (!ok(nb[i])) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (ok(nb[j]) && !g_.adjacent(nb[i], nb[j])) return std::array<int, 3>{nb[i], v, nb[j]};
        }
      }
    }
    return std::nullopt;
  }

  // Vertex-disjoint P3s found greedily; each needs its own deletion.
  int packing_bound(int cap) const {
    std::vector<char> used(static_cast<std::size_t>(g_.order()), 0);
    int count = 0;
    while (count <= cap) {
      auto p = find_p3(&used);
      if (!p) break;
      for (int v : *p) used[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
    return count;
  }

  bool branch(int k) {
    auto p3 = find_p3(nullptr);
    if (!p3) return true;
    if (k == 0) return false;
    if (packing_bound(k) > k) return false;
    for (int v : *p3) {
      removed_[static_cast<std::size_t>(v)] = 1;
      chosen_.push_back(v);
      if (branch(k - 1)) return true;
      chosen_.pop_back();
      removed_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> removed_;
  std::vector<int> chosen_;
};

}  // namespace

BranchResult branch_cvd(const Graph& g, int k, bool force) {
  if (k < 0) throw Error(ErrorKind::Input, "budget must be >= 0");
  if (!force && k > kBranchMaxBudget) {
    throw Error(ErrorKind::Guard, "branching limited to k <= " + std::to_string(kBranchMaxBudget) + " (got " +
                                      std::to_string(k) + "); pass force to override");
  }
  Brancher b(g);
  BranchResult r;
  r.yes = b.run(k);
  if (r.yes) r.set = b.solution();
  return r;
}

std::string VerifyResult::message() const {
  auto list = [](const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
  };
  switch (reason) {
    case RejectReason::None: return "accepted";
    case RejectReason::InducedP3: return "remainder contains induced P3 " + list(witness);
    case RejectReason::MissingEdge: return "remainder is not complete: " + list(witness) + " non-adjacent";
    case RejectReason::RemainingEdge: return "remainder keeps edge " + list(witness);
    case RejectReason::DeleterDisconnected:
      return "deletion set is disconnected: {" + list(witness) + "} vs {" + list(other) + "}";
  }
  return "?";
}

VerifyResult verify(const Graph& g, std::span<const int> set, TargetPredicate target) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> deleted;
  for (int v : set) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorKind::Input, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
    }
    if (!in[static_cast<std::size_t>(v)]) deleted.push_back(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::sort(deleted.begin(), deleted.end());

  VerifyResult res;
  auto [rest, back] = remove_vertices(g, deleted);
  auto to_old = [&](std::vector<int> vs) {
    for (int& v : vs) v = back[static_cast<std::size_t>(v)];
    return vs;
  };
  switch (target.kind) {
    case TargetKind::Cluster:
      if (auto p = find_induced(rest, PatternKind::P3)) {
        res = {false, RejectReason::InducedP3, to_old(p->vertices), {}};
        return res;
      }
      break;
    case TargetKind::Clique:
      for (int u = 0; u < rest.order(); ++u) {
        for (int v = u + 1; v < rest.order(); ++v) {
          if (!rest.adjacent(u, v)) return {false, RejectReason::MissingEdge, to_old({u, v}), {}};
        }
      }
      break;
    case TargetKind::Edgeless:
      if (rest.size() > 0) {
        Edge e = rest.edges().front();
        return {false, RejectReason::RemainingEdge, to_old({e.u, e.v}), {}};
      }
      break;
  }
  if (target.connected_deleter && !deleted.empty()) {
    Graph sub = induced_subgraph(g, deleted);
    auto comps = components(sub);
    if (comps.size() > 1) {
      std::vector<int> first;
      std::vector<int> others;
      for (int v : comps[0]) first.push_back(deleted[static_cast<std::size_t>(v)]);
      for (std::size_t c = 1; c < comps.size(); ++c) {
        for (int v : comps[c]) others.push_back(deleted[static_cast<std::size_t>(v)]);
      }
      std::sort(others.begin(), others.end());
      return {false, RejectReason::DeleterDisconnected, first, others};
    }
  }
  return res;
}

VerifyResult verify(const Graph& g, std::span<const int> set, Variant v) { return verify(g, set, target_of(v)); }

}  // namespace clustervd
