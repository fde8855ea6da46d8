#pragma once

#include <span>
#include <string>
#include <vector>

#include "clustervd/cluster_dp.hpp"
#include "clustervd/graph.hpp"

namespace clustervd {

enum class TargetKind { Cluster, Clique, Edgeless };

struct TargetPredicate {
  TargetKind kind = TargetKind::Cluster;
  bool connected_deleter = false;
};

TargetPredicate target_of(Variant v);

inline constexpr int kBruteMaxOrder = 22;
inline constexpr int kBranchMaxBudget = 30;
// Hard ceiling for forced brute runs: subsets are 64-bit masks.
inline constexpr int kBruteHardLimit = 63;

/// Exhaustive minimum. Unweighted runs try subsets by increasing size and,
/// within a size, in lexicographic order of the sorted vertex list; the first
/// qualifying subset wins. Weighted runs minimise (weight, size, lexicographic
/// order). Value is infinity when nothing qualifies. Orders above
/// kBruteMaxOrder throw Error(Guard) unless `force` is set.
///
/// The subset space is split across OpenMP threads; workers share the best
/// rank found so far, so the answer equals brute_min_serial's.
Solution brute_min(const Graph& g, TargetPredicate target, bool weighted = false, bool force = false);
Solution brute_min_serial(const Graph& g, TargetPredicate target, bool weighted = false, bool force = false);
Solution brute_min(const Graph& g, Variant v, bool weighted = false, bool force = false);

struct BranchResult {
  bool yes = false;
  std::vector<int> set;  // sorted; only meaningful when yes
};

/// Decides whether some CVD set of size <= k exists by branching on induced
/// P3s. Budgets above kBranchMaxBudget throw Error(Guard) unless forced.
BranchResult branch_cvd(const Graph& g, int k, bool force = false);

enum class RejectReason { None, InducedP3, MissingEdge, RemainingEdge, DeleterDisconnected };

struct VerifyResult {
  bool accepted = true;
  RejectReason reason = RejectReason::None;
  std::vector<int> witness;  // P3 / non-adjacent pair / edge / one side of the split
  std::vector<int> other;    // the rest of the deleter for DeleterDisconnected

  std::string message() const;
};

/// Checks a deletion set. Vertices outside 0..n-1 throw Error(Input);
/// repeated ids are ignored.
VerifyResult verify(const Graph& g, std::span<const int> set, TargetPredicate target);
VerifyResult verify(const Graph& g, std::span<const int> set, Variant v);

}  // namespace clustervd
