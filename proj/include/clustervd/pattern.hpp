#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clustervd {

enum class PatternKind { P3, P4, Triangle, ThreeP1, TwoP2, Cycle, OddHole };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from_string(std::string_view name);

/// Vertices realizing an induced pattern. Paths and cycles are listed in
/// traversal order; TWO_P2 lists the two edges as (a, b, c, d) with ab and cd
/// the edges.
struct PatternWitness {
  PatternKind kind;
  std::vector<int> vertices;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

std::string describe(const PatternWitness& w);

}  // namespace clustervd
