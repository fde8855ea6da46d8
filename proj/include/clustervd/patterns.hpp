#pragma once

#include <optional>
#include <span>

#include "clustervd/graph.hpp"
#include "clustervd/pattern.hpp"

namespace clustervd {

/// Search for an induced copy of `kind` in g.
///
/// The search is exhaustive and deterministic: candidates are scanned in
/// lexicographic vertex order, so the same graph always yields the same
/// witness. CYCLE returns a shortest cycle (always induced). ODD_HOLE looks
/// for an induced odd cycle on at least five vertices; it is exponential in
/// the worst case and meant for small graphs.
std::optional<PatternWitness> find_induced(const Graph& g, PatternKind kind);

/// Induced P4 inside the subgraph induced by `vertices` (ids stay global).
std::optional<PatternWitness> find_induced_p4(const Graph& g, std::span<const int> vertices);

/// True when the witness vertices induce exactly the named pattern in g.
bool witness_is_valid(const Graph& g, const PatternWitness& w);

}  // namespace clustervd
