#pragma once

#include <optional>
#include <string_view>

#include "clustervd/graph.hpp"
#include "clustervd/pattern.hpp"

namespace clustervd {

enum class ComplexitySide { Polynomial, NpComplete };

std::string_view to_string(ComplexitySide s);

struct ClassifyVerdict {
  ComplexitySide side = ComplexitySide::Polynomial;
  std::optional<PatternWitness> witness;
};

/// Complexity of (connected) CVD on H-free graphs. H is on the polynomial
/// side iff it is a forest without induced 3P1 or 2P2, i.e. an induced
/// subgraph of P4. Witnesses are searched as cycle, then 2P2, then 3P1.
ClassifyVerdict dichotomy_classify(const Graph& h);

}  // namespace clustervd
