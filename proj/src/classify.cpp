#include "clustervd/classify.hpp"

#include "clustervd/patterns.hpp"

namespace clustervd {

std::string_view to_string(ComplexitySide s) {
  return s == ComplexitySide::Polynomial ? "POLYNOMIAL" : "NP_COMPLETE";
}

ClassifyVerdict dichotomy_classify(const Graph& h) {
  for (PatternKind kind : {PatternKind::Cycle, PatternKind::TwoP2, PatternKind::ThreeP1}) {
    if (auto w = find_induced(h, kind)) return {ComplexitySide::NpComplete, std::move(w)};
  }
  return {ComplexitySide::Polynomial, std::nullopt};
}

}  // namespace clustervd
