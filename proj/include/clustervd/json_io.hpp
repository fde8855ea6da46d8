#pragma once

#include <optional>
#include <span>

#include <json.hpp>

#include "clustervd/cluster_dp.hpp"
#include "clustervd/oracle.hpp"
#include "clustervd/reductions.hpp"

namespace clustervd {

inline constexpr const char* kSchema = "clustervd/1";

nlohmann::json to_json(const Solution& s);
/// Throws Error(Parse) on a document that is not a clustervd/1 solution.
Solution solution_from_json(const nlohmann::json& j);

/// Decision form of a solution: adds "decision" and "budget".
nlohmann::json decision_json(const Solution& s, bool yes, std::int64_t budget);

nlohmann::json to_json(const VerifyResult& r, Variant v);

/// Sidecar describing a reduction. `lifted` / `restricted` are included when
/// given.
nlohmann::json sidecar_json(const ReducedInstance& ri, std::optional<std::span<const int>> lifted = std::nullopt,
                            std::optional<std::span<const int>> restricted = std::nullopt);

}  // namespace clustervd
