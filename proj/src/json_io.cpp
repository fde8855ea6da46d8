#include "clustervd/json_io.hpp"

#include <string>

#include "clustervd/error.hpp"

namespace clustervd {

using nlohmann::json;

json to_json(const Solution& s) {
  json j;
  j["schema"] = kSchema;
  j["variant"] = std::string(to_string(s.variant));
  if (s.value.is_finite()) {
    j["value"] = s.value.value();
  } else {
    j["value"] = "infinity";
  }
  if (s.set) j["set"] = *s.set;
  j["weighted"] = s.weighted;
  j["method"] = s.method;
  return j;
}

Solution solution_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchema) throw Error(ErrorKind::Parse, "unknown schema");
    Solution s;
    auto variant = variant_from_string(j.at("variant").get<std::string>());
    if (!variant) throw Error(ErrorKind::Parse, "unknown variant");
    s.variant = *variant;
    const json& value = j.at("value");
    if (value.is_string()) {
      if (value.get<std::string>() != "infinity") throw Error(ErrorKind::Parse, "value must be a number or \"infinity\"");
      s.value = ExtInt::infinity();
    } else {
      s.value = value.get<std::int64_t>();
    }
    if (j.contains("set")) s.set = j.at("set").get<std::vector<int>>();
    s.weighted = j.at("weighted").get<bool>();
    s.method = j.at("method").get<std::string>();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("solution JSON: ") + e.what());
  }
}

json decision_json(const Solution& s, bool yes, std::int64_t budget) {
  json j = to_json(s);
  j["decision"] = yes ? "yes" : "no";
  j["budget"] = budget;
  return j;
}

json to_json(const VerifyResult& r, Variant v) {
  json j;
  j["schema"] = kSchema;
  j["variant"] = std::string(to_string(v));
  j["accepted"] = r.accepted;
  if (!r.accepted) {
    j["reason"] = r.message();
    j["witness"] = r.witness;
    if (!r.other.empty()) j["other"] = r.other;
  }
  return j;
}

json sidecar_json(const ReducedInstance& ri, std::optional<std::span<const int>> lifted,
                  std::optional<std::span<const int>> restricted) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = std::string(to_string(ri.kind));
  j["k"] = ri.k;
  j["k_prime"] = ri.k_prime;
  j["counts"] = {
      {"source_vertices", ri.source.order()},
      {"source_edges", ri.source.size()},
      {"produced_vertices", ri.produced.order()},
      {"produced_edges", ri.produced.size()},
  };
  if (ri.kind == ReductionKind::DenseVcToCvd) j["counts"]["padding"] = ri.padding;
  if (ri.kind == ReductionKind::Amplify || ri.kind == ReductionKind::Subdiv3) {
    j["rounds"] = ri.stages.size();
  }
  if (ri.kind == ReductionKind::CcvdGadget) j["girth"] = ri.girth;
  json origin = json::array();
  for (const auto& o : ri.vertex_origin) origin.push_back(o.to_string());
  j["vertex_origin"] = std::move(origin);
  if (ri.black_set) {
    j["black_set"] = *ri.black_set;
  } else {
    j["black_set"] = nullptr;
  }
  if (lifted) j["lifted"] = std::vector<int>(lifted->begin(), lifted->end());
  if (restricted) j["restricted"] = std::vector<int>(restricted->begin(), restricted->end());
  return j;
}

}  // namespace clustervd
