#pragma once

// JSON encoding of witnesses and parameter reports. Vertices are written as
// digit strings of their family ("0110"), or as decimal indices for explicit
// graphs.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cubesym/bitgraph.hpp"
#include "cubesym/symmetry.hpp"

namespace cubesym {

inline constexpr std::string_view kToolVersion = "0.1.0";

std::string vertex_label(const FamilySpec& spec, Word v);
Word parse_vertex_label(const FamilySpec& spec, std::string_view label);

FamilySpec family_from_json(const nlohmann::json& family, const nlohmann::json& params);

nlohmann::json witness_to_json(const Witness& w, const FamilySpec& spec);
// Throws ParseError on malformed input.
Witness witness_from_json(const nlohmann::json& j, const FamilySpec& spec);

struct Report {
  std::string parameter;
  nlohmann::json value;
  std::optional<Witness> witness;
  VerifiedBy verified_by = VerifiedBy::Searched;
  std::string group_order;  // decimal, may exceed 64 bits
  std::int64_t elapsed_ms = 0;
  FamilySpec family;
  std::string method;
  nlohmann::json extra = nlohmann::json::object();  // merged into the top level
};

nlohmann::json report_to_json(const Report& r);

}  // namespace cubesym
