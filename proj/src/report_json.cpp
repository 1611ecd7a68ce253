#include "cubesym/report_json.hpp"

#include "cubesym/errors.hpp"
#include "cubesym/graph_io.hpp"

namespace cubesym {

std::string vertex_label(const FamilySpec& spec, Word v) {
  if (spec.kind == FamilyKind::Explicit) return std::to_string(v);
  return BitVertex(v, spec.n, spec.alphabet()).str();
}

Word parse_vertex_label(const FamilySpec& spec, std::string_view label) {
  if (spec.kind == FamilyKind::Explicit) {
    Word v = 0;
    if (label.empty()) throw Error(ErrorKind::ParseError, "empty vertex label");
    for (char ch : label) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::ParseError, "bad vertex index '" + std::string(label) + "'");
      v = v * 10 + static_cast<Word>(ch - '0');
    }
    return v;
  }
  BitVertex b = BitVertex::parse(label, spec.alphabet());
  if (b.n() != spec.n)
    throw Error(ErrorKind::DimensionMismatch, "vertex '" + std::string(label) + "' has the wrong length");
  return b.word();
}

FamilySpec family_from_json(const nlohmann::json& family, const nlohmann::json& params) {
  try {
    FamilySpec spec;
    spec.kind = parse_family_kind(family.get<std::string>());
    spec.n = params.value("n", 0);
    spec.k = params.value("k", 0);
    spec.m = params.value("m", 2);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

nlohmann::json witness_to_json(const Witness& w, const FamilySpec& spec) {
  nlohmann::json j = {{"kind", to_string(w.kind)}, {"verified_by", to_string(w.verified_by)}};
  if (w.kind == WitnessKind::DistinguishingColoring) {
    j["d"] = w.coloring.d;
    j["coloring"] = w.coloring.color;
  } else {
    nlohmann::json set = nlohmann::json::array();
    for (Vertex v : w.set) set.push_back(vertex_label(spec, v));
    j["set"] = std::move(set);
  }
  return j;
}

Witness witness_from_json(const nlohmann::json& j, const FamilySpec& spec) {
  try {
    Witness w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == to_string(WitnessKind::DeterminingSet)) {
      w.kind = WitnessKind::DeterminingSet;
    } else if (kind == to_string(WitnessKind::DistinguishingColoring)) {
      w.kind = WitnessKind::DistinguishingColoring;
    } else if (kind == to_string(WitnessKind::CostClass)) {
      w.kind = WitnessKind::CostClass;
    } else {
      throw Error(ErrorKind::ParseError, "unknown witness kind '" + kind + "'");
    }
    if (w.kind == WitnessKind::DistinguishingColoring) {
      w.coloring.color = j.at("coloring").get<std::vector<std::uint32_t>>();
      w.coloring.d = j.at("d").get<std::uint32_t>();
    } else {
      for (const auto& s : j.at("set")) {
        const Word v = parse_vertex_label(spec, s.get<std::string>());
        if (v > 0xffffffffULL) throw Error(ErrorKind::VertexOutOfRange, "vertex index beyond 32 bits");
        w.set.push_back(static_cast<Vertex>(v));
      }
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j = {
      {"parameter", r.parameter},
      {"value", r.value},
      {"verified_by", to_string(r.verified_by)},
      {"group_order", r.group_order},
      {"elapsed_ms", r.elapsed_ms},
      {"family", r.family.name()},
      {"params", family_params(r.family)},
      {"method", r.method},
      {"tool_version", std::string(kToolVersion)},
  };
  j["witness"] = r.witness ? witness_to_json(*r.witness, r.family) : nlohmann::json(nullptr);
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

}  // namespace cubesym
