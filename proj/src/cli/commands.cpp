#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesym/autgroup.hpp"
#include "cubesym/constructions.hpp"
#include "cubesym/errors.hpp"
#include "cubesym/graph_io.hpp"
#include "cubesym/oracle.hpp"
#include "cubesym/report_json.hpp"
#include "cubesym/stirling.hpp"
#include "cubesym/symmetry.hpp"
#include "result_cache.hpp"

namespace cubesym::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct FamilyArgs {
  std::string family;
  int n = -1;
  int k = 0;
  int m = 2;
};

void add_family_options(CLI::App* app, FamilyArgs& f) {
  app->add_option("family", f.family, "hypercube, power, hamming, folded, enhanced, augmented or ltq")->required();
  app->add_option("-n,--n", f.n, "dimension")->required();
  app->add_option("-k,--k", f.k, "power (power) or split index (enhanced)");
  app->add_option("-m,--m", f.m, "alphabet size (hamming)");
}

FamilySpec make_spec(const FamilyArgs& a) {
  FamilySpec s;
  s.kind = parse_family_kind(a.family);
  s.n = a.n;
  s.k = a.k;
  s.m = s.kind == FamilyKind::Hamming ? a.m : 2;
  s.validate();
  return s;
}

json number_or_string(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json transitivity_json(const TransitivityReport& t) {
  return {{"vertex", t.vertex_transitive},
          {"edge", t.edge_transitive},
          {"arc", t.arc_transitive},
          {"distance", t.distance_transitive}};
}

std::vector<Word> words_of(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

std::vector<Vertex> vertices_of(const std::vector<Word>& ws) {
  std::vector<Vertex> out;
  for (Word w : ws) out.push_back(static_cast<Vertex>(w));
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

// ------------------------------------------------------------------- param

struct ParamArgs {
  std::string parameter;
  FamilyArgs fam;
  bool witness = false;
  bool oracle = false;
  bool no_cache = false;
  std::string cache_dir;
};

std::string cache_key(const FamilySpec& spec, const ParamArgs& a) {
  std::string key = spec.name();
  const json params = family_params(spec);
  for (const auto& [k, v] : params.items()) key += "_" + k + std::to_string(v.get<int>());
  key += "_" + a.parameter;
  if (a.witness) key += "_witness";
  if (a.oracle) key += "_oracle";
  return key;
}

ResultCache make_cache(bool disabled, const std::string& dir) {
  if (disabled) return ResultCache{};
  return ResultCache(dir.empty() ? default_cache_dir() : std::filesystem::path(dir));
}

int cmd_param(const ParamArgs& a, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = make_spec(a.fam);
  const ResultCache cache = make_cache(a.no_cache, a.cache_dir);
  const std::string key = cache_key(spec, a);
  if (auto hit = cache.load(key)) {
    out << *hit << '\n';
    return kExitOk;
  }
  const auto start = Clock::now();
  const Graph g = build_family(spec, build_options_from_env());
  const PermGroup grp = automorphism_group(g);
  const std::string engine = grp.source() == GroupSource::Structured ? "structured-group" : "refinement-search";

  Report r;
  r.parameter = a.parameter;
  r.family = spec;
  r.group_order = grp.order().str();
  r.verified_by = verified_by_for(grp);
  json oracle_value;
  bool oracle_ran = false;
  bool witness_ok = true;
  const bool oracle_fits = g.size() <= kOracleMaxVertices;

  if (a.parameter == "det") {
    ParamResult res = determining_number(g, grp);
    r.value = res.value;
    r.witness = res.witness;
    r.method = engine + "/exhaustive-subsets";
    witness_ok = is_determining_set(grp, res.witness.set);
    if (a.oracle && oracle_fits) {
      oracle_value = oracle_determining_number(g).value;
      oracle_ran = true;
    }
  } else if (a.parameter == "dist") {
    ParamResult res = distinguishing_number(g, grp);
    r.value = res.value;
    r.witness = res.witness;
    r.method = engine + "/coloring-search";
    witness_ok = is_distinguishing(grp, res.witness.coloring);
    if (a.oracle && oracle_fits) {
      oracle_value = oracle_distinguishing_number(g).value;
      oracle_ran = true;
    }
  } else if (a.parameter == "cost") {
    r.method = engine + "/exhaustive-subsets";
    try {
      ParamResult res = cost_2dist(g, grp);
      r.value = res.value;
      r.witness = res.witness;
      witness_ok = is_cost_class(grp, res.witness.set);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotTwoDistinguishable) throw;
      r.value = nullptr;
      r.extra["note"] = "not 2-distinguishable";
    }
    if (a.oracle && oracle_fits) {
      try {
        oracle_value = oracle_cost(g).value;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTwoDistinguishable) throw;
        oracle_value = nullptr;
      }
      oracle_ran = true;
    }
  } else if (a.parameter == "aut-order") {
    r.value = number_or_string(grp.order());
    r.method = engine;
    if (a.oracle && g.size() <= kOracleMaxAutVertices) {
      oracle_value = enumerate_automorphisms_naive(g).size();
      oracle_ran = true;
    }
  } else {
    r.value = transitivity_json(transitivity_report(g, grp));
    r.method = engine + "/orbits";
  }
  if (!a.witness) r.witness.reset();
  r.elapsed_ms = elapsed_ms(start);
  json j = report_to_json(r);
  bool agrees = true;
  if (a.oracle) {
    if (oracle_ran) {
      agrees = oracle_value == j["value"];
      j["oracle"] = {{"value", oracle_value}, {"agrees", agrees}};
    } else {
      j["oracle"] = {{"value", nullptr}, {"agrees", nullptr}, {"note", "not run for this graph or parameter"}};
    }
  }
  const std::string text = j.dump();
  out << text << '\n';
  if (!witness_ok) {
    err << "error: the checker rejected the computed witness\n";
    return kExitInconsistent;
  }
  if (!agrees) {
    err << "error: oracle value differs from the solver value\n";
    return kExitInconsistent;
  }
  cache.store(key, text);
  return kExitOk;
}

// --------------------------------------------------------------------- gen

int cmd_gen(const FamilyArgs& fam, const std::string& format, const std::string& output, std::ostream& out) {
  const FamilySpec spec = make_spec(fam);
  const Graph g = build_family(spec, build_options_from_env());
  std::string text;
  if (format == "graph6") {
    text = to_graph6(g) + "\n";
  } else if (format == "edgelist") {
    text = to_edgelist(g);
  } else {
    text = to_json(g).dump() + "\n";
  }
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + output + "'");
    f << text;
  }
  return kExitOk;
}

// --------------------------------------------------------------- construct

json set_witness(const FamilySpec& spec, const std::vector<Word>& words, WitnessKind kind, VerifiedBy by) {
  Witness w;
  w.kind = kind;
  w.set = vertices_of(words);
  w.verified_by = by;
  return witness_to_json(w, spec);
}

json construct_json(const std::string& name, const FamilyArgs& fam, bool& verified) {
  json j = {{"construction", name}};
  const int n = fam.n;
  auto finish_set = [&](const FamilySpec& spec, const Construction& c, WitnessKind kind, bool ok, const std::string& method) {
    j["family"] = spec.name();
    j["params"] = family_params(spec);
    j["witness"] = set_witness(spec, c.words, kind, c.source);
    j["size"] = c.words.size();
    j["verified"] = ok;
    j["method"] = method;
    verified = ok;
  };
  if (name == "hypercube-det") {
    const FamilySpec spec = FamilySpec::hypercube(n);
    const Construction c{hypercube_det_set(n), VerifiedBy::Structured};
    finish_set(spec, c, WitnessKind::DeterminingSet, verify_determining(spec, c.words), "alternating-blocks");
  } else if (name == "fq-det-set") {
    const FamilySpec spec = FamilySpec::folded(n);
    const Construction c = fq_det_set(n);
    const bool ok = verify_determining(spec, c.words);
    finish_set(spec, c, WitnessKind::DeterminingSet, ok, c.source == VerifiedBy::Oracle ? "oracle" : "characteristic-matrix");
    j["formula"] = fq_det_number(n);
    verified = ok && c.words.size() == static_cast<std::size_t>(fq_det_number(n));
    j["verified"] = verified;
  } else if (name == "fq-dist-class") {
    const FamilySpec spec = FamilySpec::folded(n);
    const Construction c = fq_dist_class(n);
    const bool ok = c.source == VerifiedBy::Oracle
                        ? verify_cost_class(spec, c.words)
                        : verify_determining(spec, c.words) && induced_asymmetric(spec, c.words);
    finish_set(spec, c, WitnessKind::CostClass, ok, c.source == VerifiedBy::Oracle ? "oracle" : "asymmetric-tree");
  } else if (name == "aq-det") {
    const FamilySpec spec = FamilySpec::augmented(n);
    const Construction c = aq_det_witness(n);
    finish_set(spec, c, WitnessKind::DeterminingSet, verify_determining(spec, c.words),
               c.source == VerifiedBy::Oracle ? "oracle" : "explicit");
  } else if (name == "aq-cost-class") {
    const FamilySpec spec = FamilySpec::augmented(n);
    const Construction c = aq_cost_class(n);
    finish_set(spec, c, WitnessKind::CostClass, verify_cost_class(spec, c.words),
               c.source == VerifiedBy::Oracle ? "oracle" : "explicit");
  } else if (name == "q2-witnesses") {
    const FamilySpec spec = FamilySpec::power(n, 2);
    const PowerWitnesses w = q2_witnesses(n);
    const bool det_ok = verify_determining(spec, w.det_set);
    const bool class_ok = verify_cost_class(spec, w.dist_class);
    finish_set(spec, {w.det_set, VerifiedBy::Structured}, WitnessKind::DeterminingSet, det_ok && class_ok,
               "prefix-ones-path");
    j["witnesses"] = {j["witness"],
                      set_witness(spec, w.dist_class, WitnessKind::CostClass, VerifiedBy::Structured)};
  } else if (name == "ltq-witnesses") {
    const FamilySpec spec = FamilySpec::locally_twisted(n);
    const LtqWitnesses w = ltq_witnesses(n);
    const bool det_ok = verify_determining(spec, w.det_set);
    const bool class_ok = verify_cost_class(spec, w.dist_class);
    finish_set(spec, {w.det_set, w.source}, WitnessKind::DeterminingSet, det_ok && class_ok,
               w.source == VerifiedBy::Oracle ? "oracle" : "translations");
    j["witnesses"] = {j["witness"], set_witness(spec, w.dist_class, WitnessKind::CostClass, w.source)};
  } else if (name == "hamming-det") {
    const int m = fam.m;
    const int r = hamming_det_number(m, static_cast<std::uint64_t>(n));
    j["family"] = "hamming";
    j["params"] = {{"m", m}, {"n", n}};
    j["value"] = r;
    json evidence = {
        {"S(" + std::to_string(r) + "," + std::to_string(m) + ")", number_or_string(stirling2(r, m))},
        {"S(" + std::to_string(r) + "," + std::to_string(m - 1) + ")", number_or_string(stirling2(r, m - 1))},
    };
    if (r > 1) evidence["columns(r-1)"] = number_or_string(hamming_column_count(r - 1, m));
    evidence["columns(r)"] = number_or_string(hamming_column_count(r, m));
    j["evidence"] = evidence;
    j["witness"] = nullptr;
    j["method"] = "stirling+closed-form";
    verified = hamming_det_number_closed(m, n) == r;
    j["verified"] = verified;
  } else if (name == "enhanced-det") {
    const FamilySpec spec = FamilySpec::enhanced(n, fam.k);
    spec.validate();
    j["family"] = spec.name();
    j["params"] = family_params(spec);
    j["value"] = enhanced_det_number(n, fam.k);
    j["evidence"] = {{"det(Q_" + std::to_string(fam.k - 1) + ")", hypercube_det_number(fam.k - 1)},
                     {"det(FQ_" + std::to_string(n - fam.k + 1) + ")", fq_det_number(n - fam.k + 1)}};
    j["witness"] = nullptr;
    j["method"] = "product-formula";
    verified = true;
    j["verified"] = nullptr;
  } else {
    throw Error(ErrorKind::ParameterOutOfRange, "unknown construction '" + name + "'");
  }
  return j;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& path, std::ostream& out) {
  const json j = [&] {
    try {
      return json::parse(read_input(path));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }();
  if (!j.is_object() || !j.contains("family")) throw Error(ErrorKind::ParseError, "expected an object with a family");
  const FamilySpec spec = family_from_json(j.at("family"), j.value("params", json::object()));
  std::vector<json> items;
  if (j.contains("witnesses") && j["witnesses"].is_array()) {
    for (const auto& w : j["witnesses"]) items.push_back(w);
  } else if (j.contains("witness") && !j["witness"].is_null()) {
    items.push_back(j["witness"]);
  }
  if (items.empty()) throw Error(ErrorKind::ParseError, "no witness to verify");

  const Graph g = spec.kind == FamilyKind::Explicit ? graph_from_json(j.at("graph")) : build_family(spec, build_options_from_env());
  std::optional<PermGroup> grp;
  auto group = [&]() -> const PermGroup& {
    if (!grp) grp = automorphism_group(g);
    return *grp;
  };
  json results = json::array();
  bool all = true;
  for (const auto& item : items) {
    const Witness w = witness_from_json(item, spec);
    for (Vertex v : w.set)
      if (v >= g.size()) throw Error(ErrorKind::VertexOutOfRange, "witness vertex outside the graph");
    bool ok = false;
    const bool family_graph = spec.kind != FamilyKind::Explicit;
    switch (w.kind) {
      case WitnessKind::DeterminingSet:
        ok = family_graph ? verify_determining(spec, words_of(w.set)) : is_determining_set(group(), w.set);
        break;
      case WitnessKind::CostClass:
        ok = family_graph ? verify_cost_class(spec, words_of(w.set)) : is_cost_class(group(), w.set);
        break;
      case WitnessKind::DistinguishingColoring:
        if (w.coloring.color.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "coloring size differs");
        ok = is_distinguishing(group(), w.coloring);
        break;
    }
    all = all && ok;
    results.push_back({{"kind", to_string(w.kind)}, {"valid", ok}});
  }
  out << json{{"family", spec.name()}, {"params", family_params(spec)}, {"valid", all}, {"checked", results}}.dump()
      << '\n';
  return all ? kExitOk : kExitInconsistent;
}

// ------------------------------------------------------------------ export

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_export(const ResultCache& cache, const std::string& format, std::ostream& out) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(cache.dir(), ec))
    for (const auto& e : fs::directory_iterator(cache.dir()))
      if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json records = json::array();
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json r = json::parse(text, nullptr, false);
    if (r.is_discarded() || !r.is_object() || r.value("tool_version", "") != kToolVersion) continue;
    records.push_back(std::move(r));
  }
  if (format == "csv") {
    out << "family,params,parameter,value,method,verified_by,group_order\n";
    for (const auto& r : records) {
      std::string params;
      for (const auto& [k, v] : r["params"].items()) params += (params.empty() ? "" : ";") + k + "=" + v.dump();
      out << r["family"].get<std::string>() << ',' << csv_field(params) << ',' << r["parameter"].get<std::string>() << ','
          << csv_field(r["value"].dump()) << ','
          << r["method"].get<std::string>() << ',' << r["verified_by"].get<std::string>() << ','
          << r["group_order"].get<std::string>() << '\n';
    }
  } else {
    out << records.dump() << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ tables

// A formula cell is {"value": v}, {"range": [lo, hi]} or {"upper": u}.
json formula_value(int v) { return {{"value", v}}; }
json formula_range(int lo, int hi) { return {{"range", {lo, hi}}}; }
json formula_upper(int u) { return {{"upper", u}}; }

struct RowSpec {
  FamilySpec spec;
  json det, dist, cost;  // formula or null
  std::optional<std::vector<Word>> det_witness;
  std::optional<std::vector<Word>> cost_witness;
};

std::string compare(const json& formula, const json& searched) {
  if (!searched.is_number()) return "";
  const long s = searched.get<long>();
  if (formula.is_null()) return "searched";
  if (formula.contains("value")) return formula["value"].get<long>() == s ? "agree" : "disagree";
  if (formula.contains("range"))
    return formula["range"][0].get<long>() <= s && s <= formula["range"][1].get<long>() ? "agree" : "disagree";
  return s <= formula["upper"].get<long>() ? "agree" : "disagree";
}

std::string formula_text(const json& f) {
  if (f.is_null()) return "?";
  if (f.contains("value")) return std::to_string(f["value"].get<long>());
  if (f.contains("range")) return std::to_string(f["range"][0].get<long>()) + "|" + std::to_string(f["range"][1].get<long>());
  return "<=" + std::to_string(f["upper"].get<long>());
}

RowSpec summary_row(FamilyKind kind, int n, int k, int m) {
  RowSpec row;
  const int lg = ceil_lg(n);
  switch (kind) {
    case FamilyKind::Hypercube:
      row.spec = FamilySpec::hypercube(n);
      row.det = formula_value(hypercube_det_number(n));
      row.dist = formula_value(n == 1 ? 2 : n <= 3 ? 3 : 2);
      if (n == 4) row.cost = formula_value(5);
      if (n >= 5) row.cost = formula_range(1 + lg, 2 + lg);
      if (n >= 2) row.det_witness = hypercube_det_set(n);
      break;
    case FamilyKind::HypercubePower:
      row.spec = FamilySpec::power(n, 2);
      if (n >= 4) {
        row.det = formula_upper(n);
        row.dist = formula_value(2);
        row.cost = formula_upper(n + 1);
        const auto w = q2_witnesses(n);
        row.det_witness = w.det_set;
        row.cost_witness = w.dist_class;
      }
      break;
    case FamilyKind::Hamming: {
      row.spec = FamilySpec::hamming(m, n);
      row.det = formula_value(hamming_det_number(m, n));
      if (hamming_two_distinguishable(m, n)) row.dist = formula_value(2);
      const CostBounds b = hamming_cost_bounds(m, n);
      if (b.applicable) row.cost = formula_range(b.lo, b.hi);
      break;
    }
    case FamilyKind::Folded:
      row.spec = FamilySpec::folded(n);
      row.det = formula_value(fq_det_number(n));
      row.dist = formula_value(n == 1 ? 2 : n == 2 ? 4 : n == 3 ? 5 : 2);
      if (n >= 4) {
        row.det_witness = fq_det_set(n).words;
        row.cost_witness = fq_dist_class(n).words;
        row.cost = formula_upper(static_cast<int>(row.cost_witness->size()));
      }
      break;
    case FamilyKind::Enhanced:
      row.spec = FamilySpec::enhanced(n, k);
      row.det = formula_value(enhanced_det_number(n, k));
      if (n >= 4) row.dist = formula_value(2);
      break;
    case FamilyKind::Augmented: {
      row.spec = FamilySpec::augmented(n);
      static const int det_small[] = {0, 1, 3, 4, 3, 3};
      row.det = formula_value(n <= 5 ? det_small[n] : 2);
      if (n >= 4) {
        row.dist = formula_value(2);
        row.cost = formula_value(3);
        row.det_witness = aq_det_witness(n).words;
        row.cost_witness = aq_cost_class(n).words;
      }
      break;
    }
    case FamilyKind::LocallyTwisted:
      row.spec = FamilySpec::locally_twisted(n);
      if (n >= 4) {
        row.det = formula_value(1);
        row.dist = formula_value(2);
        row.cost = formula_value(1);
        row.det_witness = std::vector<Word>{0};
        row.cost_witness = std::vector<Word>{0};
      } else if (n == 3) {
        row.det = formula_value(2);
        row.dist = formula_value(2);
        row.cost = formula_value(3);
      }
      break;
    default:
      break;
  }
  return row;
}

struct TableOptions {
  std::size_t search_max = 64;
  std::uint64_t candidates = 200'000;
};

json searched_cell(const std::function<json()>& compute) {
  try {
    return compute();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SearchBudgetExceeded || e.kind() == ErrorKind::SizeGuard) return "budget";
    if (e.kind() == ErrorKind::NotTwoDistinguishable) return "none";
    throw;
  }
}

json summary_table(int n, int k, int m, const TableOptions& opts) {
  json rows = json::array();
  const FamilyKind kinds[] = {FamilyKind::Hypercube, FamilyKind::HypercubePower, FamilyKind::Hamming, FamilyKind::Folded,
                              FamilyKind::Enhanced,  FamilyKind::Augmented,      FamilyKind::LocallyTwisted};
  SolverOptions so;
  so.max_candidates = opts.candidates;
  for (FamilyKind kind : kinds) {
    RowSpec row;
    try {
      if (kind == FamilyKind::Enhanced && (k < 1 || k > n - 1)) continue;
      if (kind == FamilyKind::LocallyTwisted && n < 2) continue;
      row = summary_row(kind, n, k, m);
      row.spec.validate();
    } catch (const Error&) {
      continue;
    }
    json out = {{"family", row.spec.name()}, {"label", row.spec.label()}, {"params", family_params(row.spec)}};
    std::optional<Graph> g;
    std::optional<PermGroup> grp;
    const bool searchable = row.spec.vertex_count() <= opts.search_max;
    if (searchable) {
      g = build_family(row.spec);
      grp = automorphism_group(*g);
    }
    auto cell = [&](const json& formula, const std::function<std::size_t()>& solve,
                    const std::optional<std::vector<Word>>& witness, bool cost_witness) {
      json c = {{"formula", formula}};
      c["searched"] = searchable ? searched_cell([&]() -> json { return solve(); }) : json("skipped");
      c["status"] = c["searched"].is_number() ? compare(formula, c["searched"]) : (formula.is_null() ? "unknown" : "formula");
      if (witness) {
        c["witness_size"] = witness->size();
        c["witness_verified"] = cost_witness ? verify_cost_class(row.spec, *witness) : verify_determining(row.spec, *witness);
      }
      return c;
    };
    out["det"] = cell(row.det, [&] { return determining_number(*g, *grp, so).value; }, row.det_witness, false);
    out["dist"] = cell(row.dist, [&] { return distinguishing_number(*g, *grp, so).value; }, std::nullopt, false);
    out["cost"] = cell(row.cost, [&] { return cost_2dist(*g, *grp, so).value; }, row.cost_witness, true);
    rows.push_back(std::move(out));
  }
  return {{"table", "summary"}, {"n", n}, {"rows", rows}};
}

json transitivity_table(int n, int m) {
  struct Entry {
    FamilySpec spec;
    bool expected[4];
  };
  std::vector<Entry> entries = {
      {FamilySpec::hypercube(n), {true, true, true, true}},
      {FamilySpec::power(n, 2), {true, true, true, true}},
      {FamilySpec::hamming(m, n), {true, true, true, true}},
      {FamilySpec::folded(n), {true, true, true, true}},
      {FamilySpec::enhanced(n, std::max(2, n - 1)), {true, false, false, false}},
      {FamilySpec::augmented(n), {true, false, false, false}},
      {FamilySpec::locally_twisted(n), {false, false, false, false}},
  };
  json rows = json::array();
  for (const auto& e : entries) {
    try {
      e.spec.validate();
    } catch (const Error&) {
      continue;
    }
    json row = {{"family", e.spec.name()}, {"label", e.spec.label()}, {"params", family_params(e.spec)}};
    row["expected"] = {{"vertex", e.expected[0]}, {"edge", e.expected[1]}, {"arc", e.expected[2]}, {"distance", e.expected[3]}};
    row["computed"] = searched_cell([&]() -> json {
      const Graph g = build_family(e.spec);
      return transitivity_json(transitivity_report(g, automorphism_group(g)));
    });
    row["agree"] = row["computed"].is_object() ? json(row["computed"] == row["expected"]) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"table", "transitivity"}, {"n", n}, {"rows", rows}};
}

json enhanced_dist_table(int n_max, const TableOptions& opts) {
  json cells = json::array();
  SolverOptions so;
  so.max_candidates = opts.candidates * 50;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      const FamilySpec spec = FamilySpec::enhanced(n, k);
      json v = searched_cell([&]() -> json {
        const Graph g = build_family(spec);
        return distinguishing_number(g, automorphism_group(g), so).value;
      });
      cells.push_back({{"n", n}, {"k", k}, {"dist", v}});
    }
  return {{"table", "enhanced-dist"}, {"n_max", n_max}, {"cells", cells}};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string render_value(const json& v) {
  if (v.is_number()) return std::to_string(v.get<long>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "Yes" : "No";
  return "-";
}

std::string render(const json& t) {
  std::ostringstream o;
  const std::string which = t["table"];
  if (which == "enhanced-dist") {
    const int n_max = t["n_max"];
    o << pad("k\\n", 6);
    for (int n = 2; n <= n_max; ++n) o << pad(std::to_string(n), 8);
    o << '\n';
    for (int k = 1; k <= n_max - 1; ++k) {
      o << pad(std::to_string(k), 6);
      for (int n = 2; n <= n_max; ++n) {
        std::string s = "·";
        for (const auto& c : t["cells"])
          if (c["n"] == n && c["k"] == k) s = render_value(c["dist"]);
        o << pad(s, s == "·" ? 9 : 8);
      }
      o << '\n';
    }
  } else if (which == "transitivity") {
    o << pad("family", 14) << pad("vertex", 10) << pad("edge", 10) << pad("arc", 10) << pad("distance", 10) << "paper\n";
    for (const auto& r : t["rows"]) {
      o << pad(r["label"].get<std::string>(), 14);
      for (const char* f : {"vertex", "edge", "arc", "distance"})
        o << pad(r["computed"].is_object() ? render_value(r["computed"][f]) : render_value(r["computed"]), 10);
      o << (r["agree"].is_null() ? "-" : r["agree"].get<bool>() ? "agrees" : "differs") << '\n';
    }
  } else {
    o << pad("family", 14) << pad("det", 24) << pad("dist", 24) << "cost\n";
    for (const auto& r : t["rows"]) {
      o << pad(r["label"].get<std::string>(), 14);
      for (const char* p : {"det", "dist", "cost"}) {
        const json& c = r[p];
        std::string s = "f=" + formula_text(c["formula"]) + " s=" + render_value(c["searched"]);
        if (c.contains("witness_verified")) s += c["witness_verified"].get<bool>() ? " w" : " w!";
        o << pad(s, 24);
      }
      o << '\n';
    }
    o << "f: formula, s: searched (skipped above the size limit, budget when the search gave up), w: witness verified\n";
  }
  return o.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeGuard:
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::Overflow:
      return kExitBudget;
    case ErrorKind::InternalInconsistency:
      return kExitInconsistent;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry parameters of hypercube families", "cubesym"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  int threads = 0;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "worker threads (accepted for compatibility; solvers run single-threaded)");
  app.add_option("--seed", seed, "reserved; all algorithms are deterministic");

  FamilyArgs gen_fam;
  std::string gen_format = "json", gen_output;
  auto* gen = app.add_subcommand("gen", "emit a family graph");
  add_family_options(gen, gen_fam);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  gen->add_option("-o,--output", gen_output, "output file (default stdout)");

  ParamArgs pa;
  auto* param = app.add_subcommand("param", "compute a symmetry parameter");
  param->add_option("parameter", pa.parameter)->required()->check(CLI::IsMember({"det", "dist", "cost", "aut-order", "transitivity"}));
  add_family_options(param, pa.fam);
  param->add_flag("--witness", pa.witness, "include the certificate in the report");
  param->add_flag("--oracle", pa.oracle, "cross-check against the brute-force oracle");
  param->add_flag("--no-cache", pa.no_cache, "bypass the result cache");
  param->add_option("--cache-dir", pa.cache_dir, "cache directory (default $CUBE_SYM_CACHE or .cube-symmetry-cache)");
  param->add_option("--threads", threads, "accepted for compatibility");
  param->add_option("--seed", seed, "reserved");
  std::string param_format = "json";
  param->add_option("--format", param_format)->check(CLI::IsMember({"json"}));

  std::string table_which, table_format = "text";
  int table_n = -1, table_n_max = 5, table_k = 2, table_m = 3;
  TableOptions topts;
  auto* tables = app.add_subcommand("tables", "recompute the summary tables");
  tables->add_option("which", table_which)->required()->check(CLI::IsMember({"transitivity", "summary", "enhanced-dist"}));
  tables->add_option("-n,--n", table_n, "dimension (transitivity: 3, summary: 6)");
  tables->add_option("--n-max", table_n_max, "largest n for enhanced-dist");
  tables->add_option("-k,--k", table_k, "enhanced split index for the summary row");
  tables->add_option("-m,--m", table_m, "Hamming alphabet for the summary and transitivity rows");
  tables->add_option("--search-max", topts.search_max, "largest vertex count searched per cell");
  tables->add_option("--budget", topts.candidates, "candidate budget per searched cell");
  tables->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  std::string cname;
  FamilyArgs cfam;
  cfam.m = 3;
  auto* construct = app.add_subcommand("construct", "build and verify an explicit witness");
  construct->add_option("name", cname)
      ->required()
      ->check(CLI::IsMember({"hypercube-det", "q2-witnesses", "fq-det-set", "fq-dist-class", "aq-det", "aq-cost-class",
                             "ltq-witnesses", "hamming-det", "enhanced-det"}));
  construct->add_option("-n,--n", cfam.n)->required();
  construct->add_option("-k,--k", cfam.k);
  construct->add_option("-m,--m", cfam.m);

  std::string verify_path = "-";
  auto* verify = app.add_subcommand("verify", "re-check a witness from a report");
  verify->add_option("file", verify_path, "report JSON ('-' for stdin)");

  std::string export_format = "json", export_cache;
  auto* exp = app.add_subcommand("export", "dump cached reports");
  exp->add_option("--format", export_format)->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--cache-dir", export_cache);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_fam, gen_format, gen_output, out);
    if (*param) return cmd_param(pa, out, err);
    if (*tables) {
      json t;
      if (table_which == "transitivity") {
        t = transitivity_table(table_n < 0 ? 3 : table_n, table_m);
      } else if (table_which == "summary") {
        t = summary_table(table_n < 0 ? 6 : table_n, table_k, table_m, topts);
      } else {
        t = enhanced_dist_table(table_n_max, topts);
      }
      out << (table_format == "json" ? t.dump() + "\n" : render(t));
      return kExitOk;
    }
    if (*construct) {
      bool verified = false;
      const json j = construct_json(cname, cfam, verified);
      out << j.dump() << '\n';
      if (!verified) {
        err << "error: the constructed witness failed verification\n";
        return kExitInconsistent;
      }
      return kExitOk;
    }
    if (*verify) return cmd_verify(verify_path, out);
    if (*exp) return cmd_export(make_cache(false, export_cache), export_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitBudget;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cubesym::cli
