#include "cubesym/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error(ErrorKind::ParseError, "graph6 byte out of range");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  put_size(out, n);
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");
  std::size_t pos = 0, n = 0;
  auto take = [&](int count) {
    std::size_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw Error(ErrorKind::ParseError, "truncated graph6 header");
      v = (v << 6) | sextet(text[pos++]);
    }
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  if (text.size() - pos != (pairs + 5) / 6)
    throw Error(ErrorKind::ParseError, "graph6 body has wrong length");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bit % 6 != 0 && (sextet(text[pos + bit / 6]) & ((1 << (6 - bit % 6)) - 1)) != 0)
    throw Error(ErrorKind::ParseError, "graph6 padding bits set");
  return Graph(n, edges);
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph from_edgelist(std::string_view text, std::size_t vertex_count) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0)
      throw Error(ErrorKind::ParseError, "bad edge on line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(vertex_count, edges);
}

nlohmann::json family_params(const FamilySpec& spec) {
  nlohmann::json p = nlohmann::json::object();
  switch (spec.kind) {
    case FamilyKind::HypercubePower:
    case FamilyKind::Enhanced:
      p["n"] = spec.n;
      p["k"] = spec.k;
      break;
    case FamilyKind::Hamming:
      p["m"] = spec.m;
      p["n"] = spec.n;
      break;
    case FamilyKind::Explicit:
      break;
    default:
      p["n"] = spec.n;
  }
  return p;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"family", g.family().name()},
          {"params", family_params(g.family())},
          {"n_vertices", g.size()},
          {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("n_vertices").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    FamilySpec spec;
    if (j.contains("family")) {
      spec.kind = parse_family_kind(j["family"].get<std::string>());
      const auto& p = j.value("params", nlohmann::json::object());
      spec.n = p.value("n", 0);
      spec.k = p.value("k", 0);
      spec.m = p.value("m", 2);
    }
    return Graph(n, edges, spec);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace cubesym
