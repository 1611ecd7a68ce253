#include "cubesym/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_)
      throw Error(ErrorKind::SearchBudgetExceeded, "candidate budget of " + std::to_string(limit_) + " exhausted");
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Visits k-subsets of [0, n) in lexicographic order; first element pinned to 0
// when pin_first is set. Stops when visit returns true.
std::optional<std::vector<Vertex>> first_combination(std::size_t n, std::size_t k, bool pin_first,
                                                     const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (k > n) return std::nullopt;
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  if (k == 0) return visit(c) ? std::optional(c) : std::nullopt;
  while (true) {
    if (visit(c)) return c;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0 || (pin_first && i == 1)) return std::nullopt;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

bool is_identity(const std::vector<Vertex>& e) {
  for (Vertex v = 0; v < e.size(); ++v)
    if (e[v] != v) return false;
  return true;
}

// Depth-first search for the lexicographically least k-set fixing no
// nontrivial element; alive holds the elements fixing the current prefix.
bool dfs_determining(const std::vector<const std::vector<Vertex>*>& alive, std::vector<Vertex>& prefix, std::size_t k,
                     std::size_t n, Budget& budget, bool pin_first) {
  if (prefix.size() == k) {
    budget.tick();
    return alive.empty();
  }
  const Vertex start = prefix.empty() ? 0 : prefix.back() + 1;
  const Vertex stop = (prefix.empty() && pin_first) ? 1 : static_cast<Vertex>(n - (k - prefix.size()) + 1);
  for (Vertex v = start; v < stop; ++v) {
    std::vector<const std::vector<Vertex>*> next;
    for (const auto* e : alive)
      if ((*e)[v] == v) next.push_back(e);
    prefix.push_back(v);
    if (dfs_determining(next, prefix, k, n, budget, pin_first)) return true;
    prefix.pop_back();
  }
  return false;
}

std::vector<std::uint32_t> class_coloring(std::size_t n, std::span<const Vertex> s) {
  std::vector<std::uint32_t> c(n, 2);
  for (Vertex v : s) c[v] = 1;
  return c;
}

BigInt setwise_order(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  return setwise_stabilizer(g, s, options).order();
}

// Greedy class growth: add the first vertex that shrinks the setwise
// stabilizer until it is trivial.
std::optional<std::vector<Vertex>> greedy_class(const PermGroup& g, const SolverOptions& options, Budget& budget) {
  const std::size_t V = g.vertex_count();
  std::vector<Vertex> s;
  std::vector<char> in(V, 0);
  BigInt current = g.order();
  while (s.size() * 2 < V) {
    bool improved = false;
    for (Vertex v = 0; v < V; ++v) {
      if (in[v]) continue;
      budget.tick();
      std::vector<Vertex> t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), v), v);
      const BigInt ord = setwise_order(g, t, options.search);
      if (ord < current) {
        s = std::move(t);
        in[v] = 1;
        current = ord;
        improved = true;
        break;
      }
    }
    if (!improved) return std::nullopt;
    if (current == 1) return s;
  }
  return std::nullopt;
}

// Restricted-growth colorings with at most d colors, vertices in order.
std::optional<std::vector<std::uint32_t>> search_colorings(const PermGroup& g, std::uint32_t d,
                                                           const SolverOptions& options, Budget& budget) {
  const std::size_t V = g.vertex_count();
  std::vector<std::uint32_t> color(V, 0);
  std::function<bool(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) -> bool {
    if (i == V) {
      budget.tick();
      return coloring_stabilizer_trivial(g, color, options.search);
    }
    // Remaining vertices must be able to fill the unused colors only if we
    // insist on exactly d; at most d is enough, so no lower bound applies.
    const std::uint32_t top = std::min(used + 1, d);
    for (std::uint32_t c = 1; c <= top; ++c) {
      color[i] = c;
      if (rec(i + 1, std::max(used, c))) return true;
    }
    return false;
  };
  if (rec(0, 0)) return color;
  return std::nullopt;
}

}  // namespace

Coloring Coloring::two_class(std::size_t vertex_count, std::span<const Vertex> first_class) {
  Coloring c;
  c.color = class_coloring(vertex_count, first_class);
  c.d = 2;
  return c;
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(d, 0);
  for (auto x : color)
    if (x >= 1 && x <= d) ++sizes[x - 1];
  return sizes;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::DeterminingSet: return "determining_set";
    case WitnessKind::DistinguishingColoring: return "distinguishing_coloring";
    case WitnessKind::CostClass: return "cost_class";
  }
  return "unknown";
}

std::string to_string(VerifiedBy by) {
  switch (by) {
    case VerifiedBy::Structured: return "structured";
    case VerifiedBy::Searched: return "searched";
    case VerifiedBy::Oracle: return "oracle";
  }
  return "unknown";
}

VerifiedBy verified_by_for(const PermGroup& g) {
  return g.source() == GroupSource::Structured ? VerifiedBy::Structured : VerifiedBy::Searched;
}

bool is_determining_set(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  return pointwise_stabilizer_trivial(g, s, options);
}

bool is_distinguishing(const PermGroup& g, const Coloring& c, const SearchOptions& options) {
  return coloring_stabilizer_trivial(g, c.color, options);
}

bool is_cost_class(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  return setwise_stabilizer_trivial(g, s, options);
}

ParamResult determining_number(const Graph& graph, const PermGroup& g, const SolverOptions& options) {
  if (graph.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "group does not act on this graph");
  ParamResult r;
  r.witness.kind = WitnessKind::DeterminingSet;
  r.witness.verified_by = verified_by_for(g);
  if (g.is_trivial()) return r;
  const std::size_t V = g.vertex_count();
  const bool pin = g.vertex_transitive();
  Budget budget(options.max_candidates);
  if (g.enumerable()) {
    std::vector<const std::vector<Vertex>*> alive;
    for (const auto& e : g.elements())
      if (!is_identity(e)) alive.push_back(&e);
    for (std::size_t k = 1; k <= V; ++k) {
      std::vector<Vertex> prefix;
      if (dfs_determining(alive, prefix, k, V, budget, pin)) {
        r.value = k;
        r.witness.set = prefix;
        r.candidates = budget.used();
        return r;
      }
    }
  } else {
    for (std::size_t k = 1; k <= V; ++k) {
      auto found = first_combination(V, k, pin, [&](const std::vector<Vertex>& s) {
        budget.tick();
        return pointwise_stabilizer_trivial(g, s, options.search);
      });
      if (found) {
        r.value = k;
        r.witness.set = *found;
        r.candidates = budget.used();
        return r;
      }
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "the full vertex set failed to be determining");
}

ParamResult min_setwise_trivial(const PermGroup& g, std::size_t min_size, std::size_t max_size,
                                const SolverOptions& options) {
  ParamResult r;
  r.witness.kind = WitnessKind::CostClass;
  r.witness.verified_by = verified_by_for(g);
  const std::size_t V = g.vertex_count();
  const bool pin = !g.is_trivial() && g.vertex_transitive();
  Budget budget(options.max_candidates);
  for (std::size_t k = std::max<std::size_t>(min_size, 1); k <= max_size && k <= V; ++k) {
    auto found = first_combination(V, k, pin, [&](const std::vector<Vertex>& s) {
      budget.tick();
      return setwise_stabilizer_trivial(g, s, options.search);
    });
    if (found) {
      r.value = k;
      r.witness.set = *found;
      r.candidates = budget.used();
      return r;
    }
  }
  r.candidates = budget.used();
  return r;
}

ParamResult cost_2dist(const Graph& graph, const PermGroup& g, const SolverOptions& options) {
  if (graph.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "group does not act on this graph");
  if (g.is_trivial()) throw Error(ErrorKind::NotTwoDistinguishable, "the graph is asymmetric (distinguishing number 1)");
  // A class with trivial setwise stabilizer is determining, so the search
  // starts at the determining number.
  const std::size_t lower = determining_number(graph, g, options).value;
  ParamResult r = min_setwise_trivial(g, lower, g.vertex_count() / 2, options);
  if (r.value == 0) throw Error(ErrorKind::NotTwoDistinguishable, "no 2-distinguishing coloring exists");
  return r;
}

ParamResult distinguishing_number(const Graph& graph, const PermGroup& g, const SolverOptions& options) {
  if (graph.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "group does not act on this graph");
  const std::size_t V = g.vertex_count();
  ParamResult r;
  r.witness.kind = WitnessKind::DistinguishingColoring;
  r.witness.verified_by = verified_by_for(g);
  if (g.is_trivial()) {
    r.value = 1;
    r.witness.coloring.color.assign(V, 1);
    r.witness.coloring.d = 1;
    return r;
  }
  Budget budget(options.max_candidates);
  std::optional<std::vector<Vertex>> cls = greedy_class(g, options, budget);
  if (!cls) {
    ParamResult exact = min_setwise_trivial(g, 1, V / 2, options);
    if (exact.value > 0) cls = exact.witness.set;
  }
  if (cls) {
    if (!is_cost_class(g, *cls, options.search))
      throw Error(ErrorKind::InternalInconsistency, "2-coloring witness rejected by the checker");
    r.value = 2;
    r.witness.coloring = Coloring::two_class(V, *cls);
    r.candidates = budget.used();
    return r;
  }
  for (std::uint32_t d = 3; d <= V; ++d) {
    if (auto c = search_colorings(g, d, options, budget)) {
      r.value = d;
      r.witness.coloring.color = std::move(*c);
      r.witness.coloring.d = d;
      r.candidates = budget.used();
      return r;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "no distinguishing coloring found with |V| colors");
}

bool is_asymmetric(const Graph& g, const SearchOptions& options) {
  return search_group(g, {}, SearchMode::AnyNontrivial, options).trivial;
}

TransitivityReport transitivity_report(const Graph& graph, const PermGroup& g, const SearchOptions& options) {
  if (graph.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "group does not act on this graph");
  TransitivityReport t;
  const std::size_t V = graph.size();
  if (V == 0) return t;
  std::vector<std::vector<Vertex>> gens;
  for (const auto& a : g.generators()) gens.push_back(a.to_perm());

  const auto rep = orbit_representatives(V, gens);
  t.vertex_transitive = std::all_of(rep.begin(), rep.end(), [](Vertex r) { return r == 0; });

  // Edge orbits: union-find over edge indices.
  const auto edges = graph.edges();
  auto edge_index = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge{a, b}) - edges.begin());
  };
  std::vector<std::size_t> parent(edges.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : gens)
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::size_t a = find(i), b = find(edge_index(p[edges[i].first], p[edges[i].second]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  t.edge_transitive = true;
  for (std::size_t i = 0; i < edges.size(); ++i) t.edge_transitive = t.edge_transitive && find(i) == find(0);

  if (t.vertex_transitive) {
    const Vertex root[1] = {0};
    const PermGroup stab = pointwise_stabilizer(g, root, options);
    std::vector<std::vector<Vertex>> sgens;
    for (const auto& a : stab.generators()) sgens.push_back(a.to_perm());
    const auto srep = orbit_representatives(V, sgens);
    const auto dist = bfs_distances(graph, 0);
    // Stabilizer of 0 transitive on every sphere around 0.
    std::vector<std::optional<Vertex>> sphere_rep;
    bool distance = true;
    for (Vertex v = 0; v < V; ++v) {
      const std::size_t d = dist[v] == static_cast<std::size_t>(-1) ? V : dist[v];
      if (sphere_rep.size() <= d) sphere_rep.resize(d + 1);
      if (!sphere_rep[d]) sphere_rep[d] = srep[v];
      else if (*sphere_rep[d] != srep[v]) distance = false;
    }
    bool arc = true;
    auto nb = graph.neighbors(0);
    for (Vertex w : nb) arc = arc && srep[w] == srep[nb[0]];
    t.arc_transitive = arc;
    t.distance_transitive = distance;
  }
  if (t.arc_transitive && !(t.vertex_transitive && t.edge_transitive))
    throw Error(ErrorKind::InternalInconsistency, "arc-transitive report without vertex and edge transitivity");
  if (t.distance_transitive && !t.arc_transitive && graph.edge_count() > 0)
    throw Error(ErrorKind::InternalInconsistency, "distance-transitive report without arc transitivity");
  return t;
}

}  // namespace cubesym
