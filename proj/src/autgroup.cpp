#include "cubesym/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

constexpr std::uint64_t kOrbitCap = std::uint64_t{1} << 26;

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct PermHash {
  std::size_t operator()(const std::vector<Vertex>& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : p) h = (h ^ v) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

std::vector<int> identity_positions(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Generators of the symmetric group on the listed points: a transposition
// and a full cycle.
std::vector<std::vector<int>> symmetric_generators(int size, std::span<const int> points) {
  std::vector<std::vector<int>> out;
  if (points.size() < 2) return out;
  std::vector<int> t = identity_positions(size);
  std::swap(t[points[0]], t[points[1]]);
  out.push_back(t);
  if (points.size() > 2) {
    std::vector<int> c = identity_positions(size);
    for (std::size_t i = 0; i < points.size(); ++i) c[points[i]] = points[(i + 1) % points.size()];
    out.push_back(c);
  }
  return out;
}

std::vector<std::uint32_t> refine_coloring(std::span<const std::uint32_t> base, std::size_t n,
                                           std::span<const std::uint32_t> tags) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(n);
  for (std::size_t v = 0; v < n; ++v) keys[v] = {base.empty() ? 0 : base[v], tags[v]};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> out(n);
  for (std::size_t v = 0; v < n; ++v)
    out[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return out;
}

void check_vertices(const PermGroup& g, std::span<const Vertex> s) {
  std::set<Vertex> seen;
  for (Vertex v : s) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(v) + " repeated");
  }
}

std::vector<std::uint32_t> pointwise_tags(std::size_t n, std::span<const Vertex> s) {
  std::vector<std::uint32_t> tags(n, 0);
  for (std::size_t i = 0; i < s.size(); ++i) tags[s[i]] = static_cast<std::uint32_t>(i + 1);
  return tags;
}

std::vector<std::uint32_t> setwise_tags(std::size_t n, std::span<const Vertex> s) {
  std::vector<std::uint32_t> tags(n, 0);
  for (Vertex v : s) tags[v] = 1;
  return tags;
}

PermGroup from_search(const std::shared_ptr<const Graph>& graph, std::vector<std::uint32_t> coloring,
                      const SearchOptions& options) {
  SearchOutcome r = search_group(*graph, coloring, SearchMode::Full, options);
  std::vector<Automorphism> gens;
  for (auto& p : r.generators) gens.emplace_back(ExplicitPerm{std::move(p)});
  return PermGroup(GroupSource::Searched, graph->size(), std::move(gens), r.order).with_graph(graph, std::move(coloring));
}

PermGroup filter_elements(const PermGroup& g, const std::function<bool(const std::vector<Vertex>&)>& keep) {
  std::vector<Automorphism> gens;
  BigInt order = 0;
  for (const auto& e : g.elements()) {
    if (!keep(e)) continue;
    ++order;
    bool identity = true;
    for (Vertex v = 0; v < e.size() && identity; ++v) identity = e[v] == v;
    if (!identity) gens.emplace_back(ExplicitPerm{e});
  }
  return PermGroup(GroupSource::Explicit, g.vertex_count(), std::move(gens), order);
}

Automorphism identity_of(const PermGroup& g) {
  if (const auto& st = g.structure()) {
    if (st->kind == StructuredForm::Kind::Hypercube) return Automorphism(HypercubeAff{0, identity_positions(st->n)});
    if (st->kind == StructuredForm::Kind::Folded) return Automorphism(FoldedAff{0, identity_positions(st->n + 1)});
  }
  return Automorphism::identity(g.vertex_count());
}

PermGroup product_group(const PermGroup& left, const PermGroup& right) {
  std::vector<Automorphism> gens;
  auto id_l = std::make_shared<const Automorphism>(identity_of(left));
  auto id_r = std::make_shared<const Automorphism>(identity_of(right));
  for (const auto& a : left.generators())
    gens.emplace_back(ProductAff{std::make_shared<const Automorphism>(a), id_r});
  for (const auto& b : right.generators())
    gens.emplace_back(ProductAff{id_l, std::make_shared<const Automorphism>(b)});
  return PermGroup(GroupSource::Structured, left.vertex_count() * right.vertex_count(), std::move(gens),
                   left.order() * right.order());
}

}  // namespace

// -------------------------------------------------------------- PermGroup

struct PermGroup::Cache {
  std::once_flag once;
  std::vector<std::vector<Vertex>> elements;
};

PermGroup::PermGroup(GroupSource source, std::uint64_t vertex_count, std::vector<Automorphism> generators, BigInt order)
    : source_(source),
      vertex_count_(vertex_count),
      generators_(std::move(generators)),
      order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& a : generators_)
    if (a.vertex_count() != vertex_count_)
      throw Error(ErrorKind::DimensionMismatch, "generator acts on a different vertex set");
}

PermGroup PermGroup::with_structure(StructuredForm form) const {
  PermGroup g = *this;
  g.structure_ = std::move(form);
  return g;
}

PermGroup PermGroup::with_graph(std::shared_ptr<const Graph> graph, std::vector<std::uint32_t> coloring) const {
  if (graph && graph->size() != vertex_count_) throw Error(ErrorKind::DimensionMismatch, "graph size differs from group degree");
  PermGroup g = *this;
  g.graph_ = std::move(graph);
  g.coloring_ = std::move(coloring);
  return g;
}

bool PermGroup::enumerable() const {
  return vertex_count_ > 0 && order_ * vertex_count_ <= kEnumerationCap;
}

const std::vector<std::vector<Vertex>>& PermGroup::elements() const {
  if (!enumerable()) throw Error(ErrorKind::SizeGuard, "group of order " + order_.str() + " is too large to enumerate");
  std::call_once(cache_->once, [this] {
    std::vector<std::vector<Vertex>> gens;
    for (const auto& a : generators_) gens.push_back(a.to_perm());
    std::unordered_set<std::vector<Vertex>, PermHash> seen;
    std::vector<std::vector<Vertex>> queue{identity_perm(vertex_count_)};
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& gen : gens) {
        auto next = compose_perm(gen, queue[i]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    if (BigInt(queue.size()) != order_)
      throw Error(ErrorKind::InternalInconsistency,
                  "generators produce " + std::to_string(queue.size()) + " elements, expected " + order_.str());
    std::sort(queue.begin(), queue.end());
    cache_->elements = std::move(queue);
  });
  return cache_->elements;
}

std::vector<Vertex> PermGroup::orbits() const {
  if (vertex_count_ > kOrbitCap) throw Error(ErrorKind::SizeGuard, "too many vertices for orbit computation");
  std::vector<std::vector<Vertex>> gens;
  for (const auto& a : generators_) gens.push_back(a.to_perm());
  return orbit_representatives(vertex_count_, gens);
}

bool PermGroup::vertex_transitive() const {
  if (structure_) {
    switch (structure_->kind) {
      case StructuredForm::Kind::Hypercube:
      case StructuredForm::Kind::Folded:
      case StructuredForm::Kind::Augmented:
        return true;
      case StructuredForm::Kind::LocallyTwisted:
        return false;
      case StructuredForm::Kind::Product:
        return structure_->left->vertex_transitive() && structure_->right->vertex_transitive();
    }
  }
  const auto rep = orbits();
  return std::all_of(rep.begin(), rep.end(), [](Vertex r) { return r == 0; });
}

// ------------------------------------------------------- structured groups

bool has_structured_group(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Hypercube:
      return spec.n >= 1;
    case FamilyKind::HypercubePower:
      return spec.k == 1 || (spec.k % 2 == 1 && spec.k <= spec.n - 2);
    case FamilyKind::Hamming:
      return spec.m == 2;
    case FamilyKind::Folded:
    case FamilyKind::Augmented:
    case FamilyKind::LocallyTwisted:
      return spec.n >= 4;
    case FamilyKind::Enhanced:
      return spec.k >= 2 || spec.n >= 4;
    case FamilyKind::Explicit:
      return false;
  }
  return false;
}

namespace {

PermGroup hypercube_group(int n) {
  std::vector<Automorphism> gens;
  gens.emplace_back(HypercubeAff{Word{1} << (n - 1), identity_positions(n)});
  std::vector<int> all = identity_positions(n);
  for (auto& p : symmetric_generators(n, all)) gens.emplace_back(HypercubeAff{0, std::move(p)});
  PermGroup g(GroupSource::Structured, std::uint64_t{1} << n, std::move(gens), (BigInt(1) << n) * factorial(n));
  return g.with_structure({StructuredForm::Kind::Hypercube, n, nullptr, nullptr});
}

PermGroup folded_group(int n) {
  std::vector<Automorphism> gens;
  gens.emplace_back(FoldedAff{Word{1} << (n - 1), identity_positions(n + 1)});
  std::vector<int> all = identity_positions(n + 1);
  for (auto& p : symmetric_generators(n + 1, all)) gens.emplace_back(FoldedAff{0, std::move(p)});
  PermGroup g(GroupSource::Structured, std::uint64_t{1} << n, std::move(gens), (BigInt(1) << n) * factorial(n + 1));
  return g.with_structure({StructuredForm::Kind::Folded, n, nullptr, nullptr});
}

PermGroup augmented_group(int n) {
  std::vector<Automorphism> gens;
  for (int i = 0; i < n; ++i) gens.emplace_back(AugmentedAff{Word{1} << i, n, 1});
  for (int b = 2; b <= 8; ++b) gens.emplace_back(AugmentedAff{0, n, b});
  PermGroup g(GroupSource::Structured, std::uint64_t{1} << n, std::move(gens), BigInt(8) << n);
  return g.with_structure({StructuredForm::Kind::Augmented, n, nullptr, nullptr});
}

PermGroup ltq_group(int n) {
  std::vector<Automorphism> gens;
  for (int i = 0; i < n - 1; ++i) gens.emplace_back(LtqTranslation{Word{1} << i, n});
  PermGroup g(GroupSource::Structured, std::uint64_t{1} << n, std::move(gens), BigInt(1) << (n - 1));
  return g.with_structure({StructuredForm::Kind::LocallyTwisted, n, nullptr, nullptr});
}

}  // namespace

PermGroup structured_group(const FamilySpec& spec) {
  spec.validate();
  if (!has_structured_group(spec))
    throw Error(ErrorKind::NoStructuredForm, "no algebraic description of Aut(" + spec.label() + ")");
  if (spec.n > 63) throw Error(ErrorKind::SizeGuard, "word length above 63");
  switch (spec.kind) {
    case FamilyKind::Hypercube:
    case FamilyKind::HypercubePower:
    case FamilyKind::Hamming:
      return hypercube_group(spec.n);
    case FamilyKind::Folded:
      return folded_group(spec.n);
    case FamilyKind::Augmented:
      return augmented_group(spec.n);
    case FamilyKind::LocallyTwisted:
      return ltq_group(spec.n);
    case FamilyKind::Enhanced: {
      if (spec.k == 1) return folded_group(spec.n);
      const int m = spec.n - spec.k + 1;
      auto left = std::make_shared<const PermGroup>(hypercube_group(spec.k - 1));
      std::shared_ptr<const PermGroup> right;
      if (m >= 4) {
        right = std::make_shared<const PermGroup>(folded_group(m));
      } else {
        auto graph = std::make_shared<const Graph>(build_family(FamilySpec::folded(m)));
        right = std::make_shared<const PermGroup>(from_search(graph, {}, {}));
      }
      PermGroup g = product_group(*left, *right);
      return g.with_structure({StructuredForm::Kind::Product, spec.n, left, right});
    }
    case FamilyKind::Explicit:
      break;
  }
  throw Error(ErrorKind::NoStructuredForm, "explicit graph");
}

PermGroup structured_group(const Graph& g) {
  PermGroup grp = structured_group(g.family());
  if (grp.vertex_count() != g.size()) throw Error(ErrorKind::DimensionMismatch, "graph does not match its family tag");
  return grp.with_graph(std::make_shared<const Graph>(g));
}

PermGroup search_automorphisms(const Graph& g, const SearchOptions& options) {
  return from_search(std::make_shared<const Graph>(g), {}, options);
}

PermGroup search_automorphisms(const Graph& g, std::span<const std::uint32_t> coloring, const SearchOptions& options) {
  return from_search(std::make_shared<const Graph>(g), std::vector<std::uint32_t>(coloring.begin(), coloring.end()),
                     options);
}

PermGroup automorphism_group(const Graph& g, const SearchOptions& options) {
  if (has_structured_group(g.family()) && g.family().vertex_count() == g.size()) return structured_group(g);
  return search_automorphisms(g, options);
}

BigInt group_order(const PermGroup& g) { return g.order(); }

// ------------------------------------------------------------ stabilizers

PermGroup cube_pointwise_stabilizer(int n, bool folded, std::span<const Word> s) {
  if (n < 1 || n > 63) throw Error(ErrorKind::ParameterOutOfRange, "cube stabilizer needs 1 <= n <= 63");
  const std::uint64_t V = std::uint64_t{1} << n;
  if (s.empty()) return folded ? folded_group(n) : hypercube_group(n);
  for (Word w : s)
    if (w >= V) throw Error(ErrorKind::VertexOutOfRange, "word out of range");
  const Word s0 = s[0];
  const int symbols = folded ? n + 1 : n;
  const std::size_t rows = s.size();
  const std::size_t row_words = (rows + 63) / 64;
  using Column = std::vector<std::uint64_t>;
  std::vector<Column> col(symbols, Column(row_words, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const Word t = s[r] ^ s0;
    for (int j = 0; j < n; ++j)
      if ((t >> (n - 1 - j)) & 1) col[j][r / 64] |= std::uint64_t{1} << (r % 64);
  }
  std::map<Column, std::vector<int>> classes;
  for (int j = 0; j < symbols; ++j) classes[col[j]].push_back(j);

  auto xor_col = [](const Column& a, const Column& b) {
    Column c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] ^ b[i];
    return c;
  };
  // Flip vectors f with the column multiset invariant under XOR by f.
  std::vector<Column> flips;
  if (folded) {
    for (const auto& [f, members] : classes) {
      (void)members;
      bool ok = true;
      for (const auto& [v, cls] : classes) {
        auto it = classes.find(xor_col(v, f));
        if (it == classes.end() || it->second.size() != cls.size()) {
          ok = false;
          break;
        }
      }
      if (ok && std::any_of(f.begin(), f.end(), [](std::uint64_t x) { return x != 0; })) flips.push_back(f);
    }
  }

  BigInt order = flips.size() + 1;
  std::vector<std::vector<int>> linear;
  for (const auto& [v, cls] : classes) {
    order *= factorial(static_cast<int>(cls.size()));
    for (auto& p : symmetric_generators(symbols, cls)) linear.push_back(std::move(p));
  }
  for (const auto& f : flips) {
    std::vector<int> sigma(symbols);
    for (const auto& [v, cls] : classes) {
      const auto& target = classes.at(xor_col(v, f));
      for (std::size_t i = 0; i < cls.size(); ++i) sigma[cls[i]] = target[i];
    }
    linear.push_back(std::move(sigma));
  }

  std::vector<Automorphism> gens;
  for (auto& sigma : linear) {
    if (folded) {
      FoldedAff lin{0, sigma};
      const Word image = Automorphism(lin).apply(s0);
      gens.emplace_back(FoldedAff{s0 ^ image, std::move(sigma)});
    } else {
      HypercubeAff lin{0, sigma};
      const Word image = Automorphism(lin).apply(s0);
      gens.emplace_back(HypercubeAff{s0 ^ image, std::move(sigma)});
    }
  }
  return PermGroup(GroupSource::Structured, V, std::move(gens), order);
}

namespace {

bool structured_kind(const PermGroup& g, StructuredForm::Kind kind) {
  return g.structure() && g.structure()->kind == kind;
}

// Elements c + phi_b of the augmented group, or translations of the twisted
// cube, mapping s[0] to t and keeping the predicate.
template <typename Keep>
PermGroup scan_structured(const PermGroup& g, std::span<const Vertex> targets, Vertex s0, Keep keep) {
  const StructuredForm& st = *g.structure();
  std::vector<Automorphism> gens;
  BigInt order = 0;
  for (Vertex t : targets) {
    if (st.kind == StructuredForm::Kind::Augmented) {
      for (int b = 1; b <= 8; ++b) {
        Automorphism a(AugmentedAff{t ^ aq_base_apply(st.n, b, s0), st.n, b});
        if (!keep(a)) continue;
        ++order;
        if (!a.is_identity()) gens.push_back(std::move(a));
      }
    } else {
      const Word d = Word{t} ^ s0;
      if (d & 1) continue;
      Automorphism a(LtqTranslation{d >> 1, st.n});
      if (!keep(a)) continue;
      ++order;
      if (!a.is_identity()) gens.push_back(std::move(a));
    }
  }
  return PermGroup(GroupSource::Structured, g.vertex_count(), std::move(gens), order);
}

bool affine_scannable(const PermGroup& g) {
  return structured_kind(g, StructuredForm::Kind::Augmented) || structured_kind(g, StructuredForm::Kind::LocallyTwisted);
}

bool cube_like(const PermGroup& g) {
  return structured_kind(g, StructuredForm::Kind::Hypercube) || structured_kind(g, StructuredForm::Kind::Folded);
}

PermGroup attach(const PermGroup& result, const PermGroup& parent, std::span<const std::uint32_t> tags) {
  if (!parent.is_full_colored_aut()) return result;
  return result.with_graph(parent.graph(), refine_coloring(parent.coloring(), parent.vertex_count(), tags));
}

PermGroup pointwise_impl(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  if (cube_like(g)) {
    std::vector<Word> words(s.begin(), s.end());
    return cube_pointwise_stabilizer(g.structure()->n, g.structure()->kind == StructuredForm::Kind::Folded, words);
  }
  if (affine_scannable(g)) {
    const Vertex t[1] = {s[0]};
    return scan_structured(g, t, s[0], [&](const Automorphism& a) {
      return std::all_of(s.begin(), s.end(), [&](Vertex v) { return a.apply(Word{v}) == v; });
    });
  }
  if (structured_kind(g, StructuredForm::Kind::Product)) {
    const auto& st = *g.structure();
    const std::uint64_t h = st.right->vertex_count();
    std::vector<Vertex> ls, rs;
    for (Vertex v : s) {
      ls.push_back(static_cast<Vertex>(v / h));
      rs.push_back(static_cast<Vertex>(v % h));
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return product_group(pointwise_stabilizer(*st.left, ls, options), pointwise_stabilizer(*st.right, rs, options));
  }
  if (g.is_full_colored_aut()) {
    auto coloring = refine_coloring(g.coloring(), g.vertex_count(), pointwise_tags(g.vertex_count(), s));
    return from_search(g.graph(), std::move(coloring), options);
  }
  if (g.enumerable()) {
    return filter_elements(g, [&](const std::vector<Vertex>& e) {
      return std::all_of(s.begin(), s.end(), [&](Vertex v) { return e[v] == v; });
    });
  }
  throw Error(ErrorKind::SearchBudgetExceeded, "no method for this stabilizer within budget");
}

}  // namespace

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  check_vertices(g, s);
  if (s.empty()) return g;
  PermGroup r = pointwise_impl(g, s, options);
  if (r.source() == GroupSource::Searched) return r;
  return attach(r, g, pointwise_tags(g.vertex_count(), s));
}

PermGroup setwise_stabilizer(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  check_vertices(g, s);
  if (s.empty() || s.size() == g.vertex_count()) return g;
  const std::unordered_set<Vertex> members(s.begin(), s.end());
  auto keeps = [&](const auto& image_of) {
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return members.count(static_cast<Vertex>(image_of(v))) > 0; });
  };
  PermGroup r = [&] {
    if (affine_scannable(g))
      return scan_structured(g, s, s[0], [&](const Automorphism& a) { return keeps([&](Vertex v) { return a.apply(Word{v}); }); });
    if (g.enumerable())
      return filter_elements(g, [&](const std::vector<Vertex>& e) { return keeps([&](Vertex v) { return e[v]; }); });
    if (g.is_full_colored_aut()) {
      auto coloring = refine_coloring(g.coloring(), g.vertex_count(), setwise_tags(g.vertex_count(), s));
      return from_search(g.graph(), std::move(coloring), options);
    }
    throw Error(ErrorKind::SearchBudgetExceeded, "no method for this stabilizer within budget");
  }();
  if (r.source() == GroupSource::Searched) return r;
  return attach(r, g, setwise_tags(g.vertex_count(), s));
}

bool pointwise_stabilizer_trivial(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  check_vertices(g, s);
  if (s.empty()) return g.is_trivial();
  if (cube_like(g) || affine_scannable(g) || structured_kind(g, StructuredForm::Kind::Product))
    return pointwise_impl(g, s, options).is_trivial();
  if (g.enumerable()) {
    for (const auto& e : g.elements()) {
      bool fixes = std::all_of(s.begin(), s.end(), [&](Vertex v) { return e[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < e.size(); ++v)
        if (e[v] != v) return false;
    }
    return true;
  }
  if (g.is_full_colored_aut()) {
    auto coloring = refine_coloring(g.coloring(), g.vertex_count(), pointwise_tags(g.vertex_count(), s));
    return search_group(*g.graph(), coloring, SearchMode::AnyNontrivial, options).trivial;
  }
  throw Error(ErrorKind::SearchBudgetExceeded, "no method for this stabilizer within budget");
}

bool setwise_stabilizer_trivial(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options) {
  check_vertices(g, s);
  if (affine_scannable(g)) return setwise_stabilizer(g, s, options).is_trivial();
  if (g.vertex_count() > kOrbitCap) throw Error(ErrorKind::SizeGuard, "too many vertices for a coloring");
  std::vector<std::uint32_t> coloring(g.vertex_count(), 0);
  for (Vertex v : s) coloring[v] = 1;
  return coloring_stabilizer_trivial(g, coloring, options);
}

bool coloring_stabilizer_trivial(const PermGroup& g, std::span<const std::uint32_t> coloring,
                                 const SearchOptions& options) {
  if (coloring.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "coloring size differs from group degree");
  if (g.is_trivial()) return true;
  if (g.enumerable()) {
    for (const auto& e : g.elements()) {
      bool preserves = true, identity = true;
      for (Vertex v = 0; v < e.size() && preserves; ++v) {
        preserves = coloring[e[v]] == coloring[v];
        identity = identity && e[v] == v;
      }
      if (preserves && !identity) return false;
    }
    return true;
  }
  if (g.is_full_colored_aut()) {
    auto combined = refine_coloring(g.coloring(), g.vertex_count(), coloring);
    return search_group(*g.graph(), combined, SearchMode::AnyNontrivial, options).trivial;
  }
  throw Error(ErrorKind::SearchBudgetExceeded, "no method for this coloring within budget");
}

}  // namespace cubesym
