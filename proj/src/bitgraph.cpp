#include "cubesym/bitgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

// alphabet^n, or nullopt-like sentinel 0 on overflow of 64 bits.
std::uint64_t checked_power(std::uint64_t base, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return 0;
    r *= base;
  }
  return r;
}

Word low_mask(int bits) {
  return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1);
}

char digit_char(int d) { return d < 10 ? char('0' + d) : char('a' + d - 10); }

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}

// Neighbor masks for the XOR-generated binary families.
std::vector<Word> family_masks(const FamilySpec& s) {
  std::vector<Word> masks;
  const int n = s.n;
  for (int i = 0; i < n; ++i) masks.push_back(Word{1} << i);
  switch (s.kind) {
    case FamilyKind::Hypercube:
      break;
    case FamilyKind::HypercubePower: {
      const int k = std::min(s.k, n);
      masks.clear();
      for (Word m = 1; m <= low_mask(n) && m != 0; ++m) {
        if (__builtin_popcountll(m) <= k) masks.push_back(m);
        if (m == low_mask(n)) break;
      }
      break;
    }
    case FamilyKind::Folded:
      if (n >= 2) masks.push_back(low_mask(n));
      break;
    case FamilyKind::Enhanced: {
      const Word m = low_mask(n - s.k + 1);
      if (__builtin_popcountll(m) > 1) masks.push_back(m);
      break;
    }
    case FamilyKind::Augmented:
      for (int len = 2; len <= n; ++len) masks.push_back(low_mask(len));
      break;
    default:
      throw Error(ErrorKind::InternalInconsistency, "family has no mask rule");
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

// Image of 0x under the matching between the two copies of LTQ_n.
Word ltq_match(Word x, int n) {
  return (Word{1} << (n - 1)) | (x ^ ((x & 1) << (n - 2)));
}

bool ltq_adjacent(int n, Word u, Word v) {
  while (n > 2) {
    const Word top = Word{1} << (n - 1);
    if ((u & top) == (v & top)) {
      u &= top - 1;
      v &= top - 1;
      --n;
      continue;
    }
    if (u & top) std::swap(u, v);
    return ltq_match(u, n) == v;
  }
  return __builtin_popcountll(u ^ v) == 1;
}

Graph build_ltq(const FamilySpec& spec) {
  // Recursion on neighbor lists: LTQ_{j} is two copies of LTQ_{j-1} plus the
  // twisted matching.
  std::vector<std::vector<Vertex>> adj = {{1, 2}, {0, 3}, {0, 3}, {1, 2}};
  for (int j = 3; j <= spec.n; ++j) {
    const Vertex half = Vertex{1} << (j - 1);
    std::vector<std::vector<Vertex>> next(std::size_t{half} * 2);
    for (Vertex x = 0; x < half; ++x) {
      next[x] = adj[x];
      for (Vertex y : adj[x]) next[x + half].push_back(y + half);
    }
    for (Vertex x = 0; x < half; ++x) {
      const Vertex y = static_cast<Vertex>(ltq_match(x, j));
      next[x].push_back(y);
      next[y].push_back(x);
    }
    adj = std::move(next);
  }
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> flat;
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    flat.insert(flat.end(), row.begin(), row.end());
    offsets.push_back(flat.size());
  }
  return Graph::from_csr(std::move(offsets), std::move(flat), spec);
}

Graph build_hamming(const FamilySpec& spec) {
  const auto V = static_cast<Vertex>(spec.vertex_count());
  const Vertex m = static_cast<Vertex>(spec.m);
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> flat;
  flat.reserve(std::size_t{V} * spec.n * (m - 1));
  std::vector<Vertex> row;
  for (Vertex v = 0; v < V; ++v) {
    row.clear();
    Vertex place = 1;
    for (int i = 0; i < spec.n; ++i, place *= m) {
      const Vertex digit = (v / place) % m;
      for (Vertex d = 0; d < m; ++d)
        if (d != digit) row.push_back(v - digit * place + d * place);
    }
    std::sort(row.begin(), row.end());
    flat.insert(flat.end(), row.begin(), row.end());
    offsets.push_back(flat.size());
  }
  return Graph::from_csr(std::move(offsets), std::move(flat), spec);
}

}  // namespace

// ---------------------------------------------------------------- BitVertex

BitVertex::BitVertex(Word word, int n, int alphabet) : word_(word), n_(n), alphabet_(alphabet) {
  if (alphabet < 2 || n < 0 || n > 64)
    throw Error(ErrorKind::ParameterOutOfRange, "bad vertex shape");
  const std::uint64_t count = checked_power(alphabet, n);
  if (count != 0 && word >= count)
    throw Error(ErrorKind::VertexOutOfRange, "word " + std::to_string(word) + " exceeds alphabet^n");
}

BitVertex BitVertex::parse(std::string_view digits, int alphabet) {
  if (digits.size() > 64) throw Error(ErrorKind::ParseError, "vertex label too long");
  Word w = 0;
  for (char c : digits) {
    const int d = char_digit(c);
    if (d < 0 || d >= alphabet)
      throw Error(ErrorKind::ParseError, "bad digit '" + std::string(1, c) + "' in vertex label");
    w = w * alphabet + d;
  }
  return BitVertex(w, static_cast<int>(digits.size()), alphabet);
}

int BitVertex::at(int i) const {
  if (i < 0 || i >= n_) throw Error(ErrorKind::VertexOutOfRange, "position out of range");
  if (alphabet_ == 2) return static_cast<int>((word_ >> (n_ - 1 - i)) & 1);
  Word w = word_;
  for (int j = n_ - 1; j > i; --j) w /= alphabet_;
  return static_cast<int>(w % alphabet_);
}

std::string BitVertex::str() const {
  std::string s(n_, '0');
  Word w = word_;
  for (int i = n_ - 1; i >= 0; --i) {
    s[i] = digit_char(static_cast<int>(w % alphabet_));
    w /= alphabet_;
  }
  return s;
}

std::size_t hamming_distance(const BitVertex& u, const BitVertex& v) {
  if (u.n() != v.n() || u.alphabet() != v.alphabet())
    throw Error(ErrorKind::DimensionMismatch, "vertices of different shape");
  if (u.alphabet() == 2) return __builtin_popcountll(u.word() ^ v.word());
  std::size_t d = 0;
  Word a = u.word(), b = v.word();
  for (int i = 0; i < u.n(); ++i) {
    d += (a % u.alphabet()) != (b % u.alphabet());
    a /= u.alphabet();
    b /= u.alphabet();
  }
  return d;
}

std::string word_string(Word w, int n) { return BitVertex(n >= 64 ? w : (w & low_mask(n)), n).str(); }

Word parse_word(std::string_view bits) { return BitVertex::parse(bits).word(); }

// --------------------------------------------------------------- FamilySpec

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Hypercube:
      require(n >= 0 && n <= 64, "hypercube needs 0 <= n <= 64");
      break;
    case FamilyKind::HypercubePower:
      require(n >= 1 && n <= 64, "power needs 1 <= n <= 64");
      require(k >= 1, "power needs k >= 1");
      break;
    case FamilyKind::Hamming:
      require(m >= 2 && m <= 36, "hamming needs 2 <= m <= 36");
      require(n >= 1 && n <= 64, "hamming needs n >= 1");
      break;
    case FamilyKind::Folded:
      require(n >= 1 && n <= 64, "folded needs 1 <= n <= 64");
      break;
    case FamilyKind::Enhanced:
      require(n >= 2 && n <= 64, "enhanced needs 2 <= n <= 64");
      require(k >= 1 && k <= n - 1, "enhanced needs 1 <= k <= n-1");
      break;
    case FamilyKind::Augmented:
      require(n >= 1 && n <= 64, "augmented needs 1 <= n <= 64");
      break;
    case FamilyKind::LocallyTwisted:
      require(n >= 2 && n <= 64, "locally twisted needs 2 <= n <= 64");
      break;
    case FamilyKind::Explicit:
      break;
  }
}

std::uint64_t FamilySpec::vertex_count() const {
  const std::uint64_t c = checked_power(alphabet(), n);
  if (c == 0 || c > (std::uint64_t{1} << 63))
    throw Error(ErrorKind::Overflow, label() + " has more than 2^63 vertices");
  return c;
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Hypercube: return "hypercube";
    case FamilyKind::HypercubePower: return "power";
    case FamilyKind::Hamming: return "hamming";
    case FamilyKind::Folded: return "folded";
    case FamilyKind::Enhanced: return "enhanced";
    case FamilyKind::Augmented: return "augmented";
    case FamilyKind::LocallyTwisted: return "ltq";
    case FamilyKind::Explicit: return "explicit";
  }
  return "explicit";
}

FamilyKind parse_family_kind(std::string_view name) {
  static const std::unordered_map<std::string_view, FamilyKind> names = {
      {"hypercube", FamilyKind::Hypercube},   {"q", FamilyKind::Hypercube},
      {"power", FamilyKind::HypercubePower},  {"hypercube-power", FamilyKind::HypercubePower},
      {"hamming", FamilyKind::Hamming},       {"folded", FamilyKind::Folded},
      {"enhanced", FamilyKind::Enhanced},     {"augmented", FamilyKind::Augmented},
      {"ltq", FamilyKind::LocallyTwisted},    {"locally-twisted", FamilyKind::LocallyTwisted},
      {"explicit", FamilyKind::Explicit},
  };
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::ParameterOutOfRange, "unknown family '" + std::string(name) + "'");
  return it->second;
}

std::string FamilySpec::name() const { return family_kind_name(kind); }

std::string FamilySpec::label() const {
  const std::string ns = std::to_string(n);
  switch (kind) {
    case FamilyKind::Hypercube: return "Q_" + ns;
    case FamilyKind::HypercubePower: return "Q_" + ns + "^" + std::to_string(k);
    case FamilyKind::Hamming: return "H(" + std::to_string(m) + "," + ns + ")";
    case FamilyKind::Folded: return "FQ_" + ns;
    case FamilyKind::Enhanced: return "Q_{" + ns + "," + std::to_string(k) + "}";
    case FamilyKind::Augmented: return "AQ_" + ns;
    case FamilyKind::LocallyTwisted: return "LTQ_" + ns;
    case FamilyKind::Explicit: return "G";
  }
  return "G";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, FamilySpec family,
             std::vector<Word> origin)
    : family_(family), origin_(std::move(origin)) {
  if (vertex_count > std::numeric_limits<Vertex>::max())
    throw Error(ErrorKind::SizeGuard, "too many vertices");
  std::vector<std::size_t> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw Error(ErrorKind::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InternalInconsistency, "loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    auto b = adjacency_.begin() + offsets_[i], e = adjacency_.begin() + offsets_[i + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw Error(ErrorKind::InternalInconsistency, "repeated edge at vertex " + std::to_string(i));
  }
  finish();
}

Graph Graph::from_csr(std::vector<std::size_t> offsets, std::vector<Vertex> adjacency,
                      FamilySpec family, std::vector<Word> origin) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  g.family_ = family;
  g.origin_ = std::move(origin);
  if (g.offsets_.empty()) g.offsets_.push_back(0);
  const std::size_t V = g.size();
  if (g.offsets_.back() != g.adjacency_.size())
    throw Error(ErrorKind::InternalInconsistency, "CSR offsets do not match adjacency size");
  for (std::size_t v = 0; v < V; ++v) {
    auto row = g.neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Vertex w = row[i];
      if (w >= V || w == v || (i > 0 && row[i - 1] >= w))
        throw Error(ErrorKind::InternalInconsistency, "bad neighbor list at vertex " + std::to_string(v));
      auto back = g.neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(v)))
        throw Error(ErrorKind::InternalInconsistency, "asymmetric adjacency");
    }
  }
  g.finish();
  return g;
}

void Graph::finish() {
  const std::size_t V = size();
  if (!origin_.empty() && origin_.size() != V)
    throw Error(ErrorKind::InternalInconsistency, "origin labels do not match vertex count");
  constexpr std::size_t kDenseLimit = 8192;
  if (V == 0 || V > kDenseLimit) return;
  row_words_ = (V + 63) / 64;
  rows_.assign(V * row_words_, 0);
  for (std::size_t v = 0; v < V; ++v)
    for (Vertex w : neighbors(static_cast<Vertex>(v))) rows_[v * row_words_ + w / 64] |= std::uint64_t{1} << (w % 64);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
  if (!rows_.empty()) return (rows_[u * row_words_ + v / 64] >> (v % 64)) & 1;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

// --------------------------------------------------------------- generators

BuildOptions build_options_from_env() {
  BuildOptions o;
  if (const char* s = std::getenv("CUBE_SYM_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
      throw Error(ErrorKind::ParseError, "CUBE_SYM_MAX_VERTICES must be a positive integer");
    o.max_vertices = static_cast<std::size_t>(v);
  }
  return o;
}

bool family_adjacent(const FamilySpec& spec, Word u, Word v) {
  if (u == v) return false;
  switch (spec.kind) {
    case FamilyKind::Hypercube:
      return __builtin_popcountll(u ^ v) == 1;
    case FamilyKind::HypercubePower:
      return __builtin_popcountll(u ^ v) <= spec.k;
    case FamilyKind::Hamming: {
      int diff = 0;
      for (int i = 0; i < spec.n; ++i) {
        diff += (u % spec.m) != (v % spec.m);
        u /= spec.m;
        v /= spec.m;
      }
      return diff == 1;
    }
    case FamilyKind::Folded:
      return __builtin_popcountll(u ^ v) == 1 || (u ^ v) == low_mask(spec.n);
    case FamilyKind::Enhanced:
      return __builtin_popcountll(u ^ v) == 1 || (u ^ v) == low_mask(spec.n - spec.k + 1);
    case FamilyKind::Augmented: {
      // One differing position, or a common prefix followed by a fully
      // complemented suffix of length >= 2.
      const Word x = u ^ v;
      return __builtin_popcountll(x) == 1 || ((x & (x + 1)) == 0 && x != 1);
    }
    case FamilyKind::LocallyTwisted:
      return ltq_adjacent(spec.n, u, v);
    case FamilyKind::Explicit:
      break;
  }
  throw Error(ErrorKind::ParameterOutOfRange, "explicit graphs have no edge rule");
}

Graph build_family(const FamilySpec& spec, const BuildOptions& options) {
  spec.validate();
  if (spec.kind == FamilyKind::Explicit)
    throw Error(ErrorKind::ParameterOutOfRange, "explicit graphs cannot be generated");
  const std::uint64_t count = checked_power(spec.alphabet(), spec.n);
  if (count == 0 || count > options.max_vertices)
    throw Error(ErrorKind::SizeGuard, spec.label() + " exceeds the vertex cap of " + std::to_string(options.max_vertices));
  if (spec.kind == FamilyKind::Hamming) {
    if (count * spec.n * (spec.m - 1) > options.max_adjacency)
      throw Error(ErrorKind::SizeGuard, spec.label() + " has too many edges");
    return build_hamming(spec);
  }
  if (spec.kind == FamilyKind::LocallyTwisted) return build_ltq(spec);

  const std::vector<Word> masks = family_masks(spec);
  if (count * masks.size() > options.max_adjacency)
    throw Error(ErrorKind::SizeGuard, spec.label() + " has too many edges");
  const auto V = static_cast<Vertex>(count);
  std::vector<std::size_t> offsets(std::size_t{V} + 1);
  std::vector<Vertex> flat(std::size_t{V} * masks.size());
  std::size_t pos = 0;
  for (Vertex v = 0; v < V; ++v) {
    offsets[v] = pos;
    for (Word m : masks) flat[pos++] = static_cast<Vertex>(v ^ m);
    std::sort(flat.begin() + offsets[v], flat.begin() + pos);
  }
  offsets[V] = pos;
  return Graph::from_csr(std::move(offsets), std::move(flat), spec);
}

Graph build_augmented_recursive(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "augmented needs n >= 1");
  // AQ_1 = K_2; AQ_n joins 0x to 1x and to 1x̄ across two copies of AQ_{n-1}.
  std::vector<Edge> edges = {{0, 1}};
  for (int j = 2; j <= n; ++j) {
    const Vertex half = Vertex{1} << (j - 1);
    std::vector<Edge> next;
    next.reserve(edges.size() * 2 + half * 2);
    for (auto [a, b] : edges) {
      next.emplace_back(a, b);
      next.emplace_back(a + half, b + half);
    }
    for (Vertex x = 0; x < half; ++x) {
      next.emplace_back(x, x + half);
      next.emplace_back(x, (x ^ (half - 1)) + half);
    }
    edges = std::move(next);
  }
  return Graph(std::size_t{1} << n, edges, FamilySpec::augmented(n));
}

// ------------------------------------------------------------------ metrics

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.size()) throw Error(ErrorKind::VertexOutOfRange, "source out of range");
  std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::size_t graph_distance(const Graph& g, Vertex u, Vertex v) {
  if (v >= g.size()) throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
  const std::size_t d = bfs_distances(g, u)[v];
  if (d == std::numeric_limits<std::size_t>::max())
    throw Error(ErrorKind::Unreachable, std::to_string(v) + " unreachable from " + std::to_string(u));
  return d;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::unordered_map<Vertex, Vertex> index;
  std::vector<Word> origin;
  for (Vertex v : vertices) {
    if (v >= g.size()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    if (!index.emplace(v, static_cast<Vertex>(index.size())).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(v) + " repeated");
    origin.push_back(g.origin(v));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      auto it = index.find(w);
      if (it != index.end() && i < it->second) edges.emplace_back(i, it->second);
    }
  return Graph(vertices.size(), edges, FamilySpec{}, std::move(origin));
}

Graph induced_subgraph_by_rule(const FamilySpec& spec, std::span<const Word> vertices) {
  spec.validate();
  const std::uint64_t count = checked_power(spec.alphabet(), spec.n);
  std::vector<Word> origin(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < origin.size(); ++i) {
    if (count != 0 && origin[i] >= count)
      throw Error(ErrorKind::VertexOutOfRange, "word " + std::to_string(origin[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (origin[i] == origin[j]) throw Error(ErrorKind::DuplicateVertex, "word repeated in vertex set");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < origin.size(); ++i)
    for (Vertex j = i + 1; j < origin.size(); ++j)
      if (family_adjacent(spec, origin[i], origin[j])) edges.emplace_back(i, j);
  const std::size_t size = origin.size();
  return Graph(size, edges, FamilySpec{}, std::move(origin));
}

Graph complement(const Graph& g) {
  const std::size_t V = g.size();
  if (V > 0 && V * (V - 1) - 2 * g.edge_count() > (std::size_t{1} << 28))
    throw Error(ErrorKind::SizeGuard, "complement too large");
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> flat;
  for (Vertex v = 0; v < V; ++v) {
    auto row = g.neighbors(v);
    auto it = row.begin();
    for (Vertex w = 0; w < V; ++w) {
      while (it != row.end() && *it < w) ++it;
      if (w != v && (it == row.end() || *it != w)) flat.push_back(w);
    }
    offsets.push_back(flat.size());
  }
  return Graph::from_csr(std::move(offsets), std::move(flat), FamilySpec{}, g.origins());
}

Graph cartesian_product(const Graph& g, const Graph& h, const BuildOptions& options) {
  const std::size_t G = g.size(), H = h.size();
  if (H != 0 && G > options.max_vertices / H)
    throw Error(ErrorKind::SizeGuard, "product exceeds the vertex cap");
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> flat;
  for (Vertex a = 0; a < G; ++a)
    for (Vertex b = 0; b < H; ++b) {
      const std::size_t start = flat.size();
      for (Vertex a2 : g.neighbors(a)) flat.push_back(static_cast<Vertex>(a2 * H + b));
      for (Vertex b2 : h.neighbors(b)) flat.push_back(static_cast<Vertex>(a * H + b2));
      std::sort(flat.begin() + start, flat.end());
      offsets.push_back(flat.size());
    }
  return Graph::from_csr(std::move(offsets), std::move(flat));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::ParameterOutOfRange, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

}  // namespace cubesym
