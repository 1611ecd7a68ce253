#pragma once

// Graph containers and generators for the hypercube families.
//
// Vertex labels are words of n positions. Position 1 (leftmost) is the most
// significant digit: for binary families position i of a vertex is bit
// (n - i) of its word, and the word value doubles as the vertex index. The
// implementation indexes positions from 0, so position i here is position
// i + 1 in the usual left-to-right reading.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubesym {

using Vertex = std::uint32_t;
using Word = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 20;

class BitVertex {
 public:
  BitVertex(Word word, int n, int alphabet = 2);

  // Parses a digit string such as "0110"; digits beyond 9 use letters a..z.
  static BitVertex parse(std::string_view digits, int alphabet = 2);

  Word word() const noexcept { return word_; }
  int n() const noexcept { return n_; }
  int alphabet() const noexcept { return alphabet_; }

  // Symbol at 0-based position i.
  int at(int i) const;
  std::string str() const;

  friend bool operator==(const BitVertex&, const BitVertex&) = default;
  friend auto operator<=>(const BitVertex&, const BitVertex&) = default;

 private:
  Word word_;
  int n_;
  int alphabet_;
};

std::size_t hamming_distance(const BitVertex& u, const BitVertex& v);
// Binary words of equal length.
inline int hamming_distance(Word u, Word v) noexcept { return __builtin_popcountll(u ^ v); }

// Renders a binary word as n characters, position 1 first.
std::string word_string(Word w, int n);
Word parse_word(std::string_view bits);

enum class FamilyKind {
  Hypercube,
  HypercubePower,
  Hamming,
  Folded,
  Enhanced,
  Augmented,
  LocallyTwisted,
  Explicit,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Explicit;
  int n = 0;
  int k = 0;  // power for HypercubePower, split index for Enhanced
  int m = 2;  // alphabet for Hamming

  static FamilySpec hypercube(int n) { return {FamilyKind::Hypercube, n, 0, 2}; }
  static FamilySpec power(int n, int k) { return {FamilyKind::HypercubePower, n, k, 2}; }
  static FamilySpec hamming(int m, int n) { return {FamilyKind::Hamming, n, 0, m}; }
  static FamilySpec folded(int n) { return {FamilyKind::Folded, n, 0, 2}; }
  static FamilySpec enhanced(int n, int k) { return {FamilyKind::Enhanced, n, k, 2}; }
  static FamilySpec augmented(int n) { return {FamilyKind::Augmented, n, 0, 2}; }
  static FamilySpec locally_twisted(int n) { return {FamilyKind::LocallyTwisted, n, 0, 2}; }

  int alphabet() const noexcept { return kind == FamilyKind::Hamming ? m : 2; }
  bool binary() const noexcept { return alphabet() == 2; }
  // Throws ParameterOutOfRange when the family constraints fail.
  void validate() const;
  // alphabet^n; throws Overflow beyond 2^63.
  std::uint64_t vertex_count() const;
  // Short name used on the command line ("folded", "enhanced", ...).
  std::string name() const;
  // Conventional label such as "FQ_4" or "Q_{5,2}".
  std::string label() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilyKind parse_family_kind(std::string_view name);
std::string family_kind_name(FamilyKind kind);

class Graph {
 public:
  Graph() = default;
  // Edges may come in any order; duplicates and loops are rejected.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        FamilySpec family = {}, std::vector<Word> origin = {});
  // Neighbor lists must be sorted, symmetric and loop-free (checked).
  static Graph from_csr(std::vector<std::size_t> offsets, std::vector<Vertex> adjacency,
                        FamilySpec family = {}, std::vector<Word> origin = {});

  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  const FamilySpec& family() const noexcept { return family_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_dense_rows() const noexcept { return !rows_.empty(); }
  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  // Label of each vertex in the graph it was derived from (identity unless
  // produced by induced_subgraph).
  Word origin(Vertex v) const { return origin_.empty() ? Word{v} : origin_[v]; }
  const std::vector<Word>& origins() const noexcept { return origin_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void finish();

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::uint64_t> rows_;  // dense bitset rows for small graphs
  std::size_t row_words_ = 0;
  FamilySpec family_;
  std::vector<Word> origin_;
};

struct BuildOptions {
  std::size_t max_vertices = kDefaultMaxVertices;
  // Cap on stored adjacency entries (2 per edge).
  std::size_t max_adjacency = std::size_t{1} << 28;
};

// Default options honouring CUBE_SYM_MAX_VERTICES.
BuildOptions build_options_from_env();

Graph build_family(const FamilySpec& spec, const BuildOptions& options = {});

// Direct evaluation of the family's edge rule on a pair of vertex words. This
// is the pairwise form of build_family and is used by induced-subgraph
// constructions that never materialize the whole graph.
bool family_adjacent(const FamilySpec& spec, Word u, Word v);

// The augmented cube from its two-copy recursion, kept as an independent
// construction path next to the prefix/suffix rule used by build_family.
Graph build_augmented_recursive(int n);

std::size_t graph_distance(const Graph& g, Vertex u, Vertex v);
// All distances from a source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// Induced subgraph on vertex words using the family edge rule only.
Graph induced_subgraph_by_rule(const FamilySpec& spec, std::span<const Word> vertices);
Graph complement(const Graph& g);
// (g, h) is encoded as g * |H| + h, i.e. labels are concatenated.
Graph cartesian_product(const Graph& g, const Graph& h,
                        const BuildOptions& options = {});

// Small named graphs used throughout the tests and the oracle corpus.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace cubesym
