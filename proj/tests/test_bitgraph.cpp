#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubesym/bitgraph.hpp"
#include "cubesym/errors.hpp"

using namespace cubesym;

namespace {

std::uint64_t binom(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

bool regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

bool connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == SIZE_MAX; });
}

}  // namespace

TEST_SUITE("bitgraph") {
  TEST_CASE("vertex labels") {
    BitVertex v = BitVertex::parse("0110");
    CHECK(v.word() == 6);
    CHECK(v.at(0) == 0);
    CHECK(v.at(1) == 1);
    CHECK(v.str() == "0110");
    CHECK(BitVertex::parse("120", 3).word() == 1 * 9 + 2 * 3);
    CHECK(BitVertex::parse("120", 3).str() == "120");
    CHECK(hamming_distance(BitVertex::parse("0110"), BitVertex::parse("1100")) == 2);
    CHECK(word_string(5, 4) == "0101");
    CHECK_THROWS_AS(BitVertex::parse("012"), Error);
  }

  TEST_CASE("hypercube counts") {
    for (int n = 1; n <= 8; ++n) {
      Graph g = build_family(FamilySpec::hypercube(n));
      CHECK(g.size() == (1u << n));
      CHECK(g.edge_count() == std::size_t(n) << (n - 1));
      CHECK(regular(g, n));
      for (Vertex u = 0; u < g.size(); u += 3)
        for (Vertex v = 0; v < g.size(); ++v) CHECK(g.adjacent(u, v) == (hamming_distance(Word{u}, Word{v}) == 1));
    }
  }

  TEST_CASE("family regularity and edge counts") {
    for (int n = 2; n <= 7; ++n) {
      const std::size_t V = std::size_t{1} << n;
      Graph fq = build_family(FamilySpec::folded(n));
      CHECK(regular(fq, n == 1 ? 1 : n + 1));
      Graph aq = build_family(FamilySpec::augmented(n));
      CHECK(regular(aq, 2 * n - 1));
      CHECK(aq.edge_count() == V * (2 * n - 1) / 2);
      Graph ltq = build_family(FamilySpec::locally_twisted(n));
      CHECK(regular(ltq, n));
      CHECK(connected(ltq));
      for (int k = 1; k <= n - 1; ++k) {
        Graph e = build_family(FamilySpec::enhanced(n, k));
        CHECK(regular(e, n + 1));
      }
      for (int k = 1; k <= n; ++k) {
        Graph p = build_family(FamilySpec::power(n, k));
        std::uint64_t d = 0;
        for (int i = 1; i <= k; ++i) d += binom(n, i);
        CHECK(regular(p, d));
      }
    }
    for (int m = 2; m <= 5; ++m)
      for (int n = 1; n <= 3; ++n) {
        Graph h = build_family(FamilySpec::hamming(m, n));
        CHECK(regular(h, n * (m - 1)));
      }
  }

  TEST_CASE("pairwise rule matches the built graph") {
    std::vector<FamilySpec> specs = {FamilySpec::hypercube(5),  FamilySpec::folded(5),       FamilySpec::enhanced(5, 3),
                                     FamilySpec::augmented(5), FamilySpec::locally_twisted(5), FamilySpec::power(5, 2),
                                     FamilySpec::hamming(3, 3)};
    for (const auto& s : specs) {
      Graph g = build_family(s);
      for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = 0; v < g.size(); ++v) CHECK(g.adjacent(u, v) == family_adjacent(s, u, v));
    }
  }

  TEST_CASE("augmented cube recursion agrees with the prefix rule") {
    for (int n = 1; n <= 7; ++n) CHECK(build_augmented_recursive(n) == build_family(FamilySpec::augmented(n)));
  }

  TEST_CASE("small identifications") {
    // FQ_2 = K_4, FQ_3 = K_{4,4}, AQ_2 = K_4.
    CHECK(build_family(FamilySpec::folded(2)) == complete_graph(4));
    CHECK(build_family(FamilySpec::augmented(2)) == complete_graph(4));
    Graph fq3 = build_family(FamilySpec::folded(3));
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v)
        CHECK(fq3.adjacent(u, v) == (__builtin_popcount(u) % 2 != __builtin_popcount(v) % 2));
    // Q_{n,1} = FQ_n.
    CHECK(build_family(FamilySpec::enhanced(5, 1)) == build_family(FamilySpec::folded(5)));
    // H(2,n) = Q_n.
    CHECK(build_family(FamilySpec::hamming(2, 4)) == build_family(FamilySpec::hypercube(4)));
  }

  TEST_CASE("distances in Q_n are Hamming distances") {
    Graph g = build_family(FamilySpec::hypercube(6));
    auto d = bfs_distances(g, 0);
    for (Vertex v = 0; v < g.size(); ++v) CHECK(d[v] == std::size_t(__builtin_popcount(v)));
    CHECK(graph_distance(g, 0b101010, 0b010101) == 6);
  }

  TEST_CASE("operations") {
    CHECK(cartesian_product(complete_graph(2), complete_graph(2)) == build_family(FamilySpec::hypercube(2)));
    Graph q3 = build_family(FamilySpec::hypercube(3));
    CHECK(cartesian_product(build_family(FamilySpec::hypercube(2)), complete_graph(2)) == q3);
    Graph comp = complement(q3);
    CHECK(comp.edge_count() == 28 - 12);
    CHECK(complement(comp) == q3);
    std::vector<Vertex> sub{0, 1, 3, 7};
    Graph p = induced_subgraph(q3, sub);
    CHECK(p == path_graph(4));
    CHECK(p.origin(3) == 7);
    std::vector<Word> words{0, 1, 3, 7};
    CHECK(induced_subgraph_by_rule(FamilySpec::hypercube(3), words) == path_graph(4));
  }

  TEST_CASE("validation and guards") {
    CHECK_THROWS_AS(FamilySpec::enhanced(4, 4).validate(), Error);
    CHECK_THROWS_AS(FamilySpec::hamming(1, 3).validate(), Error);
    CHECK_THROWS_AS(FamilySpec::locally_twisted(1).validate(), Error);
    BuildOptions small;
    small.max_vertices = 1024;
    try {
      build_family(FamilySpec::hypercube(11), small);
      FAIL("expected a size guard");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeGuard);
    }
    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Graph(2, loop), Error);
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, dup), Error);
  }

  TEST_CASE("dense rows only for small graphs") {
    CHECK(build_family(FamilySpec::hypercube(10)).has_dense_rows());
    Graph big = build_family(FamilySpec::hypercube(14));
    CHECK_FALSE(big.has_dense_rows());
    CHECK(big.adjacent(0, 1 << 13));
    CHECK_FALSE(big.adjacent(0, 3));
  }
}
