#include <doctest.h>

#include <random>

#include "cubesym/autgroup.hpp"
#include "cubesym/constructions.hpp"
#include "cubesym/symmetry.hpp"

using namespace cubesym;

namespace {

// Every subset of size 1..max_size, as ascending vertex lists.
template <class F>
void for_subsets(std::size_t n, std::size_t max_size, F&& f) {
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex start) -> void {
    if (!cur.empty()) f(cur);
    if (cur.size() == max_size) return;
    for (Vertex v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("characteristic matrix criterion agrees with stabilizers") {
    struct Case {
      FamilySpec spec;
      std::size_t max_size;
    };
    for (const Case& c : {Case{FamilySpec::hypercube(3), 4}, Case{FamilySpec::hypercube(4), 4},
                          Case{FamilySpec::hamming(3, 2), 4}}) {
      const Graph g = build_family(c.spec);
      const PermGroup grp = search_automorphisms(g);
      std::size_t checked = 0, mismatches = 0;
      for_subsets(g.size(), c.max_size, [&](const std::vector<Vertex>& s) {
        std::vector<BitVertex> bv;
        for (Vertex v : s) bv.emplace_back(v, c.spec.n, c.spec.alphabet());
        const bool by_matrix = char_matrix_is_determining(characteristic_matrix(bv));
        const bool by_group = pointwise_stabilizer_trivial(grp, s);
        ++checked;
        if (by_matrix != by_group) ++mismatches;
      });
      CHECK(checked > 0);
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("complement identities") {
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 5 + rng() % 6;
      std::vector<Edge> e;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng() % 2) e.emplace_back(u, v);
      Graph g(n, e);
      Graph c = complement(g);
      CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
      CHECK(complement(c) == g);
      // Aut(G) = Aut(complement of G).
      CHECK(search_automorphisms(g).order() == search_automorphisms(c).order());
      auto sg = automorphism_group(g);
      auto sc = automorphism_group(c);
      CHECK(determining_number(g, sg).value == determining_number(c, sc).value);
      CHECK(distinguishing_number(g, sg).value == distinguishing_number(c, sc).value);
    }
  }

  TEST_CASE("determining number bounds the distinguishing number") {
    // dist(G) <= det(G) + 1.
    for (auto spec : {FamilySpec::hypercube(3), FamilySpec::folded(4), FamilySpec::augmented(4),
                      FamilySpec::locally_twisted(4), FamilySpec::enhanced(5, 2), FamilySpec::hamming(3, 2)}) {
      Graph g = build_family(spec);
      PermGroup grp = automorphism_group(g);
      CHECK(distinguishing_number(g, grp).value <= determining_number(g, grp).value + 1);
    }
  }

  TEST_CASE("families are regular and vertex-transitive") {
    for (auto spec : {FamilySpec::hypercube(5), FamilySpec::folded(5), FamilySpec::augmented(5),
                      FamilySpec::enhanced(5, 3), FamilySpec::hamming(3, 3),
                      FamilySpec::power(4, 2)}) {
      Graph g = build_family(spec);
      for (Vertex v = 1; v < g.size(); ++v) CHECK(g.degree(v) == g.degree(0));
      CHECK(automorphism_group(g).vertex_transitive());
    }
  }

  TEST_CASE("cost class sizes lie between det and the vertex count") {
    for (auto spec : {FamilySpec::hypercube(4), FamilySpec::folded(4), FamilySpec::augmented(4),
                      FamilySpec::locally_twisted(4)}) {
      Graph g = build_family(spec);
      PermGroup grp = automorphism_group(g);
      const auto det = determining_number(g, grp).value;
      const auto cost = cost_2dist(g, grp).value;
      CHECK(cost >= det);
      CHECK(cost <= g.size() / 2);
    }
  }
}
