#include <doctest.h>

#include <algorithm>

#include "cubesym/autgroup.hpp"
#include "cubesym/errors.hpp"
#include "cubesym/oracle.hpp"

using namespace cubesym;

namespace {

std::vector<Graph> corpus() {
  return {
      complete_graph(4),
      cycle_graph(6),
      build_family(FamilySpec::hypercube(3)),
      build_family(FamilySpec::hypercube(4)),
      build_family(FamilySpec::folded(3)),
      build_family(FamilySpec::folded(4)),
      build_family(FamilySpec::augmented(3)),
      build_family(FamilySpec::augmented(4)),
      build_family(FamilySpec::locally_twisted(3)),
      build_family(FamilySpec::locally_twisted(4)),
      build_family(FamilySpec::enhanced(4, 2)),
      build_family(FamilySpec::hamming(3, 2)),
      build_family(FamilySpec::power(4, 2)),
  };
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("automorphism counts") {
    CHECK(enumerate_automorphisms_naive(complete_graph(3)).size() == 6);
    CHECK(enumerate_automorphisms_naive(build_family(FamilySpec::hypercube(3))).size() == 48);
    CHECK(enumerate_automorphisms_naive(build_family(FamilySpec::augmented(4))).size() == 128);
  }

  TEST_CASE("naive enumeration matches the group search") {
    for (const Graph& g : corpus()) {
      auto naive = enumerate_automorphisms_naive(g);
      PermGroup grp = search_automorphisms(g);
      REQUIRE(grp.enumerable());
      auto elems = grp.elements();
      std::sort(naive.begin(), naive.end());
      CHECK(naive == elems);
    }
  }

  TEST_CASE("determining numbers") {
    CHECK(oracle_determining_number(complete_graph(4)).value == 3);
    CHECK(oracle_determining_number(build_family(FamilySpec::augmented(3))).value == 4);
    CHECK(oracle_determining_number(build_family(FamilySpec::power(4, 2))).value == 4);
  }

  TEST_CASE("distinguishing numbers") {
    CHECK(oracle_distinguishing_number(complete_graph(2)).value == 2);
    CHECK(oracle_distinguishing_number(build_family(FamilySpec::folded(3))).value == 5);
    // Q_{4,2} = K_2 x K_{4,4}: with two colors each side of K_{4,4} must use
    // all four color pairs, and then the sides can be swapped.
    CHECK(oracle_distinguishing_number(build_family(FamilySpec::enhanced(4, 2))).value == 3);
    CHECK(oracle_distinguishing_number(build_family(FamilySpec::enhanced(4, 3))).value == 2);
  }

  TEST_CASE("costs") {
    CHECK(oracle_cost(build_family(FamilySpec::locally_twisted(4))).value == 1);
    CHECK(oracle_cost(build_family(FamilySpec::augmented(4))).value == 3);
    CHECK(oracle_cost(build_family(FamilySpec::hypercube(4))).value == 5);
    CHECK_THROWS_AS(oracle_cost(complete_graph(4)), Error);
  }

  TEST_CASE("witnesses pass the checkers") {
    for (const Graph& g : corpus()) {
      PermGroup grp = search_automorphisms(g);
      auto det = oracle_determining_number(g);
      CHECK(det.witness.set.size() == det.value);
      CHECK(is_determining_set(grp, det.witness.set));
      CHECK(det.witness.verified_by == VerifiedBy::Oracle);
      auto dist = oracle_distinguishing_number(g);
      CHECK(is_distinguishing(grp, dist.witness.coloring));
    }
  }

  TEST_CASE("size guards") {
    try {
      oracle_determining_number(build_family(FamilySpec::hypercube(6)));
      FAIL("expected a size guard");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeGuard);
    }
    CHECK_THROWS_AS(enumerate_automorphisms_naive(build_family(FamilySpec::hypercube(7))), Error);
  }
}
