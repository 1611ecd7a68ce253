#include <doctest.h>

#include "cubesym/autgroup.hpp"
#include "cubesym/errors.hpp"

using namespace cubesym;

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt searched_order(const FamilySpec& s) { return search_automorphisms(build_family(s)).order(); }

}  // namespace

TEST_SUITE("autgroup") {
  TEST_CASE("structured orders agree with search") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(structured_group(FamilySpec::hypercube(n)).order() == searched_order(FamilySpec::hypercube(n)));
      CHECK(structured_group(FamilySpec::hypercube(n)).order() == (factorial(n) << n));
    }
    for (int n = 4; n <= 7; ++n) {
      CHECK(structured_group(FamilySpec::folded(n)).order() == (factorial(n + 1) << n));
      CHECK(structured_group(FamilySpec::folded(n)).order() == searched_order(FamilySpec::folded(n)));
    }
    for (int n = 4; n <= 7; ++n) {
      CHECK(structured_group(FamilySpec::augmented(n)).order() == BigInt(8) << n);
      CHECK(structured_group(FamilySpec::augmented(n)).order() == searched_order(FamilySpec::augmented(n)));
    }
    for (int n = 4; n <= 7; ++n) {
      CHECK(structured_group(FamilySpec::locally_twisted(n)).order() == BigInt(1) << (n - 1));
      CHECK(structured_group(FamilySpec::locally_twisted(n)).order() ==
            searched_order(FamilySpec::locally_twisted(n)));
    }
  }

  TEST_CASE("small exceptional groups") {
    // FQ_3 = K_{4,4}; LTQ_3 is larger than the translation group.
    CHECK(searched_order(FamilySpec::folded(3)) == 1152);
    // The complement of AQ_3 is two disjoint 4-cycles.
    CHECK(searched_order(FamilySpec::augmented(3)) == 128);
    CHECK(searched_order(FamilySpec::locally_twisted(3)) == 16);
  }

  TEST_CASE("product groups") {
    PermGroup g = automorphism_group(build_family(FamilySpec::power(4, 2)));
    CHECK(g.order() == searched_order(FamilySpec::power(4, 2)));
  }

  TEST_CASE("stabilizers") {
    PermGroup q = structured_group(FamilySpec::hypercube(4));
    std::vector<Vertex> zero{0};
    CHECK(pointwise_stabilizer(q, zero).order() == 24);
    CHECK_FALSE(pointwise_stabilizer_trivial(q, std::vector<Vertex>{0, 0b0011}));
    CHECK(pointwise_stabilizer(q, std::vector<Vertex>{0, 0b0011}).order() == 4);
    CHECK(pointwise_stabilizer_trivial(q, std::vector<Vertex>{0, 0b0011, 0b0101}));
    CHECK(setwise_stabilizer(q, zero).order() == 24);
    std::vector<Vertex> pair{0, 15};
    CHECK(setwise_stabilizer(q, pair).order() == 48);
  }

  TEST_CASE("cube pointwise stabilizer without a graph") {
    std::vector<Word> s{0, 0b1100, 0b1010};
    PermGroup st = cube_pointwise_stabilizer(4, false, s);
    PermGroup ref = pointwise_stabilizer(search_automorphisms(build_family(FamilySpec::hypercube(4))),
                                         std::vector<Vertex>{0, 0b1100, 0b1010});
    CHECK(st.order() == ref.order());
    PermGroup fst = cube_pointwise_stabilizer(5, true, std::vector<Word>{0});
    CHECK(fst.order() == factorial(6));
  }

  TEST_CASE("no structured form") {
    CHECK_FALSE(has_structured_group(FamilySpec::hamming(3, 3)));
    CHECK_THROWS_AS(structured_group(FamilySpec::hamming(3, 3)), Error);
    CHECK(automorphism_group(build_family(FamilySpec::hamming(3, 2))).order() == 72);
  }
}
