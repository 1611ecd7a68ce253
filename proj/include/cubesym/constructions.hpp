#pragma once

// Explicit witness constructions for the hypercube families and the formulas
// they realize. Words use the bitgraph convention: position 1 is the most
// significant bit.

#include <optional>
#include <span>
#include <vector>

#include "cubesym/bitgraph.hpp"
#include "cubesym/symmetry.hpp"

namespace cubesym {

// Rows are the vertices of a set, columns their coordinates in the Cartesian
// factorization K_alphabet^n.
struct CharMatrix {
  std::vector<std::vector<int>> entries;
  int alphabet = 2;
  int n = 0;

  std::size_t rows() const { return entries.size(); }
  std::vector<int> column(int j) const;
};

CharMatrix characteristic_matrix(std::span<const BitVertex> s);
CharMatrix characteristic_matrix(std::span<const Word> s, int n);

// Equal up to an automorphism of the factor: for K_2 equal or complementary,
// for K_m the same partition of row indices by symbol.
bool columns_isomorphic(std::span<const int> a, std::span<const int> b, int alphabet);
bool char_matrix_is_determining(const CharMatrix& x);

// Binary matrices only: componentwise sum mod 2 of all columns.
std::vector<int> column_sum(const CharMatrix& x);
// Sufficient condition for a determining set of FQ_n read off X(S): a zero
// row, distinct nonzero columns, and the parity rule on the column sum.
bool folded_sum_condition(const CharMatrix& x);

int ceil_lg(std::uint64_t x);
int hypercube_det_number(int n);
int fq_det_number(int n);
bool fq_exceptional(int n);
int enhanced_det_number(int n, int k);

// A built witness and how it was obtained: Structured for the explicit
// constructions, Oracle for small cases found by brute force.
struct Construction {
  std::vector<Word> words;
  VerifiedBy source = VerifiedBy::Structured;
};

// V_0 = 0 and V_i alternating blocks of 2^(i-1) ones and zeros, truncated to
// n positions, i = 1..ceil(lg n).
std::vector<Word> hypercube_det_set(int n);

struct PowerWitnesses {
  std::vector<Word> det_set;     // U_0..U_{n-1}, U_i = 1^i 0^(n-i)
  std::vector<Word> dist_class;  // det_set plus w = 0 1^(n-1); brute force for n = 4
};
PowerWitnesses q2_witnesses(int n);

Construction fq_det_set(int n);
// The asymmetric trees drawn for 4 <= n <= 8, listed as drawn.
std::vector<Word> fq_figure_set(int n);
Construction fq_dist_class(int n);
// Path-plus-tree size bound 1 + (r-1) n/2 + n/4 + 3 scaled by 4.
std::uint64_t fq_dist_class_bound_x4(int n);

Construction aq_det_witness(int n);
Construction aq_cost_class(int n);

struct LtqWitnesses {
  std::vector<Word> det_set;
  std::vector<Word> dist_class;
  VerifiedBy source = VerifiedBy::Structured;
};
LtqWitnesses ltq_witnesses(int n);

// Checks used by the constructions and the verify command. Structured
// groups are used where they exist, search otherwise.
bool verify_determining(const FamilySpec& spec, std::span<const Word> s, const SearchOptions& options = {});
bool verify_cost_class(const FamilySpec& spec, std::span<const Word> s, const SearchOptions& options = {});
bool induced_asymmetric(const FamilySpec& spec, std::span<const Word> s, const SearchOptions& options = {});

}  // namespace cubesym
