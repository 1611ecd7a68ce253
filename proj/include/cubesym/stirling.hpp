#pragma once

// Stirling numbers of the second kind and the Hamming graph formulas built on
// them.

#include <optional>
#include <string>

#include "cubesym/refine.hpp"

namespace cubesym {

// S(r, m) from the recurrence S(r,m) = m S(r-1,m) + S(r-1,m-1).
BigInt stirling2_recurrence(int r, int m);
// S(r, m) from the alternating sum (1/m!) sum_i (-1)^i C(m,i) (m-i)^r, with
// 0^0 = 1.
BigInt stirling2_sum(int r, int m);
// Both evaluations; throws InternalInconsistency if they disagree.
BigInt stirling2(int r, int m);

// Number of pairwise non-isomorphic length-r columns over K_m that carry at
// least m-1 symbols: S(r,m) + S(r,m-1).
BigInt hamming_column_count(int r, int m);
// The same count from the closed form in r (valid for r >= 1).
BigInt hamming_column_count_closed(int r, int m);

// det(H(m,n)) as the least r >= 1 with n <= S(r,m) + S(r,m-1).
int hamming_det_number_stirling(int m, std::uint64_t n);
int hamming_det_number_closed(int m, std::uint64_t n);
// Both of the above, checked against each other.
int hamming_det_number(int m, std::uint64_t n);

struct CostBounds {
  bool applicable = false;
  int lo = 0;
  int hi = 0;
  std::string reason;  // failing condition when not applicable
};

bool hamming_two_distinguishable(int m, std::uint64_t n);
// (det, det + 1) when H(m,n) is 2-distinguishable and 2 <= m-1 <= n.
CostBounds hamming_cost_bounds(int m, std::uint64_t n);

}  // namespace cubesym
