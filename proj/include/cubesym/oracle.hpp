#pragma once

// Brute-force reference computations for small graphs. Nothing here uses the
// refinement search or the group machinery; the point is to have a second,
// obviously correct implementation to compare against.

#include <cstdint>
#include <vector>

#include "cubesym/bitgraph.hpp"
#include "cubesym/symmetry.hpp"

namespace cubesym {

inline constexpr std::size_t kOracleMaxAutVertices = 64;
inline constexpr std::size_t kOracleMaxVertices = 32;

struct OracleResult {
  std::size_t value = 0;
  Witness witness;
  std::uint64_t nodes_explored = 0;
};

// Every automorphism, by backtracking over vertex images with adjacency
// checks against already placed vertices. Lexicographic order.
std::vector<std::vector<Vertex>> enumerate_automorphisms_naive(const Graph& g);

OracleResult oracle_determining_number(const Graph& g);
OracleResult oracle_distinguishing_number(const Graph& g);
// Throws NotTwoDistinguishable when no 2-distinguishing coloring exists.
OracleResult oracle_cost(const Graph& g);

}  // namespace cubesym
