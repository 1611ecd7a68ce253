#pragma once

// Automorphism search by equitable partition refinement and backtracking.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubesym/bitgraph.hpp"

namespace cubesym {

using BigInt = boost::multiprecision::cpp_int;

struct SearchOptions {
  std::size_t max_vertices = 4096;
  std::uint64_t max_nodes = 100'000'000;
};

enum class SearchMode {
  Full,           // generators and exact order of Aut(G, coloring)
  AnyNontrivial,  // stop at the first nontrivial automorphism
};

struct SearchOutcome {
  std::vector<std::vector<Vertex>> generators;  // sorted lexicographically
  BigInt order = 1;                             // exact in Full mode
  bool trivial = true;
  std::uint64_t nodes = 0;
};

// Automorphisms of g preserving the vertex coloring (empty = uniform).
// Throws SearchBudgetExceeded past either option limit.
SearchOutcome search_group(const Graph& g, std::span<const std::uint32_t> coloring, SearchMode mode,
                           const SearchOptions& options = {});

// Orbits of the group generated by gens, as a representative per vertex
// (the smallest vertex of its orbit).
std::vector<Vertex> orbit_representatives(std::size_t n, std::span<const std::vector<Vertex>> gens);

}  // namespace cubesym
