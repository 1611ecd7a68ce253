#pragma once

// Determining number, distinguishing number, cost of 2-distinguishing and
// transitivity, computed against a PermGroup.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubesym/autgroup.hpp"

namespace cubesym {

// Colors are 1..d, one entry per vertex.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t d = 0;

  static Coloring two_class(std::size_t vertex_count, std::span<const Vertex> first_class);
  std::vector<std::size_t> class_sizes() const;
};

enum class WitnessKind { DeterminingSet, DistinguishingColoring, CostClass };
enum class VerifiedBy { Structured, Searched, Oracle };

std::string to_string(WitnessKind kind);
std::string to_string(VerifiedBy by);

struct Witness {
  WitnessKind kind = WitnessKind::DeterminingSet;
  std::vector<Vertex> set;  // DeterminingSet, CostClass
  Coloring coloring;        // DistinguishingColoring
  VerifiedBy verified_by = VerifiedBy::Searched;
};

struct ParamResult {
  std::size_t value = 0;
  Witness witness;
  std::uint64_t candidates = 0;  // subsets or colorings examined
};

struct SolverOptions {
  SearchOptions search;
  std::uint64_t max_candidates = 50'000'000;
};

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool distance_transitive = false;
};

VerifiedBy verified_by_for(const PermGroup& g);

bool is_determining_set(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});
bool is_distinguishing(const PermGroup& g, const Coloring& c, const SearchOptions& options = {});
// A 2-coloring with this class is distinguishing.
bool is_cost_class(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});

// Minimum determining set; the witness is the lexicographically least one.
ParamResult determining_number(const Graph& graph, const PermGroup& g, const SolverOptions& options = {});
ParamResult distinguishing_number(const Graph& graph, const PermGroup& g, const SolverOptions& options = {});
// Throws NotTwoDistinguishable when no 2-distinguishing coloring exists.
ParamResult cost_2dist(const Graph& graph, const PermGroup& g, const SolverOptions& options = {});

// Smallest k-set (k >= min_size) with trivial setwise stabilizer, searched in
// lexicographic order. Returns an empty optional-like result (value 0) when
// no set up to max_size exists.
ParamResult min_setwise_trivial(const PermGroup& g, std::size_t min_size, std::size_t max_size,
                                const SolverOptions& options);

bool is_asymmetric(const Graph& g, const SearchOptions& options = {});

TransitivityReport transitivity_report(const Graph& graph, const PermGroup& g, const SearchOptions& options = {});

}  // namespace cubesym
