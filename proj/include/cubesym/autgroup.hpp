#pragma once

// Permutation groups of graph automorphisms: structured families, searched
// groups and their stabilizers.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cubesym/automorphism.hpp"
#include "cubesym/bitgraph.hpp"
#include "cubesym/refine.hpp"

namespace cubesym {

class PermGroup;

enum class GroupSource { Structured, Searched, Explicit };

// Algebraic description of a full automorphism group.
struct StructuredForm {
  enum class Kind { Hypercube, Folded, Augmented, LocallyTwisted, Product };
  Kind kind = Kind::Hypercube;
  int n = 0;
  // Product: vertex (g, h) is g * |right| + h.
  std::shared_ptr<const PermGroup> left;
  std::shared_ptr<const PermGroup> right;
};

class PermGroup {
 public:
  PermGroup(GroupSource source, std::uint64_t vertex_count, std::vector<Automorphism> generators, BigInt order);

  GroupSource source() const noexcept { return source_; }
  std::uint64_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Automorphism>& generators() const noexcept { return generators_; }
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const { return order_ == 1; }

  const std::optional<StructuredForm>& structure() const noexcept { return structure_; }
  // Set when the group is exactly Aut(graph, coloring); enables search based
  // stabilizers.
  const std::shared_ptr<const Graph>& graph() const noexcept { return graph_; }
  const std::vector<std::uint32_t>& coloring() const noexcept { return coloring_; }
  bool is_full_colored_aut() const noexcept { return graph_ != nullptr; }

  PermGroup with_structure(StructuredForm form) const;
  PermGroup with_graph(std::shared_ptr<const Graph> g, std::vector<std::uint32_t> coloring = {}) const;

  // True when elements() fits under the enumeration cap.
  bool enumerable() const;
  // All elements as image arrays in lexicographic order (computed once).
  const std::vector<std::vector<Vertex>>& elements() const;

  // Orbit representative (smallest vertex) per vertex, from generators.
  std::vector<Vertex> orbits() const;
  bool vertex_transitive() const;

 private:
  GroupSource source_;
  std::uint64_t vertex_count_;
  std::vector<Automorphism> generators_;
  BigInt order_;
  std::optional<StructuredForm> structure_;
  std::shared_ptr<const Graph> graph_;
  std::vector<std::uint32_t> coloring_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Total image entries (order * |V|) allowed for enumeration.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

// Full automorphism group from the family's algebraic description. Throws
// NoStructuredForm when none is available for these parameters.
PermGroup structured_group(const FamilySpec& spec);
PermGroup structured_group(const Graph& g);
bool has_structured_group(const FamilySpec& spec);

PermGroup search_automorphisms(const Graph& g, const SearchOptions& options = {});
PermGroup search_automorphisms(const Graph& g, std::span<const std::uint32_t> coloring,
                               const SearchOptions& options = {});

// Structured group when the family has one, search otherwise.
PermGroup automorphism_group(const Graph& g, const SearchOptions& options = {});

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});
PermGroup setwise_stabilizer(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});
// Cheaper triviality tests used by the solvers.
bool pointwise_stabilizer_trivial(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});
bool setwise_stabilizer_trivial(const PermGroup& g, std::span<const Vertex> s, const SearchOptions& options = {});
// True iff only the identity of g preserves the coloring.
bool coloring_stabilizer_trivial(const PermGroup& g, std::span<const std::uint32_t> coloring,
                                 const SearchOptions& options = {});

BigInt group_order(const PermGroup& g);

// Structured pointwise stabilizer of a word set for FQ_n (folded = true) or
// Q_n, with no graph involved. Returns the order and generators.
PermGroup cube_pointwise_stabilizer(int n, bool folded, std::span<const Word> s);

}  // namespace cubesym
