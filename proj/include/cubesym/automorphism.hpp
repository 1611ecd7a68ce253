#pragma once

// Vertex bijections of the hypercube families.
//
// Structured forms act on binary words (position 0 is the leftmost position).
// Composition convention throughout: compose(s, t)(v) = s(t(v)).

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "cubesym/bitgraph.hpp"

namespace cubesym {

class Automorphism;

struct ExplicitPerm {
  std::vector<Vertex> image;
};

// v -> c + pi(v) where pi(v) has v[perm[k]] at position k.
struct HypercubeAff {
  Word c = 0;
  std::vector<int> perm;
};

// v -> c + phi(v), phi the linear extension of a permutation of the n + 1
// symbols e_1..e_n, 1. symbols[j] is the image of symbol j, where j < n is
// the unit vector at position j and j = n is the all-ones vector.
struct FoldedAff {
  Word c = 0;
  std::vector<int> symbols;
};

// v -> c + phi_base(v), phi_1..phi_8 the automorphisms of AQ_n fixing 0.
struct AugmentedAff {
  Word c = 0;
  int n = 0;
  int base = 1;
};

// Adds a word of n - 1 bits to the first n - 1 positions.
struct LtqTranslation {
  Word c = 0;
  int n = 0;
};

// (g, h) -> (left(g), right(h)) on the label g * |H| + h.
struct ProductAff {
  std::shared_ptr<const Automorphism> left;
  std::shared_ptr<const Automorphism> right;
};

class Automorphism {
 public:
  using Form = std::variant<ExplicitPerm, HypercubeAff, FoldedAff, AugmentedAff, LtqTranslation, ProductAff>;

  explicit Automorphism(Form form);
  static Automorphism identity(std::size_t vertex_count);

  const Form& form() const noexcept { return form_; }
  std::uint64_t vertex_count() const noexcept { return vertex_count_; }

  Word apply(Word v) const;
  // Throws DimensionMismatch when v has the wrong shape.
  BitVertex apply(const BitVertex& v) const;

  // Image array over all vertices; SizeGuard beyond 2^26 vertices.
  std::vector<Vertex> to_perm() const;
  bool is_identity() const;

 private:
  Form form_;
  std::uint64_t vertex_count_ = 0;
  int bits_ = -1;  // word length for binary forms, -1 for explicit ones
};

Automorphism compose(const Automorphism& s, const Automorphism& t);
Automorphism inverse(const Automorphism& a);

// True iff map is a bijection of V(G) preserving adjacency and non-adjacency.
bool is_automorphism(const Graph& g, std::span<const Vertex> map);
bool is_automorphism(const Graph& g, const Automorphism& a);

// Permutation image arrays.
std::vector<Vertex> compose_perm(std::span<const Vertex> s, std::span<const Vertex> t);
std::vector<Vertex> invert_perm(std::span<const Vertex> p);
std::vector<Vertex> identity_perm(std::size_t n);

// Linear extension of a permutation of {e_1..e_n, 1} (symbols as in FoldedAff).
Automorphism fq_phi_extend(std::span<const int> symbols);
// phi_idx of AQ_n, idx in 1..8, n >= 4.
Automorphism aq_base(int n, int idx);
Word aq_base_apply(int n, int idx, Word v);

}  // namespace cubesym
