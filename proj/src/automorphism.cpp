#include "cubesym/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

constexpr std::size_t kPermCap = std::size_t{1} << 26;

Word low_mask(int bits) { return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1); }

std::uint64_t binary_count(int bits) { return bits >= 64 ? 0 : (std::uint64_t{1} << bits); }

bool is_permutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Word reverse_bits(Word a, int len) {
  Word r = 0;
  for (int i = 0; i < len; ++i) r |= ((a >> i) & 1) << (len - 1 - i);
  return r;
}

// Transform applied to the middle block A of a vertex 1A01 etc.
enum Tr { kA, kAbar, kAR, kARbar };

struct Cell {
  int first;
  Tr tr;
  int tail;  // last two bits as a number
};

// Rows: first bit * 4 + last two bits, i.e. 0A00, 0A01, 0A10, 0A11, 1A00,
// 1A01, 1A10, 1A11. The phi_2 entry for 1A10 is 1Ā01; 1Ā10 would collide
// with the image of 1A01 and break bijectivity.
constexpr Cell kAqTable[8][8] = {
    // phi_1
    {{0, kA, 0}, {0, kA, 1}, {0, kA, 2}, {0, kA, 3}, {1, kA, 0}, {1, kA, 1}, {1, kA, 2}, {1, kA, 3}},
    // phi_2
    {{0, kA, 0}, {0, kA, 1}, {0, kA, 2}, {0, kA, 3}, {1, kAbar, 3}, {1, kAbar, 2}, {1, kAbar, 1}, {1, kAbar, 0}},
    // phi_3
    {{0, kA, 0}, {0, kA, 2}, {0, kA, 1}, {0, kA, 3}, {1, kA, 0}, {1, kA, 2}, {1, kA, 1}, {1, kA, 3}},
    // phi_4
    {{0, kA, 0}, {0, kA, 2}, {0, kA, 1}, {0, kA, 3}, {1, kAbar, 3}, {1, kAbar, 1}, {1, kAbar, 2}, {1, kAbar, 0}},
    // phi_5
    {{0, kAR, 0}, {1, kARbar, 3}, {1, kAR, 0}, {0, kARbar, 3}, {0, kAR, 2}, {1, kARbar, 1}, {1, kAR, 2}, {0, kARbar, 1}},
    // phi_6
    {{0, kAR, 0}, {1, kARbar, 3}, {1, kAR, 0}, {0, kARbar, 3}, {0, kAR, 1}, {1, kARbar, 2}, {1, kAR, 1}, {0, kARbar, 2}},
    // phi_7
    {{0, kAR, 0}, {1, kAR, 0}, {1, kARbar, 3}, {0, kARbar, 3}, {0, kAR, 2}, {1, kAR, 2}, {1, kARbar, 1}, {0, kARbar, 1}},
    // phi_8
    {{0, kAR, 0}, {1, kAR, 0}, {1, kARbar, 3}, {0, kARbar, 3}, {0, kAR, 1}, {1, kAR, 1}, {1, kARbar, 2}, {0, kARbar, 2}},
};

Word apply_hypercube(const HypercubeAff& h, Word v) {
  const int n = static_cast<int>(h.perm.size());
  Word out = 0;
  for (int k = 0; k < n; ++k) out |= ((v >> (n - 1 - h.perm[k])) & 1) << (n - 1 - k);
  return out ^ h.c;
}

Word apply_folded(const FoldedAff& f, Word v) {
  const int n = static_cast<int>(f.symbols.size()) - 1;
  Word out = 0;
  bool flip = false;
  for (int j = 0; j < n; ++j) {
    if (!((v >> (n - 1 - j)) & 1)) continue;
    const int target = f.symbols[j];
    if (target == n)
      flip = true;
    else
      out |= Word{1} << (n - 1 - target);
  }
  if (flip) out ^= low_mask(n);
  return out ^ f.c;
}

int form_bits(const Automorphism::Form& form) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, HypercubeAff>) return static_cast<int>(f.perm.size());
        else if constexpr (std::is_same_v<T, FoldedAff>) return static_cast<int>(f.symbols.size()) - 1;
        else if constexpr (std::is_same_v<T, AugmentedAff> || std::is_same_v<T, LtqTranslation>) return f.n;
        else return -1;
      },
      form);
}

}  // namespace

Word aq_base_apply(int n, int idx, Word v) {
  if (idx < 1 || idx > 8) throw Error(ErrorKind::ParameterOutOfRange, "augmented base index must be 1..8");
  const int a_len = n - 3;
  const int first = static_cast<int>((v >> (n - 1)) & 1);
  const Word a = (v >> 2) & low_mask(a_len);
  const int tail = static_cast<int>(v & 3);
  const Cell& cell = kAqTable[idx - 1][first * 4 + tail];
  Word b = a;
  switch (cell.tr) {
    case kA: break;
    case kAbar: b = a ^ low_mask(a_len); break;
    case kAR: b = reverse_bits(a, a_len); break;
    case kARbar: b = reverse_bits(a, a_len) ^ low_mask(a_len); break;
  }
  return (Word(cell.first) << (n - 1)) | (b << 2) | Word(cell.tail);
}

Automorphism::Automorphism(Form form) : form_(std::move(form)) {
  bits_ = form_bits(form_);
  std::visit(
      [this](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ExplicitPerm>) {
          vertex_count_ = f.image.size();
          std::vector<char> seen(f.image.size(), 0);
          for (Vertex x : f.image) {
            if (x >= f.image.size() || seen[x])
              throw Error(ErrorKind::InternalInconsistency, "image array is not a permutation");
            seen[x] = 1;
          }
        } else if constexpr (std::is_same_v<T, ProductAff>) {
          if (!f.left || !f.right) throw Error(ErrorKind::InternalInconsistency, "product factor missing");
          vertex_count_ = f.left->vertex_count() * f.right->vertex_count();
        } else {
          if (bits_ < 0 || bits_ > 63) throw Error(ErrorKind::ParameterOutOfRange, "word length out of range");
          if constexpr (std::is_same_v<T, HypercubeAff>) {
            if (!is_permutation(f.perm)) throw Error(ErrorKind::InternalInconsistency, "bad position permutation");
          } else if constexpr (std::is_same_v<T, FoldedAff>) {
            if (!is_permutation(f.symbols)) throw Error(ErrorKind::InternalInconsistency, "bad symbol permutation");
          } else if constexpr (std::is_same_v<T, AugmentedAff>) {
            if (f.n < 3) throw Error(ErrorKind::ParameterOutOfRange, "augmented maps need n >= 3");
            if (f.base < 1 || f.base > 8) throw Error(ErrorKind::ParameterOutOfRange, "augmented base index must be 1..8");
          } else if constexpr (std::is_same_v<T, LtqTranslation>) {
            if (f.n < 2 || (f.c >> (f.n - 1)) != 0)
              throw Error(ErrorKind::ParameterOutOfRange, "twisted translation needs n - 1 bits");
          }
          if ((f.c & ~low_mask(bits_)) != 0) throw Error(ErrorKind::ParameterOutOfRange, "translation wider than n");
          vertex_count_ = binary_count(bits_);
        }
      },
      form_);
}

Automorphism Automorphism::identity(std::size_t vertex_count) {
  return Automorphism(ExplicitPerm{identity_perm(vertex_count)});
}

Word Automorphism::apply(Word v) const {
  if (v >= vertex_count_) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  return std::visit(
      [v](const auto& f) -> Word {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ExplicitPerm>) return f.image[v];
        else if constexpr (std::is_same_v<T, HypercubeAff>) return apply_hypercube(f, v);
        else if constexpr (std::is_same_v<T, FoldedAff>) return apply_folded(f, v);
        else if constexpr (std::is_same_v<T, AugmentedAff>) return aq_base_apply(f.n, f.base, v) ^ f.c;
        else if constexpr (std::is_same_v<T, LtqTranslation>) return v ^ (f.c << 1);
        else {
          const Word h = f.right->vertex_count();
          return f.left->apply(v / h) * h + f.right->apply(v % h);
        }
      },
      form_);
}

BitVertex Automorphism::apply(const BitVertex& v) const {
  if (bits_ >= 0 ? (v.n() != bits_ || v.alphabet() != 2) : false)
    throw Error(ErrorKind::DimensionMismatch, "vertex has " + std::to_string(v.n()) + " positions, map acts on " +
                                                  std::to_string(bits_));
  return BitVertex(apply(v.word()), v.n(), v.alphabet());
}

std::vector<Vertex> Automorphism::to_perm() const {
  if (vertex_count_ == 0 || vertex_count_ > kPermCap)
    throw Error(ErrorKind::SizeGuard, "automorphism too large to tabulate");
  if (const auto* e = std::get_if<ExplicitPerm>(&form_)) return e->image;
  std::vector<Vertex> out(vertex_count_);
  for (Word v = 0; v < vertex_count_; ++v) out[v] = static_cast<Vertex>(apply(v));
  return out;
}

bool Automorphism::is_identity() const {
  return std::visit(
      [this](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, HypercubeAff>) {
          for (std::size_t k = 0; k < f.perm.size(); ++k)
            if (f.perm[k] != static_cast<int>(k)) return false;
          return f.c == 0;
        } else if constexpr (std::is_same_v<T, LtqTranslation>) {
          return f.c == 0;
        } else {
          for (Word v = 0; v < vertex_count_; ++v)
            if (apply(v) != v) return false;
          return true;
        }
      },
      form_);
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
  if (s.vertex_count() != t.vertex_count())
    throw Error(ErrorKind::DimensionMismatch, "composing maps on different vertex sets");
  const auto* hs = std::get_if<HypercubeAff>(&s.form());
  const auto* ht = std::get_if<HypercubeAff>(&t.form());
  if (hs && ht) {
    // (c + pi)(d + psi) = (c + pi(d)) + pi psi
    HypercubeAff r;
    r.perm.resize(hs->perm.size());
    for (std::size_t k = 0; k < r.perm.size(); ++k) r.perm[k] = ht->perm[hs->perm[k]];
    HypercubeAff lin{0, hs->perm};
    r.c = apply_hypercube(lin, ht->c) ^ hs->c;
    return Automorphism(std::move(r));
  }
  const auto* ls = std::get_if<LtqTranslation>(&s.form());
  const auto* lt = std::get_if<LtqTranslation>(&t.form());
  if (ls && lt) return Automorphism(LtqTranslation{ls->c ^ lt->c, ls->n});
  const auto* ps = std::get_if<ProductAff>(&s.form());
  const auto* pt = std::get_if<ProductAff>(&t.form());
  if (ps && pt && ps->right->vertex_count() == pt->right->vertex_count())
    return Automorphism(ProductAff{std::make_shared<const Automorphism>(compose(*ps->left, *pt->left)),
                                   std::make_shared<const Automorphism>(compose(*ps->right, *pt->right))});
  const auto a = s.to_perm(), b = t.to_perm();
  return Automorphism(ExplicitPerm{compose_perm(a, b)});
}

Automorphism inverse(const Automorphism& a) {
  if (const auto* h = std::get_if<HypercubeAff>(&a.form())) {
    // v = pi^-1(w + c)
    HypercubeAff r;
    r.perm.resize(h->perm.size());
    for (std::size_t k = 0; k < r.perm.size(); ++k) r.perm[h->perm[k]] = static_cast<int>(k);
    r.c = apply_hypercube(HypercubeAff{0, r.perm}, h->c);
    return Automorphism(std::move(r));
  }
  if (std::holds_alternative<LtqTranslation>(a.form())) return a;
  if (const auto* p = std::get_if<ProductAff>(&a.form()))
    return Automorphism(ProductAff{std::make_shared<const Automorphism>(inverse(*p->left)),
                                   std::make_shared<const Automorphism>(inverse(*p->right))});
  return Automorphism(ExplicitPerm{invert_perm(a.to_perm())});
}

bool is_automorphism(const Graph& g, std::span<const Vertex> map) {
  const std::size_t V = g.size();
  if (map.size() != V) return false;
  std::vector<char> seen(V, 0);
  for (Vertex x : map) {
    if (x >= V || seen[x]) return false;
    seen[x] = 1;
  }
  // A bijection mapping every edge to an edge preserves non-edges too since
  // the edge count is finite and equal on both sides.
  for (Vertex u = 0; u < V; ++u) {
    if (g.degree(u) != g.degree(map[u])) return false;
    for (Vertex w : g.neighbors(u))
      if (!g.adjacent(map[u], map[w])) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const Automorphism& a) {
  if (a.vertex_count() != g.size()) return false;
  return is_automorphism(g, a.to_perm());
}

std::vector<Vertex> compose_perm(std::span<const Vertex> s, std::span<const Vertex> t) {
  if (s.size() != t.size()) throw Error(ErrorKind::DimensionMismatch, "permutation lengths differ");
  std::vector<Vertex> out(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) out[v] = s[t[v]];
  return out;
}

std::vector<Vertex> invert_perm(std::span<const Vertex> p) {
  std::vector<Vertex> out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<Vertex>(v);
  return out;
}

std::vector<Vertex> identity_perm(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

Automorphism fq_phi_extend(std::span<const int> symbols) {
  return Automorphism(FoldedAff{0, std::vector<int>(symbols.begin(), symbols.end())});
}

Automorphism aq_base(int n, int idx) {
  if (n < 4) throw Error(ErrorKind::ParameterOutOfRange, "augmented base maps need n >= 4");
  return Automorphism(AugmentedAff{0, n, idx});
}

}  // namespace cubesym
