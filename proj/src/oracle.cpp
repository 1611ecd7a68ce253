#include "cubesym/oracle.hpp"

#include <algorithm>
#include <string>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

void guard(const Graph& g, std::size_t cap) {
  if (g.size() > cap)
    throw Error(ErrorKind::SizeGuard,
                "oracle limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.size()));
}

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.size(), std::vector<char>(g.size(), 0));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.neighbors(u)) a[u][v] = 1;
  return a;
}

struct Naive {
  const std::vector<std::vector<char>>& adj;
  std::vector<std::size_t> deg;
  std::vector<Vertex> image;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> found;
  std::uint64_t nodes = 0;

  void extend(Vertex v) {
    const std::size_t n = adj.size();
    if (v == n) {
      found.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || deg[w] != deg[v]) continue;
      ++nodes;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[image[u]][w];
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      extend(v + 1);
      used[w] = 0;
    }
  }
};

// Nontrivial automorphisms only.
std::vector<std::vector<Vertex>> nontrivial(const Graph& g) {
  auto all = enumerate_automorphisms_naive(g);
  std::vector<std::vector<Vertex>> out;
  for (auto& p : all) {
    bool id = true;
    for (Vertex v = 0; v < p.size() && id; ++v) id = p[v] == v;
    if (!id) out.push_back(std::move(p));
  }
  return out;
}

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

Mask image_mask(const std::vector<Vertex>& p, Mask s) {
  Mask out = 0;
  for (Vertex v = 0; v < p.size(); ++v)
    if (s & bit(v)) out |= bit(p[v]);
  return out;
}

std::vector<Vertex> members(Mask s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 64; ++v)
    if (s & bit(v)) out.push_back(v);
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F f) {
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    Mask s = 0;
    for (Vertex v : c) s |= bit(v);
    if (f(s)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_automorphisms_naive(const Graph& g) {
  guard(g, kOracleMaxAutVertices);
  const auto adj = adjacency_matrix(g);
  Naive s{adj, {}, std::vector<Vertex>(g.size()), std::vector<char>(g.size(), 0), {}, 0};
  for (Vertex v = 0; v < g.size(); ++v) s.deg.push_back(g.degree(v));
  s.extend(0);
  return s.found;
}

OracleResult oracle_determining_number(const Graph& g) {
  guard(g, kOracleMaxVertices);
  const auto autos = nontrivial(g);
  std::vector<Mask> fixed;
  for (const auto& p : autos) {
    Mask f = 0;
    for (Vertex v = 0; v < p.size(); ++v)
      if (p[v] == v) f |= bit(v);
    fixed.push_back(f);
  }
  OracleResult r;
  r.witness.kind = WitnessKind::DeterminingSet;
  r.witness.verified_by = VerifiedBy::Oracle;
  for (std::size_t k = 0; k <= g.size(); ++k) {
    Mask hit = 0;
    const bool found = for_each_subset(g.size(), k, [&](Mask s) {
      ++r.nodes_explored;
      for (Mask f : fixed)
        if ((s & f) == s) return false;
      hit = s;
      return true;
    });
    if (found) {
      r.value = k;
      r.witness.set = members(hit);
      return r;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "the full vertex set is always determining");
}

OracleResult oracle_distinguishing_number(const Graph& g) {
  guard(g, kOracleMaxVertices);
  const auto autos = nontrivial(g);
  const std::size_t n = g.size();
  OracleResult r;
  r.witness.kind = WitnessKind::DistinguishingColoring;
  r.witness.verified_by = VerifiedBy::Oracle;
  auto distinguishing = [&](const std::vector<std::uint32_t>& c) {
    for (const auto& p : autos) {
      bool preserved = true;
      for (Vertex v = 0; v < n && preserved; ++v) preserved = c[p[v]] == c[v];
      if (preserved) return false;
    }
    return true;
  };
  for (std::uint32_t d = 1; d <= std::max<std::size_t>(n, 1); ++d) {
    // Renaming colors keeps a coloring distinguishing, so vertex 0 gets color 1.
    std::vector<std::uint32_t> c(n, 1);
    while (true) {
      ++r.nodes_explored;
      if (distinguishing(c)) {
        r.value = d;
        r.witness.coloring.color = c;
        r.witness.coloring.d = d;
        return r;
      }
      std::size_t i = n;
      while (i > 1 && c[i - 1] == d) c[--i] = 1;
      if (i <= 1) break;
      ++c[i - 1];
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "n colors always distinguish");
}

OracleResult oracle_cost(const Graph& g) {
  guard(g, kOracleMaxVertices);
  const auto autos = nontrivial(g);
  if (autos.empty()) throw Error(ErrorKind::NotTwoDistinguishable, "the graph is asymmetric");
  OracleResult r;
  r.witness.kind = WitnessKind::CostClass;
  r.witness.verified_by = VerifiedBy::Oracle;
  for (std::size_t k = 1; k <= g.size() / 2; ++k) {
    Mask hit = 0;
    const bool found = for_each_subset(g.size(), k, [&](Mask s) {
      ++r.nodes_explored;
      for (const auto& p : autos)
        if (image_mask(p, s) == s) return false;
      hit = s;
      return true;
    });
    if (found) {
      r.value = k;
      r.witness.set = members(hit);
      return r;
    }
  }
  throw Error(ErrorKind::NotTwoDistinguishable, "no 2-coloring is distinguishing");
}

}  // namespace cubesym
