#include "cubesym/refine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>

#include "cubesym/automorphism.hpp"
#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (x ^ (x >> 31));
}

// Ordered partition: cells are contiguous ranges of lab, identified by their
// start position.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> cell_of;  // vertex -> start of its cell
  std::vector<std::uint32_t> end_of;   // start -> one past the end
  std::uint32_t cells = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(lab.size()); }
  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), count_(g.size(), 0), queued_(g.size(), 0) {}

  // Splits cells until the partition is equitable; returns the trace hash.
  std::uint64_t refine(Partition& p, std::deque<std::uint32_t> queue) {
    std::uint64_t h = 0x51ed270b27a1c3d5ULL;
    for (auto s : queue) queued_[s] = 1;
    std::vector<Vertex> touched;
    std::vector<std::uint32_t> touched_cells;
    std::vector<std::pair<std::uint32_t, Vertex>> keyed;
    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      touched.clear();
      for (std::uint32_t i = w; i < p.end_of[w]; ++i)
        for (Vertex u : g_.neighbors(p.lab[i]))
          if (count_[u]++ == 0) touched.push_back(u);
      touched_cells.clear();
      for (Vertex u : touched) touched_cells.push_back(p.cell_of[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      h = mix(h, w);
      h = mix(h, touched.size());
      for (std::uint32_t s : touched_cells) {
        const std::uint32_t e = p.end_of[s];
        if (e - s == 1) continue;
        keyed.clear();
        bool uniform = true;
        for (std::uint32_t i = s; i < e; ++i) {
          keyed.emplace_back(count_[p.lab[i]], p.lab[i]);
          uniform = uniform && keyed.back().first == keyed.front().first;
        }
        if (uniform) {
          h = mix(h, (std::uint64_t{s} << 32) | keyed.front().first);
          continue;
        }
        std::sort(keyed.begin(), keyed.end());
        std::uint32_t frag = s;
        for (std::uint32_t i = s; i < e; ++i) {
          p.lab[i] = keyed[i - s].second;
          if (i > s && keyed[i - s].first != keyed[i - s - 1].first) {
            close_fragment(p, frag, i, queue);
            h = mix(h, (std::uint64_t{frag} << 32) | keyed[frag - s].first);
            h = mix(h, i - frag);
            frag = i;
          }
        }
        close_fragment(p, frag, e, queue);
        h = mix(h, (std::uint64_t{frag} << 32) | keyed[frag - s].first);
        h = mix(h, e - frag);
        --p.cells;  // the original cell was counted once already
      }
      for (Vertex u : touched) count_[u] = 0;
    }
    for (auto s : queue) queued_[s] = 0;
    return mix(h, p.cells);
  }

  std::uint64_t individualize(Partition& p, Vertex v) {
    const std::uint32_t s = p.cell_of[v];
    const std::uint32_t e = p.end_of[s];
    const auto at = static_cast<std::uint32_t>(std::find(p.lab.begin() + s, p.lab.begin() + e, v) - p.lab.begin());
    std::swap(p.lab[s], p.lab[at]);
    p.end_of[s] = s + 1;
    p.end_of[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell_of[p.lab[i]] = s + 1;
    ++p.cells;
    return mix(refine(p, {s}), s);
  }

 private:
  void close_fragment(Partition& p, std::uint32_t s, std::uint32_t e, std::deque<std::uint32_t>& queue) {
    p.end_of[s] = e;
    for (std::uint32_t i = s; i < e; ++i) p.cell_of[p.lab[i]] = s;
    ++p.cells;
    if (!queued_[s]) {
      queued_[s] = 1;
      queue.push_back(s);
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> queued_;
};

struct Level {
  Partition before;  // equitable partition in which the target is chosen
  std::uint32_t target_start = 0;
  std::uint32_t target_size = 0;
  Vertex base = 0;
  std::uint64_t trace_after = 0;
  std::uint32_t cells_after = 0;
};

// First smallest non-singleton cell.
std::pair<std::uint32_t, std::uint32_t> pick_target(const Partition& p) {
  std::uint32_t best = 0, best_size = 0;
  for (std::uint32_t s = 0; s < p.size(); s = p.end_of[s]) {
    const std::uint32_t sz = p.end_of[s] - s;
    if (sz > 1 && (best_size == 0 || sz < best_size)) {
      best = s;
      best_size = sz;
    }
  }
  return {best, best_size};
}

class Search {
 public:
  Search(const Graph& g, std::span<const std::uint32_t> coloring, const SearchOptions& options)
      : g_(g), refiner_(g), options_(options) {
    const std::uint32_t V = static_cast<std::uint32_t>(g.size());
    Partition p;
    p.lab.resize(V);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    if (!coloring.empty()) {
      std::stable_sort(p.lab.begin(), p.lab.end(), [&](Vertex a, Vertex b) { return coloring[a] < coloring[b]; });
    }
    p.cell_of.assign(V, 0);
    p.end_of.assign(V + 1, 0);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < V;) {
      std::uint32_t j = i + 1;
      while (j < V && !coloring.empty() && coloring[p.lab[j]] == coloring[p.lab[i]]) ++j;
      if (coloring.empty()) j = V;
      for (std::uint32_t t = i; t < j; ++t) p.cell_of[p.lab[t]] = i;
      p.end_of[i] = j;
      ++p.cells;
      queue.push_back(i);
      i = j;
    }
    if (V > 0) refiner_.refine(p, std::move(queue));
    while (!p.discrete()) {
      Level lv;
      auto [s, sz] = pick_target(p);
      lv.before = p;
      lv.target_start = s;
      lv.target_size = sz;
      lv.base = p.lab[s];
      lv.trace_after = refiner_.individualize(p, lv.base);
      lv.cells_after = p.cells;
      levels_.push_back(std::move(lv));
    }
    first_leaf_ = p.lab;
  }

  SearchOutcome run(SearchMode mode) {
    SearchOutcome out;
    const std::size_t V = g_.size();
    for (std::size_t li = levels_.size(); li-- > 0;) {
      const Level& lv = levels_[li];
      std::vector<Vertex> rep = orbit_representatives(V, out.generators);
      for (std::uint32_t i = lv.target_start; i < lv.target_start + lv.target_size; ++i) {
        const Vertex w = lv.before.lab[i];
        if (w == lv.base || (mode == SearchMode::Full && rep[w] == rep[lv.base])) continue;
        auto gamma = explore(lv.before, w, li);
        if (!gamma) continue;
        out.generators.push_back(std::move(*gamma));
        out.trivial = false;
        if (mode == SearchMode::AnyNontrivial) {
          out.nodes = nodes_;
          out.order = 0;
          return out;
        }
        rep = orbit_representatives(V, out.generators);
      }
      std::size_t orbit = 0;
      for (Vertex v = 0; v < V; ++v) orbit += rep[v] == rep[lv.base];
      out.order *= orbit;
    }
    std::sort(out.generators.begin(), out.generators.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  std::optional<std::vector<Vertex>> explore(const Partition& parent, Vertex x, std::size_t li) {
    if (++nodes_ > options_.max_nodes)
      throw Error(ErrorKind::SearchBudgetExceeded, "node budget of " + std::to_string(options_.max_nodes) + " exhausted");
    Partition p = parent;
    const std::uint64_t h = refiner_.individualize(p, x);
    const Level& lv = levels_[li];
    if (h != lv.trace_after || p.cells != lv.cells_after) return std::nullopt;
    if (p.discrete()) {
      std::vector<Vertex> gamma(g_.size());
      for (std::size_t i = 0; i < gamma.size(); ++i) gamma[first_leaf_[i]] = p.lab[i];
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    if (li + 1 >= levels_.size()) return std::nullopt;
    const Level& next = levels_[li + 1];
    auto [s, sz] = pick_target(p);
    if (s != next.target_start || sz != next.target_size) return std::nullopt;
    for (std::uint32_t i = s; i < s + sz; ++i) {
      auto r = explore(p, p.lab[i], li + 1);
      if (r) return r;
    }
    return std::nullopt;
  }

  const Graph& g_;
  Refiner refiner_;
  SearchOptions options_;
  std::vector<Level> levels_;
  std::vector<Vertex> first_leaf_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<Vertex> orbit_representatives(std::size_t n, std::span<const std::vector<Vertex>> gens) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : gens)
    for (Vertex v = 0; v < n; ++v) {
      Vertex a = find(v), b = find(g[v]);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      parent[a] = b;
    }
  std::vector<Vertex> rep(n);
  for (Vertex v = 0; v < n; ++v) rep[v] = find(v);
  return rep;
}

SearchOutcome search_group(const Graph& g, std::span<const std::uint32_t> coloring, SearchMode mode,
                           const SearchOptions& options) {
  if (g.size() > options.max_vertices)
    throw Error(ErrorKind::SearchBudgetExceeded, std::to_string(g.size()) + " vertices exceed the search cap of " +
                                                     std::to_string(options.max_vertices));
  if (!coloring.empty() && coloring.size() != g.size())
    throw Error(ErrorKind::DimensionMismatch, "coloring does not cover the vertex set");
  Search s(g, coloring, options);
  return s.run(mode);
}

}  // namespace cubesym
