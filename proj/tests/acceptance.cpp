// Acceptance checks. One line per criterion; the exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../src/cli/commands.hpp"
#include "cubesym/autgroup.hpp"
#include "cubesym/constructions.hpp"
#include "cubesym/errors.hpp"
#include "cubesym/oracle.hpp"
#include "cubesym/stirling.hpp"
#include "cubesym/symmetry.hpp"

using namespace cubesym;

namespace {

// All comparisons below are exact integer equalities; the only numeric
// tolerance is on the Hamming sweep, which is exhaustive up to this n.
constexpr std::uint64_t kHammingSweepMaxN = 1'000'000;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // failures first, then remarks

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.insert(notes.begin(), "FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::size_t v) { return std::to_string(v); }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Solved {
  Graph graph;
  PermGroup group;
};

Solved solve(const FamilySpec& spec) {
  Graph g = build_family(spec);
  PermGroup grp = automorphism_group(g);
  return {std::move(g), std::move(grp)};
}

std::size_t det_of(const Solved& s) { return determining_number(s.graph, s.group).value; }
std::size_t dist_of(const Solved& s) { return distinguishing_number(s.graph, s.group).value; }

// Cost, or 0 when the graph has no 2-distinguishing coloring.
std::size_t cost_of(const Solved& s) {
  try {
    return cost_2dist(s.graph, s.group).value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotTwoDistinguishable) throw;
    return 0;
  }
}

std::size_t oracle_cost_of(const Graph& g) {
  try {
    return oracle_cost(g).value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotTwoDistinguishable) throw;
    return 0;
  }
}

// ---------------------------------------------------------------- 1

Outcome group_structure() {
  Outcome o;
  struct Row {
    FamilySpec spec;
    BigInt expect;
  };
  std::vector<Row> rows;
  for (int n = 3; n <= 5; ++n) rows.push_back({FamilySpec::hypercube(n), factorial(n) << n});
  for (int n = 4; n <= 5; ++n) rows.push_back({FamilySpec::folded(n), factorial(n + 1) << n});
  for (int n = 4; n <= 5; ++n) rows.push_back({FamilySpec::augmented(n), BigInt(8) << n});
  for (int n = 4; n <= 5; ++n) rows.push_back({FamilySpec::locally_twisted(n), BigInt(1) << (n - 1)});
  std::string values;
  for (const Row& r : rows) {
    const Graph g = build_family(r.spec);
    const BigInt searched = search_automorphisms(g).order();
    const BigInt structured = structured_group(r.spec).order();
    const std::size_t naive = enumerate_automorphisms_naive(g).size();
    o.expect(searched == structured, r.spec.label() + ": searched " + str(searched) + " vs structured " + str(structured));
    o.expect(searched == r.expect, r.spec.label() + ": order " + str(searched) + " vs " + str(r.expect));
    o.expect(BigInt(naive) == searched, r.spec.label() + ": oracle " + str(naive));
    values += " " + r.spec.label() + "=" + str(searched);
  }
  o.note("orders" + values);
  return o;
}

// ---------------------------------------------------------------- 2

Outcome enhanced_table() {
  Outcome o;
  // Rows k = 1..4, columns n = 2..5 as printed; 0 marks an empty cell.
  const int table[4][4] = {{4, 5, 2, 2}, {0, 2, 2, 2}, {0, 0, 2, 2}, {0, 0, 0, 2}};
  for (int k = 1; k <= 4; ++k)
    for (int n = std::max(2, k + 1); n <= 5; ++n) {
      const auto s = solve(FamilySpec::enhanced(n, k));
      const std::size_t got = dist_of(s);
      const int want = table[k - 1][n - 2];
      if (got != static_cast<std::size_t>(want)) {
        const std::size_t oracle = oracle_distinguishing_number(s.graph).value;
        o.expect(false, "dist(Q_{" + std::to_string(n) + "," + std::to_string(k) + "})=" + str(got) + ", table " +
                            std::to_string(want) + " (oracle " + str(oracle) + ")");
      }
    }
  const std::size_t q64 = dist_of(solve(FamilySpec::enhanced(6, 4)));
  o.expect(q64 == 2, "dist(Q_{6,4})=" + str(q64));
  o.note("dist(Q_{6,4})=" + str(q64));
  return o;
}

// ---------------------------------------------------------------- 3

Outcome hypercube_line() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const std::size_t d = det_of(solve(FamilySpec::hypercube(n)));
    o.expect(d == static_cast<std::size_t>(hypercube_det_number(n)), "det(Q_" + std::to_string(n) + ")=" + str(d));
  }
  for (int n = 6; n <= 16; ++n) {
    const auto s = hypercube_det_set(n);
    o.expect(s.size() == static_cast<std::size_t>(hypercube_det_number(n)) &&
                 verify_determining(FamilySpec::hypercube(n), s),
             "witness for Q_" + std::to_string(n));
  }
  const std::size_t d3 = dist_of(solve(FamilySpec::hypercube(3)));
  o.expect(d3 == 3, "dist(Q_3)=" + str(d3));
  for (int n = 4; n <= 8; ++n) {
    const std::size_t d = dist_of(solve(FamilySpec::hypercube(n)));
    o.expect(d == 2, "dist(Q_" + std::to_string(n) + ")=" + str(d));
  }
  const std::size_t rho = cost_of(solve(FamilySpec::hypercube(4)));
  o.expect(rho == 5, "rho(Q_4)=" + str(rho));
  o.note("rho(Q_4)=" + str(rho));
  return o;
}

// ---------------------------------------------------------------- 4

std::set<std::vector<Vertex>> element_set(const PermGroup& g) {
  const auto& e = g.elements();
  return {e.begin(), e.end()};
}

Outcome powers() {
  Outcome o;
  const std::pair<int, std::size_t> dets[] = {{4, 4}, {5, 5}, {6, 4}};
  for (auto [n, want] : dets) {
    const std::size_t d = det_of(solve(FamilySpec::power(n, 2)));
    o.expect(d == want, "det(Q_" + std::to_string(n) + "^2)=" + str(d));
  }
  const auto q5 = element_set(search_automorphisms(build_family(FamilySpec::hypercube(5))));
  const auto q53 = element_set(search_automorphisms(build_family(FamilySpec::power(5, 3))));
  const PermGroup q52g = search_automorphisms(build_family(FamilySpec::power(5, 2)));
  o.expect(q53 == q5, "Aut(Q_5^3) = Aut(Q_5)");
  o.expect(q52g.order() != BigInt(q5.size()) || element_set(q52g) != q5, "Aut(Q_5^2) != Aut(Q_5)");
  for (int n = 4; n <= 10; ++n) {
    const auto w = q2_witnesses(n);
    const FamilySpec spec = FamilySpec::power(n, 2);
    const std::string tag = "Q_" + std::to_string(n) + "^2";
    o.expect(w.det_set.size() <= static_cast<std::size_t>(n) && verify_determining(spec, w.det_set),
             tag + " determining set");
    o.expect(verify_cost_class(spec, w.dist_class), tag + " class is not distinguishing");
    o.expect(w.dist_class.size() <= static_cast<std::size_t>(n + 1),
             tag + " class size " + str(w.dist_class.size()) + " > " + std::to_string(n + 1));
  }
  // The n = 4 bound, checked independently.
  const Graph g = build_family(FamilySpec::power(4, 2));
  o.note("rho(Q_4^2): oracle " + str(oracle_cost(g).value) + ", solver " +
         str(cost_of({g, automorphism_group(g)})));
  return o;
}

// ---------------------------------------------------------------- 5

Outcome folded() {
  Outcome o;
  for (int n = 4; n <= 20; ++n) {
    const auto c = fq_det_set(n);
    const std::string tag = "FQ_" + std::to_string(n);
    o.expect(c.words.size() == static_cast<std::size_t>(fq_det_number(n)), tag + " set size " + str(c.words.size()));
    o.expect(verify_determining(FamilySpec::folded(n), c.words), tag + " set not determining");
  }
  for (int n = 4; n <= 7; ++n) {
    const std::size_t d = det_of(solve(FamilySpec::folded(n)));
    o.expect(d == static_cast<std::size_t>(fq_det_number(n)), "exhaustive det(FQ_" + std::to_string(n) + ")=" + str(d));
  }
  std::string small;
  for (int n = 4; n <= 12; ++n) {
    const auto c = fq_dist_class(n).words;
    const FamilySpec spec = FamilySpec::folded(n);
    const std::string tag = "FQ_" + std::to_string(n);
    o.expect(verify_determining(spec, c), tag + " class not determining");
    o.expect(induced_asymmetric(spec, c), tag + " class not asymmetric");
    std::ostringstream bound;
    bound << fq_dist_class_bound_x4(n) / 4.0;
    // The counting bound comes from the general construction, used for n >= 8.
    if (n >= 8)
      o.expect(4 * c.size() <= fq_dist_class_bound_x4(n), tag + " class size " + str(c.size()) + " > " + bound.str());
    else
      small += " " + std::to_string(n) + ":" + str(c.size()) + "/" + bound.str();
  }
  o.note("small n class size/count bound" + small + "; rho(FQ_4)=" +
         str(oracle_cost(build_family(FamilySpec::folded(4))).value) + " by oracle");
  return o;
}

// ---------------------------------------------------------------- 6

bool dist_ham_two(int m, std::uint64_t n) { return (m == 2 && n >= 4) || (m == 3 && n >= 3) || (m >= 4 && n >= 2); }

Outcome hamming() {
  Outcome o;
  std::uint64_t mismatches = 0;
  for (int m = 2; m <= 8; ++m)
    for (std::uint64_t n = 1; n <= kHammingSweepMaxN; ++n)
      if (hamming_det_number_stirling(m, n) != hamming_det_number_closed(m, n)) ++mismatches;
  o.expect(mismatches == 0, std::to_string(mismatches) + " Stirling/closed-form mismatches");
  const Graph rook = build_family(FamilySpec::hamming(3, 2));
  const std::size_t oracle = oracle_determining_number(rook).value;
  const std::size_t solver = det_of({rook, automorphism_group(rook)});
  o.expect(oracle == static_cast<std::size_t>(hamming_det_number(3, 2)) && solver == oracle,
           "det(H(3,2)): oracle " + str(oracle) + ", solver " + str(solver));
  for (int m = 2; m <= 8; ++m)
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto b = hamming_cost_bounds(m, n);
      const bool should = dist_ham_two(m, n) && 2 <= m - 1 && static_cast<std::uint64_t>(m - 1) <= n;
      o.expect(b.applicable == should, "cost bounds for H(" + std::to_string(m) + "," + std::to_string(n) + ")");
      if (b.applicable) {
        const int d = hamming_det_number(m, n);
        o.expect(b.lo == d && b.hi == d + 1, "cost bound values");
      }
    }
  o.note("m=2..8, n<=" + std::to_string(kHammingSweepMaxN) + "; det(H(3,2))=" + str(oracle));
  return o;
}

// ---------------------------------------------------------------- 7

Outcome augmented() {
  Outcome o;
  const std::size_t want[] = {0, 1, 3, 4, 3, 3, 2, 2};
  std::string dets;
  for (int n = 1; n <= 4; ++n) {
    const auto s = solve(FamilySpec::augmented(n));
    const std::size_t d = det_of(s);
    const std::size_t od = oracle_determining_number(s.graph).value;
    o.expect(d == want[n] && od == want[n], "det(AQ_" + std::to_string(n) + "): solver " + str(d) + ", oracle " + str(od));
    dets += " " + str(d);
  }
  {
    const auto s = solve(FamilySpec::augmented(5));
    bool pair = false;
    for (Vertex b = 1; b < s.graph.size() && !pair; ++b) {
      const std::vector<Vertex> p{0, b};
      pair = pointwise_stabilizer_trivial(s.group, p);
    }
    o.expect(!pair, "AQ_5 has a determining pair");
    o.expect(aq_det_witness(5).words.size() == 3 && verify_determining(FamilySpec::augmented(5), aq_det_witness(5).words),
             "AQ_5 witness");
  }
  for (int n = 6; n <= 7; ++n) {
    const auto w = aq_det_witness(n).words;
    const PermGroup g = structured_group(FamilySpec::augmented(n));
    const std::vector<Vertex> zero{0};
    o.expect(w.size() == want[n] && verify_determining(FamilySpec::augmented(n), w) &&
                 !pointwise_stabilizer_trivial(g, zero),
             "det(AQ_" + std::to_string(n) + ") witness");
  }
  for (int n = 4; n <= 6; ++n) {
    const auto s = solve(FamilySpec::augmented(n));
    // The group is vertex-transitive, so pairs through 0 cover every pair.
    bool pair = false;
    for (Vertex b = 1; b < s.graph.size() && !pair; ++b) {
      const std::vector<Vertex> p{0, b};
      pair = setwise_stabilizer_trivial(s.group, p);
    }
    o.expect(s.group.vertex_transitive(), "AQ_" + std::to_string(n) + " not vertex-transitive");
    o.expect(!pair, "a 2-set distinguishes AQ_" + std::to_string(n));
    o.expect(verify_cost_class(FamilySpec::augmented(n), aq_cost_class(n).words), "AQ_" + std::to_string(n) + " class");
  }
  for (int n = 3; n <= 4; ++n) {
    const auto s = solve(FamilySpec::augmented(n));
    const auto t = transitivity_report(s.graph, s.group);
    o.expect(t.vertex_transitive && !t.edge_transitive && !t.arc_transitive,
             "AQ_" + std::to_string(n) + " transitivity");
  }
  o.note("det(AQ_1..4)" + dets + ", AQ_5 no determining pair, rho(AQ_4..6)=3");
  return o;
}

// ---------------------------------------------------------------- 8

Outcome locally_twisted() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const auto s = solve(FamilySpec::locally_twisted(n));
    const std::size_t d = det_of(s), di = dist_of(s), c = cost_of(s);
    const bool three = n == 3;
    const std::string tag = "LTQ_" + std::to_string(n) + " " + str(d) + "/" + str(di) + "/" + str(c);
    o.expect(d == (three ? 2u : 1u) && di == 2 && c == (three ? 3u : 1u), tag);
    o.note(tag);
    if (n <= 4) {
      const std::size_t od = oracle_determining_number(s.graph).value;
      const std::size_t odi = oracle_distinguishing_number(s.graph).value;
      const std::size_t oc = oracle_cost_of(s.graph);
      o.expect(od == d && odi == di && oc == c, tag + " oracle " + str(od) + "/" + str(odi) + "/" + str(oc));
    }
  }
  return o;
}

// ---------------------------------------------------------------- 9

std::vector<FamilySpec> small_corpus() {
  return {FamilySpec::hypercube(3), FamilySpec::hypercube(4),     FamilySpec::power(4, 2),
          FamilySpec::folded(3),    FamilySpec::folded(4),        FamilySpec::enhanced(4, 1),
          FamilySpec::enhanced(4, 2), FamilySpec::enhanced(4, 3), FamilySpec::augmented(3),
          FamilySpec::augmented(4), FamilySpec::locally_twisted(3), FamilySpec::locally_twisted(4),
          FamilySpec::hamming(3, 2), FamilySpec::hamming(2, 4)};
}

Outcome cross_validation() {
  Outcome o;
  std::size_t compared = 0;
  for (const FamilySpec& spec : small_corpus()) {
    const auto s = solve(spec);
    const std::size_t d = det_of(s), di = dist_of(s), c = cost_of(s);
    const std::size_t od = oracle_determining_number(s.graph).value;
    const std::size_t odi = oracle_distinguishing_number(s.graph).value;
    const std::size_t oc = oracle_cost_of(s.graph);
    o.expect(d == od, spec.label() + " det " + str(d) + " vs " + str(od));
    o.expect(di == odi, spec.label() + " dist " + str(di) + " vs " + str(odi));
    o.expect(c == oc, spec.label() + " cost " + str(c) + " vs " + str(oc));
    compared += 3;
  }
  o.note(std::to_string(compared) + " values compared");
  return o;
}

// ---------------------------------------------------------------- 10

int cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  const int code = cli::run(args, os, es);
  out = os.str();
  return code;
}

Outcome properties() {
  Outcome o;
  // Regularity and edge counts.
  for (int n = 2; n <= 8; ++n) {
    const std::size_t V = std::size_t{1} << n;
    const struct {
      FamilySpec spec;
      std::size_t degree;
    } fams[] = {{FamilySpec::hypercube(n), std::size_t(n)},
                {FamilySpec::folded(n), std::size_t(n + 1)},
                {FamilySpec::augmented(n), std::size_t(2 * n - 1)},
                {FamilySpec::locally_twisted(n), std::size_t(n)},
                {FamilySpec::enhanced(n, 1), std::size_t(n + 1)}};
    for (const auto& f : fams) {
      const Graph g = build_family(f.spec);
      bool regular = true;
      for (Vertex v = 0; v < g.size(); ++v) regular = regular && g.degree(v) == f.degree;
      o.expect(regular && g.edge_count() == V * f.degree / 2, f.spec.label() + " degree/edge count");
    }
  }
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Graph g = build_family(FamilySpec::hamming(m, n));
      std::size_t V = 1;
      for (int i = 0; i < n; ++i) V *= m;
      o.expect(g.edge_count() == V * n * (m - 1) / 2, FamilySpec::hamming(m, n).label() + " edge count");
    }
  // det and dist of a graph and its complement.
  for (const FamilySpec& spec : small_corpus()) {
    const auto s = solve(spec);
    const Graph c = complement(s.graph);
    const Solved sc{c, automorphism_group(c)};
    o.expect(det_of(s) == det_of(sc) && dist_of(s) == dist_of(sc), spec.label() + " complement");
  }
  // Characteristic matrices against stabilizers.
  std::size_t sets = 0;
  for (const FamilySpec& spec : {FamilySpec::hypercube(3), FamilySpec::hypercube(4), FamilySpec::hamming(3, 2)}) {
    const Graph g = build_family(spec);
    const PermGroup grp = search_automorphisms(g);
    std::vector<Vertex> cur;
    std::function<void(Vertex)> rec = [&](Vertex start) {
      if (!cur.empty()) {
        std::vector<BitVertex> bv;
        for (Vertex v : cur) bv.emplace_back(v, spec.n, spec.alphabet());
        ++sets;
        if (char_matrix_is_determining(characteristic_matrix(bv)) != pointwise_stabilizer_trivial(grp, cur))
          o.expect(false, spec.label() + " matrix criterion");
      }
      if (cur.size() == 4) return;
      for (Vertex v = start; v < g.size(); ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  // Every emitted witness passes verify.
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cubesym_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> runs = {
      {"param", "det", "folded", "-n", "6", "--witness", "--no-cache"},
      {"param", "dist", "enhanced", "-n", "5", "-k", "2", "--witness", "--no-cache"},
      {"param", "cost", "augmented", "-n", "5", "--witness", "--no-cache"},
      {"param", "det", "hamming", "-m", "3", "-n", "3", "--witness", "--no-cache"},
      {"construct", "hypercube-det", "-n", "12"},
      {"construct", "q2-witnesses", "-n", "6"},
      {"construct", "fq-det-set", "-n", "13"},
      {"construct", "fq-dist-class", "-n", "10"},
      {"construct", "aq-det", "-n", "7"},
      {"construct", "aq-cost-class", "-n", "6"},
      {"construct", "ltq-witnesses", "-n", "5"},
  };
  int i = 0;
  for (const auto& args : runs) {
    std::string text, verdict;
    const int code = cli(args, text);
    const fs::path f = dir / ("w" + std::to_string(i++) + ".json");
    std::ofstream(f) << text;
    const int vcode = cli({"verify", f.string()}, verdict);
    o.expect(code == 0 && vcode == 0, "verify round trip for " + args[0] + " " + args[1]);
  }
  fs::remove_all(dir);
  o.note(std::to_string(sets) + " small sets, " + std::to_string(runs.size()) + " witness round trips");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"group orders", group_structure},
      {"enhanced distinguishing table", enhanced_table},
      {"hypercube det/dist/cost", hypercube_line},
      {"hypercube powers", powers},
      {"folded cubes", folded},
      {"Hamming graphs", hamming},
      {"augmented cubes", augmented},
      {"locally twisted cubes", locally_twisted},
      {"oracle cross-validation", cross_validation},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << ms << " ms)";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
