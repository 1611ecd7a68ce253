#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../src/cli/commands.hpp"
#include "cubesym/graph_io.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code;
  std::string out;
  std::string err;
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = cubesym::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("cubesym_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

json strip_elapsed(json j) {
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen formats") {
    auto g6 = run({"gen", "folded", "-n", "4", "--format", "graph6"});
    REQUIRE(g6.code == 0);
    std::string line = g6.out.substr(0, g6.out.find('\n'));
    cubesym::Graph g = cubesym::from_graph6(line);
    CHECK(g.size() == 16);
    CHECK(g == cubesym::build_family(cubesym::FamilySpec::folded(4)));

    auto el = run({"gen", "hamming", "-m", "3", "-n", "2", "--format", "edgelist"});
    REQUIRE(el.code == 0);
    CHECK(std::count(el.out.begin(), el.out.end(), '\n') == 18);

    auto js = run({"gen", "enhanced", "-n", "3", "-k", "2"});
    REQUIRE(js.code == 0);
    CHECK(json::parse(js.out)["edges"].size() == 16);
  }

  TEST_CASE("param reports") {
    auto det = run({"param", "det", "augmented", "-n", "6", "--no-cache"});
    REQUIRE(det.code == 0);
    auto j = json::parse(det.out);
    CHECK(j["value"] == 2);
    CHECK(j["parameter"] == "det");
    CHECK(j.contains("tool_version"));

    auto cost = run({"param", "cost", "hypercube", "-n", "4", "--no-cache", "--oracle"});
    REQUIRE(cost.code == 0);
    CHECK(json::parse(cost.out)["value"] == 5);

    auto order = run({"param", "aut-order", "folded", "-n", "5", "--no-cache"});
    REQUIRE(order.code == 0);
    CHECK(json::parse(order.out)["value"] == 23040);
  }

  TEST_CASE("cache hits are byte-identical") {
    auto dir = scratch_dir("cache");
    std::vector<std::string> args{"param", "det", "folded", "-n", "5", "--witness", "--cache-dir", dir.string()};
    auto first = run(args);
    REQUIRE(first.code == 0);
    auto second = run(args);
    auto third = run(args);
    CHECK(second.out == first.out);
    CHECK(third.out == first.out);
    auto fresh = run({"param", "det", "folded", "-n", "5", "--witness", "--no-cache"});
    CHECK(strip_elapsed(json::parse(fresh.out)) == strip_elapsed(json::parse(first.out)));

    auto exp = run({"export", "--cache-dir", dir.string()});
    REQUIRE(exp.code == 0);
    CHECK(json::parse(exp.out).size() == 1);
    auto csv = run({"export", "--format", "csv", "--cache-dir", dir.string()});
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
    fs::remove_all(dir);
  }

  TEST_CASE("emitted witnesses verify") {
    auto dir = scratch_dir("verify");
    const std::vector<std::vector<std::string>> cases = {
        {"param", "det", "folded", "-n", "6", "--witness", "--no-cache"},
        {"param", "cost", "augmented", "-n", "5", "--witness", "--no-cache"},
        {"param", "dist", "hypercube", "-n", "3", "--witness", "--no-cache"},
        {"construct", "fq-dist-class", "-n", "9"},
        {"construct", "q2-witnesses", "-n", "5"},
        {"construct", "ltq-witnesses", "-n", "3"},
    };
    int i = 0;
    for (const auto& args : cases) {
      auto r = run(args);
      REQUIRE(r.code == 0);
      fs::path f = dir / ("w" + std::to_string(i++) + ".json");
      std::ofstream(f) << r.out;
      auto v = run({"verify", f.string()});
      CHECK_MESSAGE(v.code == 0, args[1]);
      CHECK(json::parse(v.out)["valid"] == true);
    }
    // A tampered determining set is rejected with the inconsistency code.
    auto r = json::parse(run({"construct", "hypercube-det", "-n", "8"}).out);
    r["witness"]["set"].erase(1);
    std::ofstream(dir / "bad.json") << r.dump();
    auto bad = run({"verify", (dir / "bad.json").string()});
    CHECK(bad.code == cubesym::cli::kExitInconsistent);
    CHECK(json::parse(bad.out)["valid"] == false);
    fs::remove_all(dir);
  }

  TEST_CASE("constructions") {
    auto fq = json::parse(run({"construct", "fq-dist-class", "-n", "6"}).out);
    CHECK(fq["verified"] == true);
    CHECK(fq["size"] == 9);
    auto aq = json::parse(run({"construct", "aq-cost-class", "-n", "5"}).out);
    CHECK(aq["witness"]["set"] == json::array({"00000", "10001", "01110"}));
    auto h = json::parse(run({"construct", "hamming-det", "-m", "3", "-n", "3"}).out);
    CHECK(h["value"] == 3);
  }

  TEST_CASE("tables") {
    auto t = run({"tables", "enhanced-dist", "--n-max", "4", "--format", "json"});
    REQUIRE(t.code == 0);
    CHECK_FALSE(json::parse(t.out).empty());
    auto tr = run({"tables", "transitivity", "-n", "3"});
    REQUIRE(tr.code == 0);
    CHECK(tr.out.find("Q_3") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cubesym::cli::kExitUsage);
    CHECK(run({"gen", "folded"}).code == cubesym::cli::kExitUsage);
    CHECK(run({"gen", "enhanced", "-n", "4", "-k", "9"}).code == cubesym::cli::kExitUsage);
    CHECK(run({"gen", "nonsense", "-n", "4"}).code == cubesym::cli::kExitUsage);
    CHECK(run({"gen", "hypercube", "-n", "40"}).code == cubesym::cli::kExitBudget);
    CHECK(run({"param", "det", "hamming", "-m", "4", "-n", "9", "--no-cache"}).code == cubesym::cli::kExitBudget);
    auto cost = run({"param", "cost", "hamming", "-m", "3", "-n", "1", "--no-cache"});
    CHECK(cost.code == 0);
    CHECK(json::parse(cost.out)["value"].is_null());
  }
}
