#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/json_io.hpp"
#include "cli.hpp"

using namespace blowup;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int rc;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("blowup_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir / name;
}

void dump(const fs::path& p, const Json& j) { io::write_file(p.string(), io::canonical(j)); }

struct Fixture {
  fs::path input = scratch("tri.json");
  fs::path cert = scratch("tri.cert.json");
  Fixture() {
    REQUIRE(run({"generate", "stacked-triangulation", "60", "--seed", "9", "--out", input.string()}).rc == 0);
    REQUIRE(run({"decompose", input.string(), "--out", cert.string()}).rc == 0);
  }
};

}  // namespace

TEST_CASE("canonical json sorts keys and ends in a newline") {
  const Json j = io::parse(R"({"b": [2, 1], "a": {"z": 1, "c": null}})");
  CHECK(io::canonical(j) == "{\"a\":{\"c\":null,\"z\":1},\"b\":[2,1]}\n");
  CHECK_THROWS_AS(io::parse("{\"x\": 1.5}"), ParseError);
  CHECK_THROWS_AS(io::parse("[1,"), ParseError);
}

TEST_CASE("graph and decomposition documents round trip") {
  const Json g = io::parse(R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK(io::to_json(io::graph_from_json(g)) == g);
  const Json td = io::parse(R"({"bags":{"0":[0,1],"1":[1,2]},"root":0,"tree_edges":[[0,1]]})");
  CHECK(io::to_json(io::td_from_json(td)) == td);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"edges":[[0,3]],"n":3})")), InvalidInput);
}

TEST_CASE_FIXTURE(Fixture, "certificate survives a byte-exact round trip") {
  const std::string first = io::canonical(io::read_file(cert.string()));
  const std::size_t n = io::graph_from_json(io::read_file(input.string())["graph"]).vertex_count();
  const auto again = io::certificate_from_json(io::parse(first), n);
  CHECK(io::canonical(io::to_json(again)) == first);

  const fs::path copy = scratch("copy.json");
  REQUIRE(run({"export", cert.string(), "--format", "json", "--out", copy.string()}).rc == 0);
  CHECK(io::canonical(io::read_file(copy.string())) == first);
  CHECK(run({"validate", input.string(), copy.string()}).rc == cli::kExitOk);
}

TEST_CASE_FIXTURE(Fixture, "tampered certificates fail validation") {
  const Json good = io::read_file(cert.string());

  Json narrow = good;
  narrow["claimed_width"] = good["claimed_width"].get<int>() - 1;
  dump(scratch("narrow.json"), narrow);
  const Result r = run({"validate", input.string(), scratch("narrow.json").string()});
  CHECK(r.rc == cli::kExitInvalid);
  CHECK(io::parse(r.out)["valid"] == false);

  // Drop an H-edge that some G-edge needs.
  Json cut = good;
  auto& edges = cut["H"]["edges"];
  REQUIRE(!edges.empty());
  bool dropped = false;
  for (std::size_t i = 0; i < edges.size() && !dropped; ++i) {
    Json trial = cut;
    trial["H"]["edges"].erase(i);
    dump(scratch("cut.json"), trial);
    dropped = run({"validate", input.string(), scratch("cut.json").string()}).rc == cli::kExitInvalid;
  }
  CHECK(dropped);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).rc == cli::kExitUsage);
  CHECK(run({"frobnicate"}).rc == cli::kExitUsage);
  CHECK(run({"decompose", scratch("missing.json").string()}).rc == cli::kExitUsage);
  CHECK(run({"generate", "grid", "x"}).rc == cli::kExitUsage);
  CHECK(run({"decompose", "--d", "banana", scratch("missing.json").string()}).rc == cli::kExitUsage);
  io::write_file(scratch("junk.json").string(), "{oops");
  CHECK(run({"stats", scratch("junk.json").string()}).rc == cli::kExitUsage);
}

TEST_CASE("generate is deterministic for a seed") {
  const Result a = run({"generate", "clique-sum", "6", "8", "--seed", "4"});
  const Result b = run({"generate", "clique-sum", "6", "8", "--seed", "4"});
  REQUIRE(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(io::detect_kind(io::parse(a.out)) == "structured");
}

TEST_CASE("dot export colours the apex part") {
  const Fixture f;
  const Result r = run({"export", f.cert.string(), "--format", "dot"});
  REQUIRE(r.rc == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
  CHECK(r.out.find("gold") != std::string::npos);
  CHECK(run({"export", f.cert.string(), "--format", "svg"}).rc == cli::kExitUsage);
}

TEST_CASE("stats reports oracle treewidth for small H") {
  const fs::path in = scratch("g.json");
  REQUIRE(run({"generate", "grid", "3", "3", "--out", in.string()}).rc == 0);
  const Result r = run({"stats", in.string(), "--oracle-limit", "15"});
  REQUIRE(r.rc == 0);
  const Json s = io::parse(r.out);
  CHECK(s["oracle"]["tw_h"].get<int>() <= 4);
  CHECK(s["oracle"]["tw_h_minus_alpha"].get<int>() <= 3);
  CHECK(s["width"].get<int>() <= s["width_bound"].get<int>());
}
