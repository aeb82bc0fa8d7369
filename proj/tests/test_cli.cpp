#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>

#include "wonderlat/json_io.hpp"

using namespace wlat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = "./wonderlat " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("covers verb: model F4 has two full-support covering differences") {
  auto res = run("covers --lattice model:F4 --full-support --format json");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["count"] == 2);
  CHECK(j["schema_version"] == "1");
}

TEST_CASE("identities verb") {
  auto res = run("identities --family comodel-E8 --format json");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["identities"].size() == 7);
  for (auto& item : j["identities"]) CHECK(item["matched"] == true);
}

TEST_CASE("surjectivity verb: the SO(9) counterexample exits 1") {
  auto res = run("surjectivity --lattice so-odd:4 --pair D2,D2 --format json");
  CHECK(res.exit_code == 1);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["refuted"] == true);
  CHECK(j["failing_leaf"]["f"] == std::vector<int>{1, 0, 0, 0});
  // and the simply connected model of B4 is fine
  auto ok = run("surjectivity --lattice model:B4 --pair D2,D2 --format json");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("covers --lattice model:Z9").exit_code == 2);
  CHECK(run("covers").exit_code != 0);
  CHECK(run("surjectivity --lattice model:A3 --pair D1").exit_code == 2);
}

TEST_CASE("caps exit 3") {
  auto res = run("--dim-cap 100 verify-triple --lattice model:E8 --triple 'D1;D5;2D2'");
  CHECK(res.exit_code == 3);
}

TEST_CASE("output is byte-stable across runs") {
  for (const char* cmd : {"covers --lattice model:E8 --format json",
                          "orbit-verdict --format tsv",
                          "coord-ring --lattice model:E8 --divisor D8 --n-max 3 --format tsv"}) {
    auto a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("format renderings carry the same data") {
  auto js = run("low-triples --lattice model:E8 --format json");
  auto tsv = run("low-triples --lattice model:E8 --format tsv");
  auto j = nlohmann::json::parse(js.out);
  // tsv: header + one row per triple
  int lines = 0;
  for (char c : tsv.out)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + j["triples"].size());
}

TEST_CASE("catalog documents round-trip") {
  for (const char* id : {"model:E8", "comodel:E8", "orbit-bd:11:3", "case-x", "e8-induced"}) {
    WonderfulLattice L = catalog(id);
    auto j = to_json(L);
    WonderfulLattice back = lattice_from_json(j);
    CHECK(back.id == L.id);
    CHECK(back.pairing == L.pairing);
  }
}

TEST_CASE("orbit verdict verb") {
  auto res = run("orbit-verdict --case XI --format json");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  REQUIRE(j["verdicts"].size() == 1);
  CHECK(j["verdicts"][0]["verdict"] == "non-normal");
  auto all = nlohmann::json::parse(run("orbit-verdict --format json").out);
  CHECK(all["verdicts"].size() == 15);  // parametric cases instantiated twice
}

TEST_CASE("minuscule and distinguished verbs") {
  auto res = run("minuscule --lattice model:E8 --divisor D8 --format json");
  CHECK(nlohmann::json::parse(res.out)["minuscule"] == true);
  auto res2 = run("minuscule --lattice model:G2 --divisor D2 --format json");
  CHECK(nlohmann::json::parse(res2.out)["minuscule"] == false);
  auto res3 = run("distinguished --lattice model:E8 --subset D1,D4,D6,D8 --format json");
  CHECK(nlohmann::json::parse(res3.out)["distinguished"] == true);
}
