#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "twistcoh/algebra_io.hpp"
#include "twistcoh/zoo.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args) {
  const auto errfile = std::filesystem::temp_directory_path() / "twistcoh_cli_stderr.txt";
  const std::string cmd = std::string("\"") + TWISTCOH_CLI_PATH + "\" " + args + " 2>" +
                          errfile.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  r.err = slurp(errfile);
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

const char* kIrrational = R"({
  "dim": 3,
  "brackets": [
    { "i": 1, "j": 2, "terms": [ { "k": 3, "c": "1" } ] },
    { "i": 1, "j": 3, "terms": [ { "k": 2, "c": "2" } ] }
  ]
})";

const char* kSimple = R"({
  "dim": 3,
  "brackets": [
    { "i": 1, "j": 2, "terms": [ { "k": 3, "c": "1" } ] },
    { "i": 1, "j": 3, "terms": [ { "k": 1, "c": "-2" } ] },
    { "i": 2, "j": 3, "terms": [ { "k": 2, "c": "2" } ] }
  ]
})";

const char* kBroken = R"({
  "dim": 3,
  "brackets": [
    { "i": 1, "j": 2, "terms": [ { "k": 3, "c": "1" } ] },
    { "i": 2, "j": 3, "terms": [ { "k": 2, "c": "1" } ] }
  ]
})";

}  // namespace

TEST_CASE("check: healthy and broken inputs") {
  auto ok = run_cli("check --zoo g0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);
  CHECK(ok.out.find("solvable") != std::string::npos);
  CHECK(ok.out.find("unimodular:  yes") != std::string::npos);

  auto file = write_temp("twistcoh_broken.json", kBroken);
  auto bad = run_cli("check --algebra " + file.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("(1,2,3)") != std::string::npos);

  // every other command refuses a non-Lie input outright
  auto refused = run_cli("betti --algebra " + file.string());
  CHECK(refused.exit_code == 2);
  CHECK(refused.err.find("Jacobi") != std::string::npos);
}

TEST_CASE("betti: tables along the line") {
  auto flat = run_cli("betti --zoo g0 --format json");
  REQUIRE(flat.exit_code == 0);
  auto doc = json::parse(flat.out);
  CHECK(doc["command"] == "betti");
  CHECK(doc["input"]["source"] == "zoo:g0");
  CHECK(doc["result"]["betti"] == json::array({1, 1, 1, 1}));
  CHECK(doc["result"]["lambda"] == "0");

  auto shifted = run_cli("betti --zoo g0 --omega 1,0,0 --lambda 1 --format json");
  REQUIRE(shifted.exit_code == 0);
  CHECK(json::parse(shifted.out)["result"]["betti"] == json::array({0, 1, 1, 0}));

  auto generic = run_cli("betti --zoo g0 --omega 1,0,0 --lambda 5 --format json");
  REQUIRE(generic.exit_code == 0);
  auto gdoc = json::parse(generic.out);
  CHECK(gdoc["result"]["betti"] == json::array({0, 0, 0, 0}));
  CHECK(gdoc["result"]["all_zero"] == true);
}

TEST_CASE("betti: malformed twists exit 3") {
  CHECK(run_cli("betti --zoo heisenberg --omega 0,0,1 --lambda 1").exit_code == 3);
  CHECK(run_cli("betti --zoo g0 --omega 1,0").exit_code == 3);
  CHECK(run_cli("betti --zoo g0 --omega 1,0,0 --lambda nope").exit_code == 3);
  auto r = run_cli("betti --zoo heisenberg --omega 0,0,1 --lambda 1");
  CHECK(r.err.find("closed") != std::string::npos);
}

TEST_CASE("missing or unknown algebras exit 2") {
  CHECK(run_cli("betti").exit_code == 2);
  CHECK(run_cli("check --zoo no_such_family").exit_code == 2);
  CHECK(run_cli("betti --algebra /no/such/file.json").exit_code == 2);
}

TEST_CASE("spectrum: scaling family") {
  auto r = run_cli("spectrum --zoo diag_example --n 3 --omega 1,0,0,0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  const auto& spec = doc["result"]["spectrum"];
  REQUIRE(spec["degrees"].size() == 4);
  for (int p = 0; p <= 3; ++p) {
    CHECK(spec["degrees"][p]["eigenvalues"].size() == 1);
    CHECK(spec["degrees"][p]["eigenvalues"][0]["value"] == std::to_string(p));
  }
  CHECK(spec["complete"] == true);
  CHECK(doc["result"]["nontriviality"]["lambdas"] ==
        json::array({"-3", "-2", "-1", "0"}));
  CHECK(doc["warnings"] == json::array());
}

TEST_CASE("spectrum: irrational eigenvalues degrade to a warning") {
  auto file = write_temp("twistcoh_irrational.json", kIrrational);
  auto r = run_cli("spectrum --algebra " + file.string() + " --omega 1,0,0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["spectrum"]["complete"] == false);
  CHECK(doc["warnings"].size() > 0);
}

TEST_CASE("weights and omega-set") {
  auto r = run_cli("weights --zoo g0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["k"] == 1);
  CHECK(doc["result"]["weights"] ==
        json::array({json::array({"1", "0", "0"}), json::array({"-1", "0", "0"})}));

  auto os = run_cli("omega-set --zoo g0 --format json");
  REQUIRE(os.exit_code == 0);
  auto odoc = json::parse(os.out);
  CHECK(odoc["result"]["omega_set"] ==
        json::array({json::array({"-1", "0", "0"}), json::array({"0", "0", "0"}),
                     json::array({"1", "0", "0"})}));
  CHECK(odoc["result"]["omega_tilde"] ==
        json::array({json::array({"-1", "0", "0"}), json::array({"1", "0", "0"})}));

  auto simple = write_temp("twistcoh_simple.json", kSimple);
  CHECK(run_cli("weights --algebra " + simple.string()).exit_code == 2);

  auto irr = write_temp("twistcoh_irrational.json", kIrrational);
  auto blocked = run_cli("weights --algebra " + irr.string());
  CHECK(blocked.exit_code == 4);
  CHECK(blocked.err.find("x^2 - 2") != std::string::npos);
}

TEST_CASE("nontrivial-set from the weight sums") {
  auto r = run_cli("nontrivial-set --zoo g0 --omega 1,0,0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["lambdas"] == json::array({"-1", "0", "1"}));

  auto h = run_cli("nontrivial-set --zoo heisenberg --omega 1,0,0 --format json");
  REQUIRE(h.exit_code == 0);
  CHECK(json::parse(h.out)["result"]["lambdas"] == json::array({"0"}));
}

TEST_CASE("les-verify: bookkeeping holds on the default grid") {
  auto r = run_cli("les-verify --zoo heisenberg --omega 1,0,0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["all_equal"] == true);
  CHECK(doc["result"]["reports"].size() == 7);  // -3..3

  auto custom = run_cli("les-verify --zoo g0 --omega 1,0,0 --lambda-grid -1,0,1/2");
  CHECK(custom.exit_code == 0);
  CHECK(run_cli("les-verify --zoo g0 --omega 1,0,0 --lambda-grid 3..1").exit_code == 3);
}

TEST_CASE("novikov: generic table and exceptional values") {
  auto r = run_cli("novikov --zoo g0 --omega 1,0,0 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["generic_betti"] == json::array({0, 0, 0, 0}));
  CHECK(doc["result"]["exceptional_lambdas"] == json::array({"-1", "0", "1"}));
  CHECK(doc["result"]["morse_lower_bounds"] == json::array({1, 1, 1, 1}));

  auto h = run_cli("novikov --zoo heisenberg --omega 1,0,0 --format json");
  REQUIRE(h.exit_code == 0);
  auto hdoc = json::parse(h.out);
  CHECK(hdoc["result"]["exceptional_lambdas"] == json::array({"0"}));
  CHECK(hdoc["result"]["morse_lower_bounds"] == json::array({1, 2, 2, 1}));
}

TEST_CASE("zoo: listing and spec emission round-trip") {
  auto listing = run_cli("zoo");
  REQUIRE(listing.exit_code == 0);
  CHECK(listing.out.find("g0") != std::string::npos);
  CHECK(listing.out.find("torus") != std::string::npos);

  auto emitted = run_cli("zoo --name v_family --n 4");
  REQUIRE(emitted.exit_code == 0);
  auto parsed = twistcoh::parse_algebra_spec(emitted.out);
  CHECK(twistcoh::algebra_digest(parsed) ==
        twistcoh::algebra_digest(twistcoh::zoo_entry("v_family", 4).algebra));

  // the emitted file is accepted back through the file path
  auto file = write_temp("twistcoh_emitted.json", emitted.out);
  auto betti_file = run_cli("betti --algebra " + file.string() + " --format json");
  auto betti_zoo = run_cli("betti --zoo v_family --n 4 --format json");
  REQUIRE(betti_file.exit_code == 0);
  REQUIRE(betti_zoo.exit_code == 0);
  CHECK(json::parse(betti_file.out)["input"]["digest"] ==
        json::parse(betti_zoo.out)["input"]["digest"]);
  CHECK(json::parse(betti_file.out)["result"] == json::parse(betti_zoo.out)["result"]);
}
