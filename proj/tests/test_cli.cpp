#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "derinv/cli.hpp"
#include "derinv/io.hpp"
#include "derinv/lie.hpp"

using namespace derinv;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = cli::kOk) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp_file(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("derinv_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("rho with factorization") {
  const json j = run_json({"rho", "5", "--factor"});
  CHECK(j["command"] == "rho");
  CHECK(j["result"]["rho"] == "3751");
  CHECK(j["result"]["factorization"]["sign"] == 1);
  CHECK(j["result"]["factorization"]["factors"] == json::parse("[[11,2],[31,1]]"));
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(run_json({"--timing", "rho", "3"}).contains("elapsed_ms"));
}

TEST_CASE("outputs are byte-identical across runs and seeds") {
  const Run a = run({"period", "--poly", "t^9+t^4+t^2+t+1", "-p", "2"});
  const Run b = run({"period", "--poly", "t^9+t^4+t^2+t+1", "-p", "2"});
  const Run c = run({"--seed", "77", "period", "--poly", "t^9+t^4+t^2+t+1", "-p", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(json::parse(a.out)["result"]["period"] == "73");
}

TEST_CASE("exit codes") {
  CHECK(run({"rho", "0"}).code == cli::kUsage);
  CHECK(run({"rho"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"delta", "--poly", "t^^2"}).code == cli::kUsage);
  CHECK(run({"period", "--poly", "t+1", "-p", "4"}).code == cli::kUsage);
  CHECK(run({"np-member", "5", "2"}).code == cli::kFalse);
  CHECK(run({"np-member", "3", "2"}).code == cli::kOk);
  CHECK(run({"--cap-k", "4", "arith-free", "-p", "2", "--n", "19"}).code == cli::kCapExceeded);
  CHECK(run({"lie", "witness", "5", "2"}).code == cli::kFalse);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("invariant subcommands") {
  CHECK(run_json({"wendt", "6"})["result"]["wendt"] == "0");
  CHECK(run_json({"wendt", "7", "--parallel"})["result"]["wendt"] == "6835648");
  CHECK(run_json({"delta", "--poly", "t^3-1"})["result"]["delta"] == "-27");
  CHECK(run_json({"sigma", "--poly", "-1,0,1"})["result"]["sigma"] == "9");
  const json b = run_json({"bound", "--poly", "t^2-1"});
  CHECK(b["result"]["bound"] == "36");
  const json t = run_json({"thm36", "6", "5"});
  CHECK(t["result"]["verdict"] == "ClassAtMost2");
  CHECK(t["result"]["p_divides_rho"] == false);
  CHECK(run_json({"thm36", "5", "11"})["result"]["verdict"] == "NoConclusion");
}

TEST_CASE("finite field subcommands") {
  CHECK(run_json({"pp", "-p", "2", "--h", "t^5+t^2+1"})["result"]["period"] == "31");
  const json m = run_json({"np-member", "8", "3"});
  CHECK(m["result"]["member"] == true);
  CHECK(m["result"]["witness"]["field"].get<std::string>().rfind("GF(3^", 0) == 0);

  const json free = run_json({"arith-free", "-p", "2", "--n", "5"});
  CHECK(free["result"]["free"] == true);
  CHECK(free["result"]["size"] == 5);
  const json notfree = run_json({"arith-free", "-p", "2", "--poly", "t^3-1"}, cli::kFalse);
  CHECK(notfree["result"]["counterexample"].is_object());

  const json scan = run_json({"np-scan", "--n-max", "9", "--p-set", "2,3"});
  int members = 0;
  for (const auto& row : scan["result"]["rows"]) members += row["member"].get<bool>();
  CHECK(members == 5);  // (3,2) (6,2) (7,2) (8,3) (9,2)
}

TEST_CASE("non-json formats") {
  const Run csv = run({"--format", "csv", "rho", "3"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "key,value\nn,3\nrho,28\n");
  const Run md = run({"--format", "md", "tables", "pp2"});
  CHECK(md.out.rfind("| h | per(h(t^2-t)) |\n|---|---|\n", 0) == 0);
  const json tj = run_json({"--format", "json", "tables", "pp2"});
  CHECK(tj["result"][0]["h"] == "t+1");
}

TEST_CASE("tables reproduce the reference transcriptions") {
  const std::string dir = DERINV_TEST_DATA;
  for (const auto& [name, file] : std::vector<std::pair<std::string, std::string>>{
           {"rho-small", "rho_small.md"}, {"rho-six", "rho_six.md"}, {"pp2", "pp2.md"}, {"np-scan", "np_scan.md"}}) {
    const Run r = run({"tables", name});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(dir + "/" + file));
  }
}

TEST_CASE("lie subcommands read and write the JSON schema") {
  const FieldRef F4 = make_field(2, 2);
  const std::string alg = temp_file("w12", io::algebra_to_json(build_w12(F4)));
  const json check = run_json({"lie", "check", alg});
  CHECK(check["result"]["valid"] == true);
  CHECK(run_json({"lie", "class", alg})["result"]["class"] == "NonNilpotent");

  const std::string good = temp_file("w12_d", io::map_to_json(w12_derivation(F4, FqElem::generator(F4))));
  const json d = run_json({"lie", "derivation", alg, "--map", good});
  CHECK(d["result"]["derivation"] == true);
  CHECK(d["result"]["order"] == 3);

  const std::string heis = temp_file("heis", io::algebra_to_json(build_heisenberg(make_field(5, 1))));
  const std::string ident = temp_file("ident", io::map_to_json(LinearMap::identity(make_field(5, 1), 3)));
  const json bad = run_json({"lie", "derivation", heis, "--map", ident}, cli::kFalse);
  CHECK(bad["result"]["violation"] == json::array({1, 2}));
  CHECK(run_json({"lie", "class", heis})["result"]["class"] == 2);

  const std::string jac = temp_file(
      "jacobi", json::parse(R"({"p":5,"dim":3,"bracket":[{"i":1,"j":2,"value":["1","0","0"]},{"i":1,"j":3,"value":["0","1","0"]}]})"));
  const json jv = run_json({"lie", "check", jac}, cli::kFalse);
  CHECK(jv["result"]["indices"] == json::array({1, 2, 3}));

  const json w = run_json({"lie", "witness", "7", "2", "--exact-order"});
  CHECK(w["result"]["order"] == 7);
  CHECK(w["result"]["annihilated"] == true);
  CHECK(w["result"]["nilpotency"]["class"] == "NonNilpotent");
  // The emitted algebra and map load back and still form a derivation.
  const std::string walg = temp_file("wit", w["result"]["algebra"]);
  const std::string wmap = temp_file("witmap", json{{"matrix", w["result"]["map"]}});
  CHECK(run_json({"lie", "derivation", walg, "--map", wmap})["result"]["derivation"] == true);

  CHECK(run({"lie", "check", "/nonexistent/file.json"}).code == cli::kUsage);
  for (const auto& f : {alg, good, heis, ident, jac, walg, wmap}) std::remove(f.c_str());
}
