#include <doctest/doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "report.hpp"

using frobkit::cli::json;

namespace {

const std::string kData = FROBKIT_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "frobkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = frobkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return kData + "/" + f; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("frobcheck passes on the standard algebras") {
    for (const char* f : {"q.alg", "dual.alg", "qxq.alg"}) {
      Result r = cli({"frobcheck", data(f), "--max-degree", "2"});
      INFO(f << r.err);
      REQUIRE(r.code == 0);
      json d = r.doc();
      CHECK(d["schema_version"] == "1.0");
      CHECK(d["command"]["name"] == "frobcheck");
      CHECK(d["data"]["frobenius"]["all_pass"] == true);
      CHECK(d["data"]["frobenius"]["axioms"].size() == 10);
    }
  }

  TEST_CASE("surface and hochschild") {
    Result s = cli({"surface", data("dual.alg"), "--genus", "1"});
    REQUIRE(s.code == 0);
    CHECK(s.doc()["data"]["state_space"]["dims"] == json::parse(R"({"0":2,"1":1,"2":1,"3":1,"4":1})"));
    Result h = cli({"hochschild", data("cubic.alg"), "--max-degree", "3"});
    REQUIRE(h.code == 0);
    CHECK(h.doc()["data"]["sequence"] == json::parse("[3,2,2,2]"));
    Result q = cli({"surface", data("qxq.alg"), "--genus", "3", "--max-degree", "2"});
    CHECK(q.doc()["data"]["state_space"]["dims"] == json::parse(R"({"0":2,"1":0,"2":0})"));
  }

  TEST_CASE("eval") {
    Result r = cli({"eval", data("torus.bord"), data("dual.alg")});
    REQUIRE(r.code == 0);
    json d = r.doc()["data"];
    CHECK(d["closed"] == true);
    CHECK(d["homology"]["dims"]["0"] == 2);
    CHECK(d["homology"]["dims"]["4"] == 1);
    Result g2 = cli({"eval", data("genus2.bord"), data("dual.alg"), "--max-degree", "3"});
    Result s2 = cli({"surface", data("dual.alg"), "--genus", "2", "--max-degree", "3"});
    CHECK(g2.doc()["data"]["homology"] == s2.doc()["data"]["state_space"]);
  }

  TEST_CASE("nogo") {
    Result r = cli({"nogo", data("qxq.alg"), "--max-degree", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["data"]["obstruction"]["verdict"] == "DirectSumOfPoints");
    CHECK(r.doc()["data"]["obstruction"]["hom_dim"] == 2);
    CHECK(r.doc()["data"]["contradiction"] == false);
    CHECK(cli({"nogo", data("dual.alg"), "--max-degree", "1"}).doc()["data"]["obstruction"]["verdict"] ==
          "NonReducedOutOfScope");
  }

  TEST_CASE("input errors exit 2 with an error document") {
    Result ar = cli({"eval", data("broken.bord"), data("dual.alg")});
    CHECK(ar.code == 2);
    CHECK(ar.doc()["error"]["kind"] == "ArityError");
    CHECK(ar.doc()["error"]["expected"] == 2);
    Result dec = cli({"frobcheck", data("broken.alg")});
    CHECK(dec.code == 2);
    CHECK(dec.doc()["error"]["kind"] == "AlgebraFileError");
    CHECK(dec.doc()["error"]["line"] == 4);
    CHECK(cli({"frobcheck", data("noncomm.alg")}).code == 2);
    CHECK(cli({"frobcheck", data("missing.alg")}).code == 2);
    CHECK(cli({"surface", data("dual.alg")}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"surface", data("dual.alg"), "--genus", "-1"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("data section is deterministic") {
    for (int i = 0; i < 2; ++i) {
      json a = cli({"frobcheck", data("cubic.alg"), "--max-degree", "1"}).doc();
      json b = cli({"frobcheck", data("cubic.alg"), "--max-degree", "1"}).doc();
      CHECK(a["data"] == b["data"]);
      CHECK(a["command"] == b["command"]);
    }
  }

  TEST_CASE("FROBKIT_MAX_DEGREE sets the default cutoff") {
    setenv("FROBKIT_MAX_DEGREE", "2", 1);
    Result r = cli({"hochschild", data("dual.alg")});
    CHECK(r.doc()["data"]["sequence"] == json::parse("[2,1,1]"));
    CHECK(cli({"hochschild", data("dual.alg"), "--max-degree", "1"}).doc()["data"]["cutoff"] == 1);
    setenv("FROBKIT_MAX_DEGREE", "two", 1);
    CHECK(cli({"hochschild", data("dual.alg")}).code == 2);
    unsetenv("FROBKIT_MAX_DEGREE");
    CHECK(cli({"hochschild", data("dual.alg")}).doc()["data"]["cutoff"] == 4);
  }

  TEST_CASE("output file") {
    const std::string path = "frobkit_cli_test.json";
    Result r = cli({"-o", path, "surface", data("q.alg"), "--genus", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    json d = json::parse(in);
    CHECK(d["data"]["state_space"]["dims"]["0"] == 1);
    std::remove(path.c_str());
  }
}
