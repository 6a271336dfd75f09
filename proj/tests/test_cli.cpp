// End-to-end checks of the command line tool: exit codes, file outputs,
// and byte-stable reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ubcw/json_io.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(UBCW_BIN) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const std::string dir = "/tmp/ubcw_cli_test";

struct Workspace {
  Workspace() {
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  }
};

Workspace workspace;

}  // namespace

TEST_CASE("build writes a loadable complex") {
  CHECK(run("build tits-a --p 2 --n 3 --out " + dir + "/ta.json") == 0);
  auto x = ubcw::complex_from_json(slurp(dir + "/ta.json"));
  CHECK(x.count(0) == 14);
  CHECK(x.count(1) == 21);
  CHECK(x.validate().ok());

  CHECK(run("build horn --n 2 --k 0 --out " + dir + "/horn.json") == 0);
  auto h = ubcw::complex_from_json(slurp(dir + "/horn.json"));
  CHECK(h.count(1) == 2);
}

TEST_CASE("homology reports the building's top rank") {
  REQUIRE(run("build tits-a --p 2 --n 3 --out " + dir + "/ta.json") == 0);
  CHECK(run("homology --input " + dir + "/ta.json --out " + dir + "/h.json") == 0);
  auto text = slurp(dir + "/h.json");
  CHECK(text.find("\"betti\": [\n    \"0\",\n    \"8\"\n  ]") != std::string::npos);
}

TEST_CASE("ubc measures the horn exactly and sampling stays below") {
  REQUIRE(run("build horn --n 3 --k 0 --out " + dir + "/h30.json") == 0);
  CHECK(run("ubc --input " + dir + "/h30.json --q 0 --out " + dir + "/u.json") == 0);
  auto text = slurp(dir + "/u.json");
  CHECK(text.find("\"mode\": \"exact\"") != std::string::npos);
  CHECK(text.find("\"value\": \"1/2\"") != std::string::npos);

  CHECK(run("ubc --input " + dir + "/h30.json --q 1 --mode sampled --samples 8"
            " --seed 3 --out " + dir + "/us.json") == 0);
  auto sampled = slurp(dir + "/us.json");
  CHECK(sampled.find("\"mode\": \"sampled\"") != std::string::npos);
  CHECK(sampled.find("\"sample_count\": 8") != std::string::npos);
}

TEST_CASE("minfill emits the witness with its exact norm") {
  REQUIRE(run("build horn --n 2 --k 0 --out " + dir + "/h20.json") == 0);
  // A vertex difference fills by the unique edge path through the apex.
  ubcw::Chain c;
  c.q = 0;
  c.set("1", ubcw::Rat(1));
  c.set("2", ubcw::Rat(-1));
  ubcw::save_text(dir + "/c.json", ubcw::chain_to_json(c));
  CHECK(run("minfill --input " + dir + "/h20.json --chain " + dir +
            "/c.json --q 0 --out " + dir + "/f.json") == 0);
  auto text = slurp(dir + "/f.json");
  CHECK(text.find("\"fill_norm\": \"2\"") != std::string::npos);
}

TEST_CASE("certify evaluates rules and rejects bad arity") {
  CHECK(run("certify --rule k_tits --args 3 --out " + dir + "/k.json") == 0);
  CHECK(slurp(dir + "/k.json").find("\"value\": \"22\"") != std::string::npos);
  CHECK(run("certify --rule k_tits --args 3 4") == 1);
  CHECK(run("certify --rule nonsense --args 1") == 1);
  CHECK(run("certify --rule k_sd_down --args 1 inf --out " + dir + "/ki.json") == 0);
  CHECK(slurp(dir + "/ki.json").find("\"value\": \"inf\"") != std::string::npos);
}

TEST_CASE("stable-range answers both families") {
  CHECK(run("stable-range gl --n 11 --sr 1 --q 4 --out " + dir + "/g.json") == 0);
  auto text = slurp(dir + "/g.json");
  CHECK(text.find("\"gamma_tilde\": 3") != std::string::npos);
  CHECK(run("stable-range aut --n 11 --q 4 --out " + dir + "/a.json") == 0);
  CHECK(slurp(dir + "/a.json").find("\"tau_tilde\": 1") != std::string::npos);
  CHECK(run("stable-range nope --n 3 --q 0") == 1);
}

TEST_CASE("exit codes distinguish precondition, budget, and io failures") {
  CHECK(run("build no-such-family") == 1);
  CHECK(run("homology --input /nonexistent/x.json") == 3);
  CHECK(run("build unimodular --m 3 --n 2 --max-vertices 2") == 2);
  CHECK(run("nonsense-subcommand") == 1);
  CHECK(run("") == 1);
}

TEST_CASE("desk reports are byte-identical for a fixed seed") {
  std::string r1 = " report --seed 11 --out-json " + dir + "/r1.json --out-csv " +
                   dir + "/r1.csv";
  std::string r2 = " report --seed 11 --out-json " + dir + "/r2.json --out-csv " +
                   dir + "/r2.csv";
  CHECK(run(r1) == 0);
  CHECK(run(r2) == 0);
  CHECK(slurp(dir + "/r1.json") == slurp(dir + "/r2.json"));
  CHECK(slurp(dir + "/r1.csv") == slurp(dir + "/r2.csv"));
  CHECK(slurp(dir + "/r1.csv").rfind(
            "family,params,degree,betti,mode,value,seed,rule,certified,verdict",
            0) == 0);
}
