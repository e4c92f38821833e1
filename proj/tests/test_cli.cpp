#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = toughham::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json first_line(const std::string& s) {
  return nlohmann::json::parse(s.substr(0, s.find('\n')));
}

}  // namespace

TEST_CASE("analyze the cocktail party graph") {
  auto r = run({"analyze"}, "G]~v~w\n");
  REQUIRE(r.code == 0);
  auto j = first_line(r.out);
  CHECK(j["toughness"]["num"] == 3);
  CHECK(j["toughness"]["den"] == 1);
  CHECK(j["alpha"] == 2);
  CHECK(j["kappa"] == 6);
  CHECK(j["k2u3k1_free"] == true);
  CHECK(r.out.find("\"toughness\":{\"num\":3,\"den\":1}") != std::string::npos);
}

TEST_CASE("single-graph commands") {
  CHECK(run({"hamilton"}, "IheA@GUAo\n").out == "{\"hamiltonian\":false}\n");
  CHECK(first_line(run({"toughness"}, "E~~w\n").out)["toughness"]["infinite"] == true);
  CHECK(first_line(run({"alpha"}, "IheA@GUAo\n").out)["alpha"] == 4);
  CHECK(first_line(run({"longest-cycle"}, "IheA@GUAo\n").out)["circumference"] == 9);
  CHECK(first_line(run({"free", "--pattern", "p4"}, "Dhc\n").out)["free"] == false);
  auto m = first_line(run({"menger", "--x1", "0", "--x2", "2", "--k", "2"}, "0 1\n1 2\n2 3\n3 0\n").out);
  CHECK(m["paths"] == nlohmann::json::parse("[[0,1,2],[0,3,2]]"));
  auto e = first_line(run({"extend", "--cycle", "0,1,2,3"}, "0 1\n1 2\n2 3\n3 0\n4 0\n4 1\n").out);
  CHECK(e["steps"][0]["rule"] == "R1");
  CHECK(e["cycle"] == nlohmann::json::parse("[0,4,1,2,3]"));
  CHECK(e["hamiltonian"] == true);
}

TEST_CASE("edge-list labels are preserved in output") {
  auto r = run({"hamilton"}, "10 20\n20 30\n30 10\n");
  CHECK(first_line(r.out)["cycle"] == nlohmann::json::parse("[10,20,30]"));
  auto bad = run({"menger", "--x1", "5", "--x2", "10", "--k", "1"}, "10 20\n20 30\n30 10\n");
  CHECK(bad.code == 2);
}

TEST_CASE("table output") {
  auto r = run({"alpha", "--format", "table"}, "Dhc\n");
  CHECK(r.out.find("alpha: 2") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"analyze", "--bogus"}, "Dhc\n").code == 2);
  auto r = run({"analyze"}, "Dhc\nD!!\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"analyze"}, "").code == 2);
  CHECK(run({"random", "--n", "4", "--p", "2", "--seed", "1"}).code == 2);
  CHECK(run({"enumerate", "--n", "11"}).code == 2);
  CHECK(run({"verify", "--checks", "THM1,XX"}, "Dhc\n").code == 2);
  CHECK(run({"extend", "--cycle", "0,2,1"}, "Dhc\n").code == 2);
}

TEST_CASE("enumerate and random") {
  auto r = run({"enumerate", "--n", "5", "--connected"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
  auto a = run({"random", "--n", "10", "--p", "1/2", "--seed", "42", "--count", "3"});
  auto b = run({"random", "--n", "10", "--p", "0.5", "--seed", "42", "--count", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 3);
  auto warn = run({"enumerate", "--n", "9", "--filter", "k2u3k1-free", "--filter", "3-tough"});
  CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("verify emits one line per graph plus a summary") {
  auto r = run({"verify", "--checks", "THM1,L2.7", "--t", "1", "--t", "2"}, "Dhc\nE~~w\n");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> js;
  while (std::getline(lines, line)) js.push_back(nlohmann::json::parse(line));
  REQUIRE(js.size() == 3);
  CHECK(js[0]["graph6"] == "Dhc");
  CHECK(js[0]["reports"].size() == 3);
  CHECK(js[1]["reports"][0]["verdict"] == "pass");
  CHECK(js[2]["summary"]["graphs"] == 2);
  CHECK(js[2]["summary"]["fails"] == 0);
  auto s = run({"verify", "--checks", "THM1", "--n-max", "5", "--connected", "--summary-only"});
  CHECK(s.code == 0);
  CHECK(first_line(s.out)["summary"]["graphs"] == 1 + 1 + 2 + 6 + 21);
}
