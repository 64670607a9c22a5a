#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "spw/clique_expression.hpp"
#include "spw/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SPW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& body) {
  fs::path dir = fs::temp_directory_path() / "spw_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string field(const std::string& out, const std::string& key) {
  std::size_t at = out.find(key + ": ");
  REQUIRE(at != std::string::npos);
  std::size_t start = at + key.size() + 2;
  return out.substr(start, out.find('\n', start) - start);
}

const std::string kU24 = "3 2 4 4\n1 2 3 4\n1 0 1 1\n0 1 1 2\n";
const std::string kCodeC = "2 3 6\n1 0 0 0 0 1\n0 1 0 1 0 0\n0 0 1 0 1 0\n";
const std::string kC5 = "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";
const std::string kK4 = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("pathwidth decision and exact") {
  std::string u24 = write_temp("u24.txt", kU24);
  Run no = run("pathwidth --input " + u24 + " --k 1");
  CHECK(no.code == 1);
  CHECK(field(no.out, "answer") == "NO");
  Run yes = run("pathwidth --input " + u24 + " --k 2");
  CHECK(yes.code == 0);
  CHECK(field(yes.out, "answer") == "YES");
  Run exact = run("pathwidth --input " + u24 + " --exact");
  CHECK(exact.code == 0);
  CHECK(field(exact.out, "width") == "2");
}

TEST_CASE("pathwidth with a supplied decomposition") {
  std::string u24 = write_temp("u24.txt", kU24);
  std::string bd = write_temp("u24.bd", "((1 2) (3 4))\n");
  Run r = run("pathwidth --input " + u24 + " --k 2 --bd " + bd);
  CHECK(r.code == 0);
  Run bad = run("pathwidth --input " + u24 + " --k 2 --bd " + write_temp("bad.bd", "((1 2) 3)\n"));
  CHECK(bad.code == 2);
}

TEST_CASE("json output parses and is consistent") {
  std::string u24 = write_temp("u24.txt", kU24);
  Run r = run("pathwidth --input " + u24 + " --exact --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["answer"] == "EXACT");
  CHECK(j["width"] == 2);
  CHECK(j["layout"].size() == 4);
  CHECK(j["cuts"].size() == 3);
  int mx = 0;
  for (int c : j["cuts"]) mx = std::max(mx, c);
  CHECK(mx == 2);
  CHECK(j.contains("elapsed_ms"));
  Run no = run("pathwidth --input " + u24 + " --k 1 --json");
  CHECK(no.code == 1);
  CHECK(nlohmann::json::parse(no.out)["layout"].is_null());
}

TEST_CASE("trellis subcommand") {
  std::string c = write_temp("c.txt", kCodeC);
  Run yes = run("trellis --input " + c + " --k 1");
  CHECK(yes.code == 0);
  Run exact = run("trellis --input " + c + " --exact");
  CHECK(field(exact.out, "trellis-width") == "1");
  CHECK(field(exact.out, "max layer size (input order)") == "8");
  CHECK(field(exact.out, "max layer size (permutation)") == "2");
  Run dec = run("trellis --input " + c + " --exact --decode 110101");
  CHECK(dec.code == 0);
  CHECK(field(dec.out, "distance") == "0");
  CHECK(field(dec.out, "decoded") == "1 1 0 1 0 1");
  Run one = run("trellis --input " + c + " --exact --decode 0,1,0,1,0,1");
  CHECK(field(one.out, "distance") == "1");
  CHECK(run("trellis --input " + c + " --exact --decode 1101").code == 2);
  std::string zero = write_temp("zero.txt", "2 1 3\n0 0 0\n");
  CHECK(field(run("trellis --input " + zero + " --exact").out, "trellis-width") == "0");
}

TEST_CASE("matroid subcommand") {
  std::string u24 = write_temp("u24g.txt", "3 2 4\n1 0 1 1\n0 1 1 2\n");
  CHECK(run("matroid --input " + u24 + " --k 1").code == 1);
  CHECK(field(run("matroid --input " + u24 + " --exact").out, "path-width") == "2");
}

TEST_CASE("linear rank-width subcommand") {
  std::string c5 = write_temp("c5.txt", kC5);
  Run r = run("lrw --input " + c5 + " --exact --expr");
  CHECK(r.code == 0);
  CHECK(field(r.out, "linear rank-width") == "2");
  spw::Graph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  CHECK(spw::evaluate(spw::parse_clique_expression(field(r.out, "expression")), 5) == g);
  std::string k4 = write_temp("k4.txt", kK4);
  CHECK(run("lrw --input " + k4 + " --k 1").code == 0);
  CHECK(run("lrw --input " + c5 + " --k 1").code == 1);
}

TEST_CASE("oracle subcommands") {
  CHECK(run("oracle typical 1 3 2 5 2 2 4 4 3").out == "1 5 2 4 3\n");
  std::string u24 = write_temp("u24.txt", kU24);
  CHECK(field(run("oracle pathwidth --input " + u24).out, "width") == "2");
  CHECK(field(run("oracle branchwidth --input " + u24).out, "width") == "2");
}

TEST_CASE("input errors exit with code 2") {
  std::string bad = write_temp("bad.txt", "3 2 4 4\n1 2 3 4\n1 0 x 1\n");
  CHECK(run("pathwidth --input " + bad + " --k 1").code == 2);
  CHECK(run("pathwidth --input /nonexistent/file --k 1").code == 2);
  std::string u24 = write_temp("u24.txt", kU24);
  CHECK(run("pathwidth --input " + u24).code == 2);
  CHECK(run("pathwidth --input " + u24 + " --k 1 --exact").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  std::string loop = write_temp("loop.txt", "2 1\n1 1\n");
  CHECK(run("lrw --input " + loop + " --exact").code == 2);
}
