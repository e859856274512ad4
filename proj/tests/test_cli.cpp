#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string bin() {
  const char* p = std::getenv("NORMALGRAPH_BIN");
  REQUIRE_MESSAGE(p != nullptr, "NORMALGRAPH_BIN must point at the CLI");
  return p;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WEXITSTATUS(status);
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
}

std::string c9_edges() {
  std::ostringstream os;
  os << "9 9\n";
  for (int i = 0; i < 9; ++i)
    os << std::min(i, (i + 1) % 9) << ' ' << std::max(i, (i + 1) % 9) << '\n';
  return os.str();
}

}  // namespace

TEST_CASE("gen produces K4 and is deterministic") {
  RunResult a = run("gen --n 4 --d 3 --seed 0");
  CHECK(a.code == 0);
  CHECK(a.out.substr(0, 4) == "4 6\n");
  RunResult b = run("gen --n 4 --d 3 --seed 0");
  CHECK(a.out == b.out);

  RunResult bad = run("gen --n 5 --d 3");
  CHECK(bad.code != 0);
}

TEST_CASE("cover and check round trip on C9") {
  write_file("cli_c9.txt", c9_edges());
  RunResult cov = run("cover --in cli_c9.txt --out cli_c9.cover "
                      "--trace cli_c9.trace");
  REQUIRE(cov.code == 0);

  RunResult chk = run("check --in cli_c9.txt --cover cli_c9.cover "
                      "--trace cli_c9.trace --cap 9");
  CHECK(chk.code == 0);
  nlohmann::json j = nlohmann::json::parse(chk.out);
  CHECK(j["nice"]["verdict"] == "Nice");
  CHECK(j["lemma"]["result"] == "Holds");

  std::remove("cli_c9.txt");
  std::remove("cli_c9.cover");
  std::remove("cli_c9.trace");
}

TEST_CASE("cover rejects isolated vertices") {
  write_file("cli_iso.txt", "3 1\n0 1\n");
  RunResult r = run("cover --in cli_iso.txt");
  CHECK(r.code == 1);
  std::remove("cli_iso.txt");
}

TEST_CASE("check flags a NotNice cover") {
  write_file("cli_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  write_file("cli_c5.cover", "cover k=2\n0 1\n2 3\n");
  RunResult r = run("check --in cli_c5.txt --cover cli_c5.cover --cap 5");
  CHECK(r.code == 2);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["nice"]["verdict"] == "NotNice");
  CHECK(j["nice"]["witness"].size() == 5);
  std::remove("cli_c5.txt");
  std::remove("cli_c5.cover");
}

TEST_CASE("oracle modes") {
  write_file("cli_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  RunResult n5 = run("oracle --in cli_c5.txt --mode normal");
  CHECK(n5.code == 2);
  CHECK(nlohmann::json::parse(n5.out)["verdict"] == "NotNormal");

  write_file("cli_c9.txt", c9_edges());
  RunResult n9 = run("oracle --in cli_c9.txt --mode normal");
  CHECK(n9.code == 0);
  CHECK(nlohmann::json::parse(n9.out)["verdict"] == "Normal");

  write_file("cli_c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
  RunResult t1 = run("oracle --in cli_c6.txt --mode t1");
  CHECK(t1.code == 0);
  CHECK(nlohmann::json::parse(t1.out)["verdict"] == "Consistent");

  RunResult comp = run("oracle --in cli_c5.txt --mode complement");
  CHECK(comp.code == 0);
  CHECK(nlohmann::json::parse(comp.out)["verdict"] == "Consistent");

  std::remove("cli_c5.txt");
  std::remove("cli_c9.txt");
  std::remove("cli_c6.txt");
}

TEST_CASE("pipeline emits a JSON report deterministically") {
  RunResult a = run("pipeline --n 30 --d 3 --seed 4");
  RunResult b = run("pipeline --n 30 --d 3 --seed 4");
  CHECK(a.out == b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["params"]["n"] == 30);
  CHECK(j["params"]["seed"] == 4);
  CHECK(j.contains("verdict"));

  RunResult bad = run("pipeline --n 30 --d 2 --seed 4");
  CHECK(bad.code == 1);
}

TEST_CASE("experiment emits CSV with fractions summing to one") {
  RunResult r = run("experiment --n 20 --d 3 --trials 3 --seed 0");
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string header, row;
  REQUIRE(std::getline(is, header));
  CHECK(header.find("frac_certified") != std::string::npos);
  REQUIRE(std::getline(is, row));
  // columns 4,5,6 are certified/failed/inconclusive counts
  std::vector<std::string> cols;
  std::istringstream rs(row);
  std::string col;
  while (std::getline(rs, col, ',')) cols.push_back(col);
  REQUIRE(cols.size() >= 6);
  CHECK(std::stoi(cols[3]) + std::stoi(cols[4]) + std::stoi(cols[5]) == 3);
}
