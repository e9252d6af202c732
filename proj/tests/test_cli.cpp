#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eta/json_io.hpp"
#include "eta/verify.hpp"

namespace fs = std::filesystem;
using eta::Json;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ETAGROUP_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "etagroup_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tensor of cyclic groups") {
  auto r = run("tensor --builtin C2 C2 --trivial-actions");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["tensor_order"] == 2);
  CHECK(j["eta_order"] == 8);
  CHECK(j["all_passed"] == true);

  r = run("tensor --builtin C2 C3 --trivial-actions");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["tensor_order"] == 1);
}

TEST_CASE("nu reports") {
  auto r = run("nu --builtin C4");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["nu_order"] == 64);

  r = run("nu --builtin S3");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["all_passed"] == true);

  r = run("nu --presentation \"< a, b | a^2, b^3, (a b)^2 >\"");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["nu_order"] == 216);
}

TEST_CASE("golden output") {
  const auto r = run("nu --builtin C2");
  CHECK(r.status == 0);
  CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/nu_C2.json"));
  const auto t = run("tensor --builtin C2 C2 --trivial-actions");
  CHECK(t.out == slurp(std::string(GOLDEN_DIR) + "/tensor_C2_C2.json"));
}

TEST_CASE("exit codes") {
  CHECK(run("tensor --pair " + write("bad.json", "{\"G\": [1,\n")).status == 2);
  CHECK(run("nu --builtin NOPE").status == 2);
  CHECK(run("--no-such-flag").status == 2);
  CHECK(run("tensor --builtin C2 C2").status == 2);

  const Json incompatible = eta::pair_to_json(eta::incompatible_example().pair);
  auto r = run("tensor --pair " + write("incompatible.json", incompatible.dump()));
  CHECK(r.status == 4);
  const Json j = Json::parse(r.out);
  CHECK(j["compatible"] == false);
  CHECK(j.contains("failing_triple"));
  CHECK(run("compat --pair " + write("incompatible.json", incompatible.dump())).status == 4);

  Json invalid = incompatible;
  // H_on_G row for the non-identity of C2 made non-bijective
  for (auto& x : invalid["H_on_G"][1]) x = 0;
  CHECK(run("tensor --pair " + write("invalid.json", invalid.dump())).status == 3);

  CHECK(run("--max-cosets 10 nu --builtin S3").status == 5);
  CHECK(run("nu --builtin S3 --max-cosets 10").status == 5);
}

TEST_CASE("environment default for the coset cap") {
  const std::string cmd = std::string("ETA_MAX_COSETS=10 ") + ETAGROUP_PATH + " nu --builtin S3 >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 5);
}

TEST_CASE("verify") {
  auto r = run("verify --filter tensor_conjugation_identities --threads 1");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["claim"] == "tensor_conjugation_identities");
    CHECK_FALSE(j.contains("ms"));
    ++n;
  }
  CHECK(n > 10);

  r = run("--max-cosets 10 verify --filter decomposition");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"SKIPPED\"") != std::string::npos);
  CHECK(r.out.find("\"FAIL\"") == std::string::npos);

  const std::string corpus = write("corpus.json", R"({"schema": 1, "instances": [{"nu": "C3"}]})");
  r = run("verify --corpus " + corpus + " --timings");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"ms\"") != std::string::npos);
}

TEST_CASE("abelian utilities") {
  auto r = run("abelian snf \"[[2,0],[0,3]]\"");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["diagonal"] == Json::array({"1", "6"}));
  r = run("abelian tensor \"[6]\" \"[4]\"");
  CHECK(Json::parse(r.out)["result"] == Json::array({2}));
  r = run("abelian delta \"[2,4]\"");
  CHECK(Json::parse(r.out)["result"] == Json::array({2, 2, 4}));
  r = run("abelian pi --order 12");
  CHECK(Json::parse(r.out)["result"] == Json::array({2, 3}));
  CHECK(run("abelian tensor \"[x]\" \"[2]\"").status == 2);
}
