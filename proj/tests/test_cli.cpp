#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmac/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qmac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("compute") {
  auto r = run({"compute", "A1", "--lambda", "2", "--w", "s1", "--model", "qls"});
  CHECK(r.code == 0);
  CHECK(r.out == "x^[2] + x^[-2] + 1 + q\n");

  r = run({"compute", "--type", "A1", "--lambda", "0", "--w", "e"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"compute", "A2", "--lambda", "1,0", "--w", "s2"});
  CHECK(r.code == 0);
  CHECK(r.err.find("note:") != std::string::npos);
  CHECK(r.out == run({"compute", "A2", "--lambda", "1,0"}).out);

  for (const char* model : {"alcove", "os", "demazure"})
    CHECK(run({"compute", "B2", "--lambda", "1,1", "--w", "s1 s2", "--model", model}).out ==
          run({"compute", "B2", "--lambda", "1,1", "--w", "s1 s2", "--model", "qls"}).out);
}

TEST_CASE("compute json and latex") {
  auto r = run({"compute", "A1", "--lambda", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "A1");
  CHECK(j["lambda"] == nlohmann::json::array({2}));
  CHECK(j["model"] == "qls");
  CHECK(j["terms"].size() == 2);
  r = run({"compute", "A1", "--lambda", "2", "--format", "latex"});
  CHECK(r.out == "e^{2\\varpi_{1}} + q\n");
}

TEST_CASE("crosscheck") {
  auto r = run({"crosscheck", "A1", "--lambda", "2", "--all-w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2/2 agree (4 models)") != std::string::npos);
  r = run({"crosscheck", "A2", "--lambda", "1,1", "--all-w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6/6 agree (4 models)") != std::string::npos);
  r = run({"crosscheck", "A2", "--lambda", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/1 agree") != std::string::npos);
  r = run({"crosscheck", "A2", "--lambda", "1,1", "--all-w", "--chain-tiebreak", "s2 s1 s2"});
  CHECK(r.code == 0);
}

TEST_CASE("export") {
  auto r = run({"export", "qbg", "A2"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "[label=\"") == 6 + 15);
  CHECK(count(r.out, "->") == 15);
  CHECK(count(r.out, "style=dashed") == 7);

  r = run({"export", "chain", "A1", "--lambda", "2"});
  REQUIRE(r.code == 0);
  auto chain = nlohmann::json::parse(r.out);
  CHECK(chain.size() == 2);
  CHECK(chain[1]["d"] == "1/2");

  r = run({"export", "qls", "--lambda", "0"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 1);

  r = run({"export", "qls", "A1", "--lambda", "2"});
  REQUIRE(r.code == 0);
  auto paths = nlohmann::json::parse(r.out);
  CHECK(paths.size() == 4);
  for (const auto& p : paths) {
    CHECK(p.contains("dirs"));
    CHECK(p.contains("cuts"));
    CHECK(p.contains("wt"));
    CHECK(p.contains("deg"));
  }

  r = run({"export", "admissible", "A2", "--lambda", "1,0"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 3);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "qmac_cli_test.dot";
  auto r = run({"export", "qbg", "A1", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"export", "qbg", "A1"}).out);
  std::filesystem::remove(path);

  r = run({"export", "qbg", "A1", "--out", "/nonexistent-dir/x/y.dot"});
  CHECK(r.code == 4);
}

TEST_CASE("determinism") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"compute", "B2", "--lambda", "1,1", "--all-w", "--format", "json"},
        std::vector<std::string>{"export", "admissible", "G2", "--lambda", "1,0"},
        std::vector<std::string>{"export", "qbg", "B3"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"compute", "X9"}).code == 2);
  CHECK(run({"compute", "A2", "--lambda", "1"}).code == 2);
  CHECK(run({"compute", "A2", "--lambda", "1,-1"}).code == 2);
  CHECK(run({"compute", "A2", "--lambda", "a,b"}).code == 2);
  CHECK(run({"compute", "A2", "--w", "s3"}).code == 2);
  CHECK(run({"compute", "A2", "--model", "magic"}).code == 2);
  CHECK(run({"compute", "A2", "--chain-tiebreak", "s1 s2"}).code == 2);
  CHECK(run({"export", "graph", "A2"}).code == 2);
  CHECK(run({"export", "chain", "A2", "--format", "dot"}).code == 2);
  CHECK(run({"compute", "E8"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
