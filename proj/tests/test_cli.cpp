#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "spexkm/graph.hpp"
#include "spexkm/graph6.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "spexkm");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = spexkm::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> docs;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) docs.push_back(json::parse(line));
  return docs;
}

}  // namespace

TEST_CASE("compute examples") {
  auto r = run({"compute", "--spex-main", "-n", "13", "-k", "2", "-s", "1"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["value"].get<double>() == doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));
  CHECK(doc["regime"] == "theorem");

  r = run({"compute", "--ex", "-n", "6", "-k", "2", "-s", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == 8);

  r = run({"compute", "--spex-matching", "-n", "7", "-s", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("compute emits one document per quantity and a stable CSV header") {
  auto r = run({"compute", "--spex-main", "--spex-turan", "--ex", "--ex-eg", "-n", "10", "-k", "3", "-s", "2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 4);

  r = run({"--format", "csv", "compute", "--spex-main", "-n", "6", "-k", "2", "-s", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("quantity,n,k,s,value,regime,witness,competitor\n", 0) == 0);
  CHECK(r.out.find("conjectural-small-n") != std::string::npos);
  CHECK(r.out.find("2.449489743") != std::string::npos);

  // global options may also follow the subcommand
  CHECK(run({"compute", "--spex-turan", "-n", "5", "-k", "2", "--format", "csv"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"compute", "--spex-main", "-n", "13", "-k", "2"}).code == 2);
  CHECK(run({"compute", "--spex-main", "-n", "13", "-k", "1", "-s", "1"}).code == 2);
  CHECK(run({"compute", "-n", "13", "-k", "2", "-s", "1"}).code == 2);
  CHECK(run({"--format", "xml", "compute", "--ex", "-n", "6", "-k", "2", "-s", "2"}).code == 2);
  CHECK(run({"search", "-n", "11", "-k", "2", "-s", "2"}).code == 2);
  CHECK(run({"search", "-n", "9", "-k", "2", "-s", "2", "--objective", "spectral"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("spectral reads graph6 lines") {
  const std::string input = "D~{\n" + spexkm::graph6_encode(spexkm::complete_multipartite({2, 3})) + "\nF????\n";
  auto r = run({"spectral"}, input);
  REQUIRE(r.code == 0);
  const auto docs = lines(r.out);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0]["lambda"].get<double>() == doctest::Approx(4.0));
  CHECK(std::abs(docs[1]["lambda"].get<double>() - 2.449489743) <= 1e-9);
  CHECK(docs[2]["lambda"].get<double>() == 0.0);
  CHECK(docs[1]["line"] == 2);

  r = run({"spectral"}, "D~{\nD~\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("search emits the report") {
  auto r = run({"search", "-n", "6", "-k", "2", "-s", "2", "--objective", "spectral"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["best_value"].get<double>() == doctest::Approx(2.8284271).epsilon(1e-7));
  const std::string k24 = spexkm::graph6_encode(spexkm::complete_multipartite({4, 2}));
  bool found = false;
  for (const auto& w : doc["witnesses"]) found = found || w == k24;
  CHECK(found);

  r = run({"search", "-n", "9", "-k", "2", "-s", "1", "--objective", "spectral", "--force"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["warnings"].size() == 1);
}

TEST_CASE("threshold") {
  auto r = run({"threshold", "-k", "3", "-s", "1"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["threshold"] == 5);
  CHECK(doc["bound"] == 13);

  r = run({"--format", "csv", "threshold", "--k-max", "3", "--s-max", "2"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  CHECK(header == "k,s,threshold,bound,lambda_gkns,lambda_turan");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("verify exits 0 on a passing suite") {
  auto r = run({"verify", "--suite", "lemma24"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["passed"] == true);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "test_cli_out.json";
  auto r = run({"--out", path, "compute", "--spex-turan", "-n", "5", "-k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  json doc;
  file >> doc;
  CHECK(doc["value"].get<double>() == doctest::Approx(std::sqrt(6.0)));
  std::remove(path.c_str());
}
