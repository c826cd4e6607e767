#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "spherical/text.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "spherical");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status =
      spherical::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"classify", "24531", "--explain"});
  CHECK(r.status == 1);
  CHECK(r.out.find("not spherical") != std::string::npos);
  CHECK(r.out.find("24531 at (1,2,3,4,5)") != std::string::npos);

  r = run({"classify", "12345"});
  CHECK(r.status == 0);
  CHECK(r.out == "12345: spherical\n");

  r = run({"classify", "513426", "--backend=all"});
  CHECK(r.out.find("all backends agree: pattern,boolean,divisible,definition") !=
        std::string::npos);

  for (const char* b : {"pattern", "boolean", "divisible", "definition"}) {
    CHECK(run({"classify", "24531", std::string("--backend=") + b}).status == 1);
  }

  r = run({"classify", "54321", "--backend=definition", "--explain"});
  CHECK(r.status == 0);
  CHECK(r.out.find("[") != std::string::npos);
}

TEST_CASE("usage errors go to the diagnostic stream only") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "1123"},
           {"classify", "123", "--backend=bogus"},
           {"crosscheck", "--n=8"},
           {"crosscheck", "--n=7", "--backends=pattern,definition"},
           {"count", "--max-n=9"},
           {"interval", "654321"},
           {"reduced-words", "987654321"},
           {"bruhat", "12", "123"},
           {"patterns", "--subset=nope"},
           {"nonsense"},
           {}}) {
    const auto r = run(args);
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("crosscheck") {
  auto r = run({"crosscheck", "--n=5"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).at(0) == "120 permutations, 99 spherical, 0 disagreements");

  r = run({"crosscheck", "--n=1"});
  CHECK(lines(r.out).at(0) == "1 permutation, 1 spherical, 0 disagreements");

  r = run({"crosscheck", "--n=6", "--format=json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["total"] == 720);
  CHECK(j["disagreements"].empty());
  CHECK(j["backends"].size() == 4);

  r = run({"crosscheck", "--n=4", "--backends=pattern,divisible", "--format=csv"});
  CHECK(lines(r.out).at(1) == "4,24,24,\"pattern,divisible\",0");
}

TEST_CASE("force prints an estimate first") {
  const auto r = run({"crosscheck", "--n=7", "--backends=pattern,boolean,definition", "--force"});
  CHECK(r.status == 0);
  CHECK(r.err.find("estimate:") != std::string::npos);
  CHECK(lines(r.out).at(0) == "5040 permutations, 1590 spherical, 0 disagreements");
}

TEST_CASE("count") {
  auto r = run({"count", "--max-n=5", "--format=csv"});
  CHECK(lines(r.out).back() == "5,99,120,0.825");
  r = run({"count", "--max-n=1", "--format=csv"});
  CHECK(r.out == "1,1,1,1.0\n");

  r = run({"count", "--max-n=7", "--format=json"});
  const auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 5; i < rows.size(); ++i) {
    CHECK(rows[i]["ratio"].get<double>() <= rows[i - 1]["ratio"].get<double>());
  }
}

TEST_CASE("patterns") {
  auto r = run({"patterns"});
  CHECK(lines(r.out).size() == 21);
  r = run({"patterns", "--subset=both"});
  const auto both = lines(r.out);
  REQUIRE(both.size() == 2);
  CHECK(both[0].rfind("45231", 0) == 0);
  CHECK(both[1].rfind("53412", 0) == 0);
  CHECK(lines(run({"patterns", "--subset=321"}).out).size() == 11);
  CHECK(lines(run({"patterns", "--subset=3412"}).out).size() == 12);
  r = run({"patterns", "--verify"});
  CHECK(r.status == 0);
  CHECK(r.out == "catalog characterizations: PASS\n");
}

TEST_CASE("reduced words, bruhat, interval") {
  CHECK(run({"reduced-words", "321"}).out == "[1,2,1]\n[2,1,2]\n");
  CHECK(lines(run({"reduced-words", "987654321", "--limit=4"}).out).size() == 4);

  CHECK(run({"bruhat", "2143", "3142"}).out == "true\n");
  const auto r = run({"bruhat", "321", "312", "--explain"});
  CHECK(lines(r.out).at(0) == "false");
  CHECK(r.out.find("first failing prefix: 2") != std::string::npos);

  CHECK(lines(run({"interval", "2143"}).out).at(0) == "4 elements, boolean: true");
  const auto edges = lines(run({"interval", "2143", "--edges"}).out);
  CHECK(edges.size() == 6);
  CHECK(edges.at(2) == "1234 < 1243");
  CHECK(run({"interval", "654321", "--rank-bound=15"}).status == 0);
}

TEST_CASE("emitted permutations parse back") {
  const auto j = nlohmann::json::parse(run({"interval", "3412", "--format=json"}).out);
  for (const auto& e : j["elements"]) {
    const auto text = e.get<std::string>();
    CHECK(spherical::to_string(spherical::parse_permutation(text)) == text);
  }
  for (const auto& line : lines(run({"patterns"}).out)) {
    const auto text = line.substr(0, 5);
    CHECK(spherical::to_string(spherical::parse_permutation(text)) == text);
  }
  const auto big = run({"classify", "2,1,3,4,5,6,7,8,9,10"});
  CHECK(big.out.rfind("2,1,3,4,5,6,7,8,9,10: spherical", 0) == 0);
}
