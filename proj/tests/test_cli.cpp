#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "sgfl/cli.hpp"

using namespace sgfl;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "sgfl");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verdict exit codes") {
  auto held = call({"verdict", "--gens", "6,9,20", "--m", "6", "--formula", "longest"});
  CHECK(held.code == kExitOk);
  CHECK(held.json()["verdict"]["holds"] == true);

  auto failed = call({"verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest", "--method", "oracle"});
  CHECK(failed.code == kExitOk);
  CHECK(failed.json()["verdict"]["holds"] == false);
  CHECK(failed.json()["verdict"]["counterexamples"][0]["element"] == 84);

  auto asserted = call({"--assert-holds", "verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest",
                        "--method", "oracle"});
  CHECK(asserted.code == kExitVerdictFalse);
}

TEST_CASE("reduced and full scope differ where the reduction misses a failure") {
  auto reduced = call({"verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest"});
  auto full = call({"verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest", "--scope", "full"});
  CHECK(reduced.json()["verdict"]["holds"] == true);
  CHECK(full.json()["verdict"]["holds"] == false);
}

TEST_CASE("input errors exit with 2 and a structured report") {
  auto bad = call({"minrepl", "--gens", "6,9,x", "--m", "6"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.json()["error"]["kind"] == "Parse");
  CHECK_FALSE(bad.err.empty());

  CHECK(call({"minrepl", "--gens", "6,9,20", "--m", "7"}).json()["error"]["kind"] == "MNotAtom");
  CHECK(call({"verdict", "--gens", "6,9,20,23", "--m", "6", "--method", "embdim3"}).json()["error"]["kind"] ==
        "NotEmbDim3");
  CHECK(call({"oracle", "--gens", "(2,0),(3,1),(0,5)", "--m", "(2,0)"}).json()["error"]["kind"] == "MissingBound");
  CHECK(call({"kunz", "point", "--m", "5", "--x", "0,1,5,1,2"}).json()["error"]["kind"] == "InequalityViolated");
  CHECK(call({"kunz", "point", "--m", "5", "--x", "0,1.5,2,1,2"}).json()["error"]["kind"] == "NotIntegerPoint");
  CHECK(call({"kunz", "point", "--m", "5", "--x", "0,0,0,0,0", "--verdict", "longest"}).json()["error"]["kind"] ==
        "MNotAtomAtPoint");
  CHECK(call({"verdict", "--gens", "6,9,20"}).code == kExitInputError);
  CHECK(call({"nonsense"}).code == kExitInputError);
}

TEST_CASE("budget") {
  auto tight = call({"--budget", "1", "minrepl", "--gens", "10,12,21,38", "--m", "10"});
  CHECK(tight.code == kExitInputError);
  CHECK(tight.json()["error"]["kind"] == "BudgetExceeded");

  setenv("SGFL_BUDGET", "1", 1);
  auto from_env = call({"minrepl", "--gens", "10,12,21,38", "--m", "10"});
  unsetenv("SGFL_BUDGET");
  CHECK(from_env.code == kExitInputError);
  CHECK(call({"minrepl", "--gens", "10,12,21,38", "--m", "10"}).code == kExitOk);
}

TEST_CASE("output is deterministic and carries the seed") {
  std::vector<std::string> args{"--seed", "17", "analyze", "--gens", "10,14,21,25"};
  auto a = call(args);
  auto b = call(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 17);
  CHECK(a.json()["schema"] == "sgfl/1");

  std::vector<std::string> one{"oracle", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest", "--all"};
  std::vector<std::string> four = one;
  four.insert(four.begin(), {"--jobs", "4"});
  CHECK(call(one).out.substr(call(one).out.find("\"verdict\"")) ==
        call(four).out.substr(call(four).out.find("\"verdict\"")));
}

TEST_CASE("tabular formats") {
  auto tsv = call({"--output", "tsv", "verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest",
                   "--method", "oracle"});
  CHECK(tsv.code == kExitOk);
  CHECK(tsv.out.rfind("semigroup\tformula", 0) == 0);
  CHECK(tsv.out.find("84;94;105;115") != std::string::npos);
  CHECK(call({"--output", "pretty", "analyze", "--gens", "6,9,20"}).code == kExitOk);
  CHECK(call({"--output", "tsv", "minrepl", "--gens", "6,9,20", "--m", "6"}).code == kExitInputError);
}

TEST_CASE("worked examples command") {
  auto clean = call({"paper-examples"});
  CHECK(clean.code == kExitOk);
  auto rows = clean.json()["rows"];
  REQUIRE(rows.size() > 40);
  for (const auto& r : rows) CHECK(r["status"] == "pass");

  auto perturbed = call({"paper-examples", "--perturb", "minrepl.numerical-four.m10"});
  CHECK(perturbed.code == kExitVerdictFalse);
  auto report = perturbed.json();
  std::size_t failing = 0;
  for (const auto& r : report["rows"]) failing += r["status"] == "fail";
  CHECK(failing == 1);
}
