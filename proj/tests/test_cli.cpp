#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apw/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = apw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("single computations") {
  CHECK(run({"delta", "a b^2 a^3 b"}).out == "1\n");
  CHECK(run({"witness", "--n", "3"}).out == "a^1 b^1 a^2 b^2 a^3 b^3\n");
  CHECK(run({"lower-bound", "--n", "1000", "--m", "1"}).out == "24\n");
  CHECK(run({"lower-bound", "abaabbaaabbb"}).out == "1\n");
  CHECK(run({"reduce", "abBAb"}).out == "b^1\n");
  CHECK(run({"reduce", "aA"}).out == "1\n");
  CHECK(run({"syllables", "aaBBB"}).out == "a 2\nb -3\n");
  CHECK(run({"appal-check", "abAB", "--m", "1"}).out == "false\n");
  CHECK(run({"appal-check", "abAB", "--m", "2"}).out == "true\n");
  CHECK(run({"defect", "ab^2", "ba^2"}).out == "2\n");
  CHECK(run({"defect"}).out == "0\n");
  CHECK(run({"width", "ab", "--gen-len", "4", "--max-c", "3"}).out == "2\n");
  CHECK(run({"width", "abaabbaaabbb", "--ball-cap", "10"}).out == "not_found_within_budget\n");
}

TEST_CASE("reduce output is a fixed point") {
  const auto once = run({"reduce", "a b B a^3 b^-2 b^2 A"}).out;
  const auto twice = run({"reduce", once.substr(0, once.size() - 1)}).out;
  CHECK(once == twice);
  CHECK(once == "a^3\n");
}

TEST_CASE("structured formats") {
  const auto j = nlohmann::json::parse(run({"width", "abAB", "--m", "1", "--format", "json"}).out);
  CHECK(j["c"] == 2);
  CHECK(j["certificate"].size() == 2);

  const auto csv = run({"check-prop2", "--m", "1", "--n", "2", "--trials", "200", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("experiment,parameters,trials,observed_max,bound,violations,seed\n", 0) == 0);

  const auto table = run({"theorem-table", "--n", "3", "--m", "0"});
  CHECK(table.out ==
        "n,delta,lower_bound_c,upper_c,status\n1,0,1,2,found\n2,1,1,3,found\n3,2,1,4,found\n");
}

TEST_CASE("sweeps") {
  const auto lemma = run({"check-lemma", "--n", "2", "--trials", "5000", "--format", "json"});
  CHECK(lemma.code == 0);
  const auto j = nlohmann::json::parse(lemma.out);
  CHECK(j["violations"] == 0);
  CHECK(j["bound"] == 12);
  CHECK(j["trials"] == 5000);

  const auto p1 = run({"check-prop1", "--m", "0", "--max-len", "6"});
  CHECK(p1.code == 0);
  CHECK(p1.out == "0\n");
}

TEST_CASE("determinism and seeds") {
  const std::vector<std::string> args = {"check-lemma", "--n", "3", "--trials", "3000",
                                         "--format", "json", "--threads", "2"};
  CHECK(run(args).out == run(args).out);

  auto with_seed = args;
  with_seed.insert(with_seed.end(), {"--seed", "17"});
  const auto seeded = run(with_seed).out;
  CHECK(seeded != run(args).out);

  ::setenv("APW_SEED", "17", 1);
  CHECK(run(args).out == seeded);
  auto explicit_zero = args;
  explicit_zero.insert(explicit_zero.end(), {"--seed", "0"});
  const auto zero_with_env = run(explicit_zero).out;
  ::unsetenv("APW_SEED");
  CHECK(zero_with_env == run(args).out);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "apw_cli_test_out.txt";
  const auto r = run({"witness", "--n", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text == "a^1 b^1 a^2 b^2\n");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"delta", "B^2"}).code == 2);
  CHECK(run({"delta", "a?"}).code == 2);
  CHECK(run({"delta"}).code == 2);
  CHECK(run({"witness"}).code == 2);
  CHECK(run({"witness", "--n", "0"}).code == 2);
  CHECK(run({"witness", "--n", "-3"}).code == 2);
  CHECK(run({"check-lemma", "--n", "2", "--trials", "-1"}).code == 2);
  CHECK(run({"delta", "a", "--format", "xml"}).code == 2);
  CHECK(run({"check-prop1", "--max-len", "30"}).code == 2);  // enumeration cap
  CHECK(run({"width", "c", "--rank", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
