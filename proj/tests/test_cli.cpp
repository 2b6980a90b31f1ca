#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dwcount/cli.hpp"

using namespace dwcount;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dwcount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("verify mode examples") {
  const Outcome a5 = invoke({"--group", "builtin:A5", "--seifert", "O;g=0;(1,0)", "--mode", "verify", "--json"});
  CHECK(a5.code == 0);
  const auto j = json_of(a5);
  CHECK(j["count"] == "60");
  CHECK(j["agree"] == true);
  CHECK(j["modes"]["formula"] == "60");
  CHECK(j["modes"]["structural"] == "60");
  CHECK(j["modes"]["oracle"] == "60");
  CHECK(j["group"]["order"] == 60);
  CHECK(j["group"]["lambda_size"] == 22);
  CHECK(j["terms"].size() == 22);
  CHECK(j["z"] == "1");

  const Outcome c2 = invoke({"--group", "builtin:C2", "--seifert", "N;g=1;", "--mode", "verify", "--json"});
  CHECK(c2.code == 0);
  CHECK(json_of(c2)["count"] == "4");
  CHECK(json_of(c2)["crosscap_cross_checked"] == true);
  CHECK(json_of(c2)["oracle_standard"] == "4");

  const Outcome text = invoke({"--group", "builtin:S3", "--seifert", "O;g=1;(2,1)", "--mode", "verify"});
  CHECK(text.code == 0);
  CHECK(text.out.find("all modes agree") != std::string::npos);
}

TEST_CASE("error exit codes") {
  const Outcome bad = invoke({"--group", "builtin:C2", "--seifert", "O;g=0;(2,4)"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("coprime") != std::string::npos);
  CHECK(invoke({"--group", "builtin:Z9", "--seifert", "O;g=0;"}).code == 1);
  CHECK(invoke({"--seifert", "O;g=0;"}).code == 1);
  CHECK(invoke({"--group", "builtin:C2"}).code == 1);
  CHECK(invoke({"--group", "builtin:C2", "--seifert", "O;g=0;", "--mode", "fast"}).code == 1);
  CHECK(invoke({"--group", "builtin:S3", "--seifert", "O;g=1;", "--mode", "a5check"}).code == 1);
  CHECK(invoke({"--group", "builtin:S6", "--seifert", "O;g=0;", "--max-order", "100"}).code == 2);
  CHECK(invoke({"--group", "builtin:S4", "--seifert", "O;g=2;", "--mode", "oracle", "--max-oracle-space", "1000"}).code == 2);
  const Outcome json_error = invoke({"--group", "builtin:C2", "--seifert", "N;g=0;", "--json"});
  CHECK(json_error.code == 1);
  CHECK(json_of(json_error)["exit_code"] == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("modes") {
  for (const char* mode : {"formula", "structural", "oracle"}) {
    const Outcome o = invoke({"--group", "builtin:Q8", "--seifert", "O;g=1;(2,1)(3,1)", "--mode", mode, "--json"});
    CHECK(o.code == 0);
    CHECK(json_of(o)["modes"].size() == 1);
  }
  const Outcome a5 = invoke({"--group", "builtin:A5", "--seifert", "O;g=2;(2,1)(5,3)", "--mode", "a5check", "--json"});
  CHECK(a5.code == 0);
  CHECK(json_of(a5)["modes"]["a5_closed_form"] == json_of(a5)["modes"]["formula"]);
  const Outcome threads = invoke({"--group", "builtin:A4", "--seifert", "O;g=1;(3,1)", "--mode", "oracle", "--threads", "3", "--json"});
  CHECK(json_of(threads)["count"] ==
        json_of(invoke({"--group", "builtin:A4", "--seifert", "O;g=1;(3,1)", "--mode", "formula", "--json"}))["count"]);
}

TEST_CASE("reports are deterministic apart from timings") {
  const std::vector<std::string> args = {"--group", "builtin:S4", "--seifert", "N;g=2;(3,1)", "--mode", "verify",
                                         "--json", "--seed", "17"};
  auto a = json_of(invoke(args)), b = json_of(invoke(args));
  CHECK(a.contains("timings_s"));
  a.erase("timings_s");
  b.erase("timings_s");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("group files") {
  const std::string path = "dwcount_test_group.txt";
  {
    std::ofstream f(path);
    f << "# dihedral of order 8\nperm 4\n1 2 3 0\n3 2 1 0\n";
  }
  const Outcome o = invoke({"--group-file", path, "--seifert", "O;g=0;(2,1)(2,1)(2,-1)", "--mode", "verify", "--json"});
  CHECK(o.code == 0);
  CHECK(json_of(o)["group"]["order"] == 8);
  CHECK(invoke({"--group-file", path, "--group", "builtin:C2", "--seifert", "O;g=0;"}).code == 1);
  std::remove(path.c_str());
}
