#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mcalc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = mcalc::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string session(const std::string& name) { return std::string(MCALC_SESSIONS) + "/" + name; }

}  // namespace

TEST_CASE("worked example commands") {
  const auto m = run({"mult", session("bad.ring"), "--params", "x", "--r", "1", "--json"});
  CHECK(m.status == 0);
  const auto mj = json::parse(m.out);
  CHECK(mj["command"] == "mult");
  CHECK(mj["result"]["multiplicity"] == 2);
  CHECK(mj["verdict"].is_null());

  const auto s2 = run({"--json", "search", session("bad.ring"), "--prime", "2", "--budget", "50", "--seed", "7"});
  CHECK(s2.status == 0);
  CHECK(json::parse(s2.out)["result"]["status"] == "EXHAUSTED");

  const auto s3 = run({"search", session("bad.ring"), "--prime", "3", "--json"});
  CHECK(s3.status == 0);
  const auto s3j = json::parse(s3.out)["result"];
  CHECK(s3j["status"] == "FOUND");
  CHECK(s3j["e"] == 2);
}

TEST_CASE("verdicts and exit codes") {
  const auto v = run({"verify", "serre", session("plane.ring"), "--seq", "m", "--json"});
  CHECK(v.status == 0);
  CHECK(json::parse(v.out)["verdict"] == "VERIFIED");

  const auto ord = run({"verify", "ord", session("bad.ring"), "--f", "x", "--g", "y", "--json"});
  CHECK(ord.status == 0);
  CHECK(json::parse(ord.out)["verdict"] == "VERIFIED");

  const auto bad = run({"verify", "vanish", session("plane.ring"), "--seq", "x, y", "--index", "1", "--power", "1",
                        "--json"});
  CHECK(bad.status == 2);
  CHECK(json::parse(bad.out)["error"]["code"] == "HYPOTHESIS_FAILS");

  const auto scen = run({"verify", "scenario", "serre-cusp"});
  CHECK(scen.status == 0);
  CHECK(scen.out.find("VERIFIED") != std::string::npos);

  CHECK(run({"verify", "scenario", "no-such-scenario"}).status == 2);
  CHECK(run({"verify", "scenario"}).status == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"mult", session("plane.ring")}).status == 2);
  CHECK(run({"--help"}).status == 0);
  const auto missing = run({"gb", session("no-such.ring"), "--json"});
  CHECK(missing.status == 2);
  const auto unknown = run({"mult", session("plane.ring"), "--params", "x, z", "--json"});
  CHECK(unknown.status == 2);
  CHECK(json::parse(unknown.out)["error"]["code"] == "PARSE_ERROR");
  const auto infinite = run({"length", session("plane.ring"), "--ideal", "x", "--json"});
  CHECK(infinite.status == 0);
  CHECK(json::parse(infinite.out)["result"]["length"] == "INFINITE");
}

TEST_CASE("json records are deterministic and self-describing") {
  const std::vector<std::vector<std::string>> commands = {
      {"gb", session("bad.ring"), "--ideal", "x"},
      {"dim", session("plane.ring"), "--module", "S"},
      {"length", session("bad.ring"), "--ideal", "x"},
      {"mult", session("plane.ring"), "--params", "m", "--r", "3"},
      {"koszul", session("two_planes.ring"), "--seq", "sop"},
      {"verify", "factor", session("plane.ring"), "--seq", "x", "--seq2", "y"},
      {"verify", "serre2", session("plane.ring"), "--seq", "x", "--seq2", "y"},
      {"search", session("bad.ring"), "--prime", "3"},
  };
  for (auto args : commands) {
    args.push_back("--json");
    const auto a = run(args), b = run(args);
    CAPTURE(args[0]);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    const auto j = json::parse(a.out);
    for (const char* key : {"command", "session", "inputs", "result", "certificate", "verdict"}) CHECK(j.contains(key));
    CHECK(j["session"].is_string());
  }
}
