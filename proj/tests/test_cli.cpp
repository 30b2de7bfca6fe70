#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "grpn");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = grpn::cli::run(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const char* kExample = "[z1*5,1,z2*3,6,z2*7,z1*4,2,8]";

}  // namespace

TEST_CASE("cli rs prints the example pair") {
  const Result res = run({"rs", "--r", "4", kExample});
  CHECK(res.code == 0);
  CHECK(res.out ==
        "P = [[[1,2,8],[6]],[[4],[5]],[[3,7]],[]]\n"
        "Q = [[[2,4,8],[7]],[[1],[6]],[[3,5]],[]]\n");
}

TEST_CASE("cli json and text carry the same data") {
  const Result text = run({"rs", "--r", "4", kExample});
  const Result js = run({"rs", "--r", "4", "--format", "json", kExample});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(text.out == "P = " + j["P"].dump() + "\nQ = " + j["Q"].dump() + "\n");

  const Result sgn_text = run({"sgn", "--r", "4", kExample});
  const auto sgn_json = nlohmann::json::parse(run({"sgn", "--r", "4", "--format", "json", kExample}).out);
  std::string rebuilt;
  for (const auto& v : sgn_json["values"]) {
    rebuilt += "i=" + v["i"].dump() + " sigma_i=" + v["sigma"].get<std::string>() +
               " sgn_i=" + v["sgn"].get<std::string>() + "\n";
  }
  CHECK(sgn_text.out == rebuilt);
}

TEST_CASE("cli inverse-rs round trips through stdin") {
  const Result js = run({"rs", "--r", "4", "--format", "json", kExample});
  const Result back = run({"inverse-rs", "-"}, js.out);
  CHECK(back.code == 0);
  CHECK(back.out == std::string(kExample) + "\n");
  CHECK(run({"inverse-rs", "--r", "3", "-"}, js.out).code == 2);
}

TEST_CASE("cli sgn of the identity") {
  const Result res = run({"sgn", "--r", "4", "[1,2]"});
  CHECK(res.code == 0);
  CHECK(res.out.find('-') == std::string::npos);
  CHECK(res.out.find("sgn_i=+z^0") != std::string::npos);
}

TEST_CASE("cli pi and stats") {
  const Result pi = run({"pi", "--r", "4", kExample});
  CHECK(pi.out == "i=0 pi_i=+z^0\ni=1 pi_i=+z^2\ni=2 pi_i=+z^0\ni=3 pi_i=+z^2\n");
  const Result stats = run({"stats", "--r", "4", kExample});
  CHECK(stats.out.find("P: inv=10 e=2 twice_spin=6 sign=+1") != std::string::npos);
  const Result tab = run({"stats", "[[[1,3],[2]],[[4],[5]],[[6,7,10],[8,9,11]]]"});
  CHECK(tab.code == 0);
  CHECK(tab.out.find("ascending=true") != std::string::npos);
}

TEST_CASE("cli ascend") {
  const auto j = nlohmann::json::parse(run({"ascend", "--r", "4", "--format", "json", kExample}).out);
  CHECK(j["representative"] == "[1,3,2,4,z1*6,z1*5,z2*7,z2*8]");
  CHECK_FALSE(j["moves"].empty());
}

TEST_CASE("cli verify") {
  const Result res = run({"verify", "theorem", "--r", "2", "--p", "1", "--n", "4"});
  CHECK(res.code == 0);
  CHECK(res.out.find("checked=384") != std::string::npos);
  CHECK(res.out.find("PASS") != std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"verify", "membership", "--r", "4", "--p", "2", "--n", "2", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["params"]["p"] == 2);

  CHECK(run({"verify", "admissible", "--r", "2", "--n", "3"}).code == 0);
  CHECK(run({"verify", "theorem", "--r", "4", "--n", "8"}).code == 2);  // cap
  CHECK(run({"verify", "theorem", "--r", "2", "--n", "3", "--cap", "10"}).code == 2);
  CHECK(run({"verify", "theorem", "--r", "2", "--n", "3", "--cap", "10", "--force"}).code == 0);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"rs", "[1,2]"}).code == 2);                        // no --r
  CHECK(run({"rs", "--r", "4", "[1,1]"}).code == 2);            // not a permutation
  CHECK(run({"rs", "--r", "4", "--n", "3", "[1,2]"}).code == 2);
  CHECK(run({"rs", "--r", "4", "--p", "3", "[1,2]"}).code == 2);
  CHECK(run({"verify", "nonsense", "--r", "2", "--n", "2"}).code == 2);
  CHECK(run({"verify", "theorem", "--r", "2"}).code == 2);
  CHECK(run({"inverse-rs", "{not json"}).code == 2);
  CHECK(run({"rs", "--r", "2", "--format", "xml", "[1]"}).code == 2);
}
