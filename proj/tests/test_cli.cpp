#include <doctest.h>

#include <sstream>

#include "bicoarse/cli.hpp"
#include "bicoarse/serialize.hpp"

using namespace bicoarse;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return args;
}

}  // namespace

TEST_CASE("documented CLI examples") {
  CHECK(cli({"norm", "abAAB"}).out == "3\n");
  CHECK(cli({"dist", "ab", "ab"}).out == "0\n");
  CHECK(cli({"z", "len", "24", "--set", "factorials:6", "--exclude", "24", "--cap", "5"}).out == "4\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({"norm", "abAAB"}).code == kExitOk);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"norm"}).code == kExitUsage);
  CHECK(cli({"audit", "--preset", "nope"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  const Run bad = cli({"norm", "abc"});
  CHECK(bad.code == kExitDomainError);
  CHECK(bad.err.find("position 2") != std::string::npos);
  const Run bad_json = cli({"--json", "norm", "abc"});
  CHECK(bad_json.code == kExitDomainError);
  const Json e = Json::parse(bad_json.out);
  CHECK(e["error"]["kind"] == "InvalidCharacter");
  CHECK(e["error"]["position"] == 2);
  CHECK(cli({"--rank", "3", "norm", "abc"}).code == kExitOk);
  CHECK(cli({"--rank", "30", "norm", "ab"}).code == kExitDomainError);
  CHECK(cli({"z", "profinite", "--Q", "2,5", "--q", "5", "--steps", "2"}).code == kExitDomainError);
}

TEST_CASE("plain and JSON modes report the same values") {
  struct Case {
    std::vector<std::string> args;
    std::function<std::string(const Json&)> plain_of;
  };
  const std::vector<Case> cases{
      {{"norm", "abAABabAAB"}, [](const Json& r) { return std::to_string(r["norm"].get<int>()) + "\n"; }},
      {{"dist", "ab", "ba"}, [](const Json& r) { return std::to_string(r["distance"].get<int>()) + "\n"; }},
      {{"moves", "abAB", "1"}, [](const Json& r) { return std::to_string(r["distance"].get<int>()) + "\n"; }},
      {{"qm", "eval", "--spec", R"({"hom":{"a":"-1","b":"8/5"}})", "bb"},
       [](const Json& r) { return r["value"].get<std::string>() + "\n"; }},
      {{"hs", "wobble", "--rule", R"({"v":"ab","sigma":{"1":2,"2":1}})", "ab"},
       [](const Json& r) { return r["image"].get<std::string>() + "\n"; }},
      {{"lab", "u", "5"}, [](const Json& r) { return r["u"].get<std::string>() + "\n"; }},
      {{"z", "len", "100", "--set", "powers:2:8", "--cap", "8"},
       [](const Json& r) { return std::to_string(r["length"].get<int>()) + "\n"; }},
  };
  for (const auto& c : cases) {
    const Run plain = cli(c.args);
    const Run json = cli(with_json(c.args));
    REQUIRE(plain.code == 0);
    REQUIRE(json.code == 0);
    const Json env = Json::parse(json.out);
    CHECK(env.contains("cmd"));
    CHECK(env["rank"] == 2);
    CHECK(env.contains("meta"));
    CHECK(c.plain_of(env["result"]) == plain.out);
  }
}

TEST_CASE("subcommand outputs") {
  const Json cert = Json::parse(cli({"--json", "norm", "abAAB", "--certificate"}).out);
  CHECK(cert["result"]["certificate"]["deleted"].size() == 3);
  const Json geo = Json::parse(cli({"--json", "moves", "ab", "ba", "--emit-geodesic"}).out);
  CHECK(geo["result"]["geodesic"]["start"] == "ab");
  CHECK(geo["result"]["geodesic"]["end"] == "ba");
  CHECK(geo["result"]["geodesic"]["moves"].size() == 2);
  CHECK(cli({"qm", "homog", "--spec", R"({"brooks":"ab"})", "ab"}).out == "1\n1/64\n");
  CHECK(cli({"qm", "defect", "--spec", R"({"brooks":"ab"})"}).out == "1\n");
  CHECK(cli({"hs", "replace", "--rule", R"({"w1":"aab","w2":"aBab"})", "aab"}).out == "aBab\n");
  CHECK(cli({"hs", "local", "--rule", R"({"k":2,"target_rank":1,"table":{"ab":"a","BA":"A"}})", "ababab"}).out ==
        "aaa\n");
  CHECK(cli({"lab", "phi", "a"}).out == "-1\nfalse\n");
  CHECK(cli({"lab", "--beta", "3/2", "u", "2"}).out == "aaabb\n");
  const Json lab = Json::parse(cli({"--json", "lab", "u", "3"}).out);
  CHECK(lab["meta"]["valid_for_n_at_most"] == 5);
  CHECK(cli({"lab", "defect", "ab", "aabaab"}).out == "2\n2 2\n");
  const Run window = cli({"z", "window", "--set", "list:1", "--n", "5", "--m", "4"});
  CHECK(window.out == "fail\nfailures 5\n");
  const Json audit = Json::parse(cli({"--json", "audit", "--preset", "perturbed", "--radius", "3"}).out);
  CHECK(audit["result"]["unit"]["value"] == 1);
}

TEST_CASE("search emits one JSON line per record") {
  const Run r = cli({"--json", "lab", "search", "1", "--length-cap", "6"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> words;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["meta"]["exhaustive"] == true);
    words.push_back(j["result"]["W"].get<std::string>());
  }
  CHECK(words == std::vector<std::string>{"1", "ab", "BA", "abab", "BABA", "ababab", "BABABA"});
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--json", "z", "profinite", "--Q", "2,3", "--q", "5", "--steps", "3"};
  CHECK(cli(args).out == cli(args).out);
  const Json j = Json::parse(cli(args).out);
  CHECK(j["result"]["verified"] == true);
}
