#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "k4holo/cli.hpp"
#include "k4holo/toral.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace k4holo;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("theorem24 json") {
  auto r = run({"theorem24", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified_against_theorem24"] == true);
  CHECK(j["distinct_pairs"].size() == 8);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("theorem24 with jobs gives identical output") {
  auto a = run({"theorem24", "--format", "json", "--jobs", "1"});
  auto b = run({"--jobs", "4", "theorem24", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"theorem24", "--format", "markdown"}).code == 0);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--char", "su6sp1 m=4 d=[2,2,0,2,2,0] y=0"});
  CHECK(r.code == 0);
  CHECK(r.out == "sigma2\nmu 1\n");
  auto s1 = run({"classify", "--char", "chi [0,0,0,0,0,2]"});
  CHECK(s1.out == "sigma1\nmu -1\n");
  CHECK(run({"classify", "--char", "y3y4"}).out == "sigma1\nmu -1\n");
  CHECK(run({"classify", "--char", "x1x4x5/x4x5"}).out == "sigma2\nmu 1\n");
  CHECK(run({"classify", "--char", "chi [0,0,0,0,0,0]"}).out == "identity\nmu 1\n");
}

TEST_CASE("fixed") {
  auto r = run({"fixed", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "E6");
  CHECK(j["dim"] == 78);
  auto k = run({"fixed", "--chars", "x1", "x2", "x4"});
  CHECK(k.out.find("compact 2su(2)⊕4(√−1ℝ)") != std::string::npos);
}

TEST_CASE("malformed specs are usage errors naming the token") {
  auto r = run({"classify", "--char", "chi m=4 [1,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'[1,2'") != std::string::npos);
  auto d = run({"classify", "--char", "su6sp1 d=[1,0,0,0,0,0] y=0"});
  CHECK(d.code == 2);
  auto bad = run({"fixed", "--chars", "chi bogus [0,0,0,0,0,0]"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'bogus'") != std::string::npos);
  CHECK(run({"classify", "--char", "q9"}).code == 2);
  CHECK(run({"classify", "--char", "chi [1,0,0,0,0,0]"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"theorem24", "--format", "xml"}).code == 2);
  CHECK_THROWS_AS(cli::parse_character("chi [1,2,3]", 4), cli::UsageError);
  try {
    cli::parse_character("su6sp1 m=4 d=[0,0,0,0,0,0] q=1", 4);
    FAIL("expected a usage error");
  } catch (const cli::UsageError& e) {
    CHECK(e.token() == "q=1");
  }
}

TEST_CASE("character grammar") {
  auto c = cli::parse_character("chi m=8 [4,0,0,0,0,0]", 4);
  CHECK(c == TorusCharacter(2, {1, 0, 0, 0, 0, 0}));
  auto a2 = cli::parse_character("chi [0,0,0,0,0,2]", 4);
  CHECK(a2 == sigma1_character());
  CHECK(cli::split_labels({"x1,x2", "x4"}) == std::vector<std::string>{"x1", "x2", "x4"});
}

TEST_CASE("modulus from the environment") {
  ::setenv("K4HOLO_MODULUS", "2", 1);
  CHECK(cli::default_modulus() == 2);
  CHECK(run({"classify", "--char", "chi [1,0,0,0,0,1]"}).out == "sigma2\nmu 1\n");
  ::setenv("K4HOLO_MODULUS", "zero", 1);
  CHECK(run({"classify", "--char", "chi [1,0,0,0,0,1]"}).code == 2);
  ::unsetenv("K4HOLO_MODULUS");
  CHECK(cli::default_modulus() == 4);
}

TEST_CASE("roots, realform, survey, selftest") {
  auto r = run({"roots", "--type", "E6", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["root_count"] == 72);
  CHECK(run({"roots", "--type", "G2"}).code == 2);
  CHECK(run({"roots", "--structure-constants"}).code == 0);

  auto rf = run({"realform", "--gamma", "y4,y5", "--theta", "y3"});
  CHECK(rf.code == 0);
  CHECK(rf.out.find("real_form so(6,2)⊕2(√−1ℝ)") != std::string::npos);
  CHECK(run({"realform", "--gamma", "x1", "--gamma", "x2", "--theta", "x4"}).out.find("2su(2,1)⊕2(√−1ℝ)") !=
        std::string::npos);

  auto sv = run({"survey", "--theta", "x4", "--format", "json"});
  CHECK(sv.code == 0);
  CHECK(nlohmann::json::parse(sv.out).size() == 28);
  CHECK(run({"survey", "--theta", "x1"}).code == 2);

  auto st = run({"selftest"});
  CHECK(st.code == 0);
  CHECK(st.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output file") {
  std::string path = "k4holo_cli_test_output.json";
  CHECK(run({"-o", path, "fixed", "--format", "json"}).code == 0);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["dim"] == 78);
  std::remove(path.c_str());
}
