#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k4holo/errors.hpp"
#include "k4holo/pipeline.hpp"

#include <algorithm>
#include <set>

using namespace k4holo;

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("builtin groups") {
  REQUIRE(builtin_groups().size() == 4);
  for (const auto& g : builtin_groups()) {
    CHECK(g.group.size() == 8);
    CHECK(g.group.structure().rank == 3);
  }
  CHECK(sorted(builtin_group("x1x4x5").sigma2_labels()) == std::vector<std::string>{"x4", "x4x5", "x5"});
  CHECK(sorted(builtin_group("y3y4y5").sigma2_labels()) ==
        std::vector<std::string>{"y3", "y3y5", "y4", "y4y5", "y5"});
  CHECK(sorted(builtin_group("y1y3y4").sigma2_labels()) == std::vector<std::string>{"y1y3y4", "y3", "y4"});
  CHECK(builtin_group("x1x2x4").sigma2_labels() == std::vector<std::string>{"x4"});
  CHECK_THROWS_AS(builtin_group("z1z2z3"), PreconditionError);
}

TEST_CASE("a generator that is not an involution is rejected") {
  CHECK_THROWS_AS(make_group("bad", {{"z1", UnitaryPairData{4, {1, 3, 0, 0, 0, 0}, 0}}}), ValidationError);
}

TEST_CASE("element references") {
  auto r = resolve_element("x1x4x5/x4");
  CHECK(r.group->name == "x1x4x5");
  CHECK(r.label() == "x4");
  CHECK(resolve_element("y5").group->name == "y3y4y5");
  auto both = resolve_elements({"y1", "y4"});
  CHECK(both[0].group->name == "y1y3y4");
  CHECK_THROWS_AS(resolve_element("q7"), PreconditionError);
}

TEST_CASE("Klein four subgroups") {
  CHECK(klein_subgroups(3).size() == 7);
  CHECK(klein_subgroups(2).size() == 1);
  for (const auto& k : klein_subgroups(3)) {
    CHECK((k.words[0] ^ k.words[1]) == k.words[2]);
    CHECK(k.contains(k.generators[0] ^ k.generators[1]));
  }
}

TEST_CASE("candidates of x1x2x4") {
  const auto& g = builtin_group("x1x2x4").group;
  auto c = enumerate_candidates(builtin_group("x1x2x4"));
  REQUIRE(c.size() == 4);
  const std::array<std::string, 2> expected[] = {{"x1", "x2"}, {"x1x4", "x2"}, {"x1", "x2x4"}, {"x1x4", "x2x4"}};
  for (const auto& e : expected) {
    int hits = 0;
    for (const auto& kc : c)
      if (kc.gamma.contains(g.at(e[0])) && kc.gamma.contains(g.at(e[1]))) ++hits;
    CHECK(hits == 1);
  }
  for (const auto& kc : c) {
    CHECK(kc.theta_label == "x4");
    CHECK(kc.real_form.to_string() == "2su(2,1)⊕2(√−1ℝ)");
    CHECK_FALSE(kc.gamma.contains(g.at("x4")));
  }
}

TEST_CASE("a group without sigma2 elements yields nothing") {
  const auto& g = builtin_group("x1x2x4").group;
  std::vector<TorusCharacter> gens{g.at("x1"), g.at("x2")};
  std::vector<std::string> labels{"x1", "x2"};
  BuiltinGroup small{"x1x2", generate_group(gens, labels), {}};
  CHECK(small.sigma2_words().empty());
  CHECK(enumerate_candidates(small).empty());
}

TEST_CASE("the y1y3y4 candidate with gamma <y1,y4>") {
  bool found = false;
  for (const auto& kc : enumerate_candidates(builtin_group("y1y3y4")))
    if (kc.theta_label == "y3" && kc.gamma_labels == std::array<std::string, 2>{"y1", "y4"}) {
      found = true;
      CHECK(kc.real_form.to_string() == "su(3,1)⊕su(1,1)⊕su(2)⊕√−1ℝ");
      CHECK(kc.compact_dual.compact_name() == "su(4)⊕2su(2)⊕√−1ℝ");
    }
  CHECK(found);
}

TEST_CASE("full run") {
  auto report = classify_all(1);
  CHECK(report.verified);
  CHECK(report.distinct_pairs.size() == 8);
  CHECK(report.missing.empty());
  CHECK(report.unexpected.empty());
  std::set<std::string> got;
  for (const auto& p : report.distinct_pairs) got.insert(p.to_string());
  std::set<std::string> want(reference_pairs().begin(), reference_pairs().end());
  CHECK(got == want);
  CHECK_NOTHROW(require_verified(report));

  auto parallel = classify_all(4);
  CHECK(to_json(parallel).dump() == to_json(report).dump());
  CHECK(to_markdown(parallel) == to_markdown(report));

  for (const auto& kc : report.candidates) {
    CHECK(kc.real_form.complexification() == kc.compact_dual);
    CHECK(kc.maximal_compact.dimension() == kc.real_form.maximal_compact_dim());
  }
}

TEST_CASE("a failed report is a verification error") {
  auto report = classify_all(1);
  report.verified = false;
  report.missing = {"so(10)"};
  CHECK_THROWS_AS(require_verified(report), VerificationError);
}

TEST_CASE("survey values stay in the holomorphic list") {
  std::set<std::string> allowed(symmetric_pair_list().begin(), symmetric_pair_list().end());
  std::set<std::string> sigma1_values;
  for (const auto& g : builtin_groups())
    for (unsigned w : g.sigma2_words()) {
      ElementRef theta{&g, w};
      for (const auto& e : symmetric_pair_survey(theta)) {
        std::string v = e.real_form.to_string(RenderStyle::symmetric_pair);
        CHECK(allowed.contains(v));
        if (e.sigma_class == ConjClass::sigma1) sigma1_values.insert(v);
        if (e.sigma == theta.qualified()) CHECK(v == "so(10)⊕so(2)");
      }
    }
  CHECK(sigma1_values == std::set<std::string>{"su(4,2)⊕su(2)", "su(5,1)⊕sl(2,ℝ)"});
}

TEST_CASE("x5 under theta x4") {
  auto theta = resolve_element("x1x4x5/x4");
  for (const auto& e : symmetric_pair_survey(theta))
    if (e.sigma == "x1x4x5/x5") {
      std::string v = e.real_form.to_string(RenderStyle::symmetric_pair);
      CHECK((v == "so(8,2)⊕so(2)" || v == "so*(10)⊕so(2)" || v == "so(10)⊕so(2)"));
    }
}

TEST_CASE("JSON round-trip is byte-identical") {
  auto text = to_json(classify_all(2)).dump(2);
  auto reparsed = nlohmann::json::parse(text).dump(2);
  CHECK(reparsed == text);
  auto j = nlohmann::json::parse(text);
  CHECK(j["verified_against_theorem24"] == true);
  CHECK(j["distinct_pairs"].size() == 8);
  CHECK(to_plain(classify_all(1)).find("so(6,2)") != std::string::npos);
}
