#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k4holo/errors.hpp"
#include "k4holo/toral.hpp"
#include "test_support.hpp"

#include <numeric>
#include <random>

using namespace k4holo;

namespace {

UnitaryPairData pair(std::array<int, 6> d, int y, int m = 4) { return UnitaryPairData{m, d, y}; }

// Order computed over all 72 root values instead of the simple roots.
int brute_force_order(const TorusCharacter& chi) {
  int l = 1;
  for (const auto& r : e6().roots()) {
    int v = chi.evaluate(r);
    l = std::lcm(l, chi.modulus() / std::gcd(chi.modulus(), v));
  }
  return l;
}

UnitaryPairData random_pair(std::mt19937& rng, int m) {
  UnitaryPairData u{m, {}, 0};
  int sum = 0;
  for (int i = 0; i < 5; ++i) {
    u.d[i] = static_cast<int>(rng() % m);
    sum += u.d[i];
  }
  u.d[5] = ((-sum) % m + m) % m;
  u.y = static_cast<int>(rng() % m);
  return u;
}

} // namespace

TEST_CASE("simple-value constructors") {
  auto id = character_from_simple_values({0, 0, 0, 0, 0, 0}, 4);
  CHECK(id.is_identity());
  CHECK(order(id) == 1);

  auto s1 = character_from_simple_values({0, 2, 0, 0, 0, 0}, 4);
  CHECK(s1 == sigma1_character());
  for (const auto& r : e6().roots()) CHECK(s1.evaluate(r) == (r[1] % 2 == 0 ? 0 : 2));

  auto s2 = character_from_simple_values({2, 0, 0, 0, 0, 2}, 4);
  CHECK(s2 == sigma2_character());
  CHECK(s2.order() == 2);
}

TEST_CASE("multiplication, evaluation and order") {
  auto s1 = sigma1_character(4);
  CHECK(multiply(s1, TorusCharacter::identity(6)) == s1);
  CHECK(multiply(s1, s1).is_identity());
  CHECK(evaluate(s1, e6().highest_root()) == 0);
  CHECK(sigma1_character(2).evaluate(e6().highest_root()) == 0);

  TorusCharacter a(4, {1, 0, 0, 0, 0, 0});
  TorusCharacter b(6, {0, 1, 0, 0, 0, 0});
  auto ab = a * b;
  CHECK(ab.modulus() == 12);
  CHECK(ab.exps() == std::vector<int>{3, 2, 0, 0, 0, 0});
  CHECK(ab.order() == 12);
  CHECK(TorusCharacter(8, {4, 0, 0, 0, 0, 0}) == TorusCharacter(2, {1, 0, 0, 0, 0, 0}));
  CHECK(TorusCharacter(8, {4, 0, 0, 0, 0, 0}).reduced().modulus() == 2);
}

TEST_CASE("order matches the root-by-root lcm") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto chi = testing::random_character(rng);
    CHECK(chi.order() == brute_force_order(chi));
  }
}

TEST_CASE("homomorphism law over all root pairs") {
  std::mt19937 rng(17);
  const auto& sys = e6();
  for (int t = 0; t < 20; ++t) {
    auto chi = testing::random_character(rng);
    for (const auto& a : sys.roots())
      for (const auto& b : sys.roots()) {
        Root c = a + b;
        if (sys.contains(c)) REQUIRE(chi.evaluate(c) == (chi.evaluate(a) + chi.evaluate(b)) % chi.modulus());
      }
  }
}

TEST_CASE("embedding examples") {
  auto s1 = embed_su6_sp1(pair({0, 0, 0, 0, 0, 0}, 2));
  CHECK(s1 == sigma1_character());
  int fixed = 0;
  for (const auto& r : e6().roots())
    if (s1.fixes(r)) ++fixed;
  CHECK(fixed == 32);
  CHECK(fixed + 6 == 38);

  auto x4 = embed_su6_sp1(pair({2, 2, 0, 2, 2, 0}, 0));
  fixed = 0;
  for (const auto& r : e6().roots())
    if (x4.fixes(r)) ++fixed;
  CHECK(fixed + 6 == 46);

  auto zeta3 = embed_su6_sp1(pair({4, 4, 4, 4, 4, 4}, 0, 12));
  CHECK(zeta3.is_identity());
}

TEST_CASE("determinant violation") {
  CHECK_THROWS_AS(embed_su6_sp1(pair({1, 0, 0, 0, 0, 0}, 0)), PreconditionError);
}

TEST_CASE("embedding: center quotient, homomorphism, highest root") {
  std::mt19937 rng(29);
  const int m = 12;
  const UnitaryPairData zeta3{m, {4, 4, 4, 4, 4, 4}, 0};
  const UnitaryPairData minus{m, {6, 6, 6, 6, 6, 6}, 6};
  for (int t = 0; t < 200; ++t) {
    auto u = random_pair(rng, m);
    auto v = random_pair(rng, m);
    CHECK(embed_su6_sp1(u * zeta3) == embed_su6_sp1(u));
    CHECK(embed_su6_sp1(u * minus) == embed_su6_sp1(u));
    CHECK(embed_su6_sp1(u * v) == embed_su6_sp1(u) * embed_su6_sp1(v));
    CHECK(embed_su6_sp1(u).evaluate(e6().highest_root()) == (2 * u.y) % m);
  }
}

TEST_CASE("group generation") {
  auto s1 = sigma1_character();
  std::vector<TorusCharacter> one{s1};
  CHECK(generate_group(one, {}).size() == 2);

  std::vector<TorusCharacter> id{TorusCharacter::identity(6)};
  CHECK(generate_group(id, {}).size() == 1);

  std::vector<TorusCharacter> gens = {embed_su6_sp1(pair({0, 0, 0, 0, 0, 0}, 2)),
                                      embed_su6_sp1(pair({2, 2, 0, 0, 0, 0}, 0)),
                                      embed_su6_sp1(pair({2, 2, 2, 2, 0, 0}, 0))};
  std::vector<std::string> labels = {"x1", "x1x4", "x5"};
  auto g = generate_group(gens, labels);
  CHECK(g.size() == 8);
  CHECK(g.structure().elementary_abelian_2);
  CHECK(g.structure().rank == 3);
  REQUIRE(g.labeled());
  CHECK(g.basis() == std::vector<std::string>{"x1", "x4", "x5"});
  CHECK(g.has_label("x4"));
  CHECK(g.at("x4") == gens[0] * gens[1]);
  CHECK(g.at("x5x4") == g.at("x4x5"));
  CHECK_FALSE(g.has_label("x2"));
  CHECK(g.label_of(g.word_of("x1x4x5")) == "x1x4x5");
}

TEST_CASE("order > 2 in an elementary group is a validation error") {
  std::vector<TorusCharacter> gens{TorusCharacter(4, {1, 0, 0, 0, 0, 0})};
  CHECK_THROWS_AS(generate_group(gens, {}), ValidationError);
  auto g = generate_group(gens, {}, false);
  CHECK(g.size() == 4);
  CHECK_FALSE(g.structure().elementary_abelian_2);
}

TEST_CASE("labels") {
  CHECK(split_label("y1y3y4") == std::vector<std::string>{"y1", "y3", "y4"});
  CHECK_THROWS_AS(split_label("y1-y3"), PreconditionError);
  CHECK_THROWS_AS(split_label(""), PreconditionError);
  std::vector<std::string> basis{"y1", "y3", "y4"};
  CHECK(word_label(0, basis) == "1");
  CHECK(word_label(5, basis) == "y1y4");
}

TEST_CASE("text forms") {
  CHECK(TorusCharacter(4, {1, 2, 3, 0, 0, 1}).to_string() == "chi m=4 [1,3,0,0,1,2]");
  CHECK(pair({2, 2, 0, 2, 2, 0}, 0).to_string() == "su6sp1 m=4 d=[2,2,0,2,2,0] y=0");
}
