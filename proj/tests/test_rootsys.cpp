#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k4holo/errors.hpp"
#include "k4holo/rootsys.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace k4holo;

namespace {

Root e6_simple(int i) { return e6().simple_root(i - 1); }

// Coefficient-maximal root found by a linear scan, independent of the
// library's highest_root bookkeeping.
Root brute_force_highest(const RootSystem& sys) {
  Root best = sys.root(0);
  for (const auto& r : sys.roots()) {
    bool dominates = true;
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (r[i] < best[i]) dominates = false;
    if (dominates) best = r;
  }
  return best;
}

std::vector<Root> negated(const std::vector<Root>& s) {
  std::vector<Root> out;
  for (const auto& r : s) out.push_back(-r);
  return out;
}

} // namespace

TEST_CASE("E6 has 72 roots and highest root (1,2,2,3,2,1)") {
  const auto& sys = e6();
  CHECK(sys.size() == 72);
  CHECK(sys.highest_root() == Root({1, 2, 2, 3, 2, 1}));
  CHECK(brute_force_highest(sys) == sys.highest_root());
}

TEST_CASE("A1 and D_n root counts") {
  auto a1 = RootSystem::build(Family::A, 1);
  REQUIRE(a1.size() == 2);
  CHECK(a1.contains(Root({1})));
  CHECK(a1.contains(Root({-1})));
  for (int n = 4; n <= 7; ++n) {
    auto d = RootSystem::build(Family::D, n);
    CHECK(d.size() == static_cast<std::size_t>(2 * n * (n - 1)));
  }
  CHECK(RootSystem::build("D5").size() == 40);
  for (int n = 1; n <= 6; ++n) CHECK(RootSystem::build(Family::A, n).size() == static_cast<std::size_t>(n * (n + 1)));
}

TEST_CASE("unsupported types are configuration errors") {
  CHECK_THROWS_AS(RootSystem::build(Family::E, 7), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 0), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build("F4"), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build("garbage"), ConfigurationError);
}

TEST_CASE("Cartan matrix follows the E6 diagram") {
  const auto& c = e6().cartan();
  // edges 1-3, 3-4, 4-5, 5-6, 2-4
  auto adjacent = [](int i, int j) {
    static const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    for (auto& e : edges)
      if ((e[0] == i && e[1] == j) || (e[0] == j && e[1] == i)) return true;
    return false;
  };
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      int expect = i == j ? 2 : (adjacent(i, j) ? -1 : 0);
      CHECK(c[i - 1][j - 1] == expect);
    }
}

TEST_CASE("inner products") {
  const auto& sys = e6();
  for (const auto& r : sys.roots()) CHECK(inner_product(r, r, sys) == 2);
  CHECK(inner_product(e6_simple(1), e6_simple(3), sys) == -1);
  CHECK(inner_product(e6_simple(1), e6_simple(2), sys) == 0);
  CHECK(inner_product(e6_simple(2), e6_simple(4), sys) == -1);
}

TEST_CASE("root ordering: positives ascending, then negatives") {
  const auto& sys = e6();
  for (std::size_t i = 0; i < 36; ++i) {
    CHECK(sys.is_positive(sys.root(i)));
    CHECK(sys.root(i + 36) == -sys.root(i));
    CHECK(sys.negative_index(i) == i + 36);
    if (i > 0) CHECK(sys.positivity(sys.root(i - 1)) < sys.positivity(sys.root(i)));
  }
  for (std::size_t i = 0; i < sys.size(); ++i) CHECK(sys.index_of(sys.root(i)) == i);
  CHECK_FALSE(sys.index_of(Root({1, 1, 0, 0, 0, 0})).has_value());
}

TEST_CASE("reflection closure") {
  const auto& sys = e6();
  for (const auto& a : sys.roots())
    for (const auto& b : sys.roots()) REQUIRE(sys.contains(sys.reflect(a, b)));
}

TEST_CASE("diagram symmetry swaps 1<->6 and 3<->5") {
  const auto& sys = e6();
  CHECK(sys.diagram_symmetry(e6_simple(1)) == e6_simple(6));
  CHECK(sys.diagram_symmetry(e6_simple(3)) == e6_simple(5));
  CHECK(sys.diagram_symmetry(e6_simple(2)) == e6_simple(2));
  CHECK(sys.diagram_symmetry(e6_simple(4)) == e6_simple(4));
  for (const auto& r : sys.roots()) {
    CHECK(sys.contains(sys.diagram_symmetry(r)));
    CHECK(sys.diagram_symmetry(sys.diagram_symmetry(r)) == r);
  }
}

TEST_CASE("identify_subsystem examples") {
  const auto& sys = e6();
  auto whole = identify_subsystem(sys.roots(), sys);
  REQUIRE(whole.components.size() == 1);
  CHECK(whole.components[0].label() == "E6");
  CHECK(whole.center_dim == 0);
  CHECK(whole.dimension() == 78);

  std::vector<Root> no_a2;
  for (const auto& r : sys.roots())
    if (r[1] == 0) no_a2.push_back(r);
  auto a5 = identify_subsystem(no_a2, sys);
  CHECK(a5.label() == "A5+T1");
  CHECK(a5.compact_name() == "su(6)⊕√−1ℝ");

  std::vector<Root> none;
  auto torus = identify_subsystem(none, sys);
  CHECK(torus.components.empty());
  CHECK(torus.center_dim == 6);
  CHECK(torus.compact_name() == "6(√−1ℝ)");
}

TEST_CASE("identify_subsystem rejects non-closed subsets") {
  const auto& sys = e6();
  std::vector<Root> s = {e6_simple(1), -e6_simple(1), e6_simple(3), -e6_simple(3)};
  CHECK_FALSE(is_closed_subset(s, sys));
  CHECK_THROWS_AS(identify_subsystem(s, sys), PreconditionError);
  std::vector<Root> one_sided = {e6_simple(1)};
  CHECK_THROWS_AS(identify_subsystem(one_sided, sys), PreconditionError);
}

TEST_CASE("connected Cartan matrices") {
  for (const char* label : {"A1", "A4", "D4", "D6", "E6"}) {
    auto sys = RootSystem::build(label);
    auto m = match_connected_cartan(sys.cartan());
    REQUIRE(m.has_value());
    CHECK(m->label() == label);
  }
  std::vector<std::vector<int>> cycle = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK_FALSE(match_connected_cartan(cycle).has_value());
}

TEST_CASE("type labels and dimensions") {
  ReductiveType t({{Family::A, 1}, {Family::A, 3}, {Family::A, 1}}, 1);
  CHECK(t.label() == "A3+2A1+T1");
  CHECK(t.compact_name() == "su(4)⊕2su(2)⊕√−1ℝ");
  CHECK(t.dimension() == 15 + 3 + 3 + 1);
  CHECK(SimpleComponent{Family::D, 4}.compact_name() == "so(8)");
  CHECK(SimpleComponent{Family::E, 6}.dimension() == 78);
}

TEST_CASE("random closed subsets: root count, negation and Weyl invariance") {
  const auto& sys = e6();
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = testing::random_closed_subset(rng, sys);
    REQUIRE(is_closed_subset(s, sys));
    auto t = identify_subsystem(s, sys);
    CHECK(t.root_count() == static_cast<int>(s.size()));
    CHECK(t.semisimple_rank() + t.center_dim == 6);
    CHECK(identify_subsystem(negated(s), sys) == t);

    auto w = testing::random_weyl_word(rng, sys.rank());
    std::vector<Root> moved;
    for (const auto& r : s) moved.push_back(w.apply(r, sys));
    CHECK(identify_subsystem(moved, sys) == t);
  }
}

TEST_CASE("decompose_subsystem partitions the roots") {
  const auto& sys = e6();
  std::vector<Root> s;
  for (const auto& r : sys.roots())
    if (r[1] % 2 == 0) s.push_back(r);
  auto comps = decompose_subsystem(s, sys);
  std::size_t total = 0;
  for (const auto& c : comps) {
    total += c.roots.size();
    CHECK(static_cast<int>(c.roots.size()) == c.type.root_count());
    CHECK(static_cast<int>(c.simple_roots.size()) == c.type.rank);
  }
  CHECK(total == s.size());
  CHECK(identify_subsystem(s, sys).label() == "A5+A1");
}
