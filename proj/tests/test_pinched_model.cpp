#include "pinchlink/error.hpp"
#include "pinchlink/pinched_model.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pinchlink;

TEST_CASE("cycle decomposition of small permutations") {
  SUBCASE("identity on one element") {
    const auto c = cycle_decomposition(Permutation::identity(1));
    CHECK(c.cycles == std::vector<std::vector<int>>{{1}});
    CHECK(c.orders == std::vector<int>{1});
  }
  SUBCASE("full 3-cycle") {
    const auto c = cycle_decomposition(Permutation({2, 3, 1}));
    CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(c.orders == std::vector<int>{3});
  }
  SUBCASE("(1 2)(3 4 5)") {
    const std::vector<int> images{2, 1, 4, 5, 3};
    const auto c = cycle_decomposition(Permutation(images));
    // Orbit-following oracle, frozen: {1,2}, {3,4,5}.
    REQUIRE(oracle::orbits(images) == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});
    CHECK(c.cycles == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});
    CHECK(c.orders == std::vector<int>{2, 3});
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({}), InputError);
  CHECK_THROWS_AS(Permutation({1, 1}), InputError);
  CHECK_THROWS_AS(Permutation({0, 1}), InputError);
  CHECK_THROWS_AS(Permutation({1, 3}), InputError);
  CHECK_NOTHROW(Permutation({3, 1, 2}));
}

TEST_CASE("cycle orders partition k and match orbits on random permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const auto c = cycle_decomposition(Permutation(images));
    CHECK(std::accumulate(c.orders.begin(), c.orders.end(), 0) == k);
    auto cycles_as_sets = c.cycles;
    for (auto& cycle : cycles_as_sets) std::sort(cycle.begin(), cycle.end());
    CHECK(cycles_as_sets == oracle::orbits(images));
    for (std::size_t j = 0; j < c.cycles.size(); ++j) {
      CHECK(c.cycles[j].front() == *std::min_element(c.cycles[j].begin(), c.cycles[j].end()));
      CHECK(static_cast<int>(c.cycles[j].size()) == c.orders[j]);
    }
  }
}

TEST_CASE("sheets of pinched tori") {
  CHECK(sheets(SingularPinchedTorus(Permutation::identity(2))) == std::vector<Curling>{{1}, {1}});
  for (int d : {2, 3, 7}) {
    const SingularPinchedTorus curling(Permutation::from_cycle_orders(std::vector<int>{d}));
    CHECK(sheets(curling) == std::vector<Curling>{{d}});
  }
  const SingularPinchedTorus mixed(Permutation({2, 1, 4, 5, 3}));
  const auto first = sheets(mixed);
  CHECK(first == std::vector<Curling>{{2}, {3}});
  CHECK(sheets(mixed) == first);
}

TEST_CASE("sheet multiset is a conjugacy invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 10)(rng);
    std::vector<int> a(static_cast<std::size_t>(k));
    std::vector<int> b(static_cast<std::size_t>(k));
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation c(a);
    const Permutation g(b);
    auto lhs = sheets(SingularPinchedTorus(c));
    auto rhs = sheets(SingularPinchedTorus(g * c * g.inverse()));
    const auto by_order = [](const Curling& x, const Curling& y) { return x.order < y.order; };
    std::sort(lhs.begin(), lhs.end(), by_order);
    std::sort(rhs.begin(), rhs.end(), by_order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("boundary framings and classes") {
  const SingularPinchedTorus trivial(Permutation::identity(1));
  CHECK_FALSE(trivial.is_topologically_singular());
  const auto one = boundary_framings(trivial);
  REQUIRE(one.size() == 1);
  CHECK(one[0].sheet_degree == 1);
  CHECK(boundary_class_map(trivial, 0).meridian == 0);
  CHECK(boundary_class_map(trivial, 0).parallel == 1);

  const int d = 5;
  const SingularPinchedTorus curling(Permutation::from_cycle_orders(std::vector<int>{d}));
  CHECK(curling.is_topologically_singular());
  REQUIRE(boundary_framings(curling).size() == 1);
  CHECK(boundary_framings(curling)[0].sheet_degree == d);
  CHECK(boundary_class_map(curling, 0).meridian == 0);
  CHECK(boundary_class_map(curling, 0).parallel == d);

  const SingularPinchedTorus two_one(Permutation({2, 1, 3}));
  const auto framings = boundary_framings(two_one);
  REQUIRE(framings.size() == 2);
  CHECK(framings[0].sheet_degree == 2);
  CHECK(framings[1].sheet_degree == 1);
  CHECK(framings[0].meridian == "m1");
  CHECK(framings[1].parallel == "l2");

  const SingularPinchedTorus mixed(Permutation({2, 1, 4, 5, 3}));
  CHECK(boundary_class_map(mixed, 1).parallel == 3);
  CHECK_THROWS_AS(boundary_class_map(mixed, 2), std::out_of_range);
}

TEST_CASE("boundary classes on random tori: meridian null, parallel d_j") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> orders;
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < n; ++j) orders.push_back(std::uniform_int_distribution<int>(1, 5)(rng));
    const SingularPinchedTorus t(Permutation::from_cycle_orders(orders));
    REQUIRE(sheets(t).size() == orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const auto classes = boundary_class_map(t, j);
      CHECK(classes.meridian == 0);
      CHECK(classes.parallel == orders[j]);
    }
  }
}

TEST_CASE("singular curve data") {
  SingularCurveData curve{"sigma", {2, 3}};
  CHECK_NOTHROW(curve.validate());
  CHECK(curve.total_degree() == 5);
  CHECK(curve.is_topologically_singular());
  CHECK(cycle_decomposition(curve.pinched_torus().monodromy()).orders == std::vector<int>{2, 3});
  CHECK_FALSE(SingularCurveData{"c", {1}}.is_topologically_singular());
  CHECK_THROWS_AS((SingularCurveData{"c", {}}.validate()), InputError);
  CHECK_THROWS_AS((SingularCurveData{"c", {2, 0}}.validate()), InputError);
  CHECK_THROWS_AS((SingularCurveData{"", {2}}.validate()), InputError);
}
