#include <cmath>
#include <vector>

#include "ails/oracle.hpp"
#include "ails/search.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ails;
using ails::testing::make_instance;
using ails::testing::make_solution;
using ails::testing::singleton_solution;

namespace {

struct Ctx {
  Instance inst;
  DistanceMatrix dist;
  NeighborLists nb;

  explicit Ctx(Instance i)
      : inst(std::move(i)), dist(inst), nb(build_neighbors(inst, dist, inst.n)) {}
};

}  // namespace

TEST_CASE("descent merges two singletons that belong together") {
  // 1 and 2 sit side by side far from the depot; one route is clearly best.
  Ctx c(normalize_fleet(make_instance(Variant::FSMD,
                                      {{0, 0}, {50, 0}, {51, 0}},
                                      {0, 3, 3}, {{10, 0, 1.0, 2}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{0, {1}}, {0, {2}}});
  CHECK(s.cost() == doctest::Approx(202.0));

  search.apply(s);
  CHECK(s.num_routes() == 1);
  CHECK(s.cost() == doctest::Approx(102.0));

  double settled = s.cost();
  search.apply(s);
  CHECK(s.cost() == doctest::Approx(settled));  // a fixed point stays put
}

TEST_CASE("descent untangles crossed routes with tail exchanges") {
  // two pairs of close customers, one pair per side of the depot; the start
  // pairs them across sides and only re-pairing fixes it
  Ctx c(normalize_fleet(make_instance(
      Variant::FSMD, {{0, 0}, {10, 1}, {10, -1}, {-10, 1}, {-10, -1}},
      {0, 1, 1, 1, 1}, {{2, 0, 1.0, 4}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{0, {1, 3}}, {0, {2, 4}}});

  search.apply(s);
  double expect = 4.0 * std::sqrt(101.0) + 4.0;  // [1,2] and [3,4]
  CHECK(s.cost() == doctest::Approx(expect));
  CHECK(s.num_routes() == 2);
  CHECK(validate(s).empty());
}

TEST_CASE("descent output is never worse and never infeasible") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<double, double>> pts = {{0, 0}};
    std::vector<double> demands = {0};
    int n = 5 + trial % 3;
    for (int i = 0; i < n; ++i) {
      pts.push_back({static_cast<double>(rng.uniform_int(-20, 20)),
                     static_cast<double>(rng.uniform_int(-20, 20))});
      demands.push_back(rng.uniform_int(1, 5));
    }
    Ctx c(normalize_fleet(make_instance(
        Variant::FSMFD, pts, demands,
        {{8, 30, 1.0, n}, {15, 55, 1.4, n}})));
    LocalSearch search(c.inst, c.dist, c.nb);

    Solution s = singleton_solution(c.inst, c.dist, rng);
    double before = s.cost();
    search.apply(s);
    CHECK(s.cost() <= before + 1e-9);
    CHECK(is_feasible(s));
    CHECK(std::abs(s.cost() - total_cost(s)) <= 1e-6);
    CHECK(validate(s).empty());
  }
}

TEST_CASE("descent never dives below the exact optimum") {
  Rng rng(777);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::pair<double, double>> pts = {{0, 0}};
    std::vector<double> demands = {0};
    for (int i = 0; i < 5; ++i) {
      pts.push_back({static_cast<double>(rng.uniform_int(0, 15)),
                     static_cast<double>(rng.uniform_int(0, 15))});
      demands.push_back(rng.uniform_int(1, 4));
    }
    Ctx c(normalize_fleet(make_instance(Variant::FSMD, pts, demands,
                                        {{6, 0, 1.0, 5}, {12, 0, 1.6, 5}})));
    LocalSearch search(c.inst, c.dist, c.nb);
    double opt = exact_solve(c.inst, c.dist).cost;

    for (int start = 0; start < 4; ++start) {
      Solution s = singleton_solution(c.inst, c.dist, rng);
      search.apply(s);
      CHECK(s.cost() >= opt - 1e-9);
    }
  }
}

TEST_CASE("repair fixes an overloaded route by spreading the load") {
  Ctx c(normalize_fleet(make_instance(
      Variant::HVRPD, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}},
      {0, 4, 4, 4, 4}, {{10, 0, 1.0, 1}, {10, 0, 1.2, 3}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{0, {1, 2, 3, 4}}});
  REQUIRE_FALSE(is_feasible(s));

  Rng rng(9);
  CHECK(search.repair(s, rng));
  CHECK(is_feasible(s));
  CHECK(s.num_routes() >= 2);  // 16 demand never fits one vehicle
  for (int v = 1; v <= 4; ++v) CHECK(s.assigned(v));
  CHECK(validate(s).empty());
}

TEST_CASE("repair clears a fleet-count excess") {
  Ctx c(normalize_fleet(make_instance(
      Variant::HVRPD, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}},
      {0, 4, 4, 4, 4}, {{20, 0, 1.0, 1}, {20, 0, 1.5, 3}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{0, {1, 2}}, {0, {3, 4}}});
  auto rep = check_feasible(s);
  REQUIRE(rep.count_excess == 1);  // two type-0 routes, one vehicle

  Rng rng(10);
  CHECK(search.repair(s, rng));
  CHECK(is_feasible(s));
  CHECK(validate(s).empty());
}

TEST_CASE("repair leaves a feasible solution untouched") {
  Ctx c(normalize_fleet(make_instance(
      Variant::HVRPFD, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}},
      {0, 4, 4, 4, 4}, {{10, 5, 1.0, 2}, {10, 8, 1.2, 2}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{0, {1, 2}}, {1, {3, 4}}});
  double before = s.cost();

  Rng rng(11);
  CHECK(search.repair(s, rng));
  CHECK(s.cost() == doctest::Approx(before).epsilon(1e-12));
  CHECK(s.num_routes() == 2);
}

TEST_CASE("repair can only succeed by opening fresh routes") {
  // one giant overloaded route and nowhere to shift: the repair has to
  // append empty routes and move customers onto them
  Ctx c(normalize_fleet(make_instance(
      Variant::HVRPFD, {{0, 0}, {2, 0}, {4, 0}, {6, 0}, {8, 0}, {10, 0}},
      {0, 3, 3, 3, 3, 3}, {{6, 10, 1.0, 3}, {9, 14, 1.3, 3}})));
  LocalSearch search(c.inst, c.dist, c.nb);
  auto s = make_solution(c.inst, c.dist, {{1, {1, 2, 3, 4, 5}}});
  REQUIRE_FALSE(is_feasible(s));

  Rng rng(12);
  CHECK(search.repair(s, rng));
  CHECK(is_feasible(s));
  CHECK(s.num_routes() >= 2);
  for (const auto& rt : s.routes()) CHECK_FALSE(rt.empty());
}

TEST_CASE("intra-route reversal stays sound when enabled") {
  Ctx c(normalize_fleet(make_instance(
      Variant::FSMD, {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {40, 0}},
      {0, 2, 2, 2, 2}, {{10, 0, 1.0, 4}})));
  LocalSearch plain(c.inst, c.dist, c.nb, false);
  LocalSearch with_reversal(c.inst, c.dist, c.nb, true);

  auto a = make_solution(c.inst, c.dist, {{0, {1, 3, 2, 4}}});
  auto b = a;
  plain.apply(a);
  with_reversal.apply(b);
  // the default move set works across routes, so a lone route stays put
  CHECK(a.cost() == doctest::Approx(100.0));
  CHECK(b.cost() == doctest::Approx(80.0));  // visiting in line order
  CHECK(validate(b).empty());
}
