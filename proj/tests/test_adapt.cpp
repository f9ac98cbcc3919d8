#include <cmath>

#include "ails/adapt.hpp"
#include "ails/rng.hpp"
#include "doctest.h"

using namespace ails;

TEST_CASE("omega scales by the ratio of target to observed distance") {
  HeuristicStats st;
  st.omega = 10.0;
  const int n = 100, gamma = 3;

  for (int i = 0; i < gamma; ++i) record_and_adjust(st, 5.0, 15.0, gamma, n);
  CHECK(st.omega == doctest::Approx(30.0));  // 10 * 15/5
  CHECK(st.uses == 0);                       // window restarts
  CHECK(st.distance_sum == 0.0);

  SUBCASE("nothing changes before the window fills") {
    HeuristicStats fresh;
    fresh.omega = 10.0;
    record_and_adjust(fresh, 5.0, 15.0, gamma, n);
    record_and_adjust(fresh, 5.0, 15.0, gamma, n);
    CHECK(fresh.omega == 10.0);
    CHECK(fresh.uses == 2);
  }
}

TEST_CASE("omega adjustments clamp into [1, n]") {
  const int gamma = 2;

  HeuristicStats up;
  up.omega = 40.0;
  for (int i = 0; i < gamma; ++i) record_and_adjust(up, 1.0, 50.0, gamma, 64);
  CHECK(up.omega == 64.0);  // 40 * 50 would blow past n

  HeuristicStats down;
  down.omega = 2.0;
  for (int i = 0; i < gamma; ++i)
    record_and_adjust(down, 100.0, 1.0, gamma, 64);
  CHECK(down.omega == 1.0);

  HeuristicStats zero;  // all observed distances zero: treat the mean as 1
  zero.omega = 10.0;
  for (int i = 0; i < gamma; ++i) record_and_adjust(zero, 0.0, 15.0, gamma, 64);
  CHECK(zero.omega == doctest::Approx(64.0));  // 10 * 15/1, clamped by n
}

TEST_CASE("applied omega is the clamped nearest integer") {
  HeuristicStats st;
  st.omega = 7.4;
  CHECK(applied_omega(st, 100) == 7);
  st.omega = 7.5;
  CHECK(applied_omega(st, 100) == 8);
  st.omega = 1.0;
  CHECK(applied_omega(st, 100) == 1);
  st.omega = 99.9;
  CHECK(applied_omega(st, 50) == 50);
}

TEST_CASE("omega stays in range through a long random walk") {
  Rng rng(515151);
  const int n = 37, gamma = 20;
  HeuristicStats st;
  for (int i = 0; i < 100000; ++i) {
    record_and_adjust(st, rng.uniform01() * 80.0, 15.0, gamma, n);
    CHECK(st.omega >= 1.0);
    CHECK(st.omega <= n);
    int w = applied_omega(st, n);
    CHECK(w >= 1);
    CHECK(w <= n);
  }
}

TEST_CASE("the running average is exact first, then exponential") {
  AcceptState acc(20);
  acc.update(50.0);
  CHECK(acc.average() == doctest::Approx(50.0));

  AcceptState acc2(20);
  for (int i = 0; i < 24; ++i) acc2.update(100.0);
  CHECK(acc2.average() == doctest::Approx(100.0));
  acc2.update(120.0);  // 100 * (1 - 1/20) + 120 / 20
  CHECK(acc2.average() == doctest::Approx(101.0));

  SUBCASE("early phase matches the arithmetic mean exactly") {
    AcceptState acc3(20);
    acc3.update(10.0);
    acc3.update(20.0);
    acc3.update(60.0);
    CHECK(acc3.average() == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(acc3.iterations() == 3);
  }
}

TEST_CASE("the low mark is the window minimum") {
  AcceptState acc(3);
  acc.update(100.0);
  acc.update(110.0);
  acc.update(120.0);
  CHECK(acc.low() == doctest::Approx(100.0));
  acc.update(115.0);  // 100 slides out of the window of 3
  CHECK(acc.low() == doctest::Approx(110.0));
}

TEST_CASE("acceptance threshold interpolates between low and average") {
  AcceptState acc(3);
  acc.update(100.0);
  acc.update(110.0);
  acc.update(120.0);  // low 100, average 110
  CHECK(acc.threshold(0.2) == doctest::Approx(102.0));

  SUBCASE("endpoints are exact") {
    CHECK(acc.threshold(0.0) == acc.low());
    CHECK(acc.threshold(1.0) == acc.average());
  }

  SUBCASE("equality is accepted") {
    CHECK(acc.accept(acc.threshold(0.2), 0.2));
    CHECK(acc.accept(102.0, 0.2));
    CHECK_FALSE(acc.accept(102.0 + 1e-9, 0.2));
  }
}

TEST_CASE("exponential phase matches its closed form") {
  const int lambda = 20;
  AcceptState acc(lambda);
  Rng rng(808);
  double reference = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    double f = 50.0 + rng.uniform01() * 10.0;
    acc.update(f);
    if (i <= lambda)
      reference = (reference * (i - 1) + f) / i;
    else
      reference = reference * (1.0 - 1.0 / lambda) + f / lambda;
    CHECK(std::abs(acc.average() - reference) <= 1e-9);
  }
}
