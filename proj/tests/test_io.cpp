#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ails/bks.hpp"
#include "ails/engine.hpp"
#include "ails/instance_io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ails;
using ails::testing::make_instance;
using ails::testing::make_solution;

namespace {

const char* kCanonical =
    "NAME sample\n"
    "VARIANT HVRPFD\n"
    "DIMENSION 4\n"
    "VEHICLE_TYPES 2\n"
    "10 5 1.0 2\n"
    "20 9 1.5\n"
    "NODE_COORD_SECTION\n"
    "0 0 0\n"
    "1 3 4\n"
    "2 6 0\n"
    "3 0 5\n"
    "DEMAND_SECTION\n"
    "0 0\n"
    "1 2\n"
    "2 3\n"
    "3 4\n"
    "EOF\n";

std::string error_of(const std::string& text,
                     std::optional<Variant> override = {}) {
  std::istringstream in(text);
  try {
    parse_instance(in, "mem", override);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the canonical format parses field by field") {
  std::istringstream in(kCanonical);
  Instance inst = parse_instance(in, "mem");
  CHECK(inst.name == "sample");
  CHECK(inst.variant == Variant::HVRPFD);
  CHECK(inst.n == 3);
  REQUIRE(inst.types.size() == 2);
  CHECK(inst.types[0].capacity == 10.0);
  CHECK(inst.types[0].fixed_cost == 5.0);
  CHECK(inst.types[0].unit_cost == 1.0);
  CHECK(inst.types[0].count == 2);
  CHECK(inst.types[1].count == 3);  // defaulted to n
  CHECK(inst.xs[1] == 3.0);
  CHECK(inst.ys[3] == 5.0);
  CHECK(inst.demands[2] == 3.0);
  CHECK_FALSE(inst.normalized);
}

TEST_CASE("the command line variant beats the file's") {
  std::istringstream in(kCanonical);
  Instance inst = parse_instance(in, "mem", Variant::FSMD);
  CHECK(inst.variant == Variant::FSMD);
}

TEST_CASE("parse errors name the offending line") {
  std::string text = kCanonical;

  SUBCASE("bad dimension line") {
    auto broken = text;
    broken.replace(broken.find("DIMENSION 4"), 11, "DIMENSION x");
    CHECK(error_of(broken).find("mem:3:") != std::string::npos);
  }

  SUBCASE("out-of-order node ids") {
    auto broken = text;
    broken.replace(broken.find("2 6 0"), 5, "7 6 0");
    auto msg = error_of(broken);
    CHECK(msg.find("mem:10:") != std::string::npos);
    CHECK(msg.find("expected node id 2") != std::string::npos);
  }

  SUBCASE("missing EOF") {
    auto broken = text.substr(0, text.find("EOF"));
    CHECK(error_of(broken).find("expected EOF") != std::string::npos);
  }

  SUBCASE("unknown variant name") {
    auto broken = text;
    broken.replace(broken.find("HVRPFD"), 6, "BOGUS!");
    CHECK(error_of(broken).find("mem:2:") != std::string::npos);
  }

  SUBCASE("no variant anywhere") {
    auto broken = text;
    broken.erase(broken.find("VARIANT"), std::string("VARIANT HVRPFD\n").size());
    CHECK(error_of(broken).find("no VARIANT") != std::string::npos);
    CHECK(error_of(broken, Variant::FSMF).empty());  // the override rescues it
  }

  SUBCASE("semantic breakage is reported with the source name") {
    auto broken = text;
    broken.replace(broken.find("1 2\n"), 4, "1 0\n");  // zero demand
    CHECK(error_of(broken).find("mem:") != std::string::npos);
  }
}

TEST_CASE("serialize then parse is the identity") {
  std::istringstream in(kCanonical);
  Instance a = parse_instance(in, "mem");
  std::ostringstream out;
  serialize_instance(a, out);
  std::istringstream back(out.str());
  Instance b = parse_instance(back, "mem2");

  CHECK(b.name == a.name);
  CHECK(b.variant == a.variant);
  CHECK(b.n == a.n);
  REQUIRE(b.types.size() == a.types.size());
  for (std::size_t t = 0; t < a.types.size(); ++t) {
    CHECK(b.types[t].capacity == a.types[t].capacity);
    CHECK(b.types[t].fixed_cost == a.types[t].fixed_cost);
    CHECK(b.types[t].unit_cost == a.types[t].unit_cost);
    CHECK(b.types[t].count == a.types[t].count);
  }
  CHECK(b.xs == a.xs);
  CHECK(b.ys == a.ys);
  CHECK(b.demands == a.demands);

  SUBCASE("a normalized instance serializes its original fleet") {
    Instance norm = normalize_fleet(a);
    std::ostringstream out2;
    serialize_instance(norm, out2);
    CHECK(out2.str() == out.str());
  }
}

TEST_CASE("shipped fixtures parse and carry their variants") {
  Instance t1 = load_instance(AILS_DATA_DIR "/fixtures/tiny_01.txt");
  CHECK(t1.name == "tiny_01");
  CHECK(t1.n >= 4);
  Instance s50 = load_instance(AILS_DATA_DIR "/fixtures/synth_50.txt");
  CHECK(s50.n == 50);
  CHECK(s50.variant == Variant::HVRPFD);
  CHECK_THROWS_AS(load_instance(AILS_DATA_DIR "/fixtures/absent.txt"),
                  ParseError);
}

TEST_CASE("legacy layouts convert to canonical instances") {
  SUBCASE("four-column type lines") {
    std::istringstream in(
        "2 2\n"
        "10 5 1.0 2\n"
        "20 9 1.5 1\n"
        "0 0 0 0\n"
        "1 3 4 2\n"
        "2 6 0 3\n");
    Instance inst = convert_legacy(in, "mem", "legacy4", Variant::HVRPFD, {});
    CHECK(inst.n == 2);
    CHECK(inst.types[1].fixed_cost == 9.0);
    CHECK(inst.demands[2] == 3.0);
  }

  SUBCASE("three-column type lines imply zero fixed cost") {
    std::istringstream in(
        "1 1\n"
        "10 1.5 3\n"
        "0 0 0 0\n"
        "1 3 4 2\n");
    Instance inst = convert_legacy(in, "mem", "legacy3", Variant::HVRPD, {});
    CHECK(inst.types[0].fixed_cost == 0.0);
    CHECK(inst.types[0].unit_cost == 1.5);
    CHECK(inst.types[0].count == 3);
  }

  SUBCASE("a fleet key replaces the type block") {
    std::istringstream in(
        "1\n"
        "0 0 0 0\n"
        "1 3 4 19\n");
    Instance inst =
        convert_legacy(in, "mem", "mini13", Variant::HVRPFD, {{"13"}});
    REQUIRE(inst.types.size() == 6);
    CHECK(inst.types[5].capacity == 200.0);
    CHECK(inst.types[5].count == 1);
  }

  SUBCASE("bad input is rejected loudly") {
    std::istringstream no_types("1\n0 0 0 0\n1 3 4 2\n");
    CHECK_THROWS_AS(
        convert_legacy(no_types, "mem", "x", Variant::FSMD, {}), ParseError);
    std::istringstream bad_key("1\n0 0 0 0\n1 3 4 2\n");
    CHECK_THROWS_AS(
        convert_legacy(bad_key, "mem", "x", Variant::FSMD, {{"99"}}),
        ParseError);
  }
}

TEST_CASE("the embedded fleet tables match their sources") {
  auto g13 = benchmark_fleet("13");
  REQUIRE(g13.has_value());
  REQUIRE(g13->size() == 6);
  CHECK((*g13)[0].capacity == 20.0);
  CHECK((*g13)[0].fixed_cost == 20.0);
  CHECK((*g13)[0].count == 4);
  CHECK((*g13)[4].unit_cost == 2.5);

  auto n1 = benchmark_fleet("N1");
  REQUIRE(n1.has_value());
  for (const auto& t : *n1) CHECK(t.fixed_cost == 0.0);
  CHECK((*n1)[0].count == 5);

  CHECK(benchmark_fleet("3").has_value());
  CHECK(benchmark_fleet("H5")->size() == 6);
  CHECK_FALSE(benchmark_fleet("2").has_value());
  CHECK_FALSE(benchmark_fleet("").has_value());
}

TEST_CASE("best-known costs resolve by name and variant") {
  auto reg = BksRegistry::builtin();
  REQUIRE(reg.lookup("13", Variant::HVRPFD).has_value());
  CHECK(*reg.lookup("13", Variant::HVRPFD) == doctest::Approx(3185.09));
  CHECK(*reg.lookup("3", Variant::FSMF) == doctest::Approx(961.03));
  CHECK(*reg.lookup("N3", Variant::FSMD) == doctest::Approx(2234.57));
  CHECK(*reg.lookup("H5", Variant::HVRPD) == doctest::Approx(23024.58));
  CHECK_FALSE(reg.lookup("3", Variant::HVRPFD).has_value());
  CHECK_FALSE(reg.lookup("nope", Variant::FSMD).has_value());
}

TEST_CASE("a bks file can override and extend the built-ins") {
  std::string path = "bks_test_tmp.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "\n"
        << "13 HVRPFD 1111.5\n"
        << "mine FSMD 42 # trailing words\n";
  }
  auto reg = BksRegistry::builtin();
  reg.load_file(path);
  CHECK(*reg.lookup("13", Variant::HVRPFD) == doctest::Approx(1111.5));
  CHECK(*reg.lookup("mine", Variant::FSMD) == doctest::Approx(42.0));

  {
    std::ofstream out(path);
    out << "13 HVRPFD\n";  // missing the cost column
  }
  CHECK_THROWS_AS(reg.load_file(path), std::runtime_error);
  CHECK_THROWS_AS(reg.load_file("no_such_bks_file.txt"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("gap arithmetic and formatting") {
  CHECK(format_gap(gap_percent(10110.61, 10107.53)) == "0.0305");
  CHECK(format_gap(gap_percent(500.0, 500.0)) == "0.0000");
  CHECK(gap_percent(90.0, 100.0) == doctest::Approx(-10.0));
  CHECK_THROWS_AS(gap_percent(10.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(gap_percent(10.0, -5.0), std::domain_error);
  CHECK(format_cost(1144.216) == "1144.22");
  CHECK(format_cost(0.0) == "0.00");
}

TEST_CASE("solutions print routes, loads, and costs") {
  auto inst = normalize_fleet(make_instance(
      Variant::HVRPFD, {{0, 0}, {10, 0}, {12, 0}}, {0, 2, 3},
      {{10, 100, 1.5, 2}, {20, 150, 2.0, 2}}));
  DistanceMatrix dist(inst);
  auto s = make_solution(inst, dist, {{0, {1}}, {1, {2}}});
  std::ostringstream out;
  write_solution(s, out);
  CHECK(out.str() ==
        "Route 1 [type A]: 0 1 0 (load 2, cost 130.00)\n"
        "Route 2 [type B]: 0 2 0 (load 3, cost 198.00)\n"
        "Total cost: 328.00\n");
}

TEST_CASE("trace rows serialize one iteration per line") {
  TraceRecord t;
  t.iter = 7;
  t.f = 100.5;
  t.f_best = 99.25;
  t.heuristic = RemovalKind::Random;
  t.omega = 12;
  t.accepted = true;
  std::ostringstream out;
  write_trace_header(out);
  write_trace({t}, 3, out);
  CHECK(out.str() ==
        "run,iter,f,f_best,heuristic,omega,accepted\n"
        "3,7,100.500000,99.250000,H2,12,1\n");
}
