#include <doctest.h>

#include <cmath>

#include "rmeasure/roots.hpp"
#include "rmeasure/sector.hpp"

using namespace rmeasure;

TEST_SUITE_BEGIN("sector");

TEST_CASE("quoted sector values") {
  CHECK(f_i(1, 10) >= 1.3090 - 1e-4);
  CHECK(f_i(9, 85) >= 0.5849 - 1e-4);
  CHECK(f_envelope(30) >= 0.9545 - 1e-4);
  CHECK(f_envelope(33.23) >= 0.9545 - 1e-4);
  CHECK(f_i(3, 23.5) == f_i(3, 23.5));
}

TEST_CASE("envelope dominates each function") {
  for (double th : {5.0, 19.0, 31.0, 47.0, 66.0, 84.0}) {
    auto e = f_envelope_detail(th);
    REQUIRE(e.values.size() == 9);
    for (double v : e.values) CHECK(e.value >= v);
    CHECK(e.value == e.values[static_cast<std::size_t>(e.argmax - 1)]);
  }
}

TEST_CASE("small angles agree with the half-line") {
  for (int i : {1, 4, 8}) {
    AuxFunction f = sector_function(i);
    f.weight = WeightKind::positive_real();
    double half = global_min(f).m;
    CHECK(f_i(i, 1e-7) == doctest::Approx(half).epsilon(1e-6));
    CHECK(f_i(i, 0) == half);
  }
}

TEST_CASE("staircase over the table polynomials") {
  const auto& pool = StaircasePool::table1_pool();
  REQUIRE(pool.entries().size() == 9);
  for (const auto& e : pool.entries()) {
    MeasureReport m = measure(e.p);
    CHECK(std::fabs(e.r - m.abs_r.convert_to<double>()) <= 1e-8);
    CHECK(std::fabs(e.half_angle - m.sector_half_angle.convert_to<double>()) <= 1e-8);
  }
  CHECK(g_theta(10, pool).value() == doctest::Approx(1.30902).epsilon(1e-5));
  CHECK(g_theta(85, pool).value() == doctest::Approx(0.584959).epsilon(1e-5));
  StaircasePool p7;
  p7.add(parse_polynomial("x^3 - 3x^2 + 2x - 1"));
  CHECK_FALSE(g_theta(50, p7).has_value());
  CHECK(g_theta(59.0157, p7).has_value());
  CHECK_THROWS_AS(g_theta(10, StaircasePool{}), std::invalid_argument);
  CHECK_THROWS_AS(p7.add(parse_polynomial("x^2 - x")), std::invalid_argument);

  double prev = INFINITY;
  for (double th = 0; th < 90; th += 0.25) {
    auto g = g_theta(th, pool);
    REQUIRE(g.has_value());
    CHECK(*g <= prev);
    prev = *g;
  }
}

TEST_CASE("c(theta) is known only on the table intervals") {
  CHECK(c_of_theta(5).value() == 1.3090);
  CHECK(c_of_theta(18.6747).value() == 1.2056);
  CHECK(c_of_theta(30).value() == 0.9545);
  CHECK_FALSE(c_of_theta(27).has_value());
  CHECK_FALSE(c_of_theta(89).has_value());
}

TEST_CASE("rows whose polynomial attains the jump") {
  for (int i : {1, 7}) {
    auto rep = verify_interval(table1()[static_cast<std::size_t>(i - 1)]);
    CAPTURE(rep.text());
    CHECK(rep.ok());
  }
  const SectorRow& row7 = table1()[6];
  CHECK(in_sector(row7.p, row7.theta_lo, 1e-3));
  CHECK_FALSE(in_sector(row7.p, 58.9));
}

TEST_SUITE_END();
