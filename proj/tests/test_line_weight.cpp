#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bfa/line_weight.hpp"

using namespace bfa;
using Catch::Matchers::WithinRel;

TEST_CASE("tau family evaluation", "[line]") {
  CHECK(LineWeight::tau_a(2.0).eval(3.0) == 16.0);
  CHECK(LineWeight::tau_a(2.0).eval(-3.0) == 16.0);
  for (double x : {-7.25, 0.0, 0.5, 11.0}) CHECK(LineWeight::tau_a(0.0).eval(x) == 1.0);
  CHECK_THROWS_AS(LineWeight::tau_a(-0.5), DomainError);
}

TEST_CASE("sampled weights interpolate geometrically", "[line]") {
  LineWeight w = LineWeight::sampled({0.0, 1.0}, {1.0, 4.0}, 1.0);
  CHECK_THAT(w.eval(0.5), WithinRel(2.0, 1e-14));  // geometric mean
  CHECK(w.eval(0.0) == 1.0);
  CHECK(w.eval(1.0) == 4.0);

  bool extrapolated = false;
  CHECK(w.eval(5.0, &extrapolated) == 4.0);
  CHECK(extrapolated);
  w.eval(0.5, &extrapolated);
  CHECK_FALSE(extrapolated);

  // A weight linear in log-value interpolates exactly at any midpoint.
  std::vector<double> grid, values;
  for (int i = 0; i <= 10; ++i) {
    grid.push_back(i);
    values.push_back(std::exp(0.3 * i));
  }
  LineWeight loglin = LineWeight::sampled(grid, values, 1.0);
  CHECK_THAT(loglin.eval(4.25), WithinRel(std::exp(0.3 * 4.25), 1e-12));
}

TEST_CASE("sampled weight construction errors", "[line]") {
  CHECK_THROWS_AS(LineWeight::sampled({0.0, 1.0}, {1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(LineWeight::sampled({1.0, 0.0}, {1.0, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(LineWeight::sampled({0.0, 1.0}, {1.0, 0.5}, 1.0), DomainError);
  CHECK_THROWS_AS(LineWeight::sampled({0.0}, {1.0}, 0.0), DomainError);
}

TEST_CASE("tau weights pass the grid check for every exponent", "[line]") {
  auto grid = uniform_grid(-10.0, 0.5, 10.0);
  REQUIRE(grid.size() == 41);
  for (double a : {0.0, 0.7, 1.0, 2.5, 4.0}) {
    auto report = verify_line_weight(LineWeight::tau_a(a), grid);
    CHECK(report.ok());
    CHECK(report.checked_pairs == 41 * 42 / 2);
  }
}

TEST_CASE("exponential sample passes with boundary extension", "[line]") {
  std::vector<double> grid, values;
  for (int x = -5; x <= 5; ++x) {
    grid.push_back(x);
    values.push_back(std::exp(std::abs(x)));
  }
  LineWeight w = LineWeight::sampled(grid, values, 1.0);
  auto report = verify_line_weight(w, grid);
  CHECK(report.ok());
  CHECK(report.extrapolated_sums > 0);  // sums reach past +-5
}

TEST_CASE("a value below 1 at the origin is flagged at (0,0)", "[line]") {
  std::vector<double> grid, values;
  for (int i = 0; i <= 40; ++i) {
    grid.push_back(-10.0 + 0.5 * i);
    values.push_back(1.0);
  }
  values[20] = 0.5;  // the origin
  LineWeight w = LineWeight::sampled(grid, values, 0.5);
  auto report = verify_line_weight(w, grid);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.x == 0.0 && v.y == 0.0) {
      found = true;
      CHECK_THAT(v.ratio, WithinRel(2.0, 1e-12));
    }
  CHECK(found);
}

TEST_CASE("products of passing weights pass", "[line]") {
  auto grid = uniform_grid(-6.0, 1.0, 6.0);
  LineWeight a = LineWeight::tau_a(1.0);
  LineWeight b = LineWeight::tau_a(1.5);
  REQUIRE(verify_line_weight(a, grid).ok());
  REQUIRE(verify_line_weight(b, grid).ok());

  // Pointwise product realized as a sample over a grid closed under sums.
  auto wide = uniform_grid(-12.0, 1.0, 12.0);
  std::vector<double> values;
  for (double x : wide) values.push_back(a.eval(x) * b.eval(x));
  LineWeight prod = LineWeight::sampled(wide, values, 1.0);
  CHECK(verify_line_weight(prod, grid).ok());
}
