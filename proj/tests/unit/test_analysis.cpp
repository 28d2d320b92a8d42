#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hperc/analysis/ec_analysis.hpp"
#include "hperc/analysis/model.hpp"
#include "hperc/analysis/roots.hpp"
#include "hperc/continuum/grf.hpp"
#include "hperc/continuum/poisson.hpp"
#include "hperc/core/curves.hpp"
#include "hperc/core/rng.hpp"
#include "hperc/site/cubical.hpp"
#include "hperc/site/permutahedral.hpp"

using namespace hperc;

namespace {

ModelSpec spec_of(ModelKind model, int d, double size) {
  ModelSpec s;
  s.model = model;
  s.d = d;
  s.size = size;
  return s;
}

Barcode barcode(std::vector<std::vector<Interval>> bars) {
  Barcode b;
  b.max_degree = static_cast<int>(bars.size()) - 1;
  b.ambient_dim = b.max_degree;
  b.zero_length.assign(bars.size(), 0);
  b.intervals = std::move(bars);
  return b;
}

}  // namespace

TEST_CASE("find_zeros") {
  const auto quad = find_zeros([](double x) { return (x - 0.3) * (x - 0.7); }, 0.0, 1.0);
  REQUIRE(quad.size() == 2);
  CHECK(quad[0] == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(quad[1] == doctest::Approx(0.7).epsilon(1e-10));
  const auto sq2 = find_zeros([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  REQUIRE(sq2.size() == 1);
  CHECK(std::abs(sq2[0] - std::numbers::sqrt2) < 1e-10);
  const auto exact = find_zeros([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-10, 10);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0] == 0.5);
  try {
    find_zeros([](double x) { return x * x + 1.0; }, -1.0, 1.0);
    FAIL("expected NoBracketsFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBracketsFound);
  }
  CHECK_THROWS_AS(find_zeros([](double x) { return x; }, 1.0, 0.0), Error);
}

TEST_CASE("interpolated_zeros") {
  const std::vector<double> grid{0, 1, 2, 3, 4, 5};
  CHECK(interpolated_zeros(grid, std::vector<double>{1, 1, -1, -1, 1, 1}) == std::vector<double>{1.5, 3.5});
  CHECK(interpolated_zeros(grid, std::vector<double>{2, 0, 0, -2, -2, -2}) == std::vector<double>{1.5});
  CHECK(interpolated_zeros(grid, std::vector<double>{0, 0, 1, 1, 1, 1}).empty());
  CHECK(interpolated_zeros(grid, std::vector<double>{1, 1, 0, 1, 1, 1}).empty());
  CHECK(interpolated_zeros(grid, std::vector<double>{3, 1, -1, -1, -1, 0}) == std::vector<double>{1.5});
}

TEST_CASE("closed-form zero sets") {
  SUBCASE("cubical") {
    const std::vector<std::vector<double>> want{
        {0.381966011250105},
        {0.113904601938677, 0.605990771683025},
        {0.0340292012688741, 0.257431597076133, 0.715671343550742}};
    for (int d = 2; d <= 4; ++d) {
      const auto z = ec_zero_set(spec_of(ModelKind::Cubical, d, 16));
      REQUIRE(z.zeros.size() == static_cast<std::size_t>(d - 1));
      for (std::size_t i = 0; i < z.zeros.size(); ++i) CHECK(std::abs(z.zeros[i] - want[static_cast<std::size_t>(d - 2)][i]) < 1e-9);
    }
    CHECK(std::abs(ec_zero_set(spec_of(ModelKind::Cubical, 2, 16)).zeros[0] - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-9);
  }
  SUBCASE("permutahedral") {
    const std::vector<std::vector<double>> want{
        {0.5},
        {0.211324865405187, 0.788675134594813},
        {0.091751709536137, 0.5, 0.908248290463863}};
    for (int d = 2; d <= 4; ++d) {
      const auto z = ec_zero_set(spec_of(ModelKind::Permutahedral, d, 16));
      REQUIRE(z.zeros.size() == static_cast<std::size_t>(d - 1));
      for (std::size_t i = 0; i < z.zeros.size(); ++i) {
        CHECK(std::abs(z.zeros[i] - want[static_cast<std::size_t>(d - 2)][i]) < 1e-9);
        CHECK(std::abs(z.zeros[i] + z.zeros[z.zeros.size() - 1 - i] - 1.0) < 1e-9);
      }
    }
    CHECK(std::abs(ec_zero_set(spec_of(ModelKind::Permutahedral, 3, 16)).zeros[0] - (0.5 - std::sqrt(3.0) / 6.0)) < 1e-9);
  }
  SUBCASE("boolean") {
    const auto z2 = ec_zero_set(spec_of(ModelKind::Boolean, 2, 1000));
    REQUIRE(z2.zeros.size() == 1);
    CHECK(std::abs(z2.zeros[0] - 1.0) < 1e-9);
    const auto z3 = ec_zero_set(spec_of(ModelKind::Boolean, 3, 1000));
    REQUIRE(z3.zeros.size() == 2);
    CHECK(std::abs(z3.zeros[0] - 0.377220868220436) < 1e-9);
    CHECK(std::abs(z3.zeros[1] - 2.86505700833437) < 1e-9);
  }
  SUBCASE("grf") {
    const std::vector<std::vector<double>> want{{0.0}, {-1.0, 1.0}, {-std::sqrt(3.0), 0.0, std::sqrt(3.0)}};
    for (int d = 2; d <= 4; ++d) {
      const auto z = ec_zero_set(spec_of(ModelKind::Grf, d, 32));
      REQUIRE(z.zeros.size() == static_cast<std::size_t>(d - 1));
      for (std::size_t i = 0; i < z.zeros.size(); ++i) CHECK(std::abs(z.zeros[i] - want[static_cast<std::size_t>(d - 2)][i]) < 1e-9);
    }
  }
  SUBCASE("zeros are roots of the expected curve") {
    for (auto model : {ModelKind::Cubical, ModelKind::Permutahedral, ModelKind::Grf}) {
      for (int d = 2; d <= 4; ++d) {
        const auto spec = spec_of(model, d, 16);
        const auto z = ec_zero_set(spec);
        for (double r : z.zeros) CHECK(std::abs(expected_ec(spec, r)) / site_count(spec) < 1e-9);
        for (std::size_t i = 1; i < z.zeros.size(); ++i) CHECK(z.zeros[i] > z.zeros[i - 1]);
      }
    }
  }
}

TEST_CASE("model spec checks") {
  CHECK_THROWS_AS(check_spec(spec_of(ModelKind::Cubical, 5, 8)), Error);
  CHECK_THROWS_AS(check_spec(spec_of(ModelKind::Cubical, 2, 2)), Error);
  CHECK_THROWS_AS(check_spec(spec_of(ModelKind::Permutahedral, 2, 3)), Error);
  CHECK_THROWS_AS(check_spec(spec_of(ModelKind::Boolean, 2, 0)), Error);
  CHECK_NOTHROW(check_spec(spec_of(ModelKind::Grf, 3, 8)));
  const auto b = spec_of(ModelKind::Boolean, 2, 400);
  CHECK(effective_lambda_hi(b) == 4.0);
  CHECK(to_parameter(b, to_filtration_value(b, 1.7)) == doctest::Approx(1.7));
  CHECK(to_filtration_value(b, 1.0) == doctest::Approx(radius_from_lambda(1.0, 400, 2)));
  CHECK(site_count(spec_of(ModelKind::Cubical, 3, 5)) == 125.0);
  CHECK(site_count(spec_of(ModelKind::Grf, 2, 8)) == 64.0);
}

TEST_CASE("t_betti") {
  SUBCASE("meets when a component dies") {
    const auto b = barcode({{{0.0, kInfinity}, {0.0, 0.5}}, {{0.3, kInfinity}}});
    REQUIRE(t_betti(b, 1).has_value());
    CHECK(*t_betti(b, 1) == 0.5);
  }
  SUBCASE("never meets") {
    const auto b = barcode({{{0.0, kInfinity}, {0.1, kInfinity}}, {{0.4, kInfinity}}});
    CHECK_FALSE(t_betti(b, 1).has_value());
  }
  SUBCASE("both empty is not a crossing") {
    const auto b = barcode({{{0.2, kInfinity}}, {{0.2, kInfinity}}});
    REQUIRE(t_betti(b, 1).has_value());
    CHECK(*t_betti(b, 1) == 0.2);
  }
  CHECK_THROWS_AS(t_betti(barcode({{}, {}}), 2), Error);
}

TEST_CASE("gap_records") {
  EcZeroSet z;
  z.d = 3;
  z.zeros = {0.2, 0.8};
  const auto g = gap_records({{0.0}, {0.35, 0.25, 0.3}, {0.9, 0.75, 0.95}, {1.0}}, z);
  REQUIRE(g.size() == 2);
  CHECK(g[0].k == 1);
  CHECK(g[0].t_perc == 0.25);
  CHECK(g[0].delta == doctest::Approx(0.05));
  CHECK(g[1].t_perc == 0.75);
  CHECK(g[1].delta == doctest::Approx(-0.05));
  try {
    gap_records({{0.0}, {}, {0.5}}, z);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
  z.zeros = {0.2};
  CHECK_THROWS_AS(gap_records({{0.0}, {0.3}, {0.5}}, z), Error);
}

TEST_CASE("monte carlo ec") {
  SUBCASE("one trial is the trial's own curve") {
    const auto spec = spec_of(ModelKind::Cubical, 2, 10);
    const auto grid = uniform_grid(0.0, 1.0, 11);
    CHECK(grid.size() == 11);
    CHECK(grid.back() == 1.0);
    const auto mc = monte_carlo_ec(spec, 1, grid, 77);
    const auto direct = euler_curve_from_counts(generate_complex(spec, trial_seed(77, 0))).sample(grid);
    CHECK(mc.mean == direct);
    for (double s : mc.std_err) CHECK(s == 0.0);
  }
  SUBCASE("mean falls inside a CLT band around the closed form") {
    const auto spec = spec_of(ModelKind::Cubical, 2, 50);
    const auto grid = uniform_grid(0.05, 0.95, 19);
    const auto mc = monte_carlo_ec(spec, 100, grid, 3);
    int outside = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double want = expected_ec_cubical(2, 2500, grid[i]);
      if (std::abs(mc.mean[i] - want) > 4.0 * mc.std_err[i] + 1e-9) ++outside;
    }
    CHECK(outside == 0);
  }
  SUBCASE("boolean estimate tracks the closed form") {
    auto spec = spec_of(ModelKind::Boolean, 2, 300);
    const auto grid = uniform_grid(0.0, 2.0, 21);
    const auto mc = monte_carlo_ec(spec, 30, grid, 5);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(std::abs(mc.mean[i] - expected_ec_boolean(2, 300, grid[i])) <= 4.5 * mc.std_err[i] + 1e-9);
    }
    REQUIRE(mc.zeros.size() == 1);
    CHECK(std::abs(mc.zeros[0] - 1.0) < 0.1);
  }
}
