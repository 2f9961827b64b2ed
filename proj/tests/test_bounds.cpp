#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "splus/bounds.hpp"

TEST_CASE("controlling root nu0") {
  const double nu0 = splus::solve_nu0();
  // independently frozen from a high-precision bisection of 2(2x+1)e^(-2x) = 1
  CHECK(std::abs(nu0 - 0.83917349500833033) <= 1e-12);
  CHECK(std::abs(2.0 * (2.0 * nu0 + 1.0) * std::exp(-2.0 * nu0) - 1.0) <= 1e-15);

  CHECK(splus::solve_nu0(1e-4) == nu0);  // cached: one root per process
  CHECK(splus::solve_nu0(1e-14) == nu0);
  CHECK_THROWS_AS(splus::solve_nu0(0.0), std::invalid_argument);
  CHECK_THROWS_AS(splus::solve_nu0(-1e-9), std::invalid_argument);

  const double breakpoint = splus::fs_upper(0.0).breakpoint;
  CHECK(std::abs(breakpoint - 0.45627750578502622) <= 1e-15);
  CHECK(breakpoint == nu0 / (1.0 + nu0));
}

TEST_CASE("psi auxiliary") {
  CHECK(splus::fs_psi(0.0, 0.0) == 3.0);

  // on the exp branch the inner maximum sits at nu = gamma/(1-gamma), where
  // psi collapses to the branch formula
  for (double gamma : {0.1, 0.3, 0.45}) {
    const double nu = gamma / (1.0 - gamma);
    const double direct = 1.0 + 2.0 * std::exp(-2.0 * gamma / (1.0 - gamma));
    CHECK(std::abs(splus::fs_psi(nu, gamma) - direct) <= 5e-15);
  }

  CHECK_THROWS_AS(splus::fs_psi(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(splus::fs_psi(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(splus::fs_psi(0.5, -0.1), std::domain_error);
}

TEST_CASE("piecewise upper bound values") {
  struct Row {
    double gamma;
    double upper;
    splus::FsBranch branch;
  };
  const Row rows[] = {
      {0.0, 3.0, splus::FsBranch::exp_branch},
      {0.3, 1.8487456913538999, splus::FsBranch::exp_branch},
      {0.45, 1.3893734166630203, splus::FsBranch::exp_branch},
      {0.5, 1.2629279019295837, splus::FsBranch::nu0_branch},
      {0.7, 0.75775674115775032, splus::FsBranch::nu0_branch},
      {0.9, 0.25258558038591668, splus::FsBranch::nu0_branch},
  };
  for (const auto& row : rows) {
    CAPTURE(row.gamma);
    const auto fs = splus::fs_upper(row.gamma);
    CHECK(std::abs(fs.upper - row.upper) <= 1e-14);
    CHECK(fs.branch == row.branch);
    CHECK(fs.lower == -1.0);
    CHECK(fs.gamma == row.gamma);
  }

  CHECK_THROWS_AS(splus::fs_upper(1.0), std::domain_error);
  CHECK_THROWS_AS(splus::fs_upper(-0.0001), std::domain_error);
}

TEST_CASE("upper bound is strictly decreasing and branch-continuous") {
  double prev = splus::fs_upper(0.0).upper;
  for (int i = 1; i <= 99; ++i) {
    const double gamma = 0.01 * i;
    const double cur = splus::fs_upper(gamma).upper;
    CAPTURE(gamma);
    CHECK(cur < prev);
    prev = cur;
  }

  const double bp = splus::fs_upper(0.0).breakpoint;
  const double left = splus::fs_upper(bp).upper;
  const double right = splus::fs_upper(std::nextafter(bp, 1.0)).upper;
  CHECK(splus::fs_upper(bp).branch == splus::FsBranch::exp_branch);
  CHECK(std::abs(left - right) <= 1e-9);
}

TEST_CASE("logarithmic coefficient ranges") {
  const auto lb = splus::log_coeff_bounds();
  CHECK(lb.gamma1.lower == -1.0);
  CHECK(lb.gamma1.upper == 0.0);
  CHECK(lb.gamma2.lower == -0.5);
  CHECK(std::abs(lb.gamma2.upper - 0.63146395096479184) <= 1e-12);
  CHECK(lb.gamma2.upper == splus::fs_upper(0.5).upper / 2.0);
  CHECK(lb.gamma3.lower == -0.25);
  CHECK(lb.gamma3.upper == 1.0 / 3.0);
}

TEST_CASE("coefficient intervals over the weight parameter") {
  const auto full = splus::uplus_coeff_intervals(1.0);
  CHECK(full.lambda == 1.0);
  CHECK(full.a2.lower == -2.0);
  CHECK(full.a2.upper == 0.0);
  CHECK(full.a3.lower == -1.0);
  CHECK(full.a3.upper == 3.0);
  CHECK(full.a4.lower == -4.0);
  CHECK(std::abs(full.a4.upper - 1.0886621079036347) <= 1e-14);
  CHECK(full.a5_lower == -2.25);
  REQUIRE(full.a5_upper.has_value());
  CHECK(*full.a5_upper == 5.0);

  const auto small = splus::uplus_coeff_intervals(0.1);
  CHECK(std::abs(small.a2.lower + 1.1) <= 1e-15);
  CHECK(std::abs(small.a3.upper - 1.11) <= 1e-15);
  CHECK(std::abs(small.a4.upper - (4.0 * 0.1 / 3.0) * std::sqrt(2.0 * 0.1 / 3.0)) <= 1e-16);
  CHECK(small.a5_lower == -0.1 / 3.0);
  CHECK_FALSE(small.a5_upper.has_value());

  // the two fifth-coefficient formulas meet at the crossover weight
  const double cross = 4.0 / 27.0;
  CHECK(std::abs(splus::uplus_coeff_intervals(cross).a5_lower + 4.0 / 81.0) <= 1e-15);
  CHECK(std::abs(-9.0 * cross * cross / 4.0 + 4.0 / 81.0) <= 1e-15);
  CHECK(std::abs(-cross / 3.0 + 4.0 / 81.0) <= 1e-15);

  CHECK_THROWS_AS(splus::uplus_coeff_intervals(0.0), std::domain_error);
  CHECK_THROWS_AS(splus::uplus_coeff_intervals(-1.0), std::domain_error);
  CHECK_THROWS_AS(splus::uplus_coeff_intervals(1.0000001), std::domain_error);
}
