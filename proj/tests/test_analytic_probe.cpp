#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "splus/analytic_probe.hpp"
#include "splus/bseq.hpp"
#include "splus/catalog.hpp"

using splus::BSeq;
using splus::DiscGrid;
using Complex = std::complex<double>;

namespace {

BSeq<double> bd(std::vector<double> v) { return BSeq<double>(std::move(v)); }

}  // namespace

TEST_CASE("pointwise evaluation of q and f") {
  const auto f1 = splus::catalog(splus::CatalogId::f1);
  CHECK(splus::eval_q(f1, Complex(0.0, 0.5)) == Complex(0.75, 0.0));

  const auto koebe = splus::catalog(splus::CatalogId::koebe_plus);
  const Complex fv = splus::eval_f(koebe, Complex(0.5, 0.0));
  CHECK(std::abs(fv - Complex(2.0 / 9.0, 0.0)) <= 1e-16);

  CHECK_THROWS_AS(splus::eval_q(f1, Complex(1.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(splus::eval_f(f1, Complex(0.0, 1.5)), std::invalid_argument);
  // q(i) = 0 for f1, so just inside the disc the pole guard trips
  CHECK_THROWS_AS(splus::eval_f(f1, Complex(0.0, 0.9999999999999999)), std::domain_error);
}

TEST_CASE("starlikeness probe on the koebe-type member") {
  DiscGrid grid;
  grid.r_max = 0.8;
  grid.radial_steps = 5;
  grid.angular_steps = 8;

  const auto koebe = splus::catalog(splus::CatalogId::koebe_plus);
  const auto report = splus::starlike_re(koebe, grid, 0.0);
  // Re(zf'/f) = Re((1-z)/(1+z)) bottoms out on the positive real axis
  CHECK(std::abs(report.min_value - (1.0 - 0.8) / (1.0 + 0.8)) <= 1e-14);
  CHECK(std::abs(report.arg_min - Complex(0.8, 0.0)) <= 1e-15);
  CHECK(report.max_value > report.min_value);
  CHECK(report.quantity == "starlike_re");

  // alpha labels the intended verdict threshold; the extrema ignore it
  const auto other = splus::starlike_re(koebe, grid, 0.75);
  CHECK(other.min_value == report.min_value);
  CHECK(other.max_value == report.max_value);

  const auto trivial = splus::starlike_re(bd({}), grid, 0.5);
  CHECK(trivial.min_value == 1.0);
  CHECK(trivial.max_value == 1.0);
}

TEST_CASE("residual probe") {
  const DiscGrid grid;  // defaults: r_max 0.99, 50 x 256

  const auto f6 = splus::catalog(splus::CatalogId::f6, 0.4);
  const auto report = splus::u_residual(f6, grid);
  CHECK(std::abs(report.max_value - 0.4 * 0.99 * 0.99) <= 1e-14);
  CHECK(std::abs(std::abs(report.arg_max) - 0.99) <= 1e-15);
  const double r_min = 0.99 * 0.01;
  CHECK(std::abs(report.min_value - 0.4 * r_min * r_min) <= 1e-12);

  // b1 alone contributes nothing to the residual
  const auto silent = splus::u_residual(bd({2.0}), grid);
  CHECK(silent.min_value == 0.0);
  CHECK(silent.max_value == 0.0);
}

TEST_CASE("residual point evaluators agree") {
  const auto b = bd({0.5, 0.3, 0.1});
  const Complex points[] = {{0.3, 0.4}, {-0.7, 0.2}, {0.0, 0.95}, {0.99, 0.0}, {0.1, -0.05}};
  for (const Complex z : points) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    const Complex closed = splus::u_residual_at(b, z);
    const Complex direct = splus::u_residual_direct(b, z);
    CHECK(std::abs(closed - direct) <= 1e-12);
    // the closed form is literally -(b2 z^2 + 2 b3 z^3) here
    const Complex expect = -(0.3 * z * z + 2.0 * 0.1 * z * z * z);
    CHECK(std::abs(closed - expect) <= 1e-15);
  }
  CHECK_THROWS_AS(splus::u_residual_at(b, Complex(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("derivative of the averaged transform stays positive for members") {
  const DiscGrid grid;
  const auto report = splus::g_re_prime(bd({0.0, 1.0}), grid);
  // g'(z) = 1 + z here
  CHECK(std::abs(report.min_value - (1.0 - 0.99)) <= 1e-12);
  CHECK(std::abs(report.max_value - (1.0 + 0.99)) <= 1e-12);
  CHECK(report.min_value > 0.0);

  CHECK_THROWS_AS(splus::g_re_prime(bd({0.0, 1.0000001}), grid), std::domain_error);
}

TEST_CASE("f over z probe") {
  const DiscGrid grid;
  const auto report = splus::f_over_z_re(bd({0.0, 1.0}), grid);
  CHECK(std::abs(report.min_value - 1.0 / (1.0 + 0.99 * 0.99)) <= 1e-12);
  CHECK(report.min_value > 0.5);

  CHECK_THROWS_AS(splus::f_over_z_re(bd({1.0}), grid), std::domain_error);
  CHECK_THROWS_AS(splus::f_over_z_re(bd({0.0, 1.0000001}), grid), std::domain_error);
}

TEST_CASE("radial convexity probe") {
  const auto b = bd({0.0, 1.0 / 3.0});
  for (double r : {0.2, 0.5, 0.9, 0.99}) {
    CAPTURE(r);
    const double r2 = r * r;
    const double expect = (1.0 - 2.0 * r2 + r2 * r2 / 9.0) / (1.0 - r2 * r2 / 9.0);
    CHECK(std::abs(splus::convexity_probe(b, r) - expect) <= 1e-12);
  }
  CHECK(splus::convexity_probe(b, 0.1) > 0.0);
  CHECK(splus::convexity_probe(b, 0.99) < 0.0);
  CHECK(splus::convexity_probe(bd({}), 0.5) == 1.0);

  CHECK_THROWS_AS(splus::convexity_probe(b, 1.0), std::domain_error);
  CHECK_THROWS_AS(splus::convexity_probe(b, 0.0), std::domain_error);
  CHECK_THROWS_AS(splus::convexity_probe(b, -0.5), std::domain_error);
}

TEST_CASE("grid validation") {
  const auto f1 = splus::catalog(splus::CatalogId::f1);
  DiscGrid bad;
  bad.r_max = 1.0;
  CHECK_THROWS_AS(splus::starlike_re(f1, bad, 0.0), std::invalid_argument);
  bad.r_max = 0.0;
  CHECK_THROWS_AS(splus::u_residual(f1, bad), std::invalid_argument);
  bad = DiscGrid{};
  bad.radial_steps = 0;
  CHECK_THROWS_AS(splus::g_re_prime(f1, bad), std::invalid_argument);
  bad = DiscGrid{};
  bad.angular_steps = -1;
  CHECK_THROWS_AS(splus::starlike_re(f1, bad, 0.0), std::invalid_argument);
}

TEST_CASE("probe reports serialize to the documented shape") {
  DiscGrid grid;
  grid.r_max = 0.5;
  grid.radial_steps = 3;
  grid.angular_steps = 4;
  const auto report = splus::starlike_re(splus::catalog(splus::CatalogId::f3), grid, 0.0);
  const auto doc = nlohmann::json::parse(splus::report_json(report));
  for (const char* key : {"quantity", "min", "max", "argmin", "argmax", "r_max", "radial_steps",
                          "angular_steps", "tolerance"}) {
    CAPTURE(key);
    CHECK(doc.contains(key));
  }
  CHECK(doc["quantity"] == "starlike_re");
  CHECK(doc["r_max"] == 0.5);
  CHECK(doc["radial_steps"] == 3);
  CHECK(doc["angular_steps"] == 4);
  CHECK(doc["argmin"].is_array());
  CHECK(doc["argmin"].size() == 2);
  CHECK(doc["min"].get<double>() == report.min_value);
}
