#include <doctest.h>

#include <random>
#include <vector>

#include "splus/rational.hpp"
#include "splus/trunc_series.hpp"

using splus::Rational;
using splus::TruncSeries;

namespace {

TruncSeries<Rational> random_rational_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-16, 16);
  TruncSeries<Rational> s(order);
  s[0] = unit_constant ? Rational(1) : Rational(num(rng) + 33, 8);  // keeps c0 nonzero
  for (int k = 1; k <= order; ++k) s[static_cast<std::size_t>(k)] = Rational(num(rng), 8);
  return s;
}

TruncSeries<Rational> truncated(const TruncSeries<Rational>& s, int order) {
  TruncSeries<Rational> out(order);
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace

TEST_CASE("series construction and equality") {
  TruncSeries<double> z(3);
  CHECK(z.order() == 3);
  CHECK(z[0] == 0.0);
  CHECK(z[3] == 0.0);

  const auto u = TruncSeries<double>::unit(2);
  CHECK(u[0] == 1.0);
  CHECK(u[1] == 0.0);

  CHECK(TruncSeries<double>({1.0, 2.0}) == TruncSeries<double>({1.0, 2.0}));
  CHECK(TruncSeries<double>({1.0, 2.0}) != TruncSeries<double>({1.0, 2.0, 0.0}));

  CHECK_THROWS_AS(TruncSeries<double>(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries<double>(-1), std::invalid_argument);
}

TEST_CASE("reciprocal of (1+z)^2 is the alternating integer series") {
  const TruncSeries<Rational> q({Rational(1), Rational(2), Rational(1), Rational(0), Rational(0)});
  const auto r = reciprocal(q);
  CHECK(r[0] == Rational(1));
  CHECK(r[1] == Rational(-2));
  CHECK(r[2] == Rational(3));
  CHECK(r[3] == Rational(-4));
  CHECK(r[4] == Rational(5));
}

TEST_CASE("reciprocal of 1+z+z^2 cycles with period three") {
  const TruncSeries<Rational> q({Rational(1), Rational(1), Rational(1), Rational(0)});
  const auto r = reciprocal(q);
  CHECK(r[0] == Rational(1));
  CHECK(r[1] == Rational(-1));
  CHECK(r[2] == Rational(0));
  CHECK(r[3] == Rational(1));
}

TEST_CASE("log of 1+z+z^2") {
  const TruncSeries<Rational> q({Rational(1), Rational(1), Rational(1), Rational(0)});
  const auto u = log_series(q);
  CHECK(u[0] == Rational(0));
  CHECK(u[1] == Rational(1));
  CHECK(u[2] == Rational(1, 2));
  CHECK(u[3] == Rational(-2, 3));
}

TEST_CASE("log of 1+z^2 starts at the z^2 term") {
  const TruncSeries<Rational> q({Rational(1), Rational(0), Rational(1), Rational(0)});
  const auto u = log_series(q);
  CHECK(u[1] == Rational(0));
  CHECK(u[2] == Rational(1));
  CHECK(u[3] == Rational(0));
}

TEST_CASE("product of a series and its alternating inverse telescopes") {
  const TruncSeries<Rational> a({Rational(1), Rational(2), Rational(1)});
  const TruncSeries<Rational> b({Rational(1), Rational(-2), Rational(3)});
  const auto p = mul(a, b);
  CHECK(p == TruncSeries<Rational>::unit(2));
}

TEST_CASE("derivative shifts and scales") {
  const TruncSeries<Rational> u(
      {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)});
  const auto d = derivative(u);
  CHECK(d.order() == 2);
  CHECK(d[0] == Rational(1));
  CHECK(d[1] == Rational(1));
  CHECK(d[2] == Rational(-2));

  const auto zero = derivative(TruncSeries<Rational>({Rational(7)}));
  CHECK(zero.order() == 0);
  CHECK(zero[0] == Rational(0));
}

TEST_CASE("argument errors") {
  const TruncSeries<double> a(3);
  const TruncSeries<double> b(4);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(reciprocal(TruncSeries<double>({0.0, 1.0})), std::domain_error);
  CHECK_THROWS_AS(log_series(TruncSeries<double>({2.0, 1.0})), std::domain_error);
}

TEST_CASE("reciprocal is an exact two-sided inverse on random rational series") {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_rational_series(rng, 8, false);
    const auto r = reciprocal(a);
    CHECK(mul(a, r) == TruncSeries<Rational>::unit(8));
    CHECK(mul(r, a) == TruncSeries<Rational>::unit(8));
  }
}

TEST_CASE("reciprocal inverts within 1e-14 in floating mode") {
  std::mt19937 rng(7002);
  std::uniform_real_distribution<double> c0(0.5, 2.0);
  std::uniform_real_distribution<double> ck(-0.5, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    TruncSeries<double> a(10);
    a[0] = c0(rng);
    for (int k = 1; k <= 10; ++k) a[static_cast<std::size_t>(k)] = ck(rng);
    const auto p = mul(a, reciprocal(a));
    CHECK(std::abs(p[0] - 1.0) <= 1e-14);
    for (int k = 1; k <= 10; ++k) CHECK(std::abs(p[static_cast<std::size_t>(k)]) <= 1e-13);
  }
}

TEST_CASE("log satisfies a (log a)' = a' exactly") {
  std::mt19937 rng(7003);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_rational_series(rng, 9, true);
    const auto du = derivative(log_series(a));
    const auto da = derivative(a);
    CHECK(mul(truncated(a, 8), du) == da);
  }
}

TEST_CASE("multiplication is commutative and associative in exact mode") {
  std::mt19937 rng(7004);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_rational_series(rng, 6, false);
    const auto b = random_rational_series(rng, 6, false);
    const auto c = random_rational_series(rng, 6, false);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}
