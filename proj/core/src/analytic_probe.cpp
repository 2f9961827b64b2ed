#include "splus/analytic_probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace splus {

namespace {

constexpr double kPoleTol = 1e-14;

using Complex = std::complex<double>;

Complex horner(const std::vector<double>& coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<double> q_coeffs(const BSeq<double>& b) {
  std::vector<double> c(static_cast<std::size_t>(b.max_index()) + 1);
  c[0] = 1.0;
  for (int n = 1; n <= b.max_index(); ++n) c[static_cast<std::size_t>(n)] = b.coeff(n);
  return c;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return d;
}

void check_in_disc(Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::invalid_argument("probe: point outside the open unit disc");
}

void check_member(const BSeq<double>& b, const char* op) {
  if (splus_weight(b) > 1.0 + 1e-12) {
    throw std::domain_error(std::string(op) + ": input is not a class member (weight > 1)");
  }
}

std::vector<double> grid_radii(const DiscGrid& grid) {
  if (!(grid.r_max > 0.0) || grid.r_max >= 1.0) {
    throw std::invalid_argument("DiscGrid: r_max must lie in (0,1)");
  }
  if (grid.radial_steps < 1 || grid.angular_steps < 1) {
    throw std::invalid_argument("DiscGrid: step counts must be positive");
  }
  std::vector<double> radii(static_cast<std::size_t>(grid.radial_steps));
  const int K = grid.radial_steps;
  for (int k = 0; k < K; ++k) {
    const double exponent = K > 1 ? static_cast<double>(K - 1 - k) / static_cast<double>(K - 1) : 0.0;
    radii[static_cast<std::size_t>(k)] = grid.r_max * std::pow(0.01, exponent);
  }
  return radii;
}

// Walks the grid, reducing a complex-valued evaluation to its tracked scalar.
template <typename Fn>
ProbeReport scan_grid(const DiscGrid& grid, std::string quantity, Fn&& value_at) {
  ProbeReport report;
  report.quantity = std::move(quantity);
  report.grid = grid;
  bool first = true;
  for (double r : grid_radii(grid)) {
    for (int j = 0; j < grid.angular_steps; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(grid.angular_steps);
      const Complex z = std::polar(r, theta);
      const double v = value_at(z);
      if (first || v < report.min_value) {
        report.min_value = v;
        report.arg_min = z;
      }
      if (first || v > report.max_value) {
        report.max_value = v;
        report.arg_max = z;
      }
      first = false;
    }
  }
  return report;
}

}  // namespace

Complex eval_q(const BSeq<double>& b, Complex z) {
  check_in_disc(z);
  return horner(q_coeffs(b), z);
}

Complex eval_f(const BSeq<double>& b, Complex z) {
  const Complex q = eval_q(b, z);
  if (std::abs(q) < kPoleTol) throw std::domain_error("eval_f: pole proximity, |q(z)| < 1e-14");
  return z / q;
}

ProbeReport starlike_re(const BSeq<double>& b, const DiscGrid& grid, double /*alpha*/) {
  const auto c = q_coeffs(b);
  const auto dc = poly_derivative(c);
  return scan_grid(grid, "starlike_re", [&](Complex z) {
    const Complex q = horner(c, z);
    if (std::abs(q) < kPoleTol) {
      throw std::domain_error("starlike_re: pole proximity on the grid");
    }
    return (1.0 - z * horner(dc, z) / q).real();
  });
}

ProbeReport u_residual(const BSeq<double>& b, const DiscGrid& grid) {
  std::vector<double> res(static_cast<std::size_t>(b.max_index()) + 1, 0.0);
  for (int n = 2; n <= b.max_index(); ++n) {
    res[static_cast<std::size_t>(n)] = static_cast<double>(n - 1) * b.coeff(n);
  }
  return scan_grid(grid, "u_residual", [&](Complex z) { return std::abs(horner(res, z)); });
}

Complex u_residual_at(const BSeq<double>& b, Complex z) {
  check_in_disc(z);
  std::vector<double> res(static_cast<std::size_t>(b.max_index()) + 1, 0.0);
  for (int n = 2; n <= b.max_index(); ++n) {
    res[static_cast<std::size_t>(n)] = -static_cast<double>(n - 1) * b.coeff(n);
  }
  return horner(res, z);
}

Complex u_residual_direct(const BSeq<double>& b, Complex z) {
  check_in_disc(z);
  const auto c = q_coeffs(b);
  const auto dc = poly_derivative(c);
  const Complex q = horner(c, z);
  if (std::abs(q) < kPoleTol) {
    throw std::domain_error("u_residual_direct: pole proximity, |q(z)| < 1e-14");
  }
  const Complex q2 = q * q;
  const Complex fprime = (q - z * horner(dc, z)) / q2;
  return q2 * fprime - 1.0;
}

ProbeReport g_re_prime(const BSeq<double>& b, const DiscGrid& grid) {
  check_member(b, "g_re_prime");
  std::vector<double> gp(static_cast<std::size_t>(std::max(1, b.max_index())), 0.0);
  gp[0] = 1.0;
  for (int n = 2; n <= b.max_index(); ++n) {
    gp[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * b.coeff(n) / 2.0;
  }
  return scan_grid(grid, "g_re_prime", [&](Complex z) { return horner(gp, z).real(); });
}

ProbeReport f_over_z_re(const BSeq<double>& b, const DiscGrid& grid) {
  if (b.coeff(1) != 0.0) throw std::domain_error("f_over_z_re: requires b1 = 0");
  check_member(b, "f_over_z_re");
  const auto c = q_coeffs(b);
  return scan_grid(grid, "f_over_z_re", [&](Complex z) {
    const Complex q = horner(c, z);
    if (std::abs(q) < kPoleTol) {
      throw std::domain_error("f_over_z_re: pole proximity on the grid");
    }
    return (1.0 / q).real();
  });
}

double convexity_probe(const BSeq<double>& b, double r) {
  if (!(r > 0.0) || r >= 1.0) throw std::domain_error("convexity_probe: r outside (0,1)");
  const auto c = q_coeffs(b);
  const auto dc = poly_derivative(c);
  const auto ddc = poly_derivative(dc);
  const Complex z(r, 0.0);
  const Complex q = horner(c, z);
  if (std::abs(q) < kPoleTol) throw std::domain_error("convexity_probe: pole proximity");
  const Complex qp = horner(dc, z);
  const Complex denom = q - z * qp;  // q^2 f'
  if (std::abs(denom) < kPoleTol) throw std::domain_error("convexity_probe: vanishing f'");
  const Complex value = 1.0 - z * z * horner(ddc, z) / denom - 2.0 * z * qp / q;
  return value.real();
}

std::string report_json(const ProbeReport& report) {
  nlohmann::json out;
  out["quantity"] = report.quantity;
  out["min"] = report.min_value;
  out["max"] = report.max_value;
  out["argmin"] = {report.arg_min.real(), report.arg_min.imag()};
  out["argmax"] = {report.arg_max.real(), report.arg_max.imag()};
  out["r_max"] = report.grid.r_max;
  out["radial_steps"] = report.grid.radial_steps;
  out["angular_steps"] = report.grid.angular_steps;
  out["tolerance"] = report.tolerance;
  return out.dump();
}

}  // namespace splus
