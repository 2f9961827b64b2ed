#include "splus/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace splus {

namespace {

double h(double nu) { return 2.0 * (2.0 * nu + 1.0) * std::exp(-2.0 * nu) - 1.0; }

double compute_nu0() {
  double lo = 0.5, hi = 1.5;  // h(0.5) > 0, h(1.5) < 0
  for (int i = 0; i < 48; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double dh = -8.0 * x * std::exp(-2.0 * x);
    x -= h(x) / dh;
  }
  return x;
}

const double& cached_nu0() {
  static const double root = compute_nu0();
  return root;
}

}  // namespace

double solve_nu0(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_nu0: tol must be positive");
  return cached_nu0();
}

double fs_psi(double nu, double gamma) {
  if (!(nu >= 0.0)) throw std::domain_error("fs_psi: nu must be >= 0");
  if (!(gamma >= 0.0) || gamma >= 1.0) throw std::domain_error("fs_psi: gamma outside [0,1)");
  const double p = nu + 1.0;
  return 4.0 * std::exp(-2.0 * nu) * ((1.0 - gamma) * p * p - (nu + 0.5)) + 1.0;
}

FSBound fs_upper(double gamma) {
  if (!(gamma >= 0.0) || gamma >= 1.0) throw std::domain_error("fs_upper: gamma outside [0,1)");
  const double nu0 = cached_nu0();
  const double breakpoint = nu0 / (1.0 + nu0);
  FSBound out;
  out.gamma = gamma;
  out.lower = -1.0;
  out.breakpoint = breakpoint;
  if (gamma <= breakpoint) {
    out.branch = FsBranch::exp_branch;
    out.upper = 1.0 + 2.0 * std::exp(-2.0 * gamma / (1.0 - gamma));
  } else {
    out.branch = FsBranch::nu0_branch;
    out.upper = 2.0 * (1.0 - gamma) * (nu0 + 1.0) * (nu0 + 1.0) / (2.0 * nu0 + 1.0);
  }
  return out;
}

LogCoeffBounds log_coeff_bounds() {
  LogCoeffBounds out;
  out.gamma1 = {-1.0, 0.0};
  out.gamma2 = {-0.5, fs_upper(0.5).upper / 2.0};
  out.gamma3 = {-0.25, 1.0 / 3.0};
  return out;
}

CoeffIntervals uplus_coeff_intervals(double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw std::domain_error("uplus_coeff_intervals: lambda outside (0,1]");
  }
  const double L = lambda;
  CoeffIntervals out;
  out.lambda = L;
  out.a2 = {-(1.0 + L), 0.0};
  out.a3 = {-L, 1.0 + L + L * L};
  out.a4 = {-(1.0 + L + L * L + L * L * L), (4.0 * L / 3.0) * std::sqrt(2.0 * L / 3.0)};
  out.a5_lower = L <= 4.0 / 27.0 ? -L / 3.0 : -9.0 * L * L / 4.0;
  if (L == 1.0) out.a5_upper = 5.0;
  return out;
}

}  // namespace splus
