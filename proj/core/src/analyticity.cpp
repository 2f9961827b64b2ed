#include "splus/analyticity.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <limits>

namespace splus {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

double min_root_modulus(std::span<const double> ascending_coeffs) {
  std::vector<double> c(ascending_coeffs.begin(), ascending_coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return std::numeric_limits<double>::infinity();

  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();

  std::vector<double> dc(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) dc[k - 1] = static_cast<double>(k) * c[k];

  double scale = 0.0;
  for (double v : c) scale += std::abs(v);
  const double residual_target = 1e-10 * scale;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    for (int iter = 0; iter < 8; ++iter) {
      const auto value = horner(c, z);
      if (std::abs(value) <= residual_target) break;
      const auto slope = horner(dc, z);
      if (std::abs(slope) < 1e-300) break;  // multiple root; keep the eigen estimate
      z -= value / slope;
    }
    best = std::min(best, std::abs(z));
  }
  return best;
}

bool analytic_in_disc(const BSeq<double>& b, double tol) {
  return min_root_modulus(b) >= 1.0 - tol;
}

bool analytic_in_disc(const BSeq<Rational>& b, double tol) {
  return min_root_modulus(b) >= 1.0 - tol;
}

bool analytic_in_disc_fast(std::span<const double> b, double tol) {
  const double rho = 1.0 - tol;
  double acc = 0.0;
  double mass = 0.0;
  for (std::size_t n = b.size(); n >= 1; --n) {
    acc = b[n - 1] - rho * acc;
    mass += b[n - 1];
  }
  const double q_at_minus_rho = 1.0 - rho * acc;
  return q_at_minus_rho >= -1e-13 * (1.0 + mass);
}

}  // namespace splus
