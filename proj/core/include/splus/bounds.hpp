// Closed-form theoretical bounds: the piecewise Fekete-Szego upper bound with
// its controlling root nu0, logarithmic-coefficient limits, and the
// lambda-parametric coefficient intervals.
#pragma once

#include <optional>

namespace splus {

struct Interval {
  double lower;
  double upper;
};

enum class FsBranch { exp_branch, nu0_branch };

struct FSBound {
  double gamma;
  double lower;       // always -1
  double upper;
  FsBranch branch;    // exp_branch iff gamma <= breakpoint
  double breakpoint;  // nu0 / (1 + nu0)
};

// Positive root of 2(2nu+1)e^(-2nu) = 1, bracketed in [0.5, 1.5], bisection
// then Newton polish. Computed once per process and cached so every dependent
// constant is bit-stable within a run; the cached root carries full double
// precision, which honors any tol >= 1e-14.
double solve_nu0(double tol = 1e-12);

// psi(nu) = 4 e^(-2nu) [(1-gamma)(nu+1)^2 - (nu+1/2)] + 1; the auxiliary whose
// constrained maximum over nu in [0, nu0] is the Fekete-Szego upper bound.
double fs_psi(double nu, double gamma);

// Sharp range of a3 - gamma a2^2 over the class, gamma in [0,1):
// upper = 1 + 2 e^(-2 gamma/(1-gamma)) up to the breakpoint, then
// 2 (1-gamma) (nu0+1)^2 / (2 nu0 + 1); lower is -1 throughout.
FSBound fs_upper(double gamma);

struct LogCoeffBounds {
  Interval gamma1;  // [-1, 0]
  Interval gamma2;  // [-1/2, (nu0+1)^2 / (2(2 nu0+1))], tied to fs_upper(1/2)
  Interval gamma3;  // [-1/4, 1/3]
};
LogCoeffBounds log_coeff_bounds();

struct CoeffIntervals {
  double lambda;
  Interval a2;  // [-(1+L), 0]
  Interval a3;  // [-L, 1+L+L^2]
  Interval a4;  // [-(1+L+L^2+L^3), (4L/3) sqrt(2L/3)]
  double a5_lower;                // -L/3 for L <= 4/27, else -9L^2/4
  std::optional<double> a5_upper; // 5, present only at L == 1 (univalence bound)
};
CoeffIntervals uplus_coeff_intervals(double lambda);

}  // namespace splus
