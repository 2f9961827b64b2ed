// Unit-disc sampling of f and derived analytic quantities: starlikeness,
// convexity, the |(z/f)^2 f' - 1| residual, Re g', Re(f/z). Probes corroborate
// the exact coefficient criteria; they never replace them.
#pragma once

#include <complex>
#include <string>

#include "splus/bseq.hpp"

namespace splus {

// Grid points r e^(i theta): the radii form a geometric ladder ending at
// r_max (spanning two decades, smallest radius r_max/100), the angles are
// uniform on [0, 2pi).
struct DiscGrid {
  double r_max = 0.99;
  int radial_steps = 50;
  int angular_steps = 256;
};

struct ProbeReport {
  std::string quantity;
  double min_value = 0.0;
  double max_value = 0.0;
  std::complex<double> arg_min;
  std::complex<double> arg_max;
  DiscGrid grid;
  double tolerance = 0.01;  // pass-margin used by verdicts derived from this report
};

// q(z) = 1 + sum b_n z^n by Horner; requires |z| < 1.
std::complex<double> eval_q(const BSeq<double>& b, std::complex<double> z);

// f(z) = z/q(z); pole-proximity error when |q(z)| < 1e-14.
std::complex<double> eval_f(const BSeq<double>& b, std::complex<double> z);

// Re(zf'/f) = Re(1 - z q'/q) over the grid. alpha is the starlikeness order
// the caller intends to test (pass iff min > alpha - tolerance); it does not
// change the computed extrema.
ProbeReport starlike_re(const BSeq<double>& b, const DiscGrid& grid, double alpha);

// |(z/f)^2 f' - 1| over the grid via the closed form -sum (n-1) b_n z^n.
ProbeReport u_residual(const BSeq<double>& b, const DiscGrid& grid);

// Point evaluators for the residual: the polynomial closed form, and the
// direct assembly q^2 f' - 1 with f' = (q - z q')/q^2. Independent arithmetic
// routes to the same value; the tests hold them together.
std::complex<double> u_residual_at(const BSeq<double>& b, std::complex<double> z);
std::complex<double> u_residual_direct(const BSeq<double>& b, std::complex<double> z);

// Re g'(z) with g' = 1 + sum_{n>=2} n (b_n/2) z^(n-1); requires membership.
ProbeReport g_re_prime(const BSeq<double>& b, const DiscGrid& grid);

// Re(f/z) = Re(1/q); requires b1 = 0 and membership.
ProbeReport f_over_z_re(const BSeq<double>& b, const DiscGrid& grid);

// Re(1 + z f''/f') at z = r, assembled from q and its symbolic derivatives as
// 1 - z^2 q''/(q - z q') - 2 z q'/q. Errors on vanishing f'.
double convexity_probe(const BSeq<double>& b, double r);

// {quantity, min, max, argmin, argmax, r_max, radial_steps, angular_steps, tolerance}
std::string report_json(const ProbeReport& report);

}  // namespace splus
