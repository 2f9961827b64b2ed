// Guard against truncated denominators that vanish inside the unit disc.
#pragma once

#include <span>
#include <vector>

#include "splus/bseq.hpp"

namespace splus {

// Smallest root modulus of c0 + c1 z + ... + cd z^d (ascending coefficients,
// trailing zeros ignored). +infinity if the polynomial is constant.
// Companion-matrix eigenvalues refined by a few Newton steps.
double min_root_modulus(std::span<const double> ascending_coeffs);

template <typename S>
double min_root_modulus(const BSeq<S>& b) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(b.max_index()) + 1);
  c.push_back(1.0);
  for (int n = 1; n <= b.max_index(); ++n) c.push_back(to_double(b.coeff(n)));
  return min_root_modulus(std::span<const double>(c));
}

// True iff q(z) = 1 + sum b_n z^n has no root of modulus < 1 - tol. The
// tolerance is positional: boundary roots (koebe's double root at -1) must
// classify as analytic even though the eigensolver locates them ~1e-8 off.
bool analytic_in_disc(const BSeq<double>& b, double tol = 1e-7);
bool analytic_in_disc(const BSeq<Rational>& b, double tol = 1e-7);

// Exact O(M) sign test, valid on the budget region sum (n-1) b_n <= 1 with
// b_n >= 0: a root of modulus < rho exists iff q(-rho) < 0. Used by the
// search and sampling hot paths; cross-checked against the eigenvalue route
// in the test suite.
bool analytic_in_disc_fast(std::span<const double> b, double tol = 1e-9);

inline bool analytic_in_disc_fast(const BSeq<double>& b, double tol = 1e-9) {
  return analytic_in_disc_fast(std::span<const double>(b.raw()), tol);
}

}  // namespace splus
