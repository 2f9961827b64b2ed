// Canonical data of the library: the nonnegative coefficients b_n of
// q(z) = z/f(z) = 1 + b1 z + b2 z^2 + ..., and everything derived from them.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "splus/rational.hpp"
#include "splus/trunc_series.hpp"

namespace splus {

// Finite b-sequence (bType index starts at 1). Coefficients beyond the stored
// range are zero; equality and hashing ignore trailing zeros.
template <typename Scalar>
class BSeq {
 public:
  BSeq() = default;

  explicit BSeq(std::vector<Scalar> b) : b_(std::move(b)) {
    for (const auto& v : b_) {
      if (v < Scalar(0)) throw std::invalid_argument("BSeq: negative coefficient");
    }
  }

  // Number of stored coefficients (the largest index that can be nonzero).
  int max_index() const noexcept { return static_cast<int>(b_.size()); }

  // b_n for n >= 1; zero beyond the stored range.
  Scalar coeff(int n) const {
    if (n < 1) throw std::out_of_range("BSeq::coeff: index must be >= 1");
    return n <= max_index() ? b_[static_cast<std::size_t>(n) - 1] : Scalar(0);
  }

  const std::vector<Scalar>& raw() const noexcept { return b_; }

  BSeq normalized() const {
    std::vector<Scalar> v = b_;
    while (!v.empty() && v.back() == Scalar(0)) v.pop_back();
    BSeq out;
    out.b_ = std::move(v);
    return out;
  }

  friend bool operator==(const BSeq& x, const BSeq& y) {
    const int m = std::max(x.max_index(), y.max_index());
    for (int n = 1; n <= m; ++n) {
      if (x.coeff(n) != y.coeff(n)) return false;
    }
    return true;
  }

 private:
  std::vector<Scalar> b_;
};

// --- membership functionals ---

// Sum (n-1) b_n over n >= 2; membership in the class holds iff this is <= 1.
template <typename S>
S splus_weight(const BSeq<S>& b) {
  S acc(0);
  for (int n = 2; n <= b.max_index(); ++n) acc += S(n - 1) * b.coeff(n);
  return acc;
}

template <typename S>
bool is_splus_member(const BSeq<S>& b) {
  return splus_weight(b) <= S(1);
}

// Coefficient test for the |(z/f)^2 f' - 1| < lambda class; lambda in (0,1].
template <typename S>
bool ulambda_weight_check(const BSeq<S>& b, const S& lambda) {
  if (!(lambda > S(0)) || lambda > S(1)) {
    throw std::domain_error("ulambda_weight_check: lambda outside (0,1]");
  }
  return splus_weight(b) <= lambda;
}

// Sum (2n-1) b_n over n >= 1; <= 1 is the exact test for starlikeness of
// order 1/2 on this representation.
template <typename S>
S starlike_half_sum(const BSeq<S>& b) {
  S acc(0);
  for (int n = 1; n <= b.max_index(); ++n) acc += S(2 * n - 1) * b.coeff(n);
  return acc;
}

// --- series views ---

// q(z) = 1 + sum b_n z^n truncated at the given order.
template <typename S>
TruncSeries<S> q_series(const BSeq<S>& b, int order) {
  TruncSeries<S> q(order);
  q[0] = S(1);
  for (int n = 1; n <= std::min(order, b.max_index()); ++n) {
    q[static_cast<std::size_t>(n)] = b.coeff(n);
  }
  return q;
}

// Taylor coefficients a_2..a_N of f = z/q.
template <typename S>
struct TaylorCoeffs {
  int order = 0;             // N
  std::vector<S> a;          // a[k] is a_{k+2}

  S at(int n) const {
    if (n < 2 || n > order) throw std::out_of_range("TaylorCoeffs::at: index outside [2,N]");
    return a[static_cast<std::size_t>(n) - 2];
  }
};

template <typename S>
TaylorCoeffs<S> taylor_from_b(const BSeq<S>& b, int order) {
  if (order < 2) throw std::invalid_argument("taylor_from_b: order must be >= 2");
  const auto fz = reciprocal(q_series(b, order - 1));  // f/z = 1/q, coefficient k is a_{k+1}
  TaylorCoeffs<S> out;
  out.order = order;
  out.a.reserve(static_cast<std::size_t>(order) - 1);
  for (int n = 2; n <= order; ++n) out.a.push_back(fz[static_cast<std::size_t>(n) - 1]);
  return out;
}

// Logarithmic coefficients: log(f/z) = sum 2 gamma_n z^n.
template <typename S>
struct LogCoeffs {
  int order = 0;             // N
  std::vector<S> gamma;      // gamma[k] is gamma_{k+1}

  S at(int n) const {
    if (n < 1 || n > order) throw std::out_of_range("LogCoeffs::at: index outside [1,N]");
    return gamma[static_cast<std::size_t>(n) - 1];
  }
};

template <typename S>
LogCoeffs<S> log_coeffs_from_b(const BSeq<S>& b, int order) {
  if (order < 1) throw std::invalid_argument("log_coeffs_from_b: order must be >= 1");
  const auto u = log_series(q_series(b, order));  // log q = -log(f/z)
  LogCoeffs<S> out;
  out.order = order;
  out.gamma.reserve(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    out.gamma.push_back(-u[static_cast<std::size_t>(n)] / S(2));
  }
  return out;
}

// --- closed forms (independent of the series route; tested against it) ---

template <typename S>
struct ClosedTaylor {
  S a2, a3, a4, a5;
};

template <typename S>
ClosedTaylor<S> taylor_closed(const BSeq<S>& b) {
  const S b1 = b.coeff(1), b2 = b.coeff(2), b3 = b.coeff(3), b4 = b.coeff(4);
  ClosedTaylor<S> c;
  c.a2 = -b1;
  c.a3 = b1 * b1 - b2;
  c.a4 = -b3 + S(2) * b1 * b2 - b1 * b1 * b1;
  c.a5 = b1 * b1 * b1 * b1 - S(3) * b1 * b1 * b2 + b2 * b2 + S(2) * b1 * b3 - b4;
  return c;
}

template <typename S>
struct ClosedLog {
  S gamma1, gamma2, gamma3;
};

template <typename S>
ClosedLog<S> log_closed(const BSeq<S>& b) {
  const S b1 = b.coeff(1), b2 = b.coeff(2), b3 = b.coeff(3);
  ClosedLog<S> c;
  c.gamma1 = -b1 / S(2);
  c.gamma2 = (b1 * b1 / S(2) - b2) / S(2);
  c.gamma3 = (-b1 * b1 * b1 / S(3) + b1 * b2 - b3) / S(2);
  return c;
}

namespace detail {

// a3 - gamma a2^2 without the domain check; gamma = 1 collapses it to -b2,
// which the tests use as an internal identity hook.
template <typename S>
S fekete_szego_at(const BSeq<S>& b, const S& gamma) {
  const S b1 = b.coeff(1);
  return (S(1) - gamma) * b1 * b1 - b.coeff(2);
}

}  // namespace detail

// Fekete-Szego functional a3 - gamma a2^2 for gamma in [0,1).
template <typename S>
S fekete_szego_value(const BSeq<S>& b, const S& gamma) {
  if (gamma < S(0) || gamma >= S(1)) {
    throw std::domain_error("fekete_szego_value: gamma outside [0,1)");
  }
  return detail::fekete_szego_at(b, gamma);
}

// Coefficients (from z^2 on) of g(z) = z + (1/2)(z/f - 1 - b1 z), i.e.
// c_n = b_n / 2 for n >= 2. Requires class membership; the returned list
// always satisfies sum n c_n <= 1.
template <typename S>
std::vector<S> g_transform(const BSeq<S>& b) {
  if constexpr (std::is_same_v<S, double>) {
    if (splus_weight(b) > 1.0 + 1e-12) {
      throw std::domain_error("g_transform: input is not a class member (weight > 1)");
    }
  } else {
    if (!is_splus_member(b)) {
      throw std::domain_error("g_transform: input is not a class member (weight > 1)");
    }
  }
  std::vector<S> c;
  c.reserve(static_cast<std::size_t>(std::max(0, b.max_index() - 1)));
  for (int n = 2; n <= b.max_index(); ++n) c.push_back(b.coeff(n) / S(2));
  return c;
}

// --- text format ---
// Comma-separated nonnegative values starting at b1: "2,1", "0,1/3", "0,0.25".
// A '/' anywhere selects exact mode, a '.' selects floating mode; mixing both
// in one list is an error. Bare integers are valid in either mode.

enum class ScalarMode { exact, floating };

ScalarMode detect_scalar_mode(std::string_view text);
BSeq<double> parse_bseq(std::string_view text);
BSeq<Rational> parse_bseq_exact(std::string_view text);

std::string to_string(const BSeq<double>& b);
std::string to_string(const BSeq<Rational>& b);

}  // namespace splus

template <>
struct std::hash<splus::BSeq<double>> {
  std::size_t operator()(const splus::BSeq<double>& b) const noexcept {
    const splus::BSeq<double> norm = b.normalized();
    std::size_t h = 0xcbf29ce484222325ull;
    for (double v : norm.raw()) {
      h = (h ^ std::hash<double>{}(v)) * 0x100000001b3ull;
    }
    return h;
  }
};

template <>
struct std::hash<splus::BSeq<splus::Rational>> {
  std::size_t operator()(const splus::BSeq<splus::Rational>& b) const {
    const splus::BSeq<splus::Rational> norm = b.normalized();
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& v : norm.raw()) {
      h = (h ^ std::hash<std::string>{}(v.str())) * 0x100000001b3ull;
    }
    return h;
  }
};
