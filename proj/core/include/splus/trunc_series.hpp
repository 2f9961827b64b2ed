// Dense truncated power series with exact arithmetic through the carried order.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace splus {

// c0 + c1 z + ... + cN z^N. Terms beyond the order are discarded, never folded
// into lower ones. Scalar is either double or Rational; operations never mix
// the two.
template <typename Scalar>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(checked_size(order), Scalar(0)) {}

  explicit TruncSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
  }

  static TruncSeries unit(int order) {
    TruncSeries s(order);
    s.c_[0] = Scalar(1);
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }

  const Scalar& operator[](std::size_t k) const { return c_.at(k); }
  Scalar& operator[](std::size_t k) { return c_.at(k); }

  bool operator==(const TruncSeries&) const = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Scalar> c_;
};

// Cauchy product truncated to the common order.
template <typename S>
TruncSeries<S> mul(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mul: order mismatch");
  const std::size_t n = static_cast<std::size_t>(a.order());
  TruncSeries<S> out(a.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == S(0)) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Multiplicative inverse: r0 = 1/c0, r_k = -(1/c0) * sum_{j=1..k} c_j r_{k-j}.
template <typename S>
TruncSeries<S> reciprocal(const TruncSeries<S>& a) {
  if (a[0] == S(0)) throw std::domain_error("reciprocal: singular series, constant term is zero");
  const std::size_t n = static_cast<std::size_t>(a.order());
  TruncSeries<S> r(a.order());
  const S inv = S(1) / a[0];
  r[0] = inv;
  for (std::size_t k = 1; k <= n; ++k) {
    S acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -inv * acc;
  }
  return r;
}

// log of a series with constant term 1, via a * (log a)' = a':
// u_k = a_k - (1/k) * sum_{m=1..k-1} m u_m a_{k-m}. Exact in rational mode.
template <typename S>
TruncSeries<S> log_series(const TruncSeries<S>& a) {
  if (a[0] != S(1)) throw std::domain_error("log_series: constant term must be 1");
  const std::size_t n = static_cast<std::size_t>(a.order());
  TruncSeries<S> u(a.order());
  for (std::size_t k = 1; k <= n; ++k) {
    S acc(0);
    for (std::size_t m = 1; m < k; ++m) acc += S(static_cast<int>(m)) * u[m] * a[k - m];
    u[k] = a[k] - acc / S(static_cast<int>(k));
  }
  return u;
}

// Formal derivative; the order drops by one (an order-0 series maps to the
// zero series at order 0).
template <typename S>
TruncSeries<S> derivative(const TruncSeries<S>& a) {
  if (a.order() == 0) return TruncSeries<S>(0);
  TruncSeries<S> d(a.order() - 1);
  for (std::size_t k = 0; k + 1 <= static_cast<std::size_t>(a.order()); ++k) {
    d[k] = S(static_cast<int>(k + 1)) * a[k + 1];
  }
  return d;
}

}  // namespace splus
