#include "splus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace splus {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::cpp_int parse_digits(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw std::invalid_argument("parse_rational: bad numeric literal '" + std::string(whole) + "'");
  }
  return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("parse_rational: sign without digits");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_digits(s.substr(0, slash), text);
    auto den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("parse_rational: bad numeric literal '" + std::string(text) + "'");
    }
    boost::multiprecision::cpp_int w = whole.empty() ? 0 : parse_digits(whole, text);
    boost::multiprecision::cpp_int scale = 1;
    boost::multiprecision::cpp_int f = 0;
    if (!frac.empty()) {
      f = parse_digits(frac, text);
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    }
    value = Rational(w * scale + f, scale);
  } else {
    value = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace splus
