#include "splus/bseq.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace splus {

namespace {

std::vector<std::string_view> split_csv(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ScalarMode detect_scalar_mode(std::string_view text) {
  const bool has_slash = text.find('/') != std::string_view::npos;
  const bool has_dot = text.find('.') != std::string_view::npos;
  if (has_slash && has_dot) {
    throw std::invalid_argument("b-list mixes fractions and decimals; pick one notation");
  }
  return has_dot ? ScalarMode::floating : ScalarMode::exact;
}

BSeq<double> parse_bseq(std::string_view text) {
  std::vector<double> b;
  for (auto part : split_csv(text)) {
    part = trimmed(part);
    if (part.empty()) throw std::invalid_argument("b-list has an empty entry");
    double value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::invalid_argument("b-list entry '" + std::string(part) + "' is not a number");
    }
    b.push_back(value);
  }
  return BSeq<double>(std::move(b));
}

BSeq<Rational> parse_bseq_exact(std::string_view text) {
  std::vector<Rational> b;
  for (auto part : split_csv(text)) {
    part = trimmed(part);
    if (part.empty()) throw std::invalid_argument("b-list has an empty entry");
    b.push_back(parse_rational(part));
  }
  return BSeq<Rational>(std::move(b));
}

std::string to_string(const BSeq<double>& b) {
  std::ostringstream out;
  for (int n = 1; n <= b.max_index(); ++n) {
    if (n > 1) out << ',';
    out << b.coeff(n);
  }
  return out.str();
}

std::string to_string(const BSeq<Rational>& b) {
  std::string out;
  for (int n = 1; n <= b.max_index(); ++n) {
    if (n > 1) out += ',';
    out += b.coeff(n).str();
  }
  return out;
}

}  // namespace splus
