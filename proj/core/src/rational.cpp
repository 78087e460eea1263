#include "sysstruct/rational.hpp"

#include <cctype>

#include "sysstruct/error.hpp"

namespace sysstruct {

namespace {

Int parse_int(std::string_view text, std::string_view original) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) raise(errc::parse_error, "empty integer in '" + std::string(original) + "'");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      raise(errc::parse_error, "bad rational literal '" + std::string(original) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text), Int(1)};
  const Int num = parse_int(text.substr(0, slash), text);
  const Int den = parse_int(text.substr(slash + 1), text);
  if (den == 0) raise(errc::zero_denominator, "'" + std::string(text) + "'");
  return {num, den};
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace sysstruct
