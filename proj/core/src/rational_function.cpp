#include "sysstruct/rational_function.hpp"

#include <cctype>

#include "sysstruct/error.hpp"

namespace sysstruct {

RationalFunction::RationalFunction(const Rational& constant)
    : num_(constant), den_(Rational(1)) {}

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Rational(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) raise(errc::zero_denominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = poly_gcd(num, den);
  num_ = poly_div_exact(num, g);
  den_ = poly_div_exact(den, g);
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RationalFunction RationalFunction::s() { return RationalFunction(Polynomial::s()); }

bool RationalFunction::is_one() const {
  return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0) == 1;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) raise(errc::zero_denominator, "division by the zero rational function");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) raise(errc::zero_denominator, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

Properness RationalFunction::properness() const {
  if (is_zero()) return Properness::StrictlyProper;
  if (num_.degree() < den_.degree()) return Properness::StrictlyProper;
  if (num_.degree() == den_.degree()) return Properness::Proper;
  return Properness::Improper;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int rf_compare(const RationalFunction& a, const RationalFunction& b) {
  const int dc = poly_compare(a.den(), b.den());
  if (dc != 0) return dc;
  return poly_compare(a.num(), b.num());
}

namespace {

// Recursive-descent parser over the rational-function field.
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* primary ('^' digits)?
//   primary:= digits | 's' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      skip_ws();
      if (match('+')) {
        value += term();
      } else if (match('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    while (true) {
      skip_ws();
      if (match('*')) {
        value *= factor();
      } else if (match('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    skip_ws();
    bool negate = false;
    while (peek() == '+' || peek() == '-') {
      if (text_[pos_] == '-') negate = !negate;
      ++pos_;
      skip_ws();
    }
    RationalFunction value = primary();
    skip_ws();
    if (match('^')) {
      skip_ws();
      const std::size_t e = digits();
      RationalFunction base = value;
      value = RationalFunction(Rational(1));
      for (std::size_t k = 0; k < e; ++k) value *= base;
    }
    return negate ? -value : value;
  }

  RationalFunction primary() {
    skip_ws();
    if (match('(')) {
      RationalFunction value = expr();
      skip_ws();
      if (!match(')')) fail("expected ')'");
      return value;
    }
    if (peek() == 's') {
      ++pos_;
      return RationalFunction::s();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return RationalFunction(Rational(digits_int()));
    fail("expected number, 's' or '('");
  }

  std::size_t digits() {
    const Int v = digits_int();
    return static_cast<std::size_t>(v);
  }

  Int digits_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool match(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) {
    raise(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

}  // namespace sysstruct
