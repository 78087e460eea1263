#pragma once

#include <string>
#include <string_view>

#include "sysstruct/polynomial.hpp"

namespace sysstruct {

enum class Properness { Improper, Proper, StrictlyProper };

/// Rational function num/den in canonical form: numerator and denominator
/// coprime, denominator monic, zero encoded as 0/1. Equal values have equal
/// encodings, so operator== is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& constant);  // NOLINT: implicit by design
  RationalFunction(const Polynomial& num);     // NOLINT: implicit by design
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction s();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;

  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  Properness properness() const;

  /// Canonical text form, e.g. "(-3)/(s^2+3*s+2)", "2*s+2", "0".
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Parses the textual syntax shared by all file formats: integer and a/b
/// literals, "s", "^", "*", "/", "+", "-", parentheses.
RationalFunction parse_rational_function(std::string_view text);

int rf_compare(const RationalFunction& a, const RationalFunction& b);

}  // namespace sysstruct
