#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sysstruct/rational.hpp"

namespace sysstruct {

/// Univariate polynomial in the Laplace variable s over the exact rationals.
/// Coefficients are stored ascending by degree with a nonzero leading
/// coefficient; the zero polynomial is the empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by design
  Polynomial(std::initializer_list<Rational> ascending_coeffs);
  explicit Polynomial(std::vector<Rational> ascending_coeffs);

  /// The monomial s.
  static Polynomial s();
  static Polynomial monomial(const Rational& coeff, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the zero polynomial is the sentinel -1; callers test is_zero()
  /// instead of comparing against it.
  int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of s^k; zero beyond the stored degree.
  const Rational& coeff(std::size_t k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial pow(std::size_t e) const;

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  Rational eval(const Rational& at) const;
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a/b over the rationals; b must be nonzero.
struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b);

/// Exact quotient; raises if b does not divide a.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor by the Euclidean algorithm; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// Total order for deterministic output: degree first (zero smallest), then
/// coefficients from the highest power down.
int poly_compare(const Polynomial& a, const Polynomial& b);

}  // namespace sysstruct
