#include "sysstruct/polynomial.hpp"

#include <algorithm>

#include "sysstruct/error.hpp"

namespace sysstruct {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

Polynomial Polynomial::s() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t power) {
  if (coeff == 0) return {};
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) raise(errc::zero_denominator, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial out(p);
  for (Rational& x : out.coeffs_) x *= c;
  return out;
}

Polynomial Polynomial::pow(std::size_t e) const {
  Polynomial result{Rational(1)};
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1) / leading() * *this;
}

PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) raise(errc::zero_denominator, "polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational factor = rem.leading() / b.leading();
    const Polynomial term = Polynomial::monomial(factor, shift);
    quot += term;
    rem -= term * b;
  }
  return {quot, rem};
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = poly_divmod(a, b);
  if (!rem.is_zero()) raise(errc::parse_error, "inexact polynomial division");
  return quot;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return poly_div_exact(a * b, poly_gcd(a, b)).monic();
}

int poly_compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    const auto& ca = a.coeff(static_cast<std::size_t>(k));
    const auto& cb = b.coeff(static_cast<std::size_t>(k));
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool leading_term = out.empty();
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (!leading_term) out += c < 0 ? "-" : "+";
    if (leading_term && c < 0) out += "-";
    if (k == 0) {
      out += sysstruct::to_string(mag);
    } else {
      if (mag != 1) out += sysstruct::to_string(mag) + "*";
      out += k == 1 ? "s" : "s^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace sysstruct
