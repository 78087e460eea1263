#include <doctest.h>

#include "sysstruct/polynomial.hpp"
#include "sysstruct/error.hpp"

using namespace sysstruct;

namespace {
const Polynomial s = Polynomial::s();
Polynomial c(long v) { return Polynomial(Rational(v)); }
}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("zero polynomial encoding and degree sentinel") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(Polynomial{Rational(0)}.is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  CHECK((z + z).is_zero());
  CHECK((s - s).is_zero());
  CHECK(z.to_string() == "0");
}

TEST_CASE("arithmetic keeps the leading coefficient nonzero") {
  const Polynomial a = s * s + c(2) * s + c(1);
  const Polynomial b = -(s * s) + s;
  const Polynomial sum = a + b;
  CHECK(sum.degree() == 1);
  CHECK(sum == c(3) * s + c(1));
}

TEST_CASE("gcd of polynomials with a common root") {
  CHECK(poly_gcd(s * s - c(1), s - c(1)) == s - c(1));
}

TEST_CASE("gcd of coprime polynomials is one") {
  CHECK(poly_gcd(s, c(1)) == c(1));
  CHECK(poly_gcd(s + c(2), s + c(3)) == c(1));
}

TEST_CASE("gcd against s+6 decided by the remainder of the division") {
  // Division oracle by evaluation: a cubic is divisible by (s+6) iff it
  // vanishes at -6. Computed with plain rational arithmetic here.
  const Rational at = -6;
  const Rational d3_at = at * at * at + 21 * at * at + 130 * at + 234;
  CHECK(d3_at == -6);  // not a root, so the gcd must be constant
  const Polynomial d3 = s * s * s + c(21) * s * s + c(130) * s + c(234);
  CHECK(poly_gcd(d3, s + c(6)) == c(1));

  // A cubic built as an (s+6) multiple does share the factor.
  const Polynomial multiple = (s + c(6)) * (s * s + c(15) * s + c(39));
  const Rational m_at = at * at * at + 21 * at * at + 129 * at + 234;
  CHECK(m_at == 0);
  CHECK(poly_gcd(multiple, s + c(6)) == s + c(6));
}

TEST_CASE("gcd corner cases") {
  CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(poly_gcd(Polynomial(), s + c(1)) == s + c(1));
  // result is monic regardless of scaling
  CHECK(poly_gcd(c(4) * s + c(4), c(6) * s + c(6)) == s + c(1));
}

TEST_CASE("division") {
  const Polynomial a = s * s * s - c(1);
  const auto [q, r] = poly_divmod(a, s - c(1));
  CHECK(r.is_zero());
  CHECK(q == s * s + s + c(1));
  CHECK_THROWS_AS(poly_divmod(a, Polynomial()), error);
  CHECK_THROWS_AS(poly_div_exact(s * s + c(1), s + c(1)), error);
}

TEST_CASE("deterministic ordering") {
  CHECK(poly_compare(s, s * s) < 0);
  CHECK(poly_compare(s + c(1), s + c(2)) < 0);
  CHECK(poly_compare(s + c(2), s + c(2)) == 0);
  CHECK(poly_compare(Polynomial(), c(1)) < 0);
}

TEST_CASE("printing") {
  CHECK((s * s * s + c(21) * s * s + c(130) * s + c(234)).to_string() == "s^3+21*s^2+130*s+234");
  CHECK((-c(3) * s + c(1)).to_string() == "-3*s+1");
  CHECK((s - c(1)).to_string() == "s-1");
  CHECK(Polynomial(Rational(1, 2)).to_string() == "1/2");
  CHECK((Rational(3, 2) * s).to_string() == "3/2*s");
  CHECK((-s).to_string() == "-s");
}

TEST_SUITE_END();
