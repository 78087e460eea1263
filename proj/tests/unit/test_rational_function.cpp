#include <doctest.h>

#include <random>

#include "sysstruct/error.hpp"
#include "sysstruct/rational_function.hpp"

using namespace sysstruct;

namespace {
RationalFunction rf(const std::string& text) { return parse_rational_function(text); }
}  // namespace

TEST_SUITE_BEGIN("rational function");

TEST_CASE("normalization cancels common factors") {
  CHECK(rf("(2*s+2)/(s+1)") == rf("2"));
  CHECK(rf("(6*s+36)/(s^2+9*s+18)") == rf("6/(s+3)"));
  CHECK(rf("(-3)/(s^2+3*s+2)").num().to_string() == "-3");
  CHECK(rf("(-3)/(s^2+3*s+2)").den().to_string() == "s^2+3*s+2");
}

TEST_CASE("denominator is monic and zero is canonical") {
  const RationalFunction f(Polynomial{Rational(2)}, Polynomial{Rational(0), Rational(4)});
  CHECK(f.den().to_string() == "s");
  CHECK(f.num().to_string() == "1/2");
  const RationalFunction z(Polynomial(), Polynomial{Rational(7)});
  CHECK(z.is_zero());
  CHECK(z.den().to_string() == "1");
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(RationalFunction(Polynomial{Rational(1)}, Polynomial()), error);
  CHECK_THROWS_AS(rf("1/0"), error);
  CHECK_THROWS_AS(rf("s").inverse() / rf("0"), error);
}

TEST_CASE("field arithmetic round trip") {
  std::mt19937_64 rng(41);
  const auto random_rf = [&]() {
    const long a = long(rng() % 7) - 3;
    const long b = long(rng() % 7) - 3;
    const long d = long(rng() % 5) + 1;
    return RationalFunction(Polynomial{Rational(a), Rational(b)},
                            Polynomial{Rational(d), Rational(1)});
  };
  for (int trial = 0; trial < 50; ++trial) {
    const RationalFunction f = random_rf();
    RationalFunction g = random_rf();
    if (g.is_zero()) g = RationalFunction(Rational(1));
    CHECK(f * g / g == f);
    CHECK(f - f == RationalFunction());
    CHECK((f + g) - g == f);
  }
}

TEST_CASE("properness classification") {
  CHECK(rf("2/(s+2)").properness() == Properness::StrictlyProper);
  CHECK(rf("(s+1)/(s+2)").properness() == Properness::Proper);
  CHECK(rf("s").properness() == Properness::Improper);
  CHECK(rf("0").properness() == Properness::StrictlyProper);
  CHECK(rf("5").properness() == Properness::Proper);
  CHECK(rf("(s^2+1)/(s+1)").properness() == Properness::Improper);
}

TEST_CASE("parser accepts the shared textual syntax") {
  CHECK(rf("(s^2+18*s+76)/(s^3+21*s^2+130*s+234)").den().degree() == 3);
  CHECK(rf("-3/(s^2+3*s+2)") == rf("(-3)/(s^2+3*s+2)"));
  CHECK(rf("(s+1)^2") == rf("s^2+2*s+1"));
  CHECK(rf(" 2 * s + 2 ") == rf("2*s+2"));
  CHECK(rf("1/2*s") == rf("s/2"));
  CHECK(rf("-(s+1)/(s+2)") == -rf("(s+1)/(s+2)"));
  CHECK_THROWS_AS(rf("s+"), error);
  CHECK_THROWS_AS(rf("x"), error);
  CHECK_THROWS_AS(rf("(s"), error);
  CHECK_THROWS_AS(rf(""), error);
}

TEST_CASE("printer and parser round trip canonically") {
  const char* samples[] = {
      "0",
      "5",
      "-1/2",
      "s",
      "(-3)/(s^2+3*s+2)",
      "(6)/(s+3)",
      "(2*s^5+34*s^4+222*s^3+686*s^2+976*s+480)/(s^6+19*s^5+145*s^4+565*s^3+1174*s^2+1216*s+450)",
      "(s+4)/(s^2+9*s+18)",
      "3/2*s+1",
  };
  for (const char* text : samples) {
    const RationalFunction f = rf(text);
    CHECK(parse_rational_function(f.to_string()) == f);
    CHECK(parse_rational_function(f.to_string()).to_string() == f.to_string());
  }
}

TEST_CASE("normalizing a canonical value is the identity") {
  const RationalFunction f = rf("(s+4)/(s^2+9*s+18)");
  CHECK(RationalFunction(f.num(), f.den()) == f);
}

TEST_CASE("total order for deterministic listings") {
  CHECK(rf_compare(rf("1/(s+1)"), rf("1/(s+2)")) < 0);
  CHECK(rf_compare(rf("1/(s+1)"), rf("2/(s+1)")) < 0);
  CHECK(rf_compare(rf("s"), rf("s")) == 0);
  CHECK(rf_compare(rf("s^2"), rf("s")) > 0);
}

TEST_SUITE_END();
