#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace sysstruct;
using namespace sysstruct::testing;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("identity and cancellation products") {
  const RFMatrix m = rfm({{"1/(s+1)", "2"}, {"s", "(s+1)/(s+2)"}});
  CHECK(lift(QMatrix::identity(2)) * m == m);
  CHECK(rfm({{"1/s"}}) * rfm({{"s"}}) == rfm({{"1"}}));
  CHECK(rf("s") * rfm({{"1/s", "1"}}) == rfm({{"1", "s"}}));
  CHECK(m + (-m) == RFMatrix(2, 2));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(rfm({{"1"}}) + rfm({{"1", "2"}}), error);
  CHECK_THROWS_AS(rfm({{"1", "2"}}) * rfm({{"1", "2"}}), error);
}

TEST_CASE("ring signal structure assembled entrywise") {
  // (sI - Dhat)^{-1} (W - Dhat) on the ring example's W
  const RFMatrix w = rfm({{"-2", "0", "-3/(s+1)"},
                          {"-1/(s+4)", "-3", "0"},
                          {"0", "10/(s+5)", "-4"}});
  RFMatrix gain(3, 3);
  for (std::size_t i = 0; i < 3; ++i) gain(i, i) = (RationalFunction::s() - w(i, i)).inverse();
  RFMatrix wd = w;
  for (std::size_t i = 0; i < 3; ++i) wd(i, i) = RationalFunction();
  const RFMatrix q = gain * wd;
  CHECK(q == rfm({{"0", "0", "-3/(s^2+3*s+2)"},
                  {"-1/(s^2+7*s+12)", "0", "0"},
                  {"0", "10/(s^2+9*s+20)", "0"}}));
}

TEST_CASE("inverse of an upper triangular matrix") {
  CHECK(inverse(rfm({{"s", "1"}, {"0", "s"}})) ==
        rfm({{"1/s", "-1/s^2"}, {"0", "1/s"}}));
}

TEST_CASE("resolvent of the diagonal example's A") {
  const RFMatrix inv = inverse(s_minus(qm({{-5, 1}, {2, -4}})));
  CHECK(inv == rfm({{"(s+4)/(s^2+9*s+18)", "1/(s^2+9*s+18)"},
                    {"2/(s^2+9*s+18)", "(s+5)/(s^2+9*s+18)"}}));
}

TEST_CASE("inverse of the identity") {
  const RFMatrix ident = lift(QMatrix::identity(3));
  CHECK(inverse(ident) == ident);
}

TEST_CASE("singular matrices raise") {
  CHECK_THROWS_AS(inverse(rfm({{"1", "2"}, {"2", "4"}})), error);
  CHECK_THROWS_AS(inverse(qm({{1, 2}, {2, 4}})), error);
  CHECK(determinant(rfm({{"1", "2"}, {"2", "4"}})).is_zero());
}

namespace {

RFMatrix random_rf_matrix(std::mt19937_64& rng, std::size_t n) {
  RFMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long a = long(rng() % 9) - 4;
      const long b = long(rng() % 9) - 4;
      const long d = long(rng() % 4);
      m(i, j) = RationalFunction(Polynomial{Rational(a), Rational(b)},
                                 Polynomial{Rational(d), Rational(1)});
    }
  return m;
}

}  // namespace

TEST_CASE("fraction-free inverse and determinant against the cofactor oracle") {
  std::mt19937_64 rng(2024);
  int nonsingular = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const RFMatrix m = random_rf_matrix(rng, n);
    const RationalFunction det_ff = determinant(m);
    CHECK(det_ff == cofactor_det(m));
    if (det_ff.is_zero()) continue;
    ++nonsingular;
    const RFMatrix inv = inverse(m);
    if (n <= 3) CHECK(inv == adjugate_inverse(m));
    CHECK(m * inv == lift(QMatrix::identity(n)));
    CHECK(inv * m == lift(QMatrix::identity(n)));
  }
  CHECK(nonsingular > 30);
}

TEST_CASE("rational rref, rank and null space") {
  const QMatrix c = qm({{1, 1}, {2, 2}});
  CHECK(rank(c) == 1);
  const QMatrix basis = null_space(c);
  REQUIRE(basis.cols() == 1);
  CHECK(basis(0, 0) == -1);
  CHECK(basis(1, 0) == 1);
  CHECK((c * basis).is_zero());

  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix(2, 5)) == 0);
  CHECK(inverse(qm({{2, 0}, {0, 4}})) == QMatrix({{Rational(1, 2), Rational(0)},
                                                  {Rational(0), Rational(1, 4)}}));
}

TEST_SUITE_END();
