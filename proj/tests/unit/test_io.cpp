#include <doctest.h>

#include "test_support.hpp"

using namespace sysstruct;
using namespace sysstruct::testing;

TEST_SUITE_BEGIN("io");

TEST_CASE("corpus files round-trip through write and parse") {
  for (const char* name : {"ring.real", "diagonal.real", "l8.real", "l2.real", "l0.real",
                           "c1.real", "c2.real"}) {
    const GeneralizedRealization g = load_fixture(name);
    const GeneralizedRealization again = parse_realization(write_realization(g));
    CHECK(again.n == g.n);
    CHECK(again.l == g.l);
    CHECK(again.A == g.A);
    CHECK(again.Ahat == g.Ahat);
    CHECK(again.Abar == g.Abar);
    CHECK(again.Atil == g.Atil);
    CHECK(again.B == g.B);
    CHECK(again.Bbar == g.Bbar);
    CHECK(again.C == g.C);
    CHECK(again.Cbar == g.Cbar);
    CHECK(again.D == g.D);
    CHECK(write_realization(again) == write_realization(g));
  }
}

TEST_CASE("rationals are read exactly") {
  const GeneralizedRealization g = load_fixture("ring.real");
  CHECK(g.A(0, 0) == Rational(-89, 6));  // -178/12 in lowest terms
  CHECK(g.B(2, 0) == Rational(-2));
}

TEST_CASE("state realizations serialize with zero intricacy") {
  const StateRealization r = minimize_intricacy(load_fixture("c1.real"));
  const std::string text = write_realization(r);
  CHECK(text.find("l 0") != std::string::npos);
  CHECK(text.find("Ahat") == std::string::npos);
  const GeneralizedRealization again = parse_realization(text);
  CHECK(again.A == r.A);
  CHECK(again.l == 0);
}

TEST_CASE("labels survive the round trip") {
  GeneralizedRealization g = load_fixture("l0.real");
  g.labels.u = {"torque", "force"};
  g.labels.y = {"speed", "angle"};
  const GeneralizedRealization again = parse_realization(write_realization(g));
  CHECK(again.labels.u == g.labels.u);
  CHECK(again.labels.y == g.labels.y);
  CHECK(again.labels.input(0) == "torque");
  CHECK(again.labels.state(0) == "x1");  // default kicks in
}

TEST_CASE("parse errors are specific") {
  CHECK_THROWS_WITH_AS(parse_realization("n 1\nl 0\nm 1\n"), doctest::Contains("missing header"),
                       error);
  CHECK_THROWS_WITH_AS(parse_realization("n 1\nl 0\nm 1\np 1\nB\n1\nC\n1\nD\n0\n"),
                       doctest::Contains("missing matrix"), error);
  CHECK_THROWS_WITH_AS(
      parse_realization("n 1\nl 0\nm 1\np 1\nA\n1 2\nB\n1\nC\n1\nD\n0\n"),
      doctest::Contains("expected 1 entries"), error);
  CHECK_THROWS_WITH_AS(
      parse_realization("n 1\nl 0\nm 1\np 1\nA\n0.5\nB\n1\nC\n1\nD\n0\n"),
      doctest::Contains("bad rational"), error);
  CHECK_THROWS_AS(parse_realization("n 1\nl 0\nm 1\np 1\nA\n1\nA\n1\nB\n1\nC\n1\nD\n0\n"), error);
  CHECK_THROWS_AS(parse_realization("stray\n"), error);
}

TEST_CASE("comments and blank lines are ignored") {
  const GeneralizedRealization g = parse_realization(
      "# a comment\n\nn 1\nl 0\nm 1\np 1\nA\n-1\n# mid comment\nB\n2\nC\n1\nD\n0\n");
  CHECK(g.A(0, 0) == -1);
  CHECK(g.B(0, 0) == 2);
}

TEST_SUITE_END();
