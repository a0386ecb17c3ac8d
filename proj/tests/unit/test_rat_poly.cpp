#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hankelcat/rat_poly.hpp"

using namespace hankelcat;

TEST_CASE("construction normalizes trailing zeros") {
  RatPoly p(std::vector<Rat>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(RatPoly(std::vector<Rat>{0, 0}).is_zero());
  CHECK(RatPoly{}.degree() == -1);
  CHECK(RatPoly::monomial(Rat(3), 4).degree() == 4);
  CHECK(RatPoly::monomial(Rat(0), 4).is_zero());
  CHECK(RatPoly::from_ints({Int(1), Int(-1)}) == RatPoly{1, -1});
}

TEST_CASE("arithmetic") {
  RatPoly a{1, 1};
  RatPoly b{-1, 1};
  CHECK(a * b == RatPoly{-1, 0, 1});
  CHECK(a + b == RatPoly{0, 2});
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == RatPoly{1, 3, 3, 1});
  CHECK(a.pow(0) == RatPoly{1});
  CHECK(-a == RatPoly{-1, -1});
  CHECK((a * Rat(1, 2)).lead() == Rat(1, 2));
  CHECK(RatPoly{1, 2, 3, 4}.truncated(1) == RatPoly{1, 2});
  CHECK(x_minus(Rat(2)) == RatPoly{-2, 1});
}

TEST_CASE("evaluation and reversal") {
  RatPoly p{1, 0, 2};
  CHECK(p.evaluate(Rat(3)) == 19);
  CHECK(p.evaluate(Rat(1, 2)) == Rat(3, 2));
  CHECK(p.reversed() == RatPoly{2, 0, 1});
  CHECK(RatPoly{0, 0, 1}.reversed() == RatPoly{1});
  CHECK(RatPoly{}.reversed().is_zero());
}

TEST_CASE("to_string") {
  CHECK(RatPoly{1, 7, 0, 1}.to_string() == "1 + 7*x + x^3");
  CHECK(RatPoly{}.to_string() == "0");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-9, 9);
  auto rnd = [&](int d) {
    std::vector<Rat> v;
    for (int i = 0; i <= d; ++i) v.push_back(make_rat(c(rng), 1 + static_cast<long>(rng() % 4)));
    return RatPoly(v);
  };
  for (int t = 0; t < 30; ++t) {
    RatPoly a = rnd(t % 5), b = rnd(t % 4), d = rnd(2);
    CHECK(a * b == b * a);
    CHECK(a * (b + d) == a * b + a * d);
    for (int x = -3; x <= 3; ++x) CHECK((a * b).evaluate(Rat(x)) == a.evaluate(Rat(x)) * b.evaluate(Rat(x)));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}
