#include <doctest.h>

#include "support.hpp"

using namespace krullcert;
using testing::P;

TEST_CASE("arithmetic examples") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  auto x = P(R, "x");
  CHECK(poly_arith(x, -x, ArithOp::Add).is_zero());
  CHECK(poly_arith(P(R, "x+1"), P(R, "x-1"), ArithOp::Mul) == P(R, "x^2-1"));
  CHECK(poly_pow(P(R, "x+y"), 2) == P(R, "x^2 + 2*x*y + y^2"));
  CHECK(poly_pow(P(R, "x+y"), 0).is_one());
  CHECK(poly_arith(P(R, "x*y"), P(R, "z"), ArithOp::Sub) == P(R, "x*y - z"));
}

TEST_CASE("canonical form") {
  auto R = PolynomialRing::make({"x", "y"});
  auto p = Polynomial(R, {{Monomial({0, 1}), 2}, {Monomial({1, 0}), 1}, {Monomial({0, 1}), -2}});
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].monomial == Monomial({1, 0}));
  auto q = P(R, "y + x^2 + 1 + x*y");
  std::vector<Monomial> order;
  for (const auto& t : q.terms()) order.push_back(t.monomial);
  CHECK(order == std::vector<Monomial>{Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 1}),
                                        Monomial({0, 0})});
  CHECK(P(R, "6/4*x").terms()[0].coeff == Coefficient(3, 2));
}

TEST_CASE("prime field coefficients") {
  auto R = PolynomialRing::make({"x"}, Field::prime(7));
  CHECK(P(R, "3*x + 5*x").terms()[0].coeff == 1);
  CHECK((P(R, "x + 1") * P(R, "x - 1")) == P(R, "x^2 + 6"));
  CHECK(P(R, "1/2").terms()[0].coeff == 4);
  CHECK(P(R, "7*x").is_zero());
  CHECK_THROWS_AS(Field::prime(9), InvalidInput);
}

TEST_CASE("ring mismatch") {
  auto R = PolynomialRing::make({"x", "y"});
  auto S = PolynomialRing::make({"y", "x"});
  auto T = PolynomialRing::make({"x", "y"});
  CHECK_THROWS_AS(P(R, "x") + P(S, "x"), RingMismatch);
  CHECK_NOTHROW(P(R, "x") + P(T, "x"));
  auto F = PolynomialRing::make({"x", "y"}, Field::prime(5));
  CHECK_THROWS_AS(P(R, "x") * P(F, "x"), RingMismatch);
}

TEST_CASE("parser") {
  auto R = PolynomialRing::make({"x", "y", "alpha"});
  CHECK(P(R, "-(x - y)^2") == P(R, "-x^2 + 2*x*y - y^2"));
  CHECK(P(R, "x/2") == P(R, "1/2*x"));
  CHECK(P(R, "alpha^2 - 2") == P(R, "-2 + alpha*alpha"));
  CHECK(P(R, "0").is_zero());
  CHECK_THROWS_AS(P(R, "x +"), ParseError);
  CHECK_THROWS_AS(P(R, "w"), ParseError);
  CHECK_THROWS_AS(P(R, "x/y"), ParseError);
  CHECK(P(R, "3/2*x^2*y - y + 1").to_string() == "3/2*x^2*y - y + 1");
}

TEST_CASE("substitute and embed") {
  auto R = PolynomialRing::make({"y1", "y2"});
  auto T = PolynomialRing::make({"t"});
  std::vector<Polynomial> vals{P(T, "t"), P(T, "t^2")};
  CHECK(P(R, "y1^2 - y2").substitute(vals, T).is_zero());
  CHECK(P(R, "y1*y2 + 1").substitute(vals, T) == P(T, "t^3 + 1"));
  auto big = extend_ring(R, {"z"});
  CHECK(P(R, "y2").embed(big) == P(big, "y2"));
  CHECK_THROWS_AS(P(big, "z").embed(R), RingMismatch);
}

TEST_CASE("ring-arithmetic laws on random inputs") {
  auto R = PolynomialRing::make({"x", "y"});
  testing::Rng rng(11);
  auto gen = [&] {
    std::vector<Term> terms;
    for (int k = 0; k < 4; ++k) {
      terms.push_back({Monomial({static_cast<std::uint32_t>(rng.range(0, 2)),
                                 static_cast<std::uint32_t>(rng.range(0, 2))}),
                       Coefficient(rng.range(-3, 3), rng.range(1, 3))});
    }
    return Polynomial(R, terms);
  };
  for (int i = 0; i < 200; ++i) {
    auto a = gen(), b = gen(), c = gen();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
    CHECK(a.pow(3) == a * a * a);
  }
}
