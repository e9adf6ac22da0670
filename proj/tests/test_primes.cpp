#include <doctest.h>

#include "generators.hpp"
#include "krullcert/primes.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace krullcert;
using testing::P;
using testing::Ps;

namespace {

std::vector<std::vector<std::size_t>> var_sets(const std::vector<VariablePrime>& primes) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : primes) out.push_back(p.vars);
  return out;
}

VariablePrime prime(const RingPtr& R, std::vector<std::size_t> vars) { return {R, std::move(vars)}; }

}  // namespace

TEST_CASE("minimal primes examples") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(var_sets(monomial_minimal_primes(MonomialIdeal::from(R, {}))) == V{{}});
  CHECK(var_sets(monomial_minimal_primes(MonomialIdeal::from(R, Ps(R, {"x*y"})))) == V{{0}, {1}});
  CHECK(var_sets(monomial_minimal_primes(MonomialIdeal::from(R, Ps(R, {"x", "y*z"})))) ==
        V{{0, 1}, {0, 2}});
  CHECK(monomial_minimal_primes(MonomialIdeal::from(R, Ps(R, {"x", "2"}))).empty());
  CHECK_THROWS_AS(MonomialIdeal::from(R, Ps(R, {"x + y"})), UnsupportedClass);
}

TEST_CASE("minimal generating set") {
  auto R = PolynomialRing::make({"x", "y"});
  auto I = MonomialIdeal::from(R, Ps(R, {"x^2*y", "3*x", "0", "y^3", "x*y^5"}));
  CHECK(I.generators == std::vector<Monomial>{Monomial({0, 3}), Monomial({1, 0})});
  CHECK(I.contains(Monomial({2, 2})));
  CHECK_FALSE(I.contains(Monomial({0, 2})));
  CHECK(MonomialIdeal::from(R, Ps(R, {"x", "5"})).is_unit());
}

TEST_CASE("minimal primes agree with subset enumeration") {
  testing::Rng rng(31);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("x" + std::to_string(v + 1));
    auto R = PolynomialRing::make(names);
    for (int trial = 0; trial < 60; ++trial) {
      Generators gens;
      auto count = rng.range(0, 4);
      for (long k = 0; k < count; ++k) {
        Monomial m(n);
        for (std::size_t v = 0; v < n; ++v) m[v] = static_cast<std::uint32_t>(rng.range(0, 1) * rng.range(0, 2));
        gens.push_back(Polynomial::monomial(R, m, 1));
      }
      auto got = monomial_minimal_primes(MonomialIdeal::from(R, gens));
      CHECK(var_sets(got) == testing::brute_minimal_primes(gens, n));
    }
  }
}

TEST_CASE("prime avoids monoid") {
  auto R = PolynomialRing::make({"x", "y"});
  CHECK(prime_avoids_monoid(prime(R, {1}), Ps(R, {"x"})));
  CHECK_FALSE(prime_avoids_monoid(prime(R, {0}), Ps(R, {"x"})));
  CHECK(prime_avoids_monoid(prime(R, {}), Ps(R, {"x", "x*y", "3"})));
  CHECK_FALSE(prime_avoids_monoid(prime(R, {}), Ps(R, {"0"})));
  CHECK_THROWS_AS(prime_avoids_monoid(prime(R, {0}), Ps(R, {"x + 1"})), UnsupportedClass);
}

TEST_CASE("validate chain examples") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation p1(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x"})});
  CHECK(validate_chain(PrimeChain{{prime(R, {1})}}, p1));
  CHECK_FALSE(validate_chain(PrimeChain{{prime(R, {0})}}, p1));

  auto S = PolynomialRing::make({"x"});
  Presentation p2(Ring(S), {{}, Ps(S, {"x"})}, {Ps(S, {"x"}), {}});
  CHECK(validate_chain(PrimeChain{{prime(S, {}), prime(S, {0})}}, p2));
  CHECK_FALSE(validate_chain(PrimeChain{{prime(S, {0}), prime(S, {})}}, p2));
  CHECK_THROWS_AS(validate_chain(PrimeChain{{prime(S, {})}}, p2), ShapeError);

  Presentation nonmono(Ring(R), {Ps(R, {"x + y"})}, {{}});
  CHECK_THROWS_AS(validate_chain(PrimeChain{{prime(R, {0})}}, nonmono), UnsupportedClass);

  Presentation with_rel(Ring(R, Ps(R, {"x^2"})), {{}}, {Ps(R, {"y"})});
  CHECK(validate_chain(PrimeChain{{prime(R, {0})}}, with_rel));
  CHECK_FALSE(validate_chain(PrimeChain{{prime(R, {})}}, with_rel));
}

TEST_CASE("validate chain agrees with a first-principles evaluator") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  testing::Rng rng(77);
  auto mono = [&] {
    Monomial m(3);
    for (std::size_t v = 0; v < 3; ++v) m[v] = static_cast<std::uint32_t>(rng.range(0, 1));
    return Polynomial::monomial(R, m, 1);
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t l = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<Generators> J(l), U(l);
    for (std::size_t i = 0; i < l; ++i) {
      for (long k = rng.range(0, 2); k > 0; --k) J[i].push_back(mono());
      for (long k = rng.range(0, 1); k > 0; --k) U[i].push_back(mono());
    }
    Generators rel;
    if (rng.range(0, 2) == 0) rel.push_back(mono());
    Presentation pres(Ring(R, rel), J, U);
    PrimeChain chain;
    std::vector<std::uint64_t> masks;
    for (std::size_t i = 0; i < l; ++i) {
      auto mask = static_cast<std::uint64_t>(rng.range(0, 7));
      masks.push_back(mask);
      chain.primes.push_back(prime(R, testing::mask_vars(mask, 3)));
    }
    bool expected = true;
    for (const auto& r : rel) expected = expected && testing::in_variable_prime(r, masks[0]);
    for (std::size_t i = 0; i < l; ++i) {
      for (const auto& j : J[i]) expected = expected && testing::in_variable_prime(j, masks[i]);
      for (const auto& u : U[i]) expected = expected && !testing::in_variable_prime(u, masks[i]);
      if (i + 1 < l) expected = expected && (masks[i] & masks[i + 1]) == masks[i];
    }
    CHECK(validate_chain(chain, pres) == expected);
  }
}
