#include <doctest.h>

#include "krullcert/nullstellensatz.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace krullcert;
using testing::P;
using testing::Ps;

namespace {

void check_decision(const Decision& d, const Presentation& pres) {
  REQUIRE(d.chain.has_value() != d.certificate.has_value());
  if (d.chain) {
    CHECK(validate_chain(*d.chain, pres));
  } else {
    CHECK(verify_certificate(*d.certificate, pres));
  }
  CHECK(d.has_chain() == testing::brute_chain(pres).has_value());
}

}  // namespace

TEST_CASE("decide_chain examples") {
  auto R = PolynomialRing::make({"x", "y"});
  {
    Presentation pres(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x"})});
    auto d = decide_chain(pres);
    REQUIRE(d.chain);
    REQUIRE(d.chain->length() == 1);
    CHECK(d.chain->primes[0].vars == std::vector<std::size_t>{1});
    check_decision(d, pres);
  }
  {
    Presentation pres(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x", "y"})});
    auto d = decide_chain(pres);
    REQUIRE(d.certificate);
    const auto& level = d.certificate->levels[0];
    CHECK(level.u.exponents == std::map<std::size_t, std::uint32_t>{{0, 1}, {1, 1}});
    REQUIRE(level.j.combo.size() == 1);
    CHECK(level.j.combo[0].cofactor == P(R, "-1"));
    check_decision(d, pres);
  }
  {
    auto S = PolynomialRing::make({"x"});
    Presentation pres(Ring(S), {{}, Ps(S, {"x"})}, {Ps(S, {"x"}), Ps(S, {"x"})});
    auto d = decide_chain(pres);
    REQUIRE(d.certificate);
    CHECK(expand_certificate(*d.certificate, pres).is_zero());
    CHECK(d.certificate->levels[1].u.exponents == std::map<std::size_t, std::uint32_t>{{0, 1}});
    REQUIRE(d.certificate->levels[1].j.combo.size() == 1);
    CHECK(d.certificate->levels[1].j.combo[0].cofactor == P(S, "-1"));
    CHECK(d.certificate->levels[0].j.is_zero());
  }
}

TEST_CASE("decide_chain rejects non-monomial input") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation pres(Ring(R), {Ps(R, {"x + y"})}, {{}});
  CHECK_THROWS_AS(decide_chain(pres), UnsupportedClass);
  Presentation rel(Ring(R, Ps(R, {"x - 1"})), {{}}, {{}});
  CHECK_THROWS_AS(decide_chain(rel), UnsupportedClass);
}

TEST_CASE("decide_chain edge cases") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation unit(Ring(R), {Ps(R, {"3"})}, {{}});
  auto d1 = decide_chain(unit);
  REQUIRE(d1.certificate);
  check_decision(d1, unit);
  Presentation zero_u(Ring(R), {{}}, {Ps(R, {"0"})});
  auto d2 = decide_chain(zero_u);
  REQUIRE(d2.certificate);
  check_decision(d2, zero_u);
  Presentation empty(Ring(R), {{}, {}}, {{}, {}});
  auto d3 = decide_chain(empty);
  REQUIRE(d3.chain);
  check_decision(d3, empty);
  Presentation trivial_ring(Ring(R, Ps(R, {"1"})), {{}}, {{}});
  auto d4 = decide_chain(trivial_ring);
  REQUIRE(d4.certificate);
  check_decision(d4, trivial_ring);
  auto T = PolynomialRing::make({"t"});
  Presentation nil(Ring(T, Ps(T, {"t^2"})), {{}, Ps(T, {"t"})}, {Ps(T, {"t"}), {}});
  auto d5 = decide_chain(nil);
  REQUIRE(d5.certificate);
  check_decision(d5, nil);
}

TEST_CASE("decide_chain agrees with chain enumeration on random presentations") {
  testing::Rng rng(4242);
  int chains = 0, certs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("x" + std::to_string(v + 1));
    auto R = PolynomialRing::make(names);
    auto mono = [&] {
      Monomial m(n);
      std::uint32_t budget = static_cast<std::uint32_t>(rng.range(0, 3));
      for (std::uint32_t b = 0; b < budget; ++b) m[static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1))] += 1;
      return Polynomial::monomial(R, m, rng.range(1, 3));
    };
    std::size_t l = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<Generators> J(l), U(l);
    for (std::size_t i = 0; i < l; ++i) {
      for (long k = rng.range(0, 2); k > 0; --k) J[i].push_back(mono());
      for (long k = rng.range(0, 2); k > 0; --k) U[i].push_back(mono());
    }
    Generators rel;
    if (rng.range(0, 3) == 0) rel.push_back(mono());
    Presentation pres(Ring(R, rel), J, U);
    auto d = decide_chain(pres);
    check_decision(d, pres);
    (d.has_chain() ? chains : certs) += 1;
    CHECK(decide_chain(pres).certificate == d.certificate);
  }
  CHECK(chains > 50);
  CHECK(certs > 50);
}

TEST_CASE("prove_fact with the monomial oracle") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation base(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"y"})});
  auto oracle = monomial_collapse_oracle();
  auto c = prove_fact(base, Fact{FactKind::Ide, 1, P(R, "x")}, oracle);
  REQUIRE(c);
  CHECK(verify_certificate(*c, augment(base, Fact{FactKind::Ndz, 1, P(R, "x")})));
  // Ide_1(1) needs base + Ndz_1(1) to collapse; the chain (x) shows it does not.
  Presentation with_one = augment(base, Fact{FactKind::Ndz, 1, P(R, "1")});
  REQUIRE(testing::brute_chain(with_one).has_value());
  CHECK_FALSE(prove_fact(base, Fact{FactKind::Ide, 1, P(R, "1")}, oracle));
}

TEST_CASE("Ide and Ndz of the same element are never both provable without collapse") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  auto oracle = monomial_collapse_oracle();
  std::vector<Presentation> bases{
      Presentation(Ring(R), {Ps(R, {"x*y"}), Ps(R, {"z"})}, {Ps(R, {"y"}), {}}),
      Presentation(Ring(R), {{}, Ps(R, {"x"})}, {Ps(R, {"x"}), Ps(R, {"y"})}),
      Presentation(Ring(R, Ps(R, {"x*z"})), {{}, {}, Ps(R, {"y"})}, {{}, Ps(R, {"x"}), {}}),
  };
  auto probes = Ps(R, {"x", "y", "z", "x*y", "y*z", "1", "0"});
  for (const auto& base : bases) {
    REQUIRE(decide_chain(base).has_chain());
    for (std::size_t k = 1; k <= base.depth(); ++k) {
      for (const auto& t : probes) {
        bool ide = prove_fact(base, Fact{FactKind::Ide, k, t}, oracle).has_value();
        bool ndz = prove_fact(base, Fact{FactKind::Ndz, k, t}, oracle).has_value();
        CHECK_FALSE((ide && ndz));
      }
    }
  }
}

TEST_CASE("collapse status is stable under a case split and merge") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::vector<Presentation> fixtures{
      Presentation(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x", "y"})}),
      Presentation(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x"})}),
      Presentation(Ring(R), {{}, Ps(R, {"x*z"})}, {Ps(R, {"x"}), Ps(R, {"z"})}),
      Presentation(Ring(R, Ps(R, {"y^2"})), {{}, Ps(R, {"x"})}, {Ps(R, {"y"}), {}}),
  };
  for (const auto& pres : fixtures) {
    bool collapses = !decide_chain(pres).has_chain();
    for (std::size_t k = 1; k <= pres.depth(); ++k) {
      for (std::size_t v = 0; v < 3; ++v) {
        auto t = Polynomial::variable(R, v);
        auto di = decide_chain(augment(pres, Fact{FactKind::Ide, k, t}));
        auto dn = decide_chain(augment(pres, Fact{FactKind::Ndz, k, t}));
        bool both = di.certificate && dn.certificate;
        CHECK(both == collapses);
        if (both) {
          auto merged = merge_branches(pres, t, k, *di.certificate, *dn.certificate);
          CHECK(verify_certificate(merged, pres));
        }
      }
    }
  }
}

TEST_CASE("geometric wrapper") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation pres(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"x"})});
  auto g = geometric_decide(pres);
  auto d = decide_chain(pres);
  REQUIRE(g.decision.chain);
  CHECK(g.decision.chain->primes == d.chain->primes);
  REQUIRE(g.prime_generators.size() == 1);
  CHECK(g.prime_generators[0] == Ps(R, {"y"}));

  auto S = PolynomialRing::make({"x"});
  Presentation base(Ring(S), {Ps(S, {"x"})}, {Ps(S, {"x"})});
  auto E = extension_ring(base, "alpha");
  ExtensionCertificate ec{base, "alpha", P(E, "alpha^2 - 2"), unit_certificate(1)};
  ec.certificate.levels[0].u.exponents = {{0, 1}};
  ec.certificate.levels[0].j.combo = {{0, P(E, "1 - alpha^2")}};
  auto ge = geometric_decide(base, ec);
  REQUIRE(ge.decision.certificate);
  CHECK(verify_certificate(*ge.decision.certificate, base));
  CHECK_THROWS_AS(geometric_decide(pres, ec), InvalidInput);
}
