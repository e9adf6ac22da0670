#include <doctest.h>

#include "generators.hpp"
#include "krullcert/combinators.hpp"
#include "support.hpp"

using namespace krullcert;
using testing::P;
using testing::Ps;

TEST_CASE("augment appends the fact") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation base(Ring(R), {Ps(R, {"x"}), {}}, {{}, Ps(R, {"y"})});
  auto ide = augment(base, Fact{FactKind::Ide, 2, P(R, "y")});
  CHECK(ide.J[1] == Ps(R, {"y"}));
  auto ndz = augment(base, Fact{FactKind::Ndz, 1, P(R, "x")});
  CHECK(ndz.U[0] == Ps(R, {"x"}));
  CHECK_THROWS_AS(augment(base, Fact{FactKind::Ide, 3, P(R, "y")}), ShapeError);
  CHECK_THROWS_AS(augment(base, Fact{FactKind::Ide, 0, P(R, "y")}), ShapeError);
}

TEST_CASE("nested product and power") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation pres(Ring(R), {Ps(R, {"x"}), Ps(R, {"y"}), Ps(R, {"x*y"})},
                    {Ps(R, {"y"}), Ps(R, {"x", "y"}), Ps(R, {"x + 1"})});
  testing::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    CollapseCertificate a = unit_certificate(3), b = unit_certificate(3);
    for (std::size_t i = 0; i < 3; ++i) {
      a.levels[i].u = testing::random_monoid(rng, pres.U[i].size(), 2);
      b.levels[i].u = testing::random_monoid(rng, pres.U[i].size(), 2);
      a.levels[i].j = testing::random_ideal(rng, R, pres.J[i].size());
      b.levels[i].j = testing::random_ideal(rng, R, pres.J[i].size());
    }
    auto ea = expand_certificate(a, pres);
    auto eb = expand_certificate(b, pres);
    CHECK(expand_certificate(nested_product(a, b, pres), pres) == ea * eb);
    CHECK(expand_certificate(nested_power(a, 3, pres), pres) == ea.pow(3));
    CHECK(expand_certificate(nested_power(a, 0, pres), pres).is_one());
    auto tail = nested_product(a, b, pres, 1);
    auto va = nested_values(a, pres, 1), vb = nested_values(b, pres, 1);
    CHECK(nested_values(tail, pres, 1).front() == va.front() * vb.front());
    CHECK(tail.levels[0] == a.levels[0]);
  }
}

TEST_CASE("merge: cofactor on t is zero") {
  auto R = PolynomialRing::make({"z"});
  Presentation base(Ring(R), {Ps(R, {"z", "z - 1"})}, {{}});
  CollapseCertificate ide = unit_certificate(1);
  ide.levels[0].j.combo = {{1, P(R, "1")}, {0, P(R, "-1")}, {2, P(R, "0")}};
  CollapseCertificate ndz = unit_certificate(1);
  ndz.levels[0].u.exponents = {{0, 1}};
  ndz.levels[0].j.combo = {{0, P(R, "-1")}};
  auto merged = merge_branches(base, P(R, "z"), 1, ide, ndz);
  auto expected = ide;
  expected.canonicalize();
  CHECK(merged == expected);
  CHECK(verify_certificate(merged, base));
}

TEST_CASE("merge: worked example over Q[z]") {
  auto R = PolynomialRing::make({"z"});
  Presentation base(Ring(R), {Ps(R, {"z", "z - 1"})}, {{}});
  CollapseCertificate ide = unit_certificate(1);
  ide.levels[0].j.combo = {{1, P(R, "1")}, {2, P(R, "-1")}};
  CollapseCertificate ndz = unit_certificate(1);
  ndz.levels[0].u.exponents = {{0, 1}};
  ndz.levels[0].j.combo = {{0, P(R, "-1")}};
  auto merged = merge_branches(base, P(R, "z"), 1, ide, ndz);
  CHECK(merged.levels[0].u.is_one());
  REQUIRE(merged.levels[0].j.combo.size() == 2);
  CHECK(merged.levels[0].j.combo[0].index == 0);
  CHECK(merged.levels[0].j.combo[0].cofactor == P(R, "-1"));
  CHECK(merged.levels[0].j.combo[1].index == 1);
  CHECK(merged.levels[0].j.combo[1].cofactor == P(R, "1"));
  CHECK(expand_certificate(merged, base).is_zero());
}

TEST_CASE("merge rejects bad input") {
  auto R = PolynomialRing::make({"z"});
  Presentation base(Ring(R), {Ps(R, {"z", "z - 1"})}, {{}});
  CollapseCertificate ide = unit_certificate(1);
  ide.levels[0].j.combo = {{1, P(R, "1")}, {2, P(R, "-2")}};
  CollapseCertificate ndz = unit_certificate(1);
  ndz.levels[0].u.exponents = {{0, 1}};
  ndz.levels[0].j.combo = {{0, P(R, "-1")}};
  CHECK_THROWS_AS(merge_branches(base, P(R, "z"), 1, ide, ndz), InvalidInput);
  CHECK_THROWS_AS(merge_branches(base, P(R, "z"), 2, ide, ndz), ShapeError);
}

TEST_CASE("merge soundness on manufactured instances") {
  testing::Rng rng(2024);
  for (std::size_t level = 1; level <= 3; ++level) {
    for (int trial = 0; trial < 15; ++trial) {
      auto inst = testing::manufacture_merge(rng, level);
      auto merged = merge_branches(inst.base, inst.t, inst.level, inst.cert_ide, inst.cert_ndz);
      CHECK(verify_certificate(merged, inst.base));
    }
  }
}

TEST_CASE("merge on depth one and two") {
  testing::Rng rng(99);
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    for (std::size_t level = 1; level <= depth; ++level) {
      for (int trial = 0; trial < 10; ++trial) {
        auto inst = testing::manufacture_merge(rng, level, depth);
        auto merged = merge_branches(inst.base, inst.t, inst.level, inst.cert_ide, inst.cert_ndz);
        CHECK(verify_certificate(merged, inst.base));
      }
    }
  }
}

TEST_CASE("prove_fact shortcuts") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation base(Ring(R), {Ps(R, {"x*y"}), Ps(R, {"x"})}, {Ps(R, {"y"}), Ps(R, {"y"})});
  CollapseOracle never = [](const Presentation&) -> std::optional<CollapseCertificate> {
    FAIL("oracle should not be consulted");
    return std::nullopt;
  };
  auto c1 = prove_fact(base, Fact{FactKind::Ndz, 2, P(R, "y")}, never);
  REQUIRE(c1);
  CHECK(verify_certificate(*c1, augment(base, Fact{FactKind::Ide, 2, P(R, "y")})));
  auto c2 = prove_fact(base, Fact{FactKind::Ide, 2, P(R, "x")}, never);
  REQUIRE(c2);
  CHECK(verify_certificate(*c2, augment(base, Fact{FactKind::Ndz, 2, P(R, "x")})));
}

TEST_CASE("prove_fact passes the opposite augmentation to the oracle") {
  auto R = PolynomialRing::make({"x", "y"});
  Presentation base(Ring(R), {Ps(R, {"x*y"})}, {Ps(R, {"y"})});
  std::optional<Presentation> seen;
  CollapseOracle spy = [&](const Presentation& p) -> std::optional<CollapseCertificate> {
    seen = p;
    return std::nullopt;
  };
  CHECK_FALSE(prove_fact(base, Fact{FactKind::Ide, 1, P(R, "x")}, spy));
  REQUIRE(seen);
  CHECK(seen->U[0] == Ps(R, {"y", "x"}));
  CHECK(seen->J[0] == Ps(R, {"x*y"}));
}

TEST_CASE("extension descent") {
  auto R = PolynomialRing::make({"x"});
  Presentation base(Ring(R), {Ps(R, {"x"})}, {Ps(R, {"x"})});
  auto E = extension_ring(base, "alpha");
  ExtensionCertificate ec{base, "alpha", P(E, "alpha^2 - 2"), unit_certificate(1)};
  ec.certificate.levels[0].u.exponents = {{0, 1}};
  ec.certificate.levels[0].j.combo = {{0, P(E, "1 - alpha^2")}};
  auto out = extension_descent(ec);
  REQUIRE(out.levels[0].j.combo.size() == 1);
  CHECK(out.levels[0].j.combo[0].cofactor == P(R, "-1"));
  CHECK(verify_certificate(out, base));

  auto perturbed = ec;
  perturbed.certificate.levels[0].j.combo = {{0, P(E, "-alpha^2")}};
  CHECK_THROWS_AS(extension_descent(perturbed), InvalidInput);

  ExtensionCertificate plain{base, "alpha", P(E, "alpha^2 - 2"), unit_certificate(1)};
  plain.certificate.levels[0].u.exponents = {{0, 1}};
  plain.certificate.levels[0].j.combo = {{0, P(E, "-1")}};
  auto same = extension_descent(plain);
  CHECK(same.levels[0].j.combo[0].cofactor == P(R, "-1"));
  CHECK(same.levels[0].u == plain.certificate.levels[0].u);

  auto not_monic = ec;
  not_monic.minimal_polynomial = P(E, "2*alpha^2 - 4");
  CHECK_THROWS_AS(extension_descent(not_monic), InvalidInput);
  CHECK_THROWS_AS(extension_ring(base, "x"), InvalidInput);
}

TEST_CASE("extension descent keeps the alpha-free part") {
  // Over Q[x, y] with relation x*y: the certificate below uses alpha^3 = alpha*(alpha^2) = 2*alpha.
  auto R = PolynomialRing::make({"x", "y"});
  Presentation base(Ring(R, Ps(R, {"x*y"})), {Ps(R, {"x", "y"})}, {Ps(R, {"x + y"})});
  auto E = extension_ring(base, "a");
  ExtensionCertificate ec{base, "a", P(E, "a^2 - 2"), unit_certificate(1)};
  ec.certificate.levels[0].u.exponents = {{0, 1}};
  // (x + y) + (a^3 - 2*a - 1) x + (a^2 - 3) y  ==  0 modulo a^2 - 2.
  ec.certificate.levels[0].j.combo = {{0, P(E, "a^3 - 2*a - 1")}, {1, P(E, "a^2 - 3")}};
  auto out = extension_descent(ec);
  CHECK(verify_certificate(out, base));
  CHECK(expand_certificate(out, base).is_zero());
}
