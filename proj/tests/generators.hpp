#pragma once

// Hand-rolled generators for property tests and the acceptance suite.

#include "krullcert/combinators.hpp"
#include "support.hpp"

namespace testing {

using namespace krullcert;

/// Polynomial in R with up to `terms` terms, exponents <= max_exp, integer
/// coefficients in [-c, c].
inline Polynomial random_poly(Rng& rng, const RingPtr& R, int terms, std::uint32_t max_exp,
                              long c = 2) {
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m(R->arity());
    for (std::size_t v = 0; v < R->arity(); ++v) {
      m[v] = static_cast<std::uint32_t>(rng.range(0, max_exp));
    }
    out.push_back({m, Coefficient(rng.range(-c, c))});
  }
  return Polynomial(R, out);
}

inline MonoidElement random_monoid(Rng& rng, std::size_t gens, std::uint32_t max_exp) {
  MonoidElement u;
  for (std::size_t k = 0; k < gens; ++k) {
    auto e = static_cast<std::uint32_t>(rng.range(0, max_exp));
    if (e > 0) u.exponents[k] = e;
  }
  return u;
}

inline IdealElement random_ideal(Rng& rng, const RingPtr& R, std::size_t gens) {
  IdealElement j;
  for (std::size_t k = 0; k < gens; ++k) {
    if (rng.range(0, 2) == 0) continue;
    j.combo.push_back({k, random_poly(rng, R, 1, 1)});
  }
  j.canonicalize();
  return j;
}

/// A merge instance whose branch certificates verify by construction: the
/// ring relations are the two branch expansions.
struct MergeInstance {
  Presentation base;
  Polynomial t;
  std::size_t level;  // 1-based
  CollapseCertificate cert_ide;
  CollapseCertificate cert_ndz;
};

inline MergeInstance manufacture_merge(Rng& rng, std::size_t level, std::size_t depth = 3) {
  auto R = PolynomialRing::make({"x", "y"});
  std::vector<Generators> J(depth), U(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    auto nj = static_cast<std::size_t>(rng.range(0, 2));
    auto nu = static_cast<std::size_t>(rng.range(0, 2));
    for (std::size_t k = 0; k < nj; ++k) J[i].push_back(random_poly(rng, R, 2, 1));
    for (std::size_t k = 0; k < nu; ++k) U[i].push_back(random_poly(rng, R, 1, 1, 1) + Polynomial::variable(R, k % 2));
  }
  Polynomial t = random_poly(rng, R, 2, 1);
  if (t.is_zero()) t = Polynomial::variable(R, 0);
  Presentation draft(Ring(R), J, U);
  auto aug_ide = augment(draft, Fact{FactKind::Ide, level, t});
  auto aug_ndz = augment(draft, Fact{FactKind::Ndz, level, t});

  CollapseCertificate ide = unit_certificate(depth), ndz = unit_certificate(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    ide.levels[i].u = random_monoid(rng, aug_ide.U[i].size(), 1);
    ide.levels[i].j = random_ideal(rng, R, aug_ide.J[i].size());
    ndz.levels[i].u = random_monoid(rng, aug_ndz.U[i].size(), 1);
    ndz.levels[i].j = random_ideal(rng, R, aug_ndz.J[i].size());
  }
  // Force a nonzero a on t and a positive exponent m on t.
  Polynomial a = random_poly(rng, R, 1, 1);
  if (a.is_zero()) a = Polynomial::constant(R, 1);
  ide.levels[level - 1].j.combo.push_back({draft.J[level - 1].size(), a});
  ide.canonicalize();
  ndz.levels[level - 1].u.exponents[draft.U[level - 1].size()] =
      static_cast<std::uint32_t>(rng.range(1, 2));

  Polynomial s1 = expand_certificate(ide, aug_ide);
  Polynomial s2 = expand_certificate(ndz, aug_ndz);
  Presentation base(Ring(R, {s1, s2}), J, U);
  return MergeInstance{base, t, level, ide, ndz};
}

/// Adds a nonzero integer in [-3, 3] to one coefficient of one cofactor. A
/// certificate without cofactors gets a new constant cofactor instead.
inline CollapseCertificate perturb_coefficient(Rng& rng, const CollapseCertificate& cert,
                                               const Presentation& pres) {
  CollapseCertificate out = cert;
  long d = rng.range(1, 3) * (rng.range(0, 1) ? 1 : -1);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < out.depth(); ++i) {
    for (std::size_t t = 0; t < out.levels[i].j.combo.size(); ++t) slots.emplace_back(i, t);
  }
  if (slots.empty()) {
    std::vector<std::size_t> levels;
    for (std::size_t i = 0; i < pres.depth(); ++i) {
      if (!pres.J[i].empty()) levels.push_back(i);
    }
    if (levels.empty()) return out;
    auto i = levels[rng.range(0, static_cast<long>(levels.size()) - 1)];
    auto k = static_cast<std::size_t>(rng.range(0, static_cast<long>(pres.J[i].size()) - 1));
    out.levels[i].j.combo.push_back({k, Polynomial::constant(pres.poly(), Coefficient(d))});
    return out;
  }
  auto [i, t] = slots[rng.range(0, static_cast<long>(slots.size()) - 1)];
  Polynomial& c = out.levels[i].j.combo[t].cofactor;
  auto pick = rng.range(0, static_cast<long>(c.size()) - 1);
  c += Polynomial::monomial(pres.poly(), c.terms()[pick].monomial, Coefficient(d));
  return out;
}

}  // namespace testing
