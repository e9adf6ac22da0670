#include "krullcert/nullstellensatz.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace krullcert {

namespace {

using Outcome = std::variant<PrimeChain, CollapseCertificate>;

/// relations + J_1..J_{k+1} (0-based k), with the origin of every generator.
struct CumulativeIdeal {
  Generators gens;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // (level, index); level npos = relation
};

constexpr std::size_t kRelation = static_cast<std::size_t>(-1);

CumulativeIdeal cumulative_ideal(const Presentation& p, std::size_t k) {
  CumulativeIdeal out;
  const auto& rel = p.ring.relations();
  for (std::size_t r = 0; r < rel.size(); ++r) {
    out.gens.push_back(rel[r]);
    out.origin.emplace_back(kRelation, r);
  }
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t r = 0; r < p.J[i].size(); ++r) {
      out.gens.push_back(p.J[i][r]);
      out.origin.emplace_back(i, r);
    }
  }
  return out;
}

bool meets_later_monoids(const VariablePrime& q, const Presentation& p, std::size_t k) {
  for (std::size_t h = k; h < p.depth(); ++h) {
    if (!prime_avoids_monoid(q, p.U[h])) return true;
  }
  return false;
}

// No minimal prime of I_k avoids U_k..U_l. Pick one blocker per minimal
// prime; their product v lies in the radical of I_k, and v^m = sum c g gives
// the identity with u_h = (blockers at h)^m and j_h = -(cofactors on J_h).
CollapseCertificate dead_leaf(const Presentation& p, std::size_t k, const CumulativeIdeal& ideal,
                              const std::vector<VariablePrime>& minimal) {
  const RingPtr& R = p.poly();
  std::set<std::pair<std::size_t, std::size_t>> blockers;
  for (const auto& q : minimal) {
    bool found = false;
    for (std::size_t h = k; h < p.depth() && !found; ++h) {
      for (std::size_t r = 0; r < p.U[h].size() && !found; ++r) {
        if (q.contains(p.U[h][r])) {
          blockers.emplace(h, r);
          found = true;
        }
      }
    }
  }
  Polynomial v = Polynomial::constant(R, 1);
  for (const auto& [h, r] : blockers) v *= p.U[h][r];
  auto witness = radical_membership(v, ideal.gens);
  if (!witness) throw Error("internal: blocker product is not in the radical");

  CollapseCertificate c = unit_certificate(p.depth());
  for (const auto& [h, r] : blockers) c.levels[h].u.exponents[r] += witness->exponent;
  for (std::size_t g = 0; g < ideal.gens.size(); ++g) {
    const auto& [level, index] = ideal.origin[g];
    if (level == kRelation || witness->cofactors[g].is_zero()) continue;
    c.levels[level].j.combo.push_back(IdealTerm{index, -witness->cofactors[g]});
  }
  c.canonicalize();
  return c;
}

Outcome solve(const Presentation& p, std::size_t k, std::vector<VariablePrime> chosen) {
  if (k == p.depth()) return PrimeChain{std::move(chosen)};
  const RingPtr& R = p.poly();
  CumulativeIdeal ideal = cumulative_ideal(p, k);
  MonomialIdeal mono = MonomialIdeal::from(R, ideal.gens);
  auto minimal = monomial_minimal_primes(mono);
  const VariablePrime* survivor = nullptr;
  for (const auto& q : minimal) {
    if (!meets_later_monoids(q, p, k)) {
      survivor = &q;
      break;
    }
  }
  if (!survivor) return dead_leaf(p, k, ideal, minimal);

  std::optional<std::size_t> split;
  for (auto v : survivor->vars) {
    Monomial m(R->arity());
    m[v] = 1;
    if (!mono.contains(m)) {
      split = v;
      break;
    }
  }
  if (!split) {
    chosen.push_back(*survivor);
    return solve(p, k + 1, std::move(chosen));
  }

  Polynomial x = Polynomial::variable(R, *split);
  Outcome ide = solve(augment(p, Fact{FactKind::Ide, k + 1, x}), k, chosen);
  if (std::holds_alternative<PrimeChain>(ide)) return ide;
  Outcome ndz = solve(augment(p, Fact{FactKind::Ndz, k + 1, x}), k, chosen);
  if (std::holds_alternative<PrimeChain>(ndz)) return ndz;
  return merge_branches(p, x, k + 1, std::get<CollapseCertificate>(ide),
                        std::get<CollapseCertificate>(ndz));
}

}  // namespace

Decision decide_chain(const Presentation& pres) {
  if (!pres.is_monomial()) throw UnsupportedClass("presentation is not in the monomial class");
  Outcome out = solve(pres, 0, {});
  Decision d;
  if (auto* chain = std::get_if<PrimeChain>(&out)) {
    d.chain = std::move(*chain);
  } else {
    d.certificate = std::move(std::get<CollapseCertificate>(out));
  }
  return d;
}

CollapseOracle monomial_collapse_oracle() {
  return [](const Presentation& p) -> std::optional<CollapseCertificate> {
    return decide_chain(p).certificate;
  };
}

GeometricDecision geometric_decide(const Presentation& pres,
                                   const std::optional<ExtensionCertificate>& extension) {
  GeometricDecision out;
  if (extension) {
    const Presentation& b = extension->base;
    if (!b.poly()->same_as(*pres.poly()) || b.ring.relations() != pres.ring.relations() ||
        b.J != pres.J || b.U != pres.U) {
      throw InvalidInput("extension certificate belongs to a different presentation");
    }
    out.decision.certificate = extension_descent(*extension);
    return out;
  }
  out.decision = decide_chain(pres);
  if (out.decision.chain) {
    for (const auto& q : out.decision.chain->primes) out.prime_generators.push_back(q.generators());
  }
  return out;
}

}  // namespace krullcert
