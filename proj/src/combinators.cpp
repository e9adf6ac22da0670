#include "krullcert/combinators.hpp"

#include <algorithm>

namespace krullcert {

namespace {

IdealElement scaled(const IdealElement& j, const Polynomial& by) {
  IdealElement out;
  if (by.is_zero()) return out;
  for (const auto& t : j.combo) out.combo.push_back(IdealTerm{t.index, t.cofactor * by});
  return out;
}

void append(IdealElement& into, const IdealElement& more) {
  into.combo.insert(into.combo.end(), more.combo.begin(), more.combo.end());
}

MonoidElement product(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement out = a;
  for (const auto& [idx, e] : b.exponents) out.exponents[idx] += e;
  return out;
}

std::size_t zero_based_level(const Presentation& pres, std::size_t level) {
  if (level < 1 || level > pres.depth()) {
    throw ShapeError("level " + std::to_string(level) + " out of range 1.." +
                     std::to_string(pres.depth()));
  }
  return level - 1;
}

std::optional<std::size_t> position_of(const Generators& gens, const Polynomial& t) {
  auto it = std::find(gens.begin(), gens.end(), t);
  if (it == gens.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens.begin());
}

}  // namespace

Fact opposite(const Fact& f) {
  return Fact{f.kind == FactKind::Ide ? FactKind::Ndz : FactKind::Ide, f.level, f.t};
}

Presentation augment(const Presentation& base, const Fact& fact) {
  std::size_t k = zero_based_level(base, fact.level);
  require_same_ring(base.poly(), fact.t.ring());
  Presentation out = base;
  (fact.kind == FactKind::Ide ? out.J : out.U)[k].push_back(fact.t);
  return out;
}

Presentation AugmentedPresentation::augmented() const { return augment(base, fact); }

CollapseCertificate unit_certificate(std::size_t depth) {
  CollapseCertificate c;
  c.levels.resize(depth);
  return c;
}

std::vector<Polynomial> nested_values(const CollapseCertificate& cert, const Presentation& pres,
                                      std::size_t from) {
  const std::size_t L = cert.depth();
  const RingPtr& R = pres.poly();
  std::vector<Polynomial> vals(L - from + 1, Polynomial::constant(R, 1));
  for (std::size_t i = L; i-- > from;) {
    const auto& l = cert.levels[i];
    vals[i - from] = monoid_value(l.u, pres.U[i], R) * vals[i - from + 1] +
                     ideal_value(l.j, pres.J[i], R);
  }
  return vals;
}

// (u A' + j)(u' B' + j') = u u' (A' B') + j (u' B' + j') + j' (u A'),
// applied level by level; the innermost A', B' are 1.
CollapseCertificate nested_product(const CollapseCertificate& a, const CollapseCertificate& b,
                                   const Presentation& pres, std::size_t from) {
  check_shape(a, pres);
  check_shape(b, pres);
  const RingPtr& R = pres.poly();
  auto va = nested_values(a, pres, from);
  auto vb = nested_values(b, pres, from);
  CollapseCertificate out = a;
  for (std::size_t i = from; i < a.depth(); ++i) {
    const auto& la = a.levels[i];
    const auto& lb = b.levels[i];
    auto& lo = out.levels[i];
    lo.u = product(la.u, lb.u);
    lo.j = scaled(la.j, vb[i - from]);
    append(lo.j, scaled(lb.j, monoid_value(la.u, pres.U[i], R) * va[i - from + 1]));
    lo.j.canonicalize();
  }
  return out;
}

CollapseCertificate nested_power(const CollapseCertificate& a, std::uint32_t m,
                                 const Presentation& pres) {
  CollapseCertificate result = unit_certificate(a.depth());
  for (std::uint32_t i = 0; i < m; ++i) result = nested_product(result, a, pres);
  return result;
}

// Notation (levels 1-based, merge level k, depth l):
//   cert_ide, with the a*t part of j_k taken out, is N with u_i, j_i and
//     N_1 = -(u_1...u_{k-1}) a t                      modulo the relations.
//   cert_ndz is M with v_i (t removed from v_k), k_i, tail G = M_{k+1} and
//     M_1 = v_1(...v_{k-1}(t^m v_k G + k_k)...) + k_1 = 0.
// Put b = (-a)^m. The nested power N^m has u'_i = u_i^m, ideal parts j'_i and
//   N^m_1 = (u'_1...u'_{k-1}) b t^m                   modulo the relations.
// Multiply M_1 by b u'_1...u'_{k-1}, pushing u'_i into level i; level k
// becomes b t^m v_k G + b k_k. Replacing (u'_1...u'_{k-1}) b t^m by N^m_1
// moves the outer parts j'_i of N^m into the ideal of level i, multiplied by
// the v_i...v_{k-1} v_k G still sitting inside. With W = v_k G the output is
//   level i < k: u = v_i u'_i,
//                j = (b u'_i...u'_{k-1}) k_i + (v_i...v_{k-1} W) j'_i
//   level k:     u = v_k u'_k,   j = W j'_k + b k_k
//   levels > k:  nested product of the tails of N^m and M.
// By induction from level k outwards the level-i value equals
//   (v_i...v_{k-1}) N^m_i W + b (u'_i...u'_{k-1}) (M_i - (v_i...v_{k-1}) t^m W),
// which at i = 1 is (v_1...v_{k-1}) W (N^m_1 - u'_1...u'_{k-1} b t^m) + b u'.. M_1,
// zero modulo the relations.
CollapseCertificate merge_branches(const Presentation& base, const Polynomial& t, std::size_t k,
                                   const CollapseCertificate& cert_ide,
                                   const CollapseCertificate& cert_ndz) {
  const std::size_t kk = zero_based_level(base, k);
  const std::size_t L = base.depth();
  const RingPtr& R = base.poly();
  Presentation aug_ide = augment(base, Fact{FactKind::Ide, k, t});
  Presentation aug_ndz = augment(base, Fact{FactKind::Ndz, k, t});
  if (!verify_certificate(cert_ide, aug_ide)) {
    throw InvalidInput("certificate for the Ide branch does not verify");
  }
  if (!verify_certificate(cert_ndz, aug_ndz)) {
    throw InvalidInput("certificate for the Ndz branch does not verify");
  }

  CollapseCertificate n = cert_ide;
  n.canonicalize();
  const std::size_t t_in_j = base.J[kk].size();
  Polynomial a(R);
  auto& jk = n.levels[kk].j.combo;
  for (auto it = jk.begin(); it != jk.end(); ++it) {
    if (it->index == t_in_j) {
      a = it->cofactor;
      jk.erase(it);
      break;
    }
  }
  if (a.is_zero()) return n;

  CollapseCertificate mcert = cert_ndz;
  mcert.canonicalize();
  const std::size_t t_in_u = base.U[kk].size();
  auto& uk = mcert.levels[kk].u.exponents;
  std::uint32_t m = 0;
  if (auto it = uk.find(t_in_u); it != uk.end()) {
    m = it->second;
    uk.erase(it);
  }
  if (m == 0) return mcert;

  CollapseCertificate np = nested_power(n, m, base);
  Polynomial b = (-a).pow(m);
  Polynomial g = nested_values(mcert, base, kk + 1).front();
  Polynomial w = monoid_value(mcert.levels[kk].u, base.U[kk], R) * g;

  CollapseCertificate out = kk + 1 < L ? nested_product(np, mcert, base, kk + 1) : np;
  {
    auto& lo = out.levels[kk];
    lo.u = product(np.levels[kk].u, mcert.levels[kk].u);
    lo.j = scaled(np.levels[kk].j, w);
    append(lo.j, scaled(mcert.levels[kk].j, b));
  }
  Polynomial u_suffix = b;  // b u'_i...u'_{k-1}
  Polynomial v_suffix = w;  // v_i...v_{k-1} W
  for (std::size_t i = kk; i-- > 0;) {
    u_suffix *= monoid_value(np.levels[i].u, base.U[i], R);
    v_suffix *= monoid_value(mcert.levels[i].u, base.U[i], R);
    auto& lo = out.levels[i];
    lo.u = product(mcert.levels[i].u, np.levels[i].u);
    lo.j = scaled(mcert.levels[i].j, u_suffix);
    append(lo.j, scaled(np.levels[i].j, v_suffix));
  }
  out.canonicalize();
  return out;
}

std::optional<CollapseCertificate> prove_fact(const Presentation& base, const Fact& fact,
                                              const CollapseOracle& oracle) {
  const std::size_t kk = zero_based_level(base, fact.level);
  Presentation aug = augment(base, opposite(fact));
  // Ide_k(t) and Ndz_k(t) together collapse at once through t - t = 0.
  const Generators& same_side = fact.kind == FactKind::Ndz ? base.U[kk] : base.J[kk];
  if (auto pos = position_of(same_side, fact.t)) {
    CollapseCertificate c = unit_certificate(base.depth());
    auto& level = c.levels[kk];
    const Polynomial minus_one = Polynomial::constant(base.poly(), -1);
    if (fact.kind == FactKind::Ndz) {
      level.u.exponents[*pos] = 1;
      level.j.combo.push_back(IdealTerm{base.J[kk].size(), minus_one});
    } else {
      level.u.exponents[base.U[kk].size()] = 1;
      level.j.combo.push_back(IdealTerm{*pos, minus_one});
    }
    return c;
  }
  return oracle(aug);
}

RingPtr extension_ring(const Presentation& base, const std::string& alpha) {
  if (base.poly()->index_of(alpha) != PolynomialRing::npos) {
    throw InvalidInput("extension variable '" + alpha + "' clashes with a ring variable");
  }
  return extend_ring(base.poly(), {alpha});
}

CollapseCertificate extension_descent(const ExtensionCertificate& ec) {
  const Presentation& base = ec.base;
  const RingPtr& B = base.poly();
  const RingPtr ext = ec.extended_ring();
  if (!ext || !ext->same_as(*extension_ring(base, ec.alpha))) {
    throw InvalidInput("minimal polynomial does not live in the extended ring");
  }
  const std::size_t alpha = B->arity();
  const Polynomial& P = ec.minimal_polynomial;
  const auto used = P.variables_used();
  if (used != std::vector<std::size_t>{alpha}) {
    throw InvalidInput("minimal polynomial must be a non-constant polynomial in " + ec.alpha);
  }
  const std::uint32_t d = P.degree_in(alpha);
  Monomial lead(ext->arity());
  lead[alpha] = d;
  if (P.coefficient(lead) != 1) throw InvalidInput("minimal polynomial must be monic");
  if (ec.certificate.depth() != base.depth()) {
    throw ShapeError("certificate depth does not match presentation depth");
  }

  // The base presentation, read inside base[alpha].
  auto lift = [&](const Generators& gens) {
    Generators out;
    for (const auto& g : gens) out.push_back(g.embed(ext));
    return out;
  };
  std::vector<Generators> J, U;
  for (std::size_t i = 0; i < base.depth(); ++i) {
    J.push_back(lift(base.J[i]));
    U.push_back(lift(base.U[i]));
  }
  Presentation lifted(Ring(ext, lift(base.ring.relations())), std::move(J), std::move(U));

  std::vector<std::size_t> priority{alpha};
  for (std::size_t v = 0; v < alpha; ++v) priority.push_back(v);
  const auto order = MonomialOrder::lex(std::move(priority));
  const std::vector<Polynomial> divisor{P};

  CollapseCertificate reduced = ec.certificate;
  for (auto& level : reduced.levels) {
    for (auto& term : level.j.combo) {
      require_same_ring(ext, term.cofactor.ring());
      term.cofactor = divide(term.cofactor, divisor, order).remainder;
    }
  }
  // Cofactors now have alpha-degree < deg P and the monoid part is alpha-free,
  // so the expansion vanishes modulo (relations, P) iff it vanishes modulo the
  // relations alone, coefficientwise in alpha.
  if (!verify_certificate(reduced, lifted)) {
    throw InvalidInput("expansion is not divisible by the minimal polynomial");
  }

  CollapseCertificate out = unit_certificate(base.depth());
  for (std::size_t i = 0; i < base.depth(); ++i) {
    out.levels[i].u = reduced.levels[i].u;
    for (const auto& term : reduced.levels[i].j.combo) {
      std::vector<Term> constant_part;
      for (const auto& tm : term.cofactor.terms()) {
        if (tm.monomial[alpha] == 0) constant_part.push_back(tm);
      }
      out.levels[i].j.combo.push_back(
          IdealTerm{term.index, Polynomial(ext, std::move(constant_part)).embed(B)});
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace krullcert
