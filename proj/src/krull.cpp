#include "krullcert/krull.hpp"

#include <algorithm>
#include <numeric>

namespace krullcert {

namespace {

Polynomial unit_leading(const Polynomial& p) {
  const RingPtr& R = p.ring();
  return p.scaled(R->field().div(1, p.terms()[0].coeff));
}

}  // namespace

PseudoSingularityWitness dependence_to_witness(const Polynomial& Q, const Ring& ring,
                                               const Generators& sequence) {
  const std::size_t l = sequence.size();
  if (l == 0) throw ShapeError("empty sequence");
  if (Q.ring()->arity() != l) throw ShapeError("relation arity must equal the sequence length");
  for (const auto& x : sequence) {
    if (!x.ring()->same_as(*ring.poly())) throw RingMismatch("sequence element outside the ring");
  }
  if (Q.is_zero()) throw InvalidInput("dependence relation is zero");
  if (!ring.is_zero(Q.substitute(sequence, ring.poly()))) {
    throw InvalidInput("relation does not vanish on the sequence");
  }

  // Terms are stored in descending lex order, so the last one is lex-minimal.
  const Term& base = Q.terms().back();
  const Monomial& m = base.monomial;
  const Field& K = Q.ring()->field();
  const Coefficient scale = K.div(1, base.coeff);

  // Every other monomial e first differs from m at some j with e_j > m_j; it
  // contributes c * y_j^(e_j - m_j - 1) * prod_{i>j} y_i^e_i to R_j.
  std::vector<std::vector<Term>> buckets(l);
  for (std::size_t t = 0; t + 1 < Q.terms().size(); ++t) {
    const Term& term = Q.terms()[t];
    std::size_t j = 0;
    while (term.monomial[j] == m[j]) ++j;
    Monomial rest(l);
    rest[j] = term.monomial[j] - m[j] - 1;
    for (std::size_t i = j + 1; i < l; ++i) rest[i] = term.monomial[i];
    buckets[j].push_back(Term{std::move(rest), K.mul(term.coeff, scale)});
  }

  PseudoSingularityWitness w{ring, sequence, m.exponents(), Generators(l, ring.zero())};
  for (std::size_t j = 0; j < l; ++j) {
    if (buckets[j].empty()) continue;
    Polynomial R_j(Q.ring(), std::move(buckets[j]));
    w.multipliers[j] = ring.reduce(R_j.substitute(sequence, ring.poly()));
  }
  if (!verify_witness(w)) throw Error("internal: witness read off a dependence does not verify");
  return w;
}

std::optional<Polynomial> algebraic_dependence(const Generators& fs) {
  if (fs.empty()) return std::nullopt;
  const RingPtr& base = fs.front().ring();
  for (const auto& f : fs) {
    if (!f.ring()->same_as(*base)) throw RingMismatch("elements live in different rings");
  }
  const std::size_t n = base->arity(), k = fs.size();

  RingPtr joint = base;
  for (std::size_t i = 0; i < k; ++i) {
    joint = extend_ring(joint, {joint->fresh_name("y" + std::to_string(i + 1))});
  }
  Generators gens;
  for (std::size_t i = 0; i < k; ++i) {
    gens.push_back(Polynomial::variable(joint, n + i) - fs[i].embed(joint));
  }
  std::vector<std::size_t> keep(k);
  std::iota(keep.begin(), keep.end(), n);
  auto eliminated = elimination(gens, keep);
  if (eliminated.empty()) return std::nullopt;

  auto best = std::min_element(eliminated.begin(), eliminated.end(),
                               [](const Polynomial& a, const Polynomial& b) {
                                 if (a.total_degree() != b.total_degree()) {
                                   return a.total_degree() < b.total_degree();
                                 }
                                 return a.size() < b.size();
                               });
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("y" + std::to_string(i + 1));
  RingPtr target = PolynomialRing::make(names, base->field());
  Generators values(n, Polynomial(target));
  for (std::size_t i = 0; i < k; ++i) values.push_back(Polynomial::variable(target, i));
  return unit_leading(best->substitute(values, target));
}

PseudoSingularityWitness prove_upper_dimension_instance(const Ring& ring,
                                                        const Generators& sequence) {
  if (!ring.relations().empty()) throw InvalidInput("expected a polynomial ring without relations");
  if (sequence.size() != ring.arity() + 1) {
    throw ShapeError("sequence length must be the number of variables plus one");
  }
  auto Q = algebraic_dependence(sequence);
  if (!Q) throw Error("internal: no dependence among n+1 polynomials in n variables");
  auto w = dependence_to_witness(*Q, ring, sequence);
  auto [pres, cert] = witness_to_certificate(w);
  if (!verify_certificate(cert, pres)) throw Error("internal: certificate from witness rejected");
  return w;
}

bool regular_sequence_check(const Generators& sequence, const Ring& ring) {
  Generators ideal = ring.relations();
  for (const auto& x : sequence) {
    if (!is_nonzerodivisor(x, ideal)) return false;
    ideal.push_back(x);
  }
  if (ideal.empty()) return true;
  return !is_unit_ideal(ideal);
}

PseudoRegularity pseudo_regularity_decide(const Generators& sequence, const Ring& ring) {
  Presentation pres = sequence_presentation(ring, sequence);
  Decision d = decide_chain(pres);
  std::optional<PseudoSingularityWitness> w;
  if (d.certificate) {
    w = certificate_to_witness(*d.certificate, pres, sequence);
    if (!w || !verify_witness(*w)) throw Error("internal: certificate does not give a witness");
  }
  return PseudoRegularity{std::move(pres), std::move(d), std::move(w)};
}

std::string DimensionReport::upper_bound() const {
  if (dimension < 0) return "1 = 0 in the quotient";
  return "every minimal prime contains at least " + std::to_string(min_transversal) + " of " +
         std::to_string(ring->arity()) + " variables";
}

DimensionReport monomial_krull_dimension(const MonomialIdeal& ideal) {
  DimensionReport r;
  r.ring = ideal.ring;
  r.ideal = ideal.polynomials();
  r.minimal_primes = monomial_minimal_primes(ideal);
  if (r.minimal_primes.empty()) return r;

  auto smallest = std::min_element(
      r.minimal_primes.begin(), r.minimal_primes.end(),
      [](const VariablePrime& a, const VariablePrime& b) { return a.vars.size() < b.vars.size(); });
  r.min_transversal = smallest->vars.size();
  const std::size_t n = ideal.ring->arity();
  r.dimension = static_cast<int>(n - r.min_transversal);

  PrimeChain chain{{*smallest}};
  for (std::size_t v = 0; v < n; ++v) {
    if (smallest->has(v)) continue;
    r.sequence.push_back(Polynomial::variable(ideal.ring, v));
    VariablePrime next = chain.primes.back();
    next.vars.insert(std::upper_bound(next.vars.begin(), next.vars.end(), v), v);
    chain.primes.push_back(std::move(next));
  }
  if (!r.sequence.empty()) {
    Presentation pres = sequence_presentation(Ring(ideal.ring, r.ideal), r.sequence);
    if (!validate_chain(chain, pres)) throw Error("internal: coordinate chain does not validate");
  }
  r.chain = std::move(chain);
  return r;
}

}  // namespace krullcert
