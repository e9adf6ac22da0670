#include "krullcert/certificates.hpp"

#include <algorithm>
#include <string>

namespace krullcert {

namespace {

bool single_term(const Polynomial& p) { return p.is_zero() || p.is_monomial(); }

bool all_single_terms(const std::vector<Generators>& lists) {
  for (const auto& l : lists) {
    if (!std::all_of(l.begin(), l.end(), single_term)) return false;
  }
  return true;
}

std::string level_name(std::size_t i) { return "level " + std::to_string(i + 1); }

}  // namespace

Presentation::Presentation(Ring r, std::vector<Generators> j, std::vector<Generators> u)
    : ring(std::move(r)), J(std::move(j)), U(std::move(u)) {
  if (J.empty()) throw ShapeError("presentation depth must be at least 1");
  if (J.size() != U.size()) throw ShapeError("J and U families have different lengths");
  for (const auto* fam : {&J, &U}) {
    for (const auto& l : *fam) {
      for (const auto& g : l) require_same_ring(ring.poly(), g.ring());
    }
  }
}

bool Presentation::is_monomial() const {
  return ring.has_monomial_relations() && all_single_terms(J) && all_single_terms(U);
}

void MonoidElement::canonicalize() {
  std::erase_if(exponents, [](const auto& kv) { return kv.second == 0; });
}

void IdealElement::canonicalize() {
  std::map<std::size_t, Polynomial> merged;
  for (auto& t : combo) {
    auto [it, inserted] = merged.try_emplace(t.index, t.cofactor);
    if (!inserted) it->second += t.cofactor;
  }
  combo.clear();
  for (auto& [idx, c] : merged) {
    if (!c.is_zero()) combo.push_back(IdealTerm{idx, std::move(c)});
  }
}

void CollapseCertificate::canonicalize() {
  for (auto& l : levels) {
    l.u.canonicalize();
    l.j.canonicalize();
  }
}

Polynomial monoid_value(const MonoidElement& u, const Generators& gens, const RingPtr& ring) {
  Polynomial v = Polynomial::constant(ring, 1);
  for (const auto& [idx, e] : u.exponents) {
    if (idx >= gens.size()) throw ShapeError("monoid index out of bounds");
    if (e > 0) v *= gens[idx].pow(e);
  }
  return v;
}

Polynomial ideal_value(const IdealElement& j, const Generators& gens, const RingPtr& ring) {
  Polynomial v(ring);
  for (const auto& t : j.combo) {
    if (t.index >= gens.size()) throw ShapeError("ideal index out of bounds");
    require_same_ring(ring, t.cofactor.ring());
    v += t.cofactor * gens[t.index];
  }
  return v;
}

void check_shape(const CollapseCertificate& cert, const Presentation& pres) {
  if (cert.depth() != pres.depth()) {
    throw ShapeError("certificate depth " + std::to_string(cert.depth()) +
                     " does not match presentation depth " + std::to_string(pres.depth()));
  }
  for (std::size_t i = 0; i < cert.depth(); ++i) {
    const auto& l = cert.levels[i];
    for (const auto& [idx, e] : l.u.exponents) {
      (void)e;
      if (idx >= pres.U[i].size()) throw ShapeError("monoid index out of bounds at " + level_name(i));
    }
    for (const auto& t : l.j.combo) {
      if (t.index >= pres.J[i].size()) throw ShapeError("ideal index out of bounds at " + level_name(i));
      require_same_ring(pres.poly(), t.cofactor.ring());
    }
  }
}

Polynomial expand_certificate(const CollapseCertificate& cert, const Presentation& pres) {
  check_shape(cert, pres);
  const RingPtr& R = pres.poly();
  Polynomial e = Polynomial::constant(R, 1);
  for (std::size_t i = cert.depth(); i-- > 0;) {
    const auto& l = cert.levels[i];
    Polynomial u = monoid_value(l.u, pres.U[i], R);
    e = (i + 1 == cert.depth() ? u : u * e) + ideal_value(l.j, pres.J[i], R);
  }
  return e;
}

bool verify_certificate(const CollapseCertificate& cert, const Presentation& pres) {
  return pres.ring.is_zero(expand_certificate(cert, pres));
}

Polynomial witness_expansion(const PseudoSingularityWitness& w) {
  const std::size_t l = w.length();
  if (l == 0) throw ShapeError("empty sequence");
  if (w.exponents.size() != l || w.multipliers.size() != l) {
    throw ShapeError("witness exponents and multipliers must match the sequence length");
  }
  const RingPtr& R = w.ring.poly();
  Polynomial e = w.ring.one() + w.multipliers[l - 1] * w.sequence[l - 1];
  for (std::size_t i = l; i-- > 0;) {
    e = w.sequence[i].pow(w.exponents[i]) * e;
    if (i > 0) e += w.multipliers[i - 1] * w.sequence[i - 1];
  }
  require_same_ring(R, e.ring());
  return e;
}

bool verify_witness(const PseudoSingularityWitness& w) { return w.ring.is_zero(witness_expansion(w)); }

Presentation sequence_presentation(const Ring& ring, const Generators& sequence) {
  const std::size_t l = sequence.size();
  if (l == 0) throw ShapeError("empty sequence");
  std::vector<Generators> J(l + 1), U(l + 1);
  for (std::size_t i = 0; i < l; ++i) {
    U[i] = {sequence[i]};
    J[i + 1] = {sequence[i]};
  }
  return Presentation(ring, std::move(J), std::move(U));
}

void require_sequence_shape(const Presentation& pres, const Generators& sequence) {
  const std::size_t l = sequence.size();
  if (l == 0) throw ShapeError("empty sequence");
  if (pres.depth() != l + 1) throw ShapeError("presentation depth must be sequence length + 1");
  if (!pres.J[0].empty() || !pres.U[l].empty()) {
    throw ShapeError("presentation is not the sequence presentation");
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (pres.U[i] != Generators{sequence[i]} || pres.J[i + 1] != Generators{sequence[i]}) {
      throw ShapeError("presentation is not the sequence presentation");
    }
  }
}

std::pair<Presentation, CollapseCertificate> witness_to_certificate(
    const PseudoSingularityWitness& w) {
  const std::size_t l = w.length();
  if (l == 0) throw ShapeError("empty sequence");
  if (w.exponents.size() != l || w.multipliers.size() != l) {
    throw ShapeError("witness exponents and multipliers must match the sequence length");
  }
  Presentation pres = sequence_presentation(w.ring, w.sequence);
  CollapseCertificate cert;
  cert.levels.resize(l + 1);
  for (std::size_t i = 0; i < l; ++i) {
    if (w.exponents[i] > 0) cert.levels[i].u.exponents[0] = w.exponents[i];
    if (!w.multipliers[i].is_zero()) {
      cert.levels[i + 1].j.combo.push_back(IdealTerm{0, w.multipliers[i]});
    }
  }
  return {std::move(pres), std::move(cert)};
}

std::optional<PseudoSingularityWitness> certificate_to_witness(const CollapseCertificate& cert,
                                                               const Presentation& pres,
                                                               const Generators& sequence) {
  require_sequence_shape(pres, sequence);
  const std::size_t l = sequence.size();
  if (cert.depth() != l + 1) throw ShapeError("certificate depth does not match presentation");
  CollapseCertificate c = cert;
  c.canonicalize();
  if (!c.levels[0].j.is_zero()) return std::nullopt;
  if (!c.levels[l].u.is_one()) return std::nullopt;
  check_shape(c, pres);
  PseudoSingularityWitness w{pres.ring, sequence, std::vector<std::uint32_t>(l, 0),
                             Generators(l, pres.ring.zero())};
  for (std::size_t i = 0; i < l; ++i) {
    const auto& u = c.levels[i].u.exponents;
    if (u.size() > 1) return std::nullopt;
    if (!u.empty()) w.exponents[i] = u.begin()->second;
    const auto& j = c.levels[i + 1].j.combo;
    if (j.size() > 1) return std::nullopt;
    if (!j.empty()) w.multipliers[i] = j.front().cofactor;
  }
  return w;
}

}  // namespace krullcert
