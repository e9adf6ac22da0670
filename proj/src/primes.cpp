#include "krullcert/primes.hpp"

#include <algorithm>

namespace krullcert {

namespace {

using Mask = std::uint64_t;

void require_single_term(const Polynomial& p) {
  if (!p.is_zero() && !p.is_monomial()) {
    throw UnsupportedClass("'" + p.to_string() + "' is not a monomial");
  }
}

Mask support_mask(const Monomial& m) {
  Mask s = 0;
  for (auto v : m.support()) s |= Mask{1} << v;
  return s;
}

}  // namespace

MonomialIdeal MonomialIdeal::from(const RingPtr& ring, const Generators& gens) {
  MonomialIdeal I{ring, {}};
  std::vector<Monomial> cand;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    require_single_term(g);
    if (!g.is_zero()) cand.push_back(g.terms()[0].monomial);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cand.size() && !redundant; ++j) {
      redundant = j != i && cand[j].divides(cand[i]);
    }
    if (!redundant) I.generators.push_back(cand[i]);
  }
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Generators MonomialIdeal::polynomials() const {
  Generators out;
  for (const auto& g : generators) out.push_back(Polynomial::monomial(ring, g, 1));
  return out;
}

bool VariablePrime::has(std::size_t v) const {
  return std::binary_search(vars.begin(), vars.end(), v);
}

bool VariablePrime::contains(const Polynomial& p) const {
  require_single_term(p);
  if (p.is_zero()) return true;
  for (auto v : p.terms()[0].monomial.support()) {
    if (has(v)) return true;
  }
  return false;
}

bool VariablePrime::subset_of(const VariablePrime& other) const {
  return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
}

Generators VariablePrime::generators() const {
  Generators out;
  for (auto v : vars) out.push_back(Polynomial::variable(ring, v));
  return out;
}

std::vector<std::string> VariablePrime::names() const {
  std::vector<std::string> out;
  for (auto v : vars) out.push_back(ring->variables()[v]);
  return out;
}

std::vector<VariablePrime> monomial_minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.ring->arity() > 64) throw UnsupportedClass("more than 64 variables");
  std::vector<Mask> edges;
  for (const auto& g : ideal.generators) {
    Mask s = support_mask(g);
    if (s == 0) return {};
    edges.push_back(s);
  }
  // Depth-first: extend by each variable of the first edge not yet hit,
  // pruning any set that already contains a transversal found earlier.
  std::vector<Mask> found;
  auto rec = [&](auto& self, Mask chosen) -> void {
    for (Mask f : found) {
      if ((f & chosen) == f) return;
    }
    auto open = std::find_if(edges.begin(), edges.end(), [&](Mask e) { return (e & chosen) == 0; });
    if (open == edges.end()) {
      std::erase_if(found, [&](Mask f) { return (f & chosen) == chosen; });
      found.push_back(chosen);
      return;
    }
    for (Mask rest = *open; rest != 0; rest &= rest - 1) {
      self(self, chosen | (rest & -rest));
    }
  };
  rec(rec, 0);

  std::vector<VariablePrime> out;
  for (Mask f : found) {
    VariablePrime p{ideal.ring, {}};
    for (std::size_t v = 0; v < ideal.ring->arity(); ++v) {
      if (f >> v & 1) p.vars.push_back(v);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const VariablePrime& a, const VariablePrime& b) { return a.vars < b.vars; });
  return out;
}

bool prime_avoids_monoid(const VariablePrime& prime, const Generators& U) {
  return std::none_of(U.begin(), U.end(), [&](const Polynomial& u) { return prime.contains(u); });
}

bool validate_chain(const PrimeChain& chain, const Presentation& pres) {
  if (chain.length() != pres.depth()) {
    throw ShapeError("chain length " + std::to_string(chain.length()) +
                     " does not match presentation depth " + std::to_string(pres.depth()));
  }
  if (!pres.is_monomial()) throw UnsupportedClass("presentation is not monomial");
  for (const auto& p : chain.primes) {
    if (!p.ring || !p.ring->same_as(*pres.poly())) throw RingMismatch("prime from another ring");
    if (!std::is_sorted(p.vars.begin(), p.vars.end()) ||
        std::adjacent_find(p.vars.begin(), p.vars.end()) != p.vars.end() ||
        (!p.vars.empty() && p.vars.back() >= pres.poly()->arity())) {
      throw ShapeError("malformed variable set");
    }
  }
  for (const auto& r : pres.ring.relations()) {
    if (!chain.primes.front().contains(r)) return false;
  }
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const auto& P = chain.primes[i];
    for (const auto& j : pres.J[i]) {
      if (!P.contains(j)) return false;
    }
    if (!prime_avoids_monoid(P, pres.U[i])) return false;
    if (i + 1 < chain.length() && !P.subset_of(chain.primes[i + 1])) return false;
  }
  return true;
}

}  // namespace krullcert
