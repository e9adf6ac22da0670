#pragma once

#include <cstdint>
#include <vector>

#include "krullcert/certificates.hpp"

namespace krullcert {

/// Monomial ideal given by a minimal generating set. A unit ideal is stored
/// as the single generator 1; the zero ideal has no generators.
struct MonomialIdeal {
  RingPtr ring;
  std::vector<Monomial> generators;

  /// Builds the minimal generating set of (gens); throws UnsupportedClass
  /// when a generator has more than one term.
  static MonomialIdeal from(const RingPtr& ring, const Generators& gens);

  bool is_unit() const { return generators.size() == 1 && generators[0].is_one(); }
  bool contains(const Monomial& m) const;
  Generators polynomials() const;
};

/// Prime generated by the variables in `vars` (sorted); empty is the zero
/// ideal.
struct VariablePrime {
  RingPtr ring;
  std::vector<std::size_t> vars;

  bool has(std::size_t v) const;
  /// For a single-term or zero polynomial; throws UnsupportedClass otherwise.
  bool contains(const Polynomial& p) const;
  bool subset_of(const VariablePrime& other) const;
  Generators generators() const;
  std::vector<std::string> names() const;

  bool operator==(const VariablePrime& o) const { return vars == o.vars; }
};

struct PrimeChain {
  std::vector<VariablePrime> primes;

  std::size_t length() const { return primes.size(); }
};

/// Inclusion-minimal variable sets meeting the support of every generator,
/// sorted lexicographically. The zero ideal gives the zero prime; the unit
/// ideal gives none.
std::vector<VariablePrime> monomial_minimal_primes(const MonomialIdeal& ideal);

/// True iff no generator of U lies in P.
bool prime_avoids_monoid(const VariablePrime& prime, const Generators& U);

/// J_i in P_i, U_i disjoint from P_i, P_i in P_{i+1}, relations in P_1.
bool validate_chain(const PrimeChain& chain, const Presentation& pres);

}  // namespace krullcert
