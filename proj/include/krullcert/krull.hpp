#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krullcert/nullstellensatz.hpp"

namespace krullcert {

/// Singularity witness for x_1..x_l read off a relation Q(x_1..x_l) = 0.
/// Q lives in a ring with l variables (one per sequence element). Throws
/// InvalidInput when Q is zero or does not vanish on the sequence, and
/// ShapeError when the arities disagree.
PseudoSingularityWitness dependence_to_witness(const Polynomial& Q, const Ring& ring,
                                               const Generators& sequence);

/// A nonzero Q in K[y_1..y_k] with Q(f_1..f_k) = 0, of least total degree
/// among the elimination basis, or absent when the f are independent.
std::optional<Polynomial> algebraic_dependence(const Generators& fs);

/// Witness that n+1 elements of K[x_1..x_n] form a pseudo-singular sequence,
/// checked through the collapse-certificate verifier before it is returned.
PseudoSingularityWitness prove_upper_dimension_instance(const Ring& ring,
                                                        const Generators& sequence);

/// Each x_i is a non-zero-divisor modulo relations + (x_1..x_{i-1}) and the
/// whole sequence generates a proper ideal.
bool regular_sequence_check(const Generators& sequence, const Ring& ring);

struct PseudoRegularity {
  Presentation presentation;
  Decision decision;
  /// Set exactly on the certificate arm.
  std::optional<PseudoSingularityWitness> witness;

  bool is_pseudo_regular() const { return decision.has_chain(); }
};

/// decide_chain on the sequence presentation. Throws UnsupportedClass unless
/// the sequence and the relations are monomials.
PseudoRegularity pseudo_regularity_decide(const Generators& sequence, const Ring& ring);

struct DimensionReport {
  RingPtr ring;
  Generators ideal;
  /// -1 for the unit ideal.
  int dimension = -1;
  /// Lower bound: a pseudo-regular sequence of length `dimension` and a chain
  /// of dimension+1 coordinate primes validating it.
  Generators sequence;
  std::optional<PrimeChain> chain;
  /// Upper bound: every minimal prime has at least `min_transversal`
  /// variables.
  std::vector<VariablePrime> minimal_primes;
  std::size_t min_transversal = 0;

  std::string upper_bound() const;
};

DimensionReport monomial_krull_dimension(const MonomialIdeal& ideal);

}  // namespace krullcert
