#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "krullcert/ring.hpp"

namespace krullcert {

using Generators = std::vector<Polynomial>;

/// Depth-l data (ring, J_1..J_l, U_1..U_l). J_i generates an ideal, U_i a
/// multiplicative monoid; empty lists stand for (0) and {1}.
struct Presentation {
  Ring ring;
  std::vector<Generators> J;
  std::vector<Generators> U;

  Presentation(Ring ring, std::vector<Generators> J, std::vector<Generators> U);

  std::size_t depth() const { return J.size(); }
  const RingPtr& poly() const { return ring.poly(); }
  /// Every J/U generator and every relation is a single term or zero.
  bool is_monomial() const;
};

/// Product of U_i[k]^e over the stored entries; empty means 1.
struct MonoidElement {
  std::map<std::size_t, std::uint32_t> exponents;

  bool is_one() const { return exponents.empty(); }
  /// Drops zero exponents.
  void canonicalize();
  bool operator==(const MonoidElement&) const = default;
};

struct IdealTerm {
  std::size_t index;
  Polynomial cofactor;

  bool operator==(const IdealTerm&) const = default;
};

/// Sum of cofactor * J_i[index]; empty means 0.
struct IdealElement {
  std::vector<IdealTerm> combo;

  bool is_zero() const { return combo.empty(); }
  /// Merges repeated indices, drops zero cofactors and sorts by index.
  void canonicalize();
  bool operator==(const IdealElement&) const = default;
};

struct CertificateLevel {
  MonoidElement u;
  IdealElement j;

  bool operator==(const CertificateLevel&) const = default;
};

/// Nested identity u_1(u_2(...(u_l + j_l)...) + j_2) + j_1 = 0 modulo the
/// ring relations.
struct CollapseCertificate {
  std::vector<CertificateLevel> levels;

  std::size_t depth() const { return levels.size(); }
  void canonicalize();
  bool operator==(const CollapseCertificate&) const = default;
};

Polynomial monoid_value(const MonoidElement& u, const Generators& gens, const RingPtr& ring);
Polynomial ideal_value(const IdealElement& j, const Generators& gens, const RingPtr& ring);

/// Throws ShapeError when depths differ or an index is out of bounds, and
/// RingMismatch when a cofactor lives elsewhere.
void check_shape(const CollapseCertificate& cert, const Presentation& pres);

/// Expanded nested form, before reduction modulo the relations.
Polynomial expand_certificate(const CollapseCertificate& cert, const Presentation& pres);

/// True iff the expansion vanishes modulo the relations. Shape problems
/// throw instead of returning false.
bool verify_certificate(const CollapseCertificate& cert, const Presentation& pres);

/// Exponents m_i and multipliers a_i with
/// x_1^m_1(x_2^m_2(...(x_l^m_l(1 + a_l x_l) ...) + a_2 x_2) + a_1 x_1 = 0.
struct PseudoSingularityWitness {
  Ring ring;
  Generators sequence;
  std::vector<std::uint32_t> exponents;
  Generators multipliers;

  std::size_t length() const { return sequence.size(); }
};

/// Expanded left-hand side of the witness identity.
Polynomial witness_expansion(const PseudoSingularityWitness& w);
bool verify_witness(const PseudoSingularityWitness& w);

/// The depth-(l+1) presentation with U_i = {x_i}, J_{i+1} = {x_i}, J_1 and
/// U_{l+1} empty.
Presentation sequence_presentation(const Ring& ring, const Generators& sequence);

/// Throws ShapeError unless pres is sequence_presentation(ring, sequence).
void require_sequence_shape(const Presentation& pres, const Generators& sequence);

std::pair<Presentation, CollapseCertificate> witness_to_certificate(
    const PseudoSingularityWitness& w);

/// Inverse of witness_to_certificate on its image; absent when a cofactor
/// combination does not have the single-generator form.
std::optional<PseudoSingularityWitness> certificate_to_witness(const CollapseCertificate& cert,
                                                               const Presentation& pres,
                                                               const Generators& sequence);

}  // namespace krullcert
