#pragma once

#include <functional>
#include <optional>
#include <string>

#include "krullcert/certificates.hpp"

namespace krullcert {

enum class FactKind { Ide, Ndz };

/// Ide_k(t) or Ndz_k(t); level is 1-based.
struct Fact {
  FactKind kind;
  std::size_t level;
  Polynomial t;
};

Fact opposite(const Fact& f);

/// A presentation with one fact appended: Ide_k(t) appends t to J_k,
/// Ndz_k(t) appends t to U_k.
struct AugmentedPresentation {
  Presentation base;
  Fact fact;

  Presentation augmented() const;
};

Presentation augment(const Presentation& base, const Fact& fact);

/// Certificate whose value is 1 (all monoid elements 1, all ideal elements 0).
CollapseCertificate unit_certificate(std::size_t depth);

/// Nested values N_s..N_{l+1} of a certificate: N_{l+1} = 1 and
/// N_i = u_i N_{i+1} + j_i. Entry i - s of the result holds N_i (0-based i).
std::vector<Polynomial> nested_values(const CollapseCertificate& cert, const Presentation& pres,
                                      std::size_t from);

/// Certificate for the product of the two nested values at level `from`;
/// levels below `from` are copied from a.
CollapseCertificate nested_product(const CollapseCertificate& a, const CollapseCertificate& b,
                                   const Presentation& pres, std::size_t from = 0);
CollapseCertificate nested_power(const CollapseCertificate& a, std::uint32_t m,
                                 const Presentation& pres);

/// Combines collapse certificates of base + Ide_k(t) and base + Ndz_k(t)
/// into one for base (k is 1-based). Both inputs must verify.
CollapseCertificate merge_branches(const Presentation& base, const Polynomial& t, std::size_t k,
                                   const CollapseCertificate& cert_ide,
                                   const CollapseCertificate& cert_ndz);

/// Returns a collapse certificate or nothing when the presentation does not
/// collapse.
using CollapseOracle = std::function<std::optional<CollapseCertificate>(const Presentation&)>;

/// A fact is provable iff the oppositely augmented presentation collapses;
/// the returned certificate is for that presentation.
std::optional<CollapseCertificate> prove_fact(const Presentation& base, const Fact& fact,
                                              const CollapseOracle& oracle);

/// Certificate over base[alpha] together with the monic minimal polynomial of
/// alpha. Monoid elements refer to base generators, so alpha only occurs in
/// cofactors.
struct ExtensionCertificate {
  Presentation base;
  std::string alpha;
  Polynomial minimal_polynomial;  ///< lives in extended_ring()
  CollapseCertificate certificate;

  RingPtr extended_ring() const { return minimal_polynomial.ring(); }
};

/// The ring base + alpha used for extension certificates.
RingPtr extension_ring(const Presentation& base, const std::string& alpha);

/// Reduces cofactors modulo the minimal polynomial, checks that the identity
/// holds without it, and keeps the alpha-free parts. Throws InvalidInput when
/// the identity does not survive the reduction.
CollapseCertificate extension_descent(const ExtensionCertificate& ec);

}  // namespace krullcert
