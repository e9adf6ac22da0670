#pragma once

#include <optional>

#include "krullcert/combinators.hpp"
#include "krullcert/primes.hpp"

namespace krullcert {

/// Exactly one of chain / certificate is set.
struct Decision {
  std::optional<PrimeChain> chain;
  std::optional<CollapseCertificate> certificate;

  bool has_chain() const { return chain.has_value(); }
};

/// For a monomial presentation, either a chain of variable primes satisfying
/// the presentation or a verified collapse certificate. Throws
/// UnsupportedClass for other presentations.
Decision decide_chain(const Presentation& pres);

/// decide_chain as a collapse oracle for prove_fact.
CollapseOracle monomial_collapse_oracle();

/// Decision plus, on the chain arm, explicit generators of each prime.
struct GeometricDecision {
  Decision decision;
  std::vector<Generators> prime_generators;
};

/// Without extension data this is decide_chain. With an extension
/// certificate for pres, its descent to the base ring is returned as the
/// certificate arm.
GeometricDecision geometric_decide(const Presentation& pres,
                                   const std::optional<ExtensionCertificate>& extension = {});

}  // namespace krullcert
