#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "krullcert/krull.hpp"

namespace krullcert {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// {"vars": [...], "terms": [{"c": "p/q", "e": [...]}]} with terms in the
/// ring's storage order. Parsing also accepts a plain string in the
/// expression syntax of parse_polynomial.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);
/// The ring is built from the polynomial's own variable list.
Polynomial free_polynomial_from_json(const Json& j, const Field& field);

Json generators_to_json(const Generators& gens);
Generators generators_from_json(const Json& j, const RingPtr& ring);

/// {"field": "Q"} or {"field": "Fp", "p": p}, plus "vars" and "relations".
Json ring_to_json(const RingPtr& poly, const Generators& relations);
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

Json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

Json certificate_to_json(const CollapseCertificate& cert);
CollapseCertificate certificate_from_json(const Json& j, const RingPtr& ring);

/// Primes as lists of variable names.
Json chain_to_json(const PrimeChain& chain);
PrimeChain chain_from_json(const Json& j, const RingPtr& ring);

Json witness_to_json(const PseudoSingularityWitness& w);
PseudoSingularityWitness witness_from_json(const Json& j);

Json decision_to_json(const Decision& d);
Decision decision_from_json(const Json& j, const RingPtr& ring);

Json report_to_json(const DimensionReport& r);
DimensionReport report_from_json(const Json& j);

/// {"presentation", "alpha", "minimal_polynomial", "certificate"}; the last
/// two live in the extended ring.
Json extension_to_json(const ExtensionCertificate& e);
ExtensionCertificate extension_from_json(const Json& j);

/// Adds "version" and "kind" to a payload object.
Json make_document(std::string_view kind, Json payload);
/// Parses text and checks the version and, when given, the kind.
Json parse_document(std::string_view text, std::string_view kind = {});
std::string dump_document(const Json& doc);

}  // namespace krullcert
