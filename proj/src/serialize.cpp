#include "krullcert/serialize.hpp"

#include <algorithm>
#include <limits>

namespace krullcert {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_of(const Json& j, const char* key) {
  const Json& a = field_of(j, key);
  if (!a.is_array()) fail(std::string("field '") + key + "' must be an array");
  return a;
}

bool non_negative(const Json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::uint32_t small_uint(const Json& j, const char* what) {
  if (!non_negative(j) || j.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    fail(std::string(what) + " must be a non-negative 32-bit integer");
  }
  return j.get<std::uint32_t>();
}

std::size_t index_value(const Json& j, const char* what) {
  if (!non_negative(j)) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> names_of(const Json& j) {
  if (!j.is_array()) fail("variable list must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(string_value(v, "variable name"));
  return out;
}

Coefficient coefficient_from(const std::string& text) {
  Coefficient c;
  if (text.empty() || c.set_str(text, 10) != 0) fail("bad coefficient '" + text + "'");
  if (c.get_den() == 0) fail("zero denominator in '" + text + "'");
  c.canonicalize();
  return c;
}

std::vector<Generators> levels_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) fail("level list must be an array");
  std::vector<Generators> out;
  for (const auto& level : j) out.push_back(generators_from_json(level, ring));
  return out;
}

Json prime_to_json(const VariablePrime& p) { return p.names(); }

VariablePrime prime_from_json(const Json& j, const RingPtr& ring) {
  VariablePrime p{ring, {}};
  for (const auto& name : names_of(j)) {
    auto v = ring->index_of(name);
    if (v == PolynomialRing::npos) fail("unknown variable '" + name + "' in prime");
    p.vars.push_back(v);
  }
  std::sort(p.vars.begin(), p.vars.end());
  if (std::adjacent_find(p.vars.begin(), p.vars.end()) != p.vars.end()) {
    fail("repeated variable in prime");
  }
  return p;
}

Field field_from_json(const Json& j) {
  auto kind = string_value(field_of(j, "field"), "field");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    const Json& p = field_of(j, "p");
    if (!non_negative(p)) fail("field characteristic must be a positive integer");
    auto value = p.get<std::uint64_t>();
    if (value > std::numeric_limits<std::uint32_t>::max()) fail("field characteristic too large");
    return Field::prime(static_cast<std::uint32_t>(value));
  }
  fail("unknown field '" + kind + "'");
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"c", t.coeff.get_str()}, {"e", t.monomial.exponents()}});
  }
  return {{"vars", p.ring()->variables()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  if (j.is_string()) {
    try {
      return parse_polynomial(j.get<std::string>(), ring);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (names_of(field_of(j, "vars")) != ring->variables()) {
    throw RingMismatch("polynomial variables do not match the ring");
  }
  std::vector<Term> terms;
  for (const auto& t : array_of(j, "terms")) {
    const Json& e = array_of(t, "e");
    if (e.size() != ring->arity()) fail("exponent vector has the wrong length");
    Monomial m(ring->arity());
    for (std::size_t v = 0; v < e.size(); ++v) m[v] = small_uint(e[v], "exponent");
    terms.push_back(Term{std::move(m), coefficient_from(string_value(field_of(t, "c"), "coefficient"))});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial free_polynomial_from_json(const Json& j, const Field& field) {
  if (j.is_string()) fail("a free-standing polynomial needs an explicit variable list");
  return polynomial_from_json(j, PolynomialRing::make(names_of(field_of(j, "vars")), field));
}

Json generators_to_json(const Generators& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(polynomial_to_json(g));
  return out;
}

Generators generators_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) fail("generator list must be an array");
  Generators out;
  for (const auto& g : j) out.push_back(polynomial_from_json(g, ring));
  return out;
}

Json ring_to_json(const RingPtr& poly, const Generators& relations) {
  Json out;
  const Field& f = poly->field();
  out["field"] = f.is_rational() ? "Q" : "Fp";
  if (!f.is_rational()) out["p"] = f.characteristic();
  out["vars"] = poly->variables();
  out["relations"] = generators_to_json(relations);
  return out;
}

Json ring_to_json(const Ring& ring) { return ring_to_json(ring.poly(), ring.relations()); }

Ring ring_from_json(const Json& j) {
  RingPtr poly = PolynomialRing::make(names_of(field_of(j, "vars")), field_from_json(j));
  Generators relations;
  if (j.contains("relations")) relations = generators_from_json(j["relations"], poly);
  return Ring(poly, std::move(relations));
}

Json presentation_to_json(const Presentation& pres) {
  Json J = Json::array(), U = Json::array();
  for (const auto& g : pres.J) J.push_back(generators_to_json(g));
  for (const auto& g : pres.U) U.push_back(generators_to_json(g));
  return {{"ring", ring_to_json(pres.ring)}, {"J", std::move(J)}, {"U", std::move(U)}};
}

Presentation presentation_from_json(const Json& j) {
  Ring ring = ring_from_json(field_of(j, "ring"));
  auto J = levels_from_json(field_of(j, "J"), ring.poly());
  auto U = levels_from_json(field_of(j, "U"), ring.poly());
  return Presentation(std::move(ring), std::move(J), std::move(U));
}

Json certificate_to_json(const CollapseCertificate& cert) {
  Json levels = Json::array();
  for (const auto& level : cert.levels) {
    Json u = Json::array(), jj = Json::array();
    for (const auto& [index, e] : level.u.exponents) u.push_back({{"index", index}, {"exponent", e}});
    for (const auto& t : level.j.combo) {
      jj.push_back({{"index", t.index}, {"cofactor", polynomial_to_json(t.cofactor)}});
    }
    levels.push_back({{"u", std::move(u)}, {"j", std::move(jj)}});
  }
  return {{"levels", std::move(levels)}};
}

CollapseCertificate certificate_from_json(const Json& j, const RingPtr& ring) {
  CollapseCertificate cert;
  for (const auto& level : array_of(j, "levels")) {
    CertificateLevel out;
    for (const auto& u : array_of(level, "u")) {
      auto index = index_value(field_of(u, "index"), "monoid index");
      if (!out.u.exponents.emplace(index, small_uint(field_of(u, "exponent"), "exponent")).second) {
        fail("repeated monoid index");
      }
    }
    for (const auto& t : array_of(level, "j")) {
      out.j.combo.push_back(IdealTerm{index_value(field_of(t, "index"), "ideal index"),
                                      polynomial_from_json(field_of(t, "cofactor"), ring)});
    }
    cert.levels.push_back(std::move(out));
  }
  return cert;
}

Json chain_to_json(const PrimeChain& chain) {
  Json primes = Json::array();
  for (const auto& p : chain.primes) primes.push_back(prime_to_json(p));
  return {{"primes", std::move(primes)}};
}

PrimeChain chain_from_json(const Json& j, const RingPtr& ring) {
  PrimeChain chain;
  for (const auto& p : array_of(j, "primes")) chain.primes.push_back(prime_from_json(p, ring));
  return chain;
}

Json witness_to_json(const PseudoSingularityWitness& w) {
  return {{"ring", ring_to_json(w.ring)},
          {"sequence", generators_to_json(w.sequence)},
          {"exponents", w.exponents},
          {"multipliers", generators_to_json(w.multipliers)}};
}

PseudoSingularityWitness witness_from_json(const Json& j) {
  Ring ring = ring_from_json(field_of(j, "ring"));
  auto sequence = generators_from_json(field_of(j, "sequence"), ring.poly());
  std::vector<std::uint32_t> exponents;
  for (const auto& e : array_of(j, "exponents")) exponents.push_back(small_uint(e, "exponent"));
  auto multipliers = generators_from_json(field_of(j, "multipliers"), ring.poly());
  return PseudoSingularityWitness{std::move(ring), std::move(sequence), std::move(exponents),
                                  std::move(multipliers)};
}

Json decision_to_json(const Decision& d) {
  if (d.chain) return {{"arm", "chain"}, {"chain", chain_to_json(*d.chain)}};
  return {{"arm", "certificate"}, {"certificate", certificate_to_json(*d.certificate)}};
}

Decision decision_from_json(const Json& j, const RingPtr& ring) {
  auto arm = string_value(field_of(j, "arm"), "arm");
  Decision d;
  if (arm == "chain") {
    d.chain = chain_from_json(field_of(j, "chain"), ring);
  } else if (arm == "certificate") {
    d.certificate = certificate_from_json(field_of(j, "certificate"), ring);
  } else {
    fail("unknown decision arm '" + arm + "'");
  }
  return d;
}

Json report_to_json(const DimensionReport& r) {
  Json lower = {{"sequence", generators_to_json(r.sequence)}};
  lower["chain"] = r.chain ? chain_to_json(*r.chain) : Json(nullptr);
  Json minimal = Json::array();
  for (const auto& p : r.minimal_primes) minimal.push_back(prime_to_json(p));
  Json upper = {{"minimal_primes", std::move(minimal)},
                {"min_transversal", r.min_transversal},
                {"argument", r.upper_bound()}};
  return {{"ring", ring_to_json(r.ring, {})},
          {"ideal", generators_to_json(r.ideal)},
          {"dimension", r.dimension},
          {"lower", std::move(lower)},
          {"upper", std::move(upper)}};
}

DimensionReport report_from_json(const Json& j) {
  DimensionReport r;
  Ring ring = ring_from_json(field_of(j, "ring"));
  r.ring = ring.poly();
  r.ideal = generators_from_json(field_of(j, "ideal"), r.ring);
  const Json& dim = field_of(j, "dimension");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < -1 ||
      dim.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    fail("dimension must be an integer >= -1");
  }
  r.dimension = dim.get<int>();
  const Json& lower = field_of(j, "lower");
  r.sequence = generators_from_json(field_of(lower, "sequence"), r.ring);
  if (!field_of(lower, "chain").is_null()) r.chain = chain_from_json(lower["chain"], r.ring);
  const Json& upper = field_of(j, "upper");
  for (const auto& p : array_of(upper, "minimal_primes")) {
    r.minimal_primes.push_back(prime_from_json(p, r.ring));
  }
  r.min_transversal = index_value(field_of(upper, "min_transversal"), "min_transversal");
  return r;
}

Json extension_to_json(const ExtensionCertificate& e) {
  return {{"presentation", presentation_to_json(e.base)},
          {"alpha", e.alpha},
          {"minimal_polynomial", polynomial_to_json(e.minimal_polynomial)},
          {"certificate", certificate_to_json(e.certificate)}};
}

ExtensionCertificate extension_from_json(const Json& j) {
  Presentation base = presentation_from_json(field_of(j, "presentation"));
  auto alpha = string_value(field_of(j, "alpha"), "alpha");
  RingPtr ext;
  try {
    ext = extension_ring(base, alpha);
  } catch (const InvalidInput& e) {
    fail(e.what());
  }
  auto P = polynomial_from_json(field_of(j, "minimal_polynomial"), ext);
  auto cert = certificate_from_json(field_of(j, "certificate"), ext);
  return ExtensionCertificate{std::move(base), std::move(alpha), std::move(P), std::move(cert)};
}

Json make_document(std::string_view kind, Json payload) {
  payload["version"] = kFormatVersion;
  payload["kind"] = std::string(kind);
  return payload;
}

Json parse_document(std::string_view text, std::string_view kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  const Json& version = field_of(doc, "version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    fail("unsupported document version");
  }
  auto got = string_value(field_of(doc, "kind"), "kind");
  if (!kind.empty() && got != kind) {
    fail("expected a '" + std::string(kind) + "' document, got '" + got + "'");
  }
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace krullcert
