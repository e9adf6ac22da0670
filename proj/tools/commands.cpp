#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace krullcert::cli {

namespace {

Json load(const std::string& path, std::string_view kind = {}) {
  return parse_document(read_file(path), kind);
}

Presentation presentation_for(const Json& doc, const std::optional<std::string>& path) {
  if (path) return presentation_from_json(load(*path, "presentation"));
  if (doc.contains("presentation")) return presentation_from_json(doc["presentation"]);
  throw ParseError("a presentation file is required for this document");
}

Json verdict(std::string_view target, bool verified) {
  return make_document("verification", {{"target", target}, {"verified", verified}});
}

// Adds a nonzero integer to one coefficient of one cofactor, or appends a
// constant cofactor when the certificate has none.
CollapseCertificate mutate(const CollapseCertificate& cert, const Presentation& pres,
                           std::mt19937_64& rng) {
  CollapseCertificate out = cert;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < out.depth(); ++i) {
    for (std::size_t t = 0; t < out.levels[i].j.combo.size(); ++t) slots.emplace_back(i, t);
  }
  std::uniform_int_distribution<int> delta(1, 3);
  Coefficient d = std::bernoulli_distribution(0.5)(rng) ? delta(rng) : -delta(rng);
  if (slots.empty()) {
    std::vector<std::size_t> levels;
    for (std::size_t i = 0; i < pres.depth(); ++i) {
      if (!pres.J[i].empty()) levels.push_back(i);
    }
    if (levels.empty()) return out;
    auto i = levels[std::uniform_int_distribution<std::size_t>(0, levels.size() - 1)(rng)];
    auto k = std::uniform_int_distribution<std::size_t>(0, pres.J[i].size() - 1)(rng);
    out.levels[i].j.combo.push_back(IdealTerm{k, Polynomial::constant(pres.poly(), d)});
    return out;
  }
  auto [i, t] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
  Polynomial& c = out.levels[i].j.combo[t].cofactor;
  if (c.is_zero()) {
    c = Polynomial::constant(pres.poly(), d);
  } else {
    auto pick = std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
    c += Polynomial::monomial(pres.poly(), c.terms()[pick].monomial, d);
  }
  return out;
}

Outcome verify_certificate_doc(const CollapseCertificate& cert, const Presentation& pres,
                               std::size_t mutations, const Options& opts) {
  Outcome o;
  bool ok = verify_certificate(cert, pres);
  Json body = {{"target", "certificate"}, {"verified", ok}};
  if (!ok) o.failure = "certificate expansion does not vanish modulo the relations";
  if (ok && mutations > 0) {
    std::mt19937_64 rng(opts.seed);
    std::size_t accepted = 0;
    for (std::size_t m = 0; m < mutations; ++m) {
      auto bad = mutate(cert, pres, rng);
      if (bad != cert && verify_certificate(bad, pres)) ++accepted;
    }
    body["mutations"] = {{"tried", mutations}, {"accepted", accepted}, {"seed", opts.seed}};
    if (accepted > 0) o.failure = "a perturbed certificate was accepted";
  }
  o.code = o.failure.empty() ? kOk : kVerificationFailed;
  o.document = make_document("verification", std::move(body));
  return o;
}

Outcome verify_chain_doc(const PrimeChain& chain, const Presentation& pres) {
  Outcome o;
  bool ok = validate_chain(chain, pres);
  if (!ok) {
    o.code = kVerificationFailed;
    o.failure = "chain violates the presentation";
  }
  o.document = verdict("chain", ok);
  return o;
}

}  // namespace

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report_error(const char* kind, const std::string& message, int code, std::ostream& err) {
  err << Json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
  return code;
}

Outcome cmd_verify(const std::string& target, const std::optional<std::string>& presentation,
                   std::size_t mutations, const Options& opts) {
  Json doc = load(target);
  const std::string kind = doc["kind"];
  if (kind == "witness") {
    auto w = witness_from_json(doc);
    Outcome o;
    bool ok = verify_witness(w);
    if (!ok) {
      o.code = kVerificationFailed;
      o.failure = "witness expansion does not vanish modulo the relations";
    }
    o.document = verdict("witness", ok);
    return o;
  }
  if (kind == "certificate") {
    Presentation pres = presentation_for(doc, presentation);
    return verify_certificate_doc(certificate_from_json(doc, pres.poly()), pres, mutations, opts);
  }
  if (kind == "chain") {
    Presentation pres = presentation_for(doc, presentation);
    return verify_chain_doc(chain_from_json(doc, pres.poly()), pres);
  }
  if (kind == "decision") {
    Presentation pres = presentation_for(doc, presentation);
    Decision d = decision_from_json(doc, pres.poly());
    if (d.chain) return verify_chain_doc(*d.chain, pres);
    return verify_certificate_doc(*d.certificate, pres, mutations, opts);
  }
  throw ParseError("cannot verify a '" + kind + "' document");
}

Outcome cmd_decide(const std::string& presentation) {
  Json doc = load(presentation, "presentation");
  Presentation pres = presentation_from_json(doc);
  Decision d = decide_chain(pres);
  Json body = decision_to_json(d);
  body["presentation"] = presentation_to_json(pres);
  return Outcome{d.has_chain() ? kOk : kCertificateArm, make_document("decision", std::move(body)), {}};
}

Outcome cmd_dim(const std::string& input) {
  Json doc = load(input);
  const std::string kind = doc["kind"];
  Generators gens;
  RingPtr poly;
  if (kind == "ideal") {
    Ring ring = ring_from_json(doc["ring"]);
    poly = ring.poly();
    gens = ring.relations();
    for (auto& g : generators_from_json(doc.value("generators", Json::array()), poly)) {
      gens.push_back(std::move(g));
    }
  } else if (kind == "ring") {
    Ring ring = ring_from_json(doc);
    poly = ring.poly();
    gens = ring.relations();
  } else {
    throw ParseError("dim expects an 'ideal' or 'ring' document, got '" + kind + "'");
  }
  auto report = monomial_krull_dimension(MonomialIdeal::from(poly, gens));
  return Outcome{kOk, make_document("report", report_to_json(report)), {}};
}

Outcome cmd_witness_from_dependence(const std::string& input) {
  Json doc = load(input, "dependence");
  Ring ring = ring_from_json(doc["ring"]);
  Generators sequence = generators_from_json(doc["sequence"], ring.poly());
  if (!doc.contains("relation")) throw ParseError("missing field 'relation'");
  const Json& rel = doc["relation"];
  Polynomial Q;
  if (rel.is_string()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sequence.size(); ++i) names.push_back("y" + std::to_string(i + 1));
    Q = polynomial_from_json(rel, PolynomialRing::make(names, ring.poly()->field()));
  } else {
    Q = free_polynomial_from_json(rel, ring.poly()->field());
  }
  auto w = dependence_to_witness(Q, ring, sequence);
  auto [pres, cert] = witness_to_certificate(w);
  if (!verify_certificate(cert, pres)) throw Error("witness failed re-verification");
  return Outcome{kOk, make_document("witness", witness_to_json(w)), {}};
}

Outcome cmd_witness_from_sequence(const std::string& input) {
  Json doc = load(input, "sequence");
  Ring ring = ring_from_json(doc["ring"]);
  Generators sequence = generators_from_json(doc["sequence"], ring.poly());
  auto w = prove_upper_dimension_instance(ring, sequence);
  return Outcome{kOk, make_document("witness", witness_to_json(w)), {}};
}

Outcome cmd_descent(const std::string& input) {
  Json doc = load(input, "extension");
  ExtensionCertificate ec = extension_from_json(doc);
  CollapseCertificate cert = extension_descent(ec);
  Json body = certificate_to_json(cert);
  body["presentation"] = presentation_to_json(ec.base);
  return Outcome{kOk, make_document("certificate", std::move(body)), {}};
}

}  // namespace krullcert::cli
