#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krullcert/serialize.hpp"

namespace py = pybind11;
using namespace krullcert;

namespace {

RingPtr make_ring(const std::vector<std::string>& vars, std::optional<std::uint32_t> p) {
  return PolynomialRing::make(vars, p ? Field::prime(*p) : Field::rationals());
}

Generators parse_all(const std::vector<std::string>& texts, const RingPtr& R) {
  Generators out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

std::vector<std::string> print_all(const Generators& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

std::optional<Presentation> presentation_of(const Json& doc, const std::optional<std::string>& pres) {
  if (pres) return presentation_from_json(parse_document(*pres, "presentation"));
  if (doc.contains("presentation")) return presentation_from_json(doc["presentation"]);
  return std::nullopt;
}

bool verify_document(const std::string& text, const std::optional<std::string>& pres_text) {
  Json doc = parse_document(text);
  const std::string kind = doc["kind"];
  if (kind == "witness") return verify_witness(witness_from_json(doc));
  auto pres = presentation_of(doc, pres_text);
  if (!pres) throw ParseError("a presentation is required for this document");
  if (kind == "certificate") return verify_certificate(certificate_from_json(doc, pres->poly()), *pres);
  if (kind == "chain") return validate_chain(chain_from_json(doc, pres->poly()), *pres);
  if (kind == "decision") {
    Decision d = decision_from_json(doc, pres->poly());
    return d.chain ? validate_chain(*d.chain, *pres) : verify_certificate(*d.certificate, *pres);
  }
  throw ParseError("cannot verify a '" + kind + "' document");
}

std::string decide_document(const std::string& text) {
  Presentation pres = presentation_from_json(parse_document(text, "presentation"));
  Json body = decision_to_json(decide_chain(pres));
  body["presentation"] = presentation_to_json(pres);
  return dump_document(make_document("decision", std::move(body)));
}

std::string dimension_document(const std::string& text) {
  Json doc = parse_document(text, "ideal");
  Ring ring = ring_from_json(doc["ring"]);
  Generators gens = ring.relations();
  for (auto& g : generators_from_json(doc.value("generators", Json::array()), ring.poly())) {
    gens.push_back(std::move(g));
  }
  auto report = monomial_krull_dimension(MonomialIdeal::from(ring.poly(), gens));
  return dump_document(make_document("report", report_to_json(report)));
}

std::string witness_from_dependence_document(const std::string& text) {
  Json doc = parse_document(text, "dependence");
  Ring ring = ring_from_json(doc["ring"]);
  Generators sequence = generators_from_json(doc["sequence"], ring.poly());
  const Json& rel = doc["relation"];
  Polynomial Q;
  if (rel.is_string()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sequence.size(); ++i) names.push_back("y" + std::to_string(i + 1));
    Q = polynomial_from_json(rel, PolynomialRing::make(names, ring.poly()->field()));
  } else {
    Q = free_polynomial_from_json(rel, ring.poly()->field());
  }
  return dump_document(make_document("witness", witness_to_json(dependence_to_witness(Q, ring, sequence))));
}

std::string witness_from_sequence_document(const std::string& text) {
  Json doc = parse_document(text, "sequence");
  Ring ring = ring_from_json(doc["ring"]);
  auto w = prove_upper_dimension_instance(ring, generators_from_json(doc["sequence"], ring.poly()));
  return dump_document(make_document("witness", witness_to_json(w)));
}

std::string descent_document(const std::string& text) {
  ExtensionCertificate ec = extension_from_json(parse_document(text, "extension"));
  Json body = certificate_to_json(extension_descent(ec));
  body["presentation"] = presentation_to_json(ec.base);
  return dump_document(make_document("certificate", std::move(body)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of krullcert";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", error.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", error.ptr());
  py::register_exception<UnsupportedClass>(m, "UnsupportedClass", error.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());

  m.def("decide", &decide_document, py::arg("presentation"),
        "Decision document (chain or certificate) for a presentation document.");
  m.def("verify", &verify_document, py::arg("document"), py::arg("presentation") = py::none(),
        "Check a certificate, chain, decision or witness document.");
  m.def("dimension", &dimension_document, py::arg("ideal"),
        "Dimension report for a monomial ideal document.");
  m.def("witness_from_dependence", &witness_from_dependence_document, py::arg("document"));
  m.def("witness_from_sequence", &witness_from_sequence_document, py::arg("document"));
  m.def("descent", &descent_document, py::arg("extension"));

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
         const std::string& order, std::optional<std::uint32_t> p) {
        auto R = make_ring(vars, p);
        if (order != "lex" && order != "grevlex") throw InvalidInput("order must be 'lex' or 'grevlex'");
        MonomialOrder o = order == "lex" ? MonomialOrder::lex(R->arity())
                                         : MonomialOrder::grevlex(R->arity());
        return print_all(buchberger(parse_all(gens, R), o, false).basis);
      },
      py::arg("vars"), py::arg("generators"), py::arg("order") = "grevlex", py::arg("p") = py::none());
  m.def(
      "ideal_membership",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
         const std::string& f, std::optional<std::uint32_t> p)
          -> std::optional<std::vector<std::string>> {
        auto R = make_ring(vars, p);
        auto combo = ideal_membership(parse_polynomial(f, R), parse_all(gens, R));
        if (!combo) return std::nullopt;
        return print_all(*combo);
      },
      py::arg("vars"), py::arg("generators"), py::arg("f"), py::arg("p") = py::none(),
      "Cofactors c with f = sum c_k g_k, or None.");
  m.def(
      "radical_membership",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
         const std::string& f, std::optional<std::uint32_t> p)
          -> std::optional<std::pair<std::uint32_t, std::vector<std::string>>> {
        auto R = make_ring(vars, p);
        auto w = radical_membership(parse_polynomial(f, R), parse_all(gens, R));
        if (!w) return std::nullopt;
        return std::make_pair(w->exponent, print_all(w->cofactors));
      },
      py::arg("vars"), py::arg("generators"), py::arg("f"), py::arg("p") = py::none(),
      "(m, cofactors) with f^m = sum c_k g_k, or None.");
  m.def(
      "minimal_primes",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
        auto R = make_ring(vars, std::nullopt);
        std::vector<std::vector<std::string>> out;
        for (const auto& q : monomial_minimal_primes(MonomialIdeal::from(R, parse_all(gens, R)))) {
          out.push_back(q.names());
        }
        return out;
      },
      py::arg("vars"), py::arg("generators"), "Minimal primes of a monomial ideal as variable lists.");
}
