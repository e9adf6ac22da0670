#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "krullcert/serialize.hpp"

namespace krullcert::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kUnsupported = 3,
  kInvalidInput = 4,
  kCertificateArm = 10,
};

struct Options {
  std::uint64_t seed = 0x6b72756c6cULL;
  bool quiet = false;
};

/// Exit code, the document written to standard output (if any) and, for
/// failed verification, the reason reported on standard error.
struct Outcome {
  int code = kOk;
  std::optional<Json> document;
  std::string failure;
};

/// `target` is a certificate, decision, chain or witness document;
/// `presentation` is required for everything but witnesses. With
/// mutations > 0, that many single-coefficient perturbations of a
/// certificate are also checked to be rejected.
Outcome cmd_verify(const std::string& target, const std::optional<std::string>& presentation,
                   std::size_t mutations, const Options& opts);
Outcome cmd_decide(const std::string& presentation);
/// An "ideal" document (ring + generators) or a "ring" document whose
/// relations are taken as the ideal.
Outcome cmd_dim(const std::string& input);
Outcome cmd_witness_from_dependence(const std::string& input);
Outcome cmd_witness_from_sequence(const std::string& input);
Outcome cmd_descent(const std::string& input);

/// Reads a file; "-" is standard input. Throws ParseError when unreadable.
std::string read_file(const std::string& path);

/// Writes {"error": kind, "message": ...} to `err` and returns `code`.
int report_error(const char* kind, const std::string& message, int code, std::ostream& err);

/// Runs a command, turning library errors into exit codes and a JSON error
/// object on `err`.
template <class F>
int guarded(F&& body, const Options& opts, std::ostream& out, std::ostream& err) {
  try {
    Outcome o = body();
    if (o.document && !opts.quiet) out << dump_document(*o.document);
    if (!o.failure.empty()) return report_error("verification_failed", o.failure, o.code, err);
    return o.code;
  } catch (const ParseError& e) {
    return report_error("parse_error", e.what(), kParseError, err);
  } catch (const ShapeError& e) {
    return report_error("shape_error", e.what(), kParseError, err);
  } catch (const RingMismatch& e) {
    return report_error("ring_mismatch", e.what(), kParseError, err);
  } catch (const UnsupportedClass& e) {
    return report_error("unsupported_class", e.what(), kUnsupported, err);
  } catch (const InvalidInput& e) {
    return report_error("invalid_input", e.what(), kInvalidInput, err);
  } catch (const Json::exception& e) {
    return report_error("parse_error", e.what(), kParseError, err);
  } catch (const Error& e) {
    return report_error("internal", e.what(), kVerificationFailed, err);
  }
}

}  // namespace krullcert::cli
