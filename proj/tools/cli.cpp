#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace krullcert;
using namespace krullcert::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certificates for Krull dimension: collapse identities, prime chains, "
               "pseudo-singularity witnesses"};
  app.require_subcommand(1);

  Options opts;
  std::string format = "json";
  app.add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();
  app.add_flag("-q,--quiet", opts.quiet, "Suppress the output document");

  std::string target, input;
  std::optional<std::string> presentation;
  std::size_t mutations = 0;

  auto* verify = app.add_subcommand("verify", "Verify a certificate, decision, chain or witness");
  verify->add_option("document", target, "Document to verify")->required();
  verify->add_option("presentation", presentation, "Presentation the document refers to");
  verify->add_option("--mutations", mutations,
                     "Also check that this many perturbed certificates are rejected");

  auto* decide = app.add_subcommand("decide", "Decide a monomial presentation (exit 0 chain, 10 certificate)");
  decide->add_option("presentation", input, "Presentation document")->required();

  auto* dim = app.add_subcommand("dim", "Krull dimension of a monomial quotient");
  dim->add_option("ideal", input, "Ideal or ring document")->required();

  auto* witness = app.add_subcommand("witness", "Build a pseudo-singularity witness");
  witness->require_subcommand(1);
  auto* from_dep = witness->add_subcommand("from-dependence", "From a relation Q(x_1..x_l) = 0");
  from_dep->add_option("input", input, "Dependence document")->required();
  auto* from_seq = witness->add_subcommand("from-sequence", "For n+1 elements of K[x_1..x_n]");
  from_seq->add_option("input", input, "Sequence document")->required();

  auto* descent = app.add_subcommand("descent", "Descend a certificate from K[alpha] to K");
  descent->add_option("extension", input, "Extension document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kParseError, std::cerr);
  }

  auto run = [&](auto&& body) { return guarded(body, opts, std::cout, std::cerr); };
  if (*verify) return run([&] { return cmd_verify(target, presentation, mutations, opts); });
  if (*decide) return run([&] { return cmd_decide(input); });
  if (*dim) return run([&] { return cmd_dim(input); });
  if (*from_dep) return run([&] { return cmd_witness_from_dependence(input); });
  if (*from_seq) return run([&] { return cmd_witness_from_sequence(input); });
  if (*descent) return run([&] { return cmd_descent(input); });
  return kParseError;
}
