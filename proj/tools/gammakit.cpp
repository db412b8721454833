// gammakit: analyze finite Γ-semigroups and check the characterizations of
// intra-regular and left/right regular duo Γ-semigroups.

#include <iostream>

#include <CLI11.hpp>

#include "gammakit/commands.hpp"

int main(int argc, char** argv) {
  using namespace gammakit;

  CLI::App app{"Finite Γ-semigroup toolkit"};
  app.require_subcommand(1);

  std::string path;

  auto* validate = app.add_subcommand("validate", "Check the Γ-semigroup axioms");
  validate->add_option("path", path, "Instance file")->required();

  bool  analyze_json = false;
  auto* analyze
      = app.add_subcommand("analyze", "Principal ideals, filters and relations");
  analyze->add_option("path", path, "Instance file")->required();
  analyze->add_flag("--json", analyze_json, "Machine-readable output");

  cli::CheckOptions check_opts;
  int               theorem = 3;
  auto* check = app.add_subcommand("check", "Evaluate the seven conditions of a theorem");
  check->add_option("path", path, "Instance file")->required();
  check->add_option("--theorem", theorem, "3, 6 or 7")
      ->check(CLI::IsMember({3, 6, 7}));
  std::string mode = "exhaustive", simple = "two-sided";
  check->add_option("--mode", mode, "Decomposition search for condition (6)")
      ->check(CLI::IsMember({"exhaustive", "witness"}));
  check
      ->add_option("--simple",
                   simple,
                   "Notion of simple used by the intra-regularity conditions (5) and (6)")
      ->check(CLI::IsMember({"two-sided", "left-and-right"}));
  check->add_flag("--json", check_opts.json, "Machine-readable output");

  std::string quotient_out;
  auto* decompose = app.add_subcommand("decompose", "N-classes and the quotient M/N");
  decompose->add_option("path", path, "Instance file")->required();
  decompose->add_option("--out", quotient_out, "Write the quotient instance here");

  cli::EnumerateOptions enum_opts;
  std::uint64_t         sample = 0;
  std::string           filter, out_path;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive or sampled instances as a JSON record stream");
  enumerate->add_option("--m", enum_opts.n, "Carrier size")->required();
  enumerate->add_option("--gamma", enum_opts.k, "Number of gammas")->required();
  auto* sample_opt = enumerate->add_option("--sample", sample, "Random instances to draw");
  enumerate->add_option("--seed", enum_opts.seed, "First seed in sample mode");
  auto* filter_opt = enumerate->add_option("--filter", filter, "Keep instances with this flag");
  auto* out_opt = enumerate->add_option("--out", out_path, "Record stream file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const status = app.exit(e);
    return status == 0 ? 0 : cli::usage;
  }

  if (*validate) {
    return cli::cmd_validate(path, std::cout, std::cerr);
  }
  if (*analyze) {
    return cli::cmd_analyze(path, analyze_json, std::cout, std::cerr);
  }
  if (*check) {
    check_opts.theorem = static_cast<Theorem>(theorem);
    check_opts.mode    = mode == "witness" ? DecompositionMode::witness
                                           : DecompositionMode::exhaustive;
    check_opts.simplicity = simple == "left-and-right"
                                ? Simplicity::left_and_right
                                : Simplicity::two_sided;
    return cli::cmd_check(path, check_opts, std::cout, std::cerr);
  }
  if (*decompose) {
    std::optional<std::string> out;
    if (!quotient_out.empty()) {
      out = quotient_out;
    }
    return cli::cmd_decompose(path, out, std::cout, std::cerr);
  }
  if (*sample_opt) {
    enum_opts.sample = sample;
  }
  if (*filter_opt) {
    enum_opts.filter = filter;
  }
  if (*out_opt) {
    enum_opts.out_path = out_path;
  }
  return cli::cmd_enumerate(enum_opts, std::cout, std::cerr);
}
