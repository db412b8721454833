#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gammakit/characterizations.hpp"

// The gammakit command-line front end. Each command writes its report to
// `out`, diagnostics to `err`, and returns the process exit status.
namespace gammakit::cli {

  enum ExitStatus : int {
    ok = 0,
    // The instance is not a Γ-semigroup.
    invalid = 1,
    // Usage, I/O, parse or size-limit errors.
    usage = 2,
    // The conditions of a theorem disagree; this indicates a bug.
    equivalence_violation = 3,
  };

  int cmd_validate(std::string const& path, std::ostream& out, std::ostream& err);

  int cmd_analyze(std::string const& path,
                  bool               json,
                  std::ostream&      out,
                  std::ostream&      err);

  struct CheckOptions {
    Theorem           theorem    = Theorem::intra_regular;
    DecompositionMode mode       = DecompositionMode::exhaustive;
    Simplicity        simplicity = Simplicity::two_sided;
    bool              json       = false;
  };

  int cmd_check(std::string const&  path,
                CheckOptions const& options,
                std::ostream&       out,
                std::ostream&       err);

  // Writes the quotient M/N in instance format to `quotient_path` when given.
  int cmd_decompose(std::string const&                path,
                    std::optional<std::string> const& quotient_path,
                    std::ostream&                     out,
                    std::ostream&                     err);

  struct EnumerateOptions {
    std::size_t                  n = 1;
    std::size_t                  k = 1;
    std::optional<std::uint64_t> sample;
    std::uint64_t                seed = 0;
    std::optional<std::string>   filter;
    // Records go to stdout (and the census to `err`) when empty.
    std::optional<std::string> out_path;
  };

  int cmd_enumerate(EnumerateOptions const& options,
                    std::ostream&           out,
                    std::ostream&           err);

  // Exit status for a library error.
  int exit_status(Error const& e) noexcept;

}  // namespace gammakit::cli
