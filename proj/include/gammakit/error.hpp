#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammakit {

  enum class ErrorKind {
    index_out_of_range,
    not_associative,
    empty_carrier,
    empty_gamma,
    empty_operand,
    empty_subset,
    not_closed,
    size_mismatch,
    not_a_congruence,
    carrier_too_large,
    search_space_too_large,
    search_exhausted,
    parse_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so that
  // callers (the CLI in particular) can map it to an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace gammakit
