#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammakit/enumerator.hpp"
#include "gammakit/gamma_semigroup.hpp"

namespace gammakit {

  using ordered_json = nlohmann::ordered_json;

  /// An instance file before validation: labels plus a raw table that may
  /// still violate the Γ-semigroup axioms.
  ///
  ///   {"elements": ["a", "b"],
  ///    "gamma":    ["g"],
  ///    "table":    {"g": [[0, 0], [1, 1]]}}
  ///
  /// table[g][i][j] is the index of element_i g element_j.
  struct RawInstance {
    Labels                   labels;
    std::vector<std::size_t> table;  // (a, γ, b) order

    std::size_t size() const noexcept {
      return labels.elements.size();
    }
    std::size_t gamma_count() const noexcept {
      return labels.gammas.size();
    }
  };

  /// Structural decoding. Throws Error(parse_error) on malformed JSON or a
  /// document that does not have the instance shape, and
  /// Error(carrier_too_large) past the carrier limit.
  RawInstance parse_instance(std::string const& text);
  RawInstance instance_from_json(ordered_json const& doc);

  // Reads a file; a missing or unreadable file is reported as parse_error.
  RawInstance load_instance_file(std::string const& path);

  ValidationResult validate(RawInstance const& raw);

  ordered_json instance_to_json(GammaSemigroup const& s);

  /// One line of the record stream: {"instance", "flags", "canonical_key"}.
  /// canonical_key is lowercase hex, or null when out of range.
  ordered_json record_to_json(InstanceRecord const& record);

  /// 64, lowered by the GAMMAKIT_MAX_N environment variable when it holds a
  /// smaller positive integer.
  std::size_t carrier_limit();

}  // namespace gammakit
