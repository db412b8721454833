#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/gamma_semigroup.hpp"

namespace gammakit {

  // Exhaustive search bounds.
  inline constexpr std::size_t max_exhaustive_size   = 3;
  inline constexpr std::size_t max_exhaustive_gammas = 2;

  using InstanceVisitor = std::function<void(GammaSemigroup const&)>;

  /// Visits every Γ-associative table on n elements and k gammas exactly
  /// once and returns how many there are. Cells are filled in (a, γ, b)
  /// order; a branch is cut as soon as some associativity quintuple with all
  /// of its cells assigned is violated.
  ///
  /// Throws Error(search_space_too_large) outside n <= 3, k <= 2.
  std::uint64_t enumerate_instances(std::size_t            n,
                                    std::size_t            k,
                                    InstanceVisitor const& visitor);

  /// As enumerate_instances, but the search tree is split on the value of
  /// the first cell and the parts are searched by `threads` workers. The
  /// visitor may be called concurrently.
  std::uint64_t enumerate_instances_parallel(std::size_t            n,
                                             std::size_t            k,
                                             InstanceVisitor const& visitor,
                                             std::size_t            threads);

  /// A valid instance found by backtracking with a seeded random value order
  /// in every cell. Deterministic for fixed (n, k, seed). The distribution is
  /// not uniform over valid tables.
  GammaSemigroup random_instance(std::size_t n, std::size_t k, std::uint64_t seed);

  inline constexpr std::size_t max_canonical_size   = 8;
  inline constexpr std::size_t max_canonical_gammas = 4;

  /// The lexicographically least serialized table over all relabelings of
  /// elements and gammas: bytes n, k, then the n*k*n entries. Two instances
  /// have the same key iff they are isomorphic. Anti-isomorphisms are not
  /// identified.
  std::string canonical_key(GammaSemigroup const& s);

  std::string to_hex(std::string_view bytes);

  // Names of the per-instance flags, in report order.
  inline constexpr std::array<std::string_view, 8> instance_flag_names{
      "intra-regular",
      "left-regular",
      "right-regular",
      "duo-left",
      "duo-right",
      "theorem3-all-equal",
      "theorem6-all-equal",
      "theorem7-all-equal",
  };

  struct InstanceRecord {
    GammaSemigroup      instance;
    std::array<bool, 8> flags{};
    // Empty when the instance exceeds the canonical_key bounds.
    std::string canonical_key;

    bool flag(std::string_view name) const;
  };

  /// Computes every flag. The theorem flags use exhaustive decomposition
  /// search up to 8 elements and the N witness beyond.
  InstanceRecord make_record(GammaSemigroup const& s);

  struct Census {
    std::size_t   n;
    std::size_t   k;
    std::uint64_t tables = 0;
    // Isomorphism classes.
    std::uint64_t classes = 0;
    // Classes on which each flag holds, indexed like instance_flag_names.
    std::array<std::uint64_t, 8> classes_with_flag{};
  };

  /// Exhaustive enumeration followed by deduplication by canonical_key.
  Census census(std::size_t n, std::size_t k);

}  // namespace gammakit
