#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gammakit/element_set.hpp"
#include "gammakit/gamma_semigroup.hpp"

namespace gammakit {

  enum class Side { left, right, two_sided };

  std::string_view to_string(Side side) noexcept;

  // Largest carrier for which enumerate_ideals() will run.
  inline constexpr std::size_t max_ideal_enumeration_size = 20;

  /// All ideals of one side, deduplicated and sorted in report order (by size,
  /// then lexicographically by members). The full carrier is always present.
  struct IdealFamily {
    Side                    side;
    std::vector<ElementSet> members;
  };

  /// True iff MΓA ⊆ A (left), AΓM ⊆ A (right), or both. Throws on empty A.
  bool is_ideal(GammaSemigroup const& s, ElementSet subset, Side side);

  /// L(x) = x ∪ MΓx, R(x) = x ∪ xΓM, I(x) = x ∪ MΓx ∪ xΓM ∪ MΓxΓM.
  ElementSet principal_ideal(GammaSemigroup const& s, std::size_t x, Side side);

  /// Every ideal of `side`, obtained by closing the principal ideals under
  /// union. Throws Error(carrier_too_large) beyond 20 elements.
  IdealFamily enumerate_ideals(GammaSemigroup const& s, Side side);

  bool is_subsemigroup(GammaSemigroup const& s, ElementSet subset);

  /// A subsemigroup F such that aγb in F forces a, b in F.
  bool is_filter(GammaSemigroup const& s, ElementSet subset);

  enum class FilterSchedule {
    // Alternate full passes of the closure rules until nothing changes.
    alternating_passes,
    // Process newly added elements one at a time from a queue.
    element_worklist,
  };

  /// N(x): the least filter containing x, as the least fixpoint of
  ///   (R1) a, b in F           =>  aγb in F
  ///   (R2) aγb in F            =>  a, b in F.
  /// Both schedules reach the same set.
  ElementSet filter_generated(GammaSemigroup const& s,
                              std::size_t           x,
                              FilterSchedule schedule
                              = FilterSchedule::alternating_passes);

  /// aγa in A implies a in A, for all a in M and γ in Γ.
  bool is_semiprime(GammaSemigroup const& s, ElementSet subset);

  enum class Simplicity {
    left,
    right,
    // Both left simple and right simple.
    left_and_right,
    // No proper two-sided ideal.
    two_sided,
  };

  std::string_view to_string(Simplicity mode) noexcept;

  /// Whether the subsemigroup T, viewed as the Γ-semigroup (T, Γ, ·), is
  /// simple in the given sense. Throws Error(not_closed) if T is not a
  /// subsemigroup.
  bool is_simple_sub(GammaSemigroup const& s, ElementSet subset, Simplicity mode);

}  // namespace gammakit
