#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gammakit/element_set.hpp"
#include "gammakit/gamma_semigroup.hpp"
#include "gammakit/ideals.hpp"

namespace gammakit {

  /// x ∈ MΓ(xγx)ΓM for every x and every γ.
  bool is_intra_regular(GammaSemigroup const& s);

  /// x ∈ MΓ(xγx) for every x and every γ.
  bool is_left_regular(GammaSemigroup const& s);

  /// x ∈ (xγx)ΓM for every x and every γ.
  bool is_right_regular(GammaSemigroup const& s);

  /// Side::left: xΓM ⊆ MΓx for every x. Side::right: MΓx ⊆ xΓM.
  bool duo_condition(GammaSemigroup const& s, Side side);

  enum class WitnessKind {
    // x, γ: the regularity membership fails for this pair.
    not_regular,
    // x: the duo inclusion fails at x.
    not_duo,
    // x, y: y lies in exactly one of N(x) and the set it is compared with.
    filter_mismatch,
    // a, b: related by exactly one of N and the compared relation.
    relation_mismatch,
    // ideal, x: x is in the ideal but its N-class is not contained in it.
    not_union_of_classes,
    // x: the N-class of x is not simple in the required sense.
    class_not_simple,
    // No semilattice congruence with simple classes was found.
    no_decomposition,
    // ideal, x, γ: xγx is in the ideal, x is not.
    not_semiprime,
    // ideal: a one-sided ideal that is not an ideal of the other side.
    not_two_sided,
  };

  std::string_view to_string(WitnessKind kind) noexcept;

  struct Witness {
    WitnessKind                kind;
    std::optional<std::size_t> element;
    std::optional<std::size_t> other;
    std::optional<std::size_t> gamma;
    std::optional<ElementSet>  subset;
    std::string                detail;
  };

  enum class DecompositionMode {
    // Search every semilattice congruence (n <= 8).
    exhaustive,
    // Only try σ = N.
    witness,
  };

  std::string_view to_string(DecompositionMode mode) noexcept;

  enum class Theorem {
    // Intra-regularity.
    intra_regular = 3,
    // Left regular and left duo.
    left_regular_duo = 6,
    // Right regular and right duo.
    right_regular_duo = 7,
  };

  /// The seven numbered conditions of one of the characterization theorems,
  /// each evaluated from its own definition. Witnesses are present exactly
  /// for the false flags.
  struct ConditionVector {
    Theorem                               theorem;
    std::array<bool, 7>                   flags{};
    std::array<std::optional<Witness>, 7> witnesses;
    DecompositionMode                     decomposition_mode;
    Simplicity                            simplicity;

    // 1-based, matching the numbering of the conditions.
    bool flag(std::size_t i) const {
      return flags.at(i - 1);
    }

    bool all_equal() const noexcept;
  };

  struct TheoremOptions {
    DecompositionMode decomposition = DecompositionMode::exhaustive;
    // Notion of "simple" used by conditions (5) and (6) of the
    // intra-regularity theorem. The one-sided theorems always use the
    // matching one-sided notion.
    Simplicity simplicity = Simplicity::two_sided;
  };

  /// Intra-regularity: (1) intra-regular, (2) N(x) = {y : x ∈ MΓyΓM},
  /// (3) N = I, (4) every ideal is a union of N-classes, (5) every N-class is
  /// simple, (6) M is a semilattice of simple semigroups, (7) every ideal is
  /// semiprime.
  ConditionVector theorem3_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options = {});

  /// The left-handed theorem: (1) left regular and left duo,
  /// (2) N(x) = {y : x ∈ MΓy}, (3) N = L, (4) every left ideal is a union of
  /// N-classes, (5) every N-class is left simple, (6) M is a semilattice of
  /// left simple semigroups, (7) every left ideal is semiprime and two-sided.
  ConditionVector theorem6_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options = {});

  /// Right-handed mirror of theorem6_conditions, evaluated directly.
  ConditionVector theorem7_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options = {});

  ConditionVector check_theorem(GammaSemigroup const& s,
                                Theorem               theorem,
                                TheoremOptions const& options = {});

  struct Implication {
    std::string_view name;
    bool             premise;
    bool             holds;
    std::string      detail;
  };

  struct RemarkReport {
    // left regular => intra-regular
    Implication left_regular_intra;
    // left duo => every left ideal is a right ideal
    Implication duo_left_ideals;
    // right regular => intra-regular
    Implication right_regular_intra;

    bool all_hold() const noexcept {
      return left_regular_intra.holds && duo_left_ideals.holds
             && right_regular_intra.holds;
    }
  };

  RemarkReport remark_implications(GammaSemigroup const& s);

}  // namespace gammakit
