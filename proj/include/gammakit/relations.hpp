#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gammakit/element_set.hpp"
#include "gammakit/gamma_semigroup.hpp"
#include "gammakit/ideals.hpp"

namespace gammakit {

  /// An equivalence relation on {0, ..., n-1}, stored as one class id per
  /// element. Ids are canonical: they are assigned in order of first
  /// occurrence, so class 0 contains element 0 and classes are numbered by
  /// their least member. Two partitions are equal iff their arrays are equal.
  class Partition {
   public:
    Partition() = default;

    // Any labelling; it is canonicalised.
    explicit Partition(std::span<std::size_t const> labels);

    static Partition identity(std::size_t n);
    static Partition single_class(std::size_t n);
    static Partition from_classes(std::size_t                    n,
                                  std::span<ElementSet const>    classes);

    std::size_t size() const noexcept {
      return _ids.size();
    }

    std::size_t class_count() const noexcept {
      return _count;
    }

    std::size_t operator[](std::size_t x) const {
      return _ids[x];
    }

    std::span<std::size_t const> ids() const noexcept {
      return _ids;
    }

    // The class containing x.
    ElementSet class_of(std::size_t x) const;

    // All classes, ordered by least member.
    std::vector<ElementSet> classes() const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t> _ids;
    std::size_t              _count = 0;
  };

  /// Relation inclusion: p(a) = p(b) implies q(a) = q(b).
  bool refines(Partition const& p, Partition const& q);

  /// a ~ b iff assign(a) = assign(b).
  Partition relation_from_map(GammaSemigroup const&                      s,
                              std::function<ElementSet(std::size_t)> const& assign);

  // L, R or I: elements generating the same principal ideal of that side.
  Partition ideal_relation(GammaSemigroup const& s, Side side);

  // N: elements generating the same filter.
  Partition filter_relation(GammaSemigroup const& s);

  /// Side::left checks compatibility with left multiplication cγ-, right
  /// with -γc, two_sided both. Throws Error(size_mismatch).
  bool is_congruence(GammaSemigroup const& s, Partition const& p, Side side);

  /// A two-sided congruence with (aγb, bγa) and (aγa, a) in the relation.
  bool is_semilattice_congruence(GammaSemigroup const& s, Partition const& p);

  /// M/σ with (a)σ γ (b)σ = (aγb)σ. Classes keep the partition's numbering
  /// and are labelled by their members. Throws Error(not_a_congruence).
  GammaSemigroup quotient(GammaSemigroup const& s, Partition const& p);

  inline constexpr std::size_t max_congruence_enumeration_size = 8;

  /// Every semilattice congruence, in restricted-growth-string order.
  /// Throws Error(carrier_too_large) beyond 8 elements.
  std::vector<Partition>
  enumerate_semilattice_congruences(GammaSemigroup const& s);

}  // namespace gammakit
