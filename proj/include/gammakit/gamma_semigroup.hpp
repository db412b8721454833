#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammakit/element_set.hpp"
#include "gammakit/error.hpp"

namespace gammakit {

  struct Labels {
    std::vector<std::string> elements;
    std::vector<std::string> gammas;
  };

  Labels default_labels(std::size_t n, std::size_t k);

  struct ValidationResult;
  class GammaSemigroup;

  namespace detail {
    // For callers that construct tables associative by construction
    // (opposite, restriction, quotient, the enumerator). Debug builds still
    // re-validate.
    GammaSemigroup make_unchecked(std::size_t                n,
                                  std::size_t                k,
                                  std::vector<element_index> table,
                                  Labels                     labels);
  }  // namespace detail

  /// Checks a raw n*k*n table (flattened in (a, γ, b) order) and reports every
  /// problem found: each out-of-range entry, or if all entries are in range,
  /// every violated associativity quintuple (a, γ, b, δ, c).
  ///
  /// Throws Error(size_mismatch) if the table has the wrong length and
  /// Error(carrier_too_large) if n exceeds 64.
  ValidationResult validate(std::vector<std::size_t> const& table,
                            std::size_t                     n,
                            std::size_t                     k,
                            std::optional<Labels>           labels = {});

  /// A finite Γ-semigroup: a carrier {0, ..., n-1}, an operation set
  /// {0, ..., k-1}, and a total table (a, γ, b) -> aγb satisfying
  /// (aγb)δc = aγ(bδc) for all a, b, c and γ, δ.
  ///
  /// Instances can only be obtained through validate() or make(), so every
  /// GammaSemigroup in existence satisfies the axiom. Instances are immutable.
  class GammaSemigroup {
   public:
    // Throws Error describing the first problem if the table is not valid.
    static GammaSemigroup make(std::size_t                n,
                               std::size_t                k,
                               std::vector<std::size_t> const& table,
                               std::optional<Labels>      labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t gamma_count() const noexcept {
      return _k;
    }

    element_index at(std::size_t a, std::size_t g, std::size_t b) const {
      return _table[(a * _k + g) * _n + b];
    }

    ElementSet elements() const noexcept {
      return ElementSet::full(_n);
    }

    GammaSet gammas() const noexcept {
      return GammaSet::full(_k);
    }

    // Flattened in (a, γ, b) lexicographic order.
    std::span<element_index const> table() const noexcept {
      return _table;
    }

    Labels const& labels() const noexcept {
      return _labels;
    }

    // Tables are compared; labels are presentation only.
    friend bool operator==(GammaSemigroup const& x, GammaSemigroup const& y) {
      return x._n == y._n && x._k == y._k && x._table == y._table;
    }

   private:
    GammaSemigroup(std::size_t                n,
                   std::size_t                k,
                   std::vector<element_index> table,
                   Labels                     labels)
        : _n(n), _k(k), _table(std::move(table)), _labels(std::move(labels)) {}

    friend ValidationResult validate(std::vector<std::size_t> const&,
                                     std::size_t,
                                     std::size_t,
                                     std::optional<Labels>);
    friend GammaSemigroup detail::make_unchecked(std::size_t,
                                                 std::size_t,
                                                 std::vector<element_index>,
                                                 Labels);

    std::size_t                _n;
    std::size_t                _k;
    std::vector<element_index> _table;
    Labels                     _labels;
  };

  struct ValidationIssue {
    ErrorKind kind;
    // index_out_of_range: the cell (a, g1, b) holding `lhs`.
    // not_associative: (a g1 b) g2 c = lhs but a g1 (b g2 c) = rhs.
    std::size_t a = 0, g1 = 0, b = 0, g2 = 0, c = 0;
    std::size_t lhs = 0, rhs = 0;

    std::string describe(Labels const& labels) const;
  };

  struct ValidationResult {
    std::optional<GammaSemigroup> semigroup;
    std::vector<ValidationIssue>  issues;

    bool ok() const noexcept {
      return semigroup.has_value();
    }
  };

  /// The set product AΓ'B = { aγb : a in A, γ in Γ', b in B }.
  ElementSet product(GammaSemigroup const& s,
                     ElementSet            lhs,
                     GammaSet              gammas,
                     ElementSet            rhs);

  // Shorthand for product(s, lhs, all of Γ, rhs).
  ElementSet product(GammaSemigroup const& s, ElementSet lhs, ElementSet rhs);

  /// The opposite Γ-semigroup, with aγ°b = bγa.
  GammaSemigroup opposite(GammaSemigroup const& s);

  struct Restriction {
    GammaSemigroup             semigroup;
    std::vector<element_index> to_parent;
  };

  /// The sub-Γ-semigroup (T, Γ, ·) on a subsemigroup T, reindexed in
  /// increasing order of parent index.
  Restriction restrict(GammaSemigroup const& s, ElementSet subset);

  /// Relabels elements by `element_perm` (old index -> new index) and gammas
  /// by `gamma_perm`.
  GammaSemigroup relabel(GammaSemigroup const&           s,
                         std::span<std::size_t const>    element_perm,
                         std::span<std::size_t const>    gamma_perm);

}  // namespace gammakit
