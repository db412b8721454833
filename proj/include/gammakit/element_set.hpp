#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace gammakit {

  using element_index = std::uint8_t;
  using gamma_index   = std::uint8_t;

  inline constexpr std::size_t max_carrier_size = 64;

  /// Fixed-width set over the indices 0..63, stored as a single machine word.
  ///
  /// The tag parameter keeps subsets of M and subsets of Γ from being mixed up;
  /// both share the same representation.
  template <typename Tag>
  class SmallSet {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = std::size_t;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = std::size_t;

      constexpr iterator() noexcept = default;
      constexpr explicit iterator(std::uint64_t rest) noexcept : _rest(rest) {}

      constexpr std::size_t operator*() const noexcept {
        return static_cast<std::size_t>(std::countr_zero(_rest));
      }

      constexpr iterator& operator++() noexcept {
        _rest &= _rest - 1;
        return *this;
      }

      constexpr iterator operator++(int) noexcept {
        iterator copy = *this;
        ++*this;
        return copy;
      }

      constexpr bool operator==(iterator const&) const noexcept = default;

     private:
      std::uint64_t _rest = 0;
    };

    constexpr SmallSet() noexcept = default;

    constexpr SmallSet(std::initializer_list<std::size_t> members) noexcept {
      for (auto m : members) {
        insert(m);
      }
    }

    static constexpr SmallSet from_bits(std::uint64_t bits) noexcept {
      SmallSet s;
      s._bits = bits;
      return s;
    }

    static constexpr SmallSet singleton(std::size_t i) noexcept {
      return from_bits(std::uint64_t{1} << i);
    }

    // The set {0, ..., n - 1}.
    static constexpr SmallSet full(std::size_t n) noexcept {
      return from_bits(n >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }

    constexpr bool contains(std::size_t i) const noexcept {
      return (_bits >> i) & 1U;
    }

    constexpr void insert(std::size_t i) noexcept {
      _bits |= std::uint64_t{1} << i;
    }

    constexpr void erase(std::size_t i) noexcept {
      _bits &= ~(std::uint64_t{1} << i);
    }

    constexpr bool empty() const noexcept {
      return _bits == 0;
    }

    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    constexpr std::size_t min() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(_bits));
    }

    constexpr bool is_subset_of(SmallSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    constexpr iterator begin() const noexcept {
      return iterator(_bits);
    }

    constexpr iterator end() const noexcept {
      return iterator(0);
    }

    std::vector<std::size_t> to_vector() const {
      return std::vector<std::size_t>(begin(), end());
    }

    constexpr SmallSet& operator|=(SmallSet other) noexcept {
      _bits |= other._bits;
      return *this;
    }

    constexpr SmallSet& operator&=(SmallSet other) noexcept {
      _bits &= other._bits;
      return *this;
    }

    friend constexpr SmallSet operator|(SmallSet a, SmallSet b) noexcept {
      return a |= b;
    }

    friend constexpr SmallSet operator&(SmallSet a, SmallSet b) noexcept {
      return a &= b;
    }

    friend constexpr SmallSet operator-(SmallSet a, SmallSet b) noexcept {
      return from_bits(a._bits & ~b._bits);
    }

    friend constexpr bool operator==(SmallSet, SmallSet) noexcept = default;

   private:
    std::uint64_t _bits = 0;
  };

  struct element_tag {};
  struct gamma_tag {};

  using ElementSet = SmallSet<element_tag>;
  using GammaSet   = SmallSet<gamma_tag>;

  // Report order: smaller sets first, ties broken by comparing the sorted
  // member lists lexicographically.
  template <typename Tag>
  bool report_less(SmallSet<Tag> a, SmallSet<Tag> b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
      if (*ia != *ib) {
        return *ia < *ib;
      }
    }
    return false;
  }

  // "{0,2,5}"
  template <typename Tag>
  std::string to_string(SmallSet<Tag> s) {
    std::string out = "{";
    bool        first = true;
    for (auto i : s) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(i);
    }
    out += '}';
    return out;
  }

}  // namespace gammakit
