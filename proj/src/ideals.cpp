#include "gammakit/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gammakit {

  std::string_view to_string(Side side) noexcept {
    switch (side) {
      case Side::left:
        return "left";
      case Side::right:
        return "right";
      case Side::two_sided:
        return "two-sided";
    }
    return "?";
  }

  std::string_view to_string(Simplicity mode) noexcept {
    switch (mode) {
      case Simplicity::left:
        return "left";
      case Simplicity::right:
        return "right";
      case Simplicity::left_and_right:
        return "left-and-right";
      case Simplicity::two_sided:
        return "two-sided";
    }
    return "?";
  }

  namespace {

    void require_nonempty(ElementSet subset) {
      if (subset.empty()) {
        throw Error(ErrorKind::empty_subset, "subset must be nonempty");
      }
    }

  }  // namespace

  bool is_ideal(GammaSemigroup const& s, ElementSet subset, Side side) {
    require_nonempty(subset);
    auto const m = s.elements();
    if (side != Side::right && !product(s, m, subset).is_subset_of(subset)) {
      return false;
    }
    if (side != Side::left && !product(s, subset, m).is_subset_of(subset)) {
      return false;
    }
    return true;
  }

  ElementSet principal_ideal(GammaSemigroup const& s, std::size_t x, Side side) {
    if (x >= s.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "element " + std::to_string(x) + " is not in the carrier");
    }
    auto const m   = s.elements();
    auto const a   = ElementSet::singleton(x);
    ElementSet out = a;
    switch (side) {
      case Side::left:
        out |= product(s, m, a);
        break;
      case Side::right:
        out |= product(s, a, m);
        break;
      case Side::two_sided:
        out |= product(s, m, a);
        out |= product(s, a, m);
        out |= product(s, product(s, m, a), m);
        break;
    }
    return out;
  }

  IdealFamily enumerate_ideals(GammaSemigroup const& s, Side side) {
    if (s.size() > max_ideal_enumeration_size) {
      throw Error(ErrorKind::carrier_too_large,
                  "ideal enumeration is limited to "
                      + std::to_string(max_ideal_enumeration_size)
                      + " elements");
    }
    std::vector<ElementSet> principal;
    for (std::size_t x = 0; x < s.size(); ++x) {
      principal.push_back(principal_ideal(s, x, side));
    }

    // Every union of principal ideals is reached by adding one principal
    // ideal at a time.
    std::set<std::uint64_t> seen;
    std::deque<ElementSet>  queue;
    for (auto p : principal) {
      if (seen.insert(p.bits()).second) {
        queue.push_back(p);
      }
    }
    while (!queue.empty()) {
      auto current = queue.front();
      queue.pop_front();
      for (auto p : principal) {
        auto next = current | p;
        if (seen.insert(next.bits()).second) {
          queue.push_back(next);
        }
      }
    }

    IdealFamily family{side, {}};
    family.members.reserve(seen.size());
    for (auto bits : seen) {
      family.members.push_back(ElementSet::from_bits(bits));
    }
    std::sort(family.members.begin(),
              family.members.end(),
              report_less<element_tag>);
    return family;
  }

  bool is_subsemigroup(GammaSemigroup const& s, ElementSet subset) {
    require_nonempty(subset);
    return product(s, subset, subset).is_subset_of(subset);
  }

  bool is_filter(GammaSemigroup const& s, ElementSet subset) {
    if (!is_subsemigroup(s, subset)) {
      return false;
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        for (std::size_t b = 0; b < s.size(); ++b) {
          if (subset.contains(s.at(a, g, b))
              && !(subset.contains(a) && subset.contains(b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {

    // factors[c] = { a, b : aγb = c for some γ }
    std::vector<ElementSet> factor_sets(GammaSemigroup const& s) {
      std::vector<ElementSet> factors(s.size());
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t g = 0; g < s.gamma_count(); ++g) {
          for (std::size_t b = 0; b < s.size(); ++b) {
            auto& f = factors[s.at(a, g, b)];
            f.insert(a);
            f.insert(b);
          }
        }
      }
      return factors;
    }

    ElementSet filter_by_passes(GammaSemigroup const&          s,
                                std::size_t                    x,
                                std::vector<ElementSet> const& factors) {
      auto filter = ElementSet::singleton(x);
      while (true) {
        auto const before = filter;
        filter |= product(s, filter, filter);
        for (auto c : filter) {
          filter |= factors[c];
        }
        if (filter == before) {
          return filter;
        }
      }
    }

    ElementSet filter_by_worklist(GammaSemigroup const&          s,
                                  std::size_t                    x,
                                  std::vector<ElementSet> const& factors) {
      ElementSet              filter;
      std::deque<std::size_t> pending{x};
      filter.insert(x);
      auto add = [&](std::size_t y) {
        if (!filter.contains(y)) {
          filter.insert(y);
          pending.push_back(y);
        }
      };
      while (!pending.empty()) {
        auto const u = pending.front();
        pending.pop_front();
        for (auto f : factors[u]) {
          add(f);
        }
        // Products pairing u with every member already present, u included.
        for (auto v : filter) {
          for (std::size_t g = 0; g < s.gamma_count(); ++g) {
            add(s.at(u, g, v));
            add(s.at(v, g, u));
          }
        }
      }
      return filter;
    }

  }  // namespace

  ElementSet filter_generated(GammaSemigroup const& s,
                              std::size_t           x,
                              FilterSchedule        schedule) {
    if (x >= s.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "element " + std::to_string(x) + " is not in the carrier");
    }
    auto const factors = factor_sets(s);
    return schedule == FilterSchedule::alternating_passes
               ? filter_by_passes(s, x, factors)
               : filter_by_worklist(s, x, factors);
  }

  bool is_semiprime(GammaSemigroup const& s, ElementSet subset) {
    require_nonempty(subset);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        if (subset.contains(s.at(a, g, a)) && !subset.contains(a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_simple_sub(GammaSemigroup const& s,
                     ElementSet            subset,
                     Simplicity            mode) {
    auto const sub  = restrict(s, subset).semigroup;
    auto const full = sub.elements();
    auto only_full = [&](Side side) {
      auto const family = enumerate_ideals(sub, side);
      return family.members.size() == 1 && family.members.front() == full;
    };
    switch (mode) {
      case Simplicity::left:
        return only_full(Side::left);
      case Simplicity::right:
        return only_full(Side::right);
      case Simplicity::left_and_right:
        return only_full(Side::left) && only_full(Side::right);
      case Simplicity::two_sided:
        return only_full(Side::two_sided);
    }
    return false;
  }

}  // namespace gammakit
