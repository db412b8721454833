#include "gammakit/characterizations.hpp"

#include <algorithm>

#include "gammakit/relations.hpp"

namespace gammakit {

  std::string_view to_string(WitnessKind kind) noexcept {
    switch (kind) {
      case WitnessKind::not_regular:
        return "not-regular";
      case WitnessKind::not_duo:
        return "not-duo";
      case WitnessKind::filter_mismatch:
        return "filter-mismatch";
      case WitnessKind::relation_mismatch:
        return "relation-mismatch";
      case WitnessKind::not_union_of_classes:
        return "not-union-of-classes";
      case WitnessKind::class_not_simple:
        return "class-not-simple";
      case WitnessKind::no_decomposition:
        return "no-decomposition";
      case WitnessKind::not_semiprime:
        return "not-semiprime";
      case WitnessKind::not_two_sided:
        return "not-two-sided";
    }
    return "?";
  }

  std::string_view to_string(DecompositionMode mode) noexcept {
    return mode == DecompositionMode::exhaustive ? "exhaustive" : "witness";
  }

  bool ConditionVector::all_equal() const noexcept {
    return std::all_of(flags.begin(), flags.end(), [this](bool f) {
      return f == flags.front();
    });
  }

  namespace {

    enum class Regularity { intra, left, right };

    // The set the element must belong to for the given regularity notion.
    ElementSet regularity_set(GammaSemigroup const& s,
                              Regularity            kind,
                              std::size_t           x,
                              std::size_t           g) {
      auto const m  = s.elements();
      auto const sq = ElementSet::singleton(s.at(x, g, x));
      switch (kind) {
        case Regularity::intra:
          return product(s, product(s, m, sq), m);
        case Regularity::left:
          return product(s, m, sq);
        case Regularity::right:
          return product(s, sq, m);
      }
      return {};
    }

    std::optional<Witness> find_irregular(GammaSemigroup const& s,
                                          Regularity            kind) {
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t g = 0; g < s.gamma_count(); ++g) {
          if (!regularity_set(s, kind, x, g).contains(x)) {
            auto const& lb = s.labels();
            auto        sq = lb.elements[x] + lb.gammas[g] + lb.elements[x];
            std::string where
                = kind == Regularity::intra  ? "MΓ(" + sq + ")ΓM"
                  : kind == Regularity::left ? "MΓ(" + sq + ")"
                                             : "(" + sq + ")ΓM";
            return Witness{WitnessKind::not_regular,
                           x,
                           std::nullopt,
                           g,
                           std::nullopt,
                           lb.elements[x] + " is not in " + where};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Witness> find_not_duo(GammaSemigroup const& s, Side side) {
      auto const m = s.elements();
      for (std::size_t x = 0; x < s.size(); ++x) {
        auto const a     = ElementSet::singleton(x);
        auto const right = product(s, a, m);
        auto const left  = product(s, m, a);
        bool const ok    = side == Side::left ? right.is_subset_of(left)
                                              : left.is_subset_of(right);
        if (!ok) {
          auto const& e = s.labels().elements[x];
          return Witness{WitnessKind::not_duo,
                         x,
                         std::nullopt,
                         std::nullopt,
                         std::nullopt,
                         side == Side::left
                             ? e + "ΓM is not contained in MΓ" + e
                             : "MΓ" + e + " is not contained in " + e + "ΓM"};
        }
      }
      return std::nullopt;
    }

    std::string set_label(GammaSemigroup const& s, ElementSet set) {
      std::string out   = "{";
      bool        first = true;
      for (auto x : set) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += s.labels().elements[x];
      }
      return out + "}";
    }

    // Everything a theorem evaluation needs about N, computed once.
    struct FilterData {
      std::vector<ElementSet> filters;
      Partition               relation;
    };

    FilterData filter_data(GammaSemigroup const& s) {
      FilterData data;
      std::vector<std::size_t> keys;
      for (std::size_t x = 0; x < s.size(); ++x) {
        data.filters.push_back(filter_generated(s, x));
        keys.push_back(data.filters.back().bits());
      }
      data.relation = Partition(keys);
      return data;
    }

    // Condition (2): N(x) equals `expected(x)` for every x.
    template <typename Expected>
    std::optional<Witness> find_filter_mismatch(GammaSemigroup const& s,
                                                FilterData const&     nd,
                                                Expected const& expected,
                                                std::string_view description) {
      for (std::size_t x = 0; x < s.size(); ++x) {
        auto const want = expected(x);
        auto const have = nd.filters[x];
        if (want != have) {
          auto const diff = (want - have) | (have - want);
          auto const y    = diff.min();
          auto const& lb  = s.labels();
          return Witness{WitnessKind::filter_mismatch,
                         x,
                         y,
                         std::nullopt,
                         std::nullopt,
                         "N(" + lb.elements[x] + ") = " + set_label(s, have)
                             + " but {y : " + lb.elements[x] + " in "
                             + std::string(description) + "} = "
                             + set_label(s, want)};
        }
      }
      return std::nullopt;
    }

    std::optional<Witness> find_relation_mismatch(GammaSemigroup const& s,
                                                  Partition const&      n,
                                                  Partition const&      other,
                                                  std::string_view      name) {
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          if ((n[a] == n[b]) != (other[a] == other[b])) {
            auto const& lb = s.labels();
            return Witness{WitnessKind::relation_mismatch,
                           a,
                           b,
                           std::nullopt,
                           std::nullopt,
                           "(" + lb.elements[a] + "," + lb.elements[b] + ") is in "
                               + (n[a] == n[b] ? "N" : std::string(name))
                               + " but not in "
                               + (n[a] == n[b] ? std::string(name) : "N")};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Witness> find_not_union(GammaSemigroup const& s,
                                          IdealFamily const&    ideals,
                                          Partition const&      n) {
      for (auto ideal : ideals.members) {
        for (auto x : ideal) {
          if (!n.class_of(x).is_subset_of(ideal)) {
            return Witness{WitnessKind::not_union_of_classes,
                           x,
                           std::nullopt,
                           std::nullopt,
                           ideal,
                           std::string(to_string(ideals.side)) + " ideal "
                               + set_label(s, ideal) + " contains "
                               + s.labels().elements[x]
                               + " but not its N-class "
                               + set_label(s, n.class_of(x))};
          }
        }
      }
      return std::nullopt;
    }

    bool classes_simple(GammaSemigroup const& s,
                        Partition const&      p,
                        Simplicity            mode,
                        std::size_t*          failing = nullptr) {
      for (auto cls : p.classes()) {
        if (!is_simple_sub(s, cls, mode)) {
          if (failing != nullptr) {
            *failing = cls.min();
          }
          return false;
        }
      }
      return true;
    }

    std::optional<Witness> find_class_not_simple(GammaSemigroup const& s,
                                                 Partition const&      n,
                                                 Simplicity            mode) {
      std::size_t x = 0;
      if (classes_simple(s, n, mode, &x)) {
        return std::nullopt;
      }
      return Witness{WitnessKind::class_not_simple,
                     x,
                     std::nullopt,
                     std::nullopt,
                     n.class_of(x),
                     "N-class " + set_label(s, n.class_of(x)) + " is not "
                         + std::string(to_string(mode)) + " simple"};
    }

    std::optional<Witness> find_no_decomposition(GammaSemigroup const& s,
                                                 Partition const&      n,
                                                 Simplicity            mode,
                                                 DecompositionMode     dmode) {
      if (dmode == DecompositionMode::witness) {
        if (auto w = find_class_not_simple(s, n, mode)) {
          w->kind   = WitnessKind::no_decomposition;
          w->detail = "σ = N fails: " + w->detail;
          return w;
        }
        return std::nullopt;
      }
      auto const candidates = enumerate_semilattice_congruences(s);
      for (auto const& sigma : candidates) {
        if (classes_simple(s, sigma, mode)) {
          return std::nullopt;
        }
      }
      return Witness{WitnessKind::no_decomposition,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     "none of the " + std::to_string(candidates.size())
                         + " semilattice congruences has only "
                         + std::string(to_string(mode)) + " simple classes"};
    }

    std::optional<Witness> find_not_semiprime(GammaSemigroup const& s,
                                              IdealFamily const&    ideals) {
      for (auto ideal : ideals.members) {
        for (std::size_t a = 0; a < s.size(); ++a) {
          for (std::size_t g = 0; g < s.gamma_count(); ++g) {
            if (ideal.contains(s.at(a, g, a)) && !ideal.contains(a)) {
              auto const& lb = s.labels();
              return Witness{WitnessKind::not_semiprime,
                             a,
                             std::nullopt,
                             g,
                             ideal,
                             std::string(to_string(ideals.side)) + " ideal "
                                 + set_label(s, ideal) + " contains "
                                 + lb.elements[a] + lb.gammas[g]
                                 + lb.elements[a] + " but not "
                                 + lb.elements[a]};
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Witness> find_not_two_sided(GammaSemigroup const& s,
                                              IdealFamily const&    ideals) {
      for (auto ideal : ideals.members) {
        if (!is_ideal(s, ideal, Side::two_sided)) {
          return Witness{WitnessKind::not_two_sided,
                         std::nullopt,
                         std::nullopt,
                         std::nullopt,
                         ideal,
                         std::string(to_string(ideals.side)) + " ideal "
                             + set_label(s, ideal) + " is not two-sided"};
        }
      }
      return std::nullopt;
    }

    void require_decomposable_size(GammaSemigroup const& s,
                                   TheoremOptions const& options) {
      if (options.decomposition == DecompositionMode::exhaustive
          && s.size() > max_congruence_enumeration_size) {
        throw Error(ErrorKind::carrier_too_large,
                    "exhaustive decomposition search needs n <= "
                        + std::to_string(max_congruence_enumeration_size)
                        + "; use witness mode");
      }
    }

    void set(ConditionVector& v, std::size_t i, std::optional<Witness> w) {
      v.flags[i - 1]     = !w.has_value();
      v.witnesses[i - 1] = std::move(w);
    }

    ConditionVector one_sided_conditions(GammaSemigroup const& s,
                                         Side                  side,
                                         TheoremOptions const& options) {
      require_decomposable_size(s, options);
      bool const left       = side == Side::left;
      auto const simplicity = left ? Simplicity::left : Simplicity::right;

      ConditionVector v{left ? Theorem::left_regular_duo
                             : Theorem::right_regular_duo,
                        {},
                        {},
                        options.decomposition,
                        simplicity};

      auto const nd     = filter_data(s);
      auto const ideals = enumerate_ideals(s, side);
      auto const m      = s.elements();

      auto w1 = find_irregular(s, left ? Regularity::left : Regularity::right);
      if (!w1) {
        w1 = find_not_duo(s, side);
      }
      set(v, 1, std::move(w1));

      set(v,
          2,
          find_filter_mismatch(
              s,
              nd,
              [&](std::size_t x) {
                ElementSet out;
                for (std::size_t y = 0; y < s.size(); ++y) {
                  auto const ys = ElementSet::singleton(y);
                  if ((left ? product(s, m, ys) : product(s, ys, m))
                          .contains(x)) {
                    out.insert(y);
                  }
                }
                return out;
              },
              left ? "MΓy" : "yΓM"));

      set(v,
          3,
          find_relation_mismatch(
              s, nd.relation, ideal_relation(s, side), left ? "L" : "R"));
      set(v, 4, find_not_union(s, ideals, nd.relation));
      set(v, 5, find_class_not_simple(s, nd.relation, simplicity));
      set(v,
          6,
          find_no_decomposition(
              s, nd.relation, simplicity, options.decomposition));

      auto w7 = find_not_semiprime(s, ideals);
      if (!w7) {
        w7 = find_not_two_sided(s, ideals);
      }
      set(v, 7, std::move(w7));
      return v;
    }

  }  // namespace

  bool is_intra_regular(GammaSemigroup const& s) {
    return !find_irregular(s, Regularity::intra);
  }

  bool is_left_regular(GammaSemigroup const& s) {
    return !find_irregular(s, Regularity::left);
  }

  bool is_right_regular(GammaSemigroup const& s) {
    return !find_irregular(s, Regularity::right);
  }

  bool duo_condition(GammaSemigroup const& s, Side side) {
    if (side == Side::two_sided) {
      throw Error(ErrorKind::size_mismatch,
                  "the duo condition is one-sided");
    }
    return !find_not_duo(s, side);
  }

  ConditionVector theorem3_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options) {
    require_decomposable_size(s, options);
    ConditionVector v{Theorem::intra_regular,
                      {},
                      {},
                      options.decomposition,
                      options.simplicity};

    auto const nd     = filter_data(s);
    auto const ideals = enumerate_ideals(s, Side::two_sided);
    auto const m      = s.elements();

    set(v, 1, find_irregular(s, Regularity::intra));
    set(v,
        2,
        find_filter_mismatch(
            s,
            nd,
            [&](std::size_t x) {
              ElementSet out;
              for (std::size_t y = 0; y < s.size(); ++y) {
                auto const ys = ElementSet::singleton(y);
                if (product(s, product(s, m, ys), m).contains(x)) {
                  out.insert(y);
                }
              }
              return out;
            },
            "MΓyΓM"));
    set(v,
        3,
        find_relation_mismatch(
            s, nd.relation, ideal_relation(s, Side::two_sided), "I"));
    set(v, 4, find_not_union(s, ideals, nd.relation));
    set(v, 5, find_class_not_simple(s, nd.relation, options.simplicity));
    set(v,
        6,
        find_no_decomposition(
            s, nd.relation, options.simplicity, options.decomposition));
    set(v, 7, find_not_semiprime(s, ideals));
    return v;
  }

  ConditionVector theorem6_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options) {
    return one_sided_conditions(s, Side::left, options);
  }

  ConditionVector theorem7_conditions(GammaSemigroup const& s,
                                      TheoremOptions const& options) {
    return one_sided_conditions(s, Side::right, options);
  }

  ConditionVector check_theorem(GammaSemigroup const& s,
                                Theorem               theorem,
                                TheoremOptions const& options) {
    switch (theorem) {
      case Theorem::intra_regular:
        return theorem3_conditions(s, options);
      case Theorem::left_regular_duo:
        return theorem6_conditions(s, options);
      case Theorem::right_regular_duo:
        return theorem7_conditions(s, options);
    }
    throw Error(ErrorKind::index_out_of_range, "unknown theorem");
  }

  RemarkReport remark_implications(GammaSemigroup const& s) {
    RemarkReport report;
    bool const   intra = is_intra_regular(s);

    auto regular_implies_intra = [&](std::string_view name, bool premise) {
      Implication imp{name, premise, !premise || intra, {}};
      imp.detail = !premise ? "premise false"
                   : intra  ? "intra-regular"
                            : "regular but not intra-regular";
      return imp;
    };
    report.left_regular_intra
        = regular_implies_intra("left regular => intra-regular",
                                is_left_regular(s));
    report.right_regular_intra
        = regular_implies_intra("right regular => intra-regular",
                                is_right_regular(s));

    bool const duo = duo_condition(s, Side::left);
    Implication imp{"left duo => left ideals are right ideals", duo, true, {}};
    if (!duo) {
      imp.detail = "premise false";
    } else if (auto w = find_not_two_sided(s, enumerate_ideals(s, Side::left))) {
      imp.holds  = false;
      imp.detail = w->detail;
    } else {
      imp.detail = "every left ideal is a right ideal";
    }
    report.duo_left_ideals = std::move(imp);
    return report;
  }

}  // namespace gammakit
