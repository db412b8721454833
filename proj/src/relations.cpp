#include "gammakit/relations.hpp"

#include <map>

namespace gammakit {

  Partition::Partition(std::span<std::size_t const> labels)
      : _ids(labels.size()) {
    std::map<std::size_t, std::size_t> canonical;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = canonical.try_emplace(labels[i], canonical.size());
      _ids[i]             = it->second;
    }
    _count = canonical.size();
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = i;
    }
    return Partition(ids);
  }

  Partition Partition::single_class(std::size_t n) {
    std::vector<std::size_t> ids(n, 0);
    return Partition(ids);
  }

  Partition Partition::from_classes(std::size_t                 n,
                                    std::span<ElementSet const> classes) {
    std::vector<std::size_t> ids(n, n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto x : classes[c]) {
        if (x >= n || ids[x] != n) {
          throw Error(ErrorKind::size_mismatch,
                      "classes do not partition the carrier");
        }
        ids[x] = c;
      }
    }
    for (auto id : ids) {
      if (id == n) {
        throw Error(ErrorKind::size_mismatch,
                    "classes do not cover the carrier");
      }
    }
    return Partition(ids);
  }

  ElementSet Partition::class_of(std::size_t x) const {
    ElementSet out;
    for (std::size_t i = 0; i < _ids.size(); ++i) {
      if (_ids[i] == _ids[x]) {
        out.insert(i);
      }
    }
    return out;
  }

  std::vector<ElementSet> Partition::classes() const {
    std::vector<ElementSet> out(_count);
    for (std::size_t i = 0; i < _ids.size(); ++i) {
      out[_ids[i]].insert(i);
    }
    return out;
  }

  bool refines(Partition const& p, Partition const& q) {
    if (p.size() != q.size()) {
      throw Error(ErrorKind::size_mismatch, "partitions of different sizes");
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        if (p[a] == p[b] && q[a] != q[b]) {
          return false;
        }
      }
    }
    return true;
  }

  Partition
  relation_from_map(GammaSemigroup const&                         s,
                    std::function<ElementSet(std::size_t)> const& assign) {
    std::vector<std::size_t> labels(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      labels[x] = assign(x).bits();
    }
    return Partition(labels);
  }

  Partition ideal_relation(GammaSemigroup const& s, Side side) {
    return relation_from_map(
        s, [&](std::size_t x) { return principal_ideal(s, x, side); });
  }

  Partition filter_relation(GammaSemigroup const& s) {
    return relation_from_map(
        s, [&](std::size_t x) { return filter_generated(s, x); });
  }

  namespace {

    void require_size(GammaSemigroup const& s, Partition const& p) {
      if (p.size() != s.size()) {
        throw Error(ErrorKind::size_mismatch,
                    "partition has " + std::to_string(p.size())
                        + " elements, carrier has "
                        + std::to_string(s.size()));
      }
    }

    struct CongruenceWitness {
      std::size_t a, b, g, c;
      bool        on_left;
    };

    std::optional<CongruenceWitness>
    find_congruence_violation(GammaSemigroup const& s,
                              Partition const&      p,
                              Side                  side) {
      auto const n = s.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (p[a] != p[b]) {
            continue;
          }
          for (std::size_t g = 0; g < s.gamma_count(); ++g) {
            for (std::size_t c = 0; c < n; ++c) {
              if (side != Side::right && p[s.at(c, g, a)] != p[s.at(c, g, b)]) {
                return CongruenceWitness{a, b, g, c, true};
              }
              if (side != Side::left && p[s.at(a, g, c)] != p[s.at(b, g, c)]) {
                return CongruenceWitness{a, b, g, c, false};
              }
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  bool is_congruence(GammaSemigroup const& s, Partition const& p, Side side) {
    require_size(s, p);
    return !find_congruence_violation(s, p, side).has_value();
  }

  bool is_semilattice_congruence(GammaSemigroup const& s, Partition const& p) {
    require_size(s, p);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        if (p[s.at(a, g, a)] != p[a]) {
          return false;
        }
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          if (p[s.at(a, g, b)] != p[s.at(b, g, a)]) {
            return false;
          }
        }
      }
    }
    return is_congruence(s, p, Side::two_sided);
  }

  GammaSemigroup quotient(GammaSemigroup const& s, Partition const& p) {
    require_size(s, p);
    if (auto w = find_congruence_violation(s, p, Side::two_sided)) {
      auto const& lb = s.labels();
      std::string what = "not a congruence: " + lb.elements[w->a] + " ~ "
                         + lb.elements[w->b] + " but ";
      if (w->on_left) {
        what += lb.elements[w->c] + lb.gammas[w->g] + lb.elements[w->a]
                + " !~ " + lb.elements[w->c] + lb.gammas[w->g]
                + lb.elements[w->b];
      } else {
        what += lb.elements[w->a] + lb.gammas[w->g] + lb.elements[w->c]
                + " !~ " + lb.elements[w->b] + lb.gammas[w->g]
                + lb.elements[w->c];
      }
      throw Error(ErrorKind::not_a_congruence, what);
    }

    auto const classes = p.classes();
    auto const m       = classes.size();
    auto const k       = s.gamma_count();

    std::vector<element_index> table(m * k * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t j = 0; j < m; ++j) {
          table[(i * k + g) * m + j] = static_cast<element_index>(
              p[s.at(classes[i].min(), g, classes[j].min())]);
        }
      }
    }

    Labels labels;
    labels.gammas = s.labels().gammas;
    for (auto const& cls : classes) {
      std::string name = "{";
      bool        first = true;
      for (auto x : cls) {
        if (!first) {
          name += ',';
        }
        first = false;
        name += s.labels().elements[x];
      }
      labels.elements.push_back(name + "}");
    }
    return detail::make_unchecked(m, k, std::move(table), std::move(labels));
  }

  namespace {

    class SemilatticeCongruenceSearch {
     public:
      explicit SemilatticeCongruenceSearch(GammaSemigroup const& s)
          : _s(s), _ids(s.size(), 0) {}

      std::vector<Partition> run() {
        // Element 0 always opens class 0.
        _ids[0] = 0;
        if (consistent(0)) {
          extend(1, 1);
        }
        return std::move(_found);
      }

     private:
      // Restricted growth strings: element i takes a class id in
      // 0..used, where `used` ids are already taken by 0..i-1.
      void extend(std::size_t i, std::size_t used) {
        if (i == _s.size()) {
          Partition p(_ids);
          if (is_semilattice_congruence(_s, p)) {
            _found.push_back(std::move(p));
          }
          return;
        }
        for (std::size_t id = 0; id <= used; ++id) {
          _ids[i] = id;
          if (consistent(i)) {
            extend(i + 1, id == used ? used + 1 : used);
          }
        }
      }

      // (aγa, a) must lie in the relation once both ends are assigned. The
      // new element i can appear as a or as aγa.
      bool consistent(std::size_t i) const {
        for (std::size_t a = 0; a <= i; ++a) {
          for (std::size_t g = 0; g < _s.gamma_count(); ++g) {
            auto const sq = _s.at(a, g, a);
            if ((a == i || sq == i) && sq <= i && _ids[sq] != _ids[a]) {
              return false;
            }
          }
        }
        return true;
      }

      GammaSemigroup const&    _s;
      std::vector<std::size_t> _ids;
      std::vector<Partition>   _found;
    };

  }  // namespace

  std::vector<Partition>
  enumerate_semilattice_congruences(GammaSemigroup const& s) {
    if (s.size() > max_congruence_enumeration_size) {
      throw Error(ErrorKind::carrier_too_large,
                  "semilattice congruence enumeration is limited to "
                      + std::to_string(max_congruence_enumeration_size)
                      + " elements");
    }
    return SemilatticeCongruenceSearch(s).run();
  }

}  // namespace gammakit
