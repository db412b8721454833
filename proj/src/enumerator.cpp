#include "gammakit/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "gammakit/characterizations.hpp"
#include "gammakit/relations.hpp"

namespace gammakit {

  namespace {

    constexpr element_index unassigned = 0xFF;

    // Backtracking over a partially filled table. Cells are indexed
    // (a * k + γ) * n + b and filled in increasing order.
    class TableSearch {
     public:
      TableSearch(std::size_t n, std::size_t k)
          : _n(n), _k(k), _table(n * k * n, unassigned) {}

      std::size_t cell_count() const noexcept {
        return _table.size();
      }

      // Assigns `value` to cell `p` and reports whether every quintuple that
      // became fully determined is associative.
      bool assign(std::size_t p, element_index value) {
        _table[p] = value;
        return consistent(p);
      }

      void clear(std::size_t p) {
        _table[p] = unassigned;
      }

      GammaSemigroup materialize() const {
        return detail::make_unchecked(_n, _k, _table, default_labels(_n, _k));
      }

      // Depth-first search from cell `p` over the values produced by `order`.
      // `on_leaf` returns false to stop the search; so does `budget` running
      // out. Returns false iff the search was stopped.
      template <typename Order, typename Leaf>
      bool search(std::size_t p, Order& order, Leaf& on_leaf, std::uint64_t& budget) {
        if (p == _table.size()) {
          return on_leaf();
        }
        if (budget == 0) {
          return false;
        }
        --budget;
        for (auto v : order(p)) {
          if (assign(p, v) && !search(p + 1, order, on_leaf, budget)) {
            clear(p);
            return false;
          }
        }
        clear(p);
        return true;
      }

     private:
      element_index at(std::size_t a, std::size_t g, std::size_t b) const {
        return _table[(a * _k + g) * _n + b];
      }

      // False only if all four cells of the quintuple are assigned and the
      // two regroupings differ.
      bool quintuple_ok(std::size_t a,
                        std::size_t g1,
                        std::size_t b,
                        std::size_t g2,
                        std::size_t c) const {
        auto const ab = at(a, g1, b);
        auto const bc = at(b, g2, c);
        if (ab == unassigned || bc == unassigned) {
          return true;
        }
        auto const lhs = at(ab, g2, c);
        auto const rhs = at(a, g1, bc);
        return lhs == unassigned || rhs == unassigned || lhs == rhs;
      }

      // Every quintuple in which cell p is one of the four cells read:
      // a g1 b, b g2 c, (a g1 b) g2 c, a g1 (b g2 c).
      bool consistent(std::size_t p) const {
        auto const y = p % _n;
        auto const g = (p / _n) % _k;
        auto const x = p / (_n * _k);
        for (std::size_t h = 0; h < _k; ++h) {
          for (std::size_t c = 0; c < _n; ++c) {
            if (!quintuple_ok(x, g, y, h, c) || !quintuple_ok(c, h, x, g, y)) {
              return false;
            }
          }
        }
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t h = 0; h < _k; ++h) {
            for (std::size_t b = 0; b < _n; ++b) {
              auto const v = at(a, h, b);
              // p read as (a h b) g y
              if (v == x && !quintuple_ok(a, h, b, g, y)) {
                return false;
              }
              // p read as x g (a h b)
              if (v == y && !quintuple_ok(x, g, a, h, b)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::size_t                _n;
      std::size_t                _k;
      std::vector<element_index> _table;
    };

    void require_exhaustive_bounds(std::size_t n, std::size_t k) {
      if (n == 0 || k == 0) {
        throw Error(n == 0 ? ErrorKind::empty_carrier : ErrorKind::empty_gamma,
                    "n and k must be at least 1");
      }
      if (n > max_exhaustive_size || k > max_exhaustive_gammas) {
        throw Error(ErrorKind::search_space_too_large,
                    "exhaustive enumeration is limited to n <= "
                        + std::to_string(max_exhaustive_size) + ", k <= "
                        + std::to_string(max_exhaustive_gammas));
      }
    }

    // Enumerates every completion of a search whose first cell holds
    // `first`.
    std::uint64_t enumerate_from(std::size_t            n,
                                 std::size_t            k,
                                 element_index          first,
                                 InstanceVisitor const& visitor) {
      TableSearch                search(n, k);
      std::vector<element_index> all(n);
      std::iota(all.begin(), all.end(), element_index{0});
      std::uint64_t count  = 0;
      std::uint64_t budget = ~std::uint64_t{0};
      auto order           = [&](std::size_t) -> std::vector<element_index> const& {
        return all;
      };
      auto on_leaf = [&] {
        ++count;
        if (visitor) {
          visitor(search.materialize());
        }
        return true;
      };
      if (search.assign(0, first)) {
        search.search(1, order, on_leaf, budget);
      }
      return count;
    }

  }  // namespace

  std::uint64_t enumerate_instances(std::size_t            n,
                                    std::size_t            k,
                                    InstanceVisitor const& visitor) {
    require_exhaustive_bounds(n, k);
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      total += enumerate_from(n, k, static_cast<element_index>(v), visitor);
    }
    return total;
  }

  std::uint64_t enumerate_instances_parallel(std::size_t            n,
                                             std::size_t            k,
                                             InstanceVisitor const& visitor,
                                             std::size_t            threads) {
    require_exhaustive_bounds(n, k);
    threads = std::clamp<std::size_t>(threads, 1, n);
    std::atomic<std::size_t>   next{0};
    std::atomic<std::uint64_t> total{0};
    {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
          for (auto v = next++; v < n; v = next++) {
            total += enumerate_from(n, k, static_cast<element_index>(v), visitor);
          }
        });
      }
    }
    return total;
  }

  GammaSemigroup random_instance(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0) {
      throw Error(n == 0 ? ErrorKind::empty_carrier : ErrorKind::empty_gamma,
                  "n and k must be at least 1");
    }
    if (n > max_carrier_size || k > max_carrier_size) {
      throw Error(ErrorKind::carrier_too_large, "instance too large");
    }
    // Restarts use a fresh value order; the last attempt has no budget, and
    // always succeeds because constant tables are associative.
    constexpr std::size_t   attempts = 64;
    constexpr std::uint64_t budget_per_attempt = 20000;

    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
      std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + attempt);
      TableSearch     search(n, k);
      std::vector<std::vector<element_index>> orders(search.cell_count());
      for (auto& o : orders) {
        o.resize(n);
        std::iota(o.begin(), o.end(), element_index{0});
        // Fisher-Yates on the raw engine output, so the order does not
        // depend on the standard library's distributions.
        for (std::size_t i = n; i > 1; --i) {
          std::swap(o[i - 1], o[rng() % i]);
        }
      }
      std::optional<GammaSemigroup> found;
      auto order = [&](std::size_t p) -> std::vector<element_index> const& {
        return orders[p];
      };
      auto on_leaf = [&] {
        found = search.materialize();
        return false;
      };
      std::uint64_t budget = attempt + 1 == attempts ? ~std::uint64_t{0}
                                                     : budget_per_attempt;
      search.search(0, order, on_leaf, budget);
      if (found) {
        return std::move(*found);
      }
    }
    throw Error(ErrorKind::search_exhausted,
                "no associative table found");  // unreachable
  }

  std::string to_hex(std::string_view bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string           out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out += digits[c >> 4];
      out += digits[c & 0xF];
    }
    return out;
  }

  std::string canonical_key(GammaSemigroup const& s) {
    auto const n = s.size();
    auto const k = s.gamma_count();
    if (n > max_canonical_size || k > max_canonical_gammas) {
      throw Error(ErrorKind::carrier_too_large,
                  "canonical keys are limited to n <= "
                      + std::to_string(max_canonical_size) + ", k <= "
                      + std::to_string(max_canonical_gammas));
    }
    auto const  cells = n * k * n;
    std::string best(2 + cells, '\xff');
    best[0] = static_cast<char>(n);
    best[1] = static_cast<char>(k);
    std::string candidate = best;

    // inv_e[new] = old, inv_g[new] = old
    std::vector<std::size_t> inv_e(n), inv_g(k), fwd_e(n);
    std::iota(inv_e.begin(), inv_e.end(), 0);
    do {
      for (std::size_t i = 0; i < n; ++i) {
        fwd_e[inv_e[i]] = i;
      }
      std::iota(inv_g.begin(), inv_g.end(), 0);
      do {
        // Build the relabeled table in serialization order, abandoning it as
        // soon as it compares greater than the best so far.
        bool        smaller = false;
        std::size_t pos     = 2;
        bool        worse   = false;
        for (std::size_t a = 0; a < n && !worse; ++a) {
          for (std::size_t g = 0; g < k && !worse; ++g) {
            for (std::size_t b = 0; b < n; ++b, ++pos) {
              auto const v = static_cast<char>(
                  fwd_e[s.at(inv_e[a], inv_g[g], inv_e[b])]);
              candidate[pos] = v;
              if (!smaller) {
                auto const bv = static_cast<unsigned char>(best[pos]);
                auto const cv = static_cast<unsigned char>(v);
                if (cv < bv) {
                  smaller = true;
                } else if (cv > bv) {
                  worse = true;
                  break;
                }
              }
            }
          }
        }
        if (smaller) {
          best = candidate;
        }
      } while (std::next_permutation(inv_g.begin(), inv_g.end()));
    } while (std::next_permutation(inv_e.begin(), inv_e.end()));
    return best;
  }

  bool InstanceRecord::flag(std::string_view name) const {
    for (std::size_t i = 0; i < instance_flag_names.size(); ++i) {
      if (instance_flag_names[i] == name) {
        return flags[i];
      }
    }
    throw Error(ErrorKind::index_out_of_range,
                "unknown flag '" + std::string(name) + "'");
  }

  InstanceRecord make_record(GammaSemigroup const& s) {
    TheoremOptions options;
    options.decomposition = s.size() <= max_congruence_enumeration_size
                                ? DecompositionMode::exhaustive
                                : DecompositionMode::witness;
    InstanceRecord record{s, {}, {}};
    record.flags = {
        is_intra_regular(s),
        is_left_regular(s),
        is_right_regular(s),
        duo_condition(s, Side::left),
        duo_condition(s, Side::right),
        theorem3_conditions(s, options).all_equal(),
        theorem6_conditions(s, options).all_equal(),
        theorem7_conditions(s, options).all_equal(),
    };
    if (s.size() <= max_canonical_size && s.gamma_count() <= max_canonical_gammas) {
      record.canonical_key = canonical_key(s);
    }
    return record;
  }

  Census census(std::size_t n, std::size_t k) {
    Census                                     result{n, k};
    std::map<std::string, std::array<bool, 8>> classes;
    result.tables = enumerate_instances(n, k, [&](GammaSemigroup const& s) {
      auto key = canonical_key(s);
      if (!classes.contains(key)) {
        classes.emplace(std::move(key), make_record(s).flags);
      }
    });
    result.classes = classes.size();
    for (auto const& [key, flags] : classes) {
      for (std::size_t i = 0; i < flags.size(); ++i) {
        result.classes_with_flag[i] += flags[i] ? 1 : 0;
      }
    }
    return result;
  }

}  // namespace gammakit
