#include "gammakit/gamma_semigroup.hpp"

#include <cassert>
#include <sstream>

namespace gammakit {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::empty_carrier:
        return "EmptyCarrier";
      case ErrorKind::empty_gamma:
        return "EmptyGamma";
      case ErrorKind::empty_operand:
        return "EmptyOperand";
      case ErrorKind::empty_subset:
        return "EmptySubset";
      case ErrorKind::not_closed:
        return "NotClosed";
      case ErrorKind::size_mismatch:
        return "SizeMismatch";
      case ErrorKind::not_a_congruence:
        return "NotACongruence";
      case ErrorKind::carrier_too_large:
        return "CarrierTooLarge";
      case ErrorKind::search_space_too_large:
        return "SearchSpaceTooLarge";
      case ErrorKind::search_exhausted:
        return "SearchExhausted";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

  Labels default_labels(std::size_t n, std::size_t k) {
    Labels labels;
    labels.elements.reserve(n);
    labels.gammas.reserve(k);
    for (std::size_t i = 0; i < n; ++i) {
      labels.elements.push_back(std::to_string(i));
    }
    for (std::size_t g = 0; g < k; ++g) {
      labels.gammas.push_back("g" + std::to_string(g));
    }
    return labels;
  }

  namespace {

    void check_labels(Labels const& labels, std::size_t n, std::size_t k) {
      if (labels.elements.size() != n || labels.gammas.size() != k) {
        throw Error(ErrorKind::size_mismatch,
                    "label lists do not match the carrier and gamma sizes");
      }
    }

    // Collects every violated quintuple. Entries must all be in range.
    template <typename Table>
    void collect_associativity_issues(Table const&                  at,
                                      std::size_t                   n,
                                      std::size_t                   k,
                                      std::vector<ValidationIssue>& out) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t g1 = 0; g1 < k; ++g1) {
          for (std::size_t b = 0; b < n; ++b) {
            auto const ab = at(a, g1, b);
            for (std::size_t g2 = 0; g2 < k; ++g2) {
              for (std::size_t c = 0; c < n; ++c) {
                auto const lhs = at(ab, g2, c);
                auto const rhs = at(a, g1, at(b, g2, c));
                if (lhs != rhs) {
                  out.push_back({ErrorKind::not_associative,
                                 a, g1, b, g2, c, lhs, rhs});
                }
              }
            }
          }
        }
      }
    }

  }  // namespace

  std::string ValidationIssue::describe(Labels const& labels) const {
    std::ostringstream os;
    auto el = [&](std::size_t i) -> std::string {
      return i < labels.elements.size() ? labels.elements[i]
                                        : std::to_string(i);
    };
    auto gm = [&](std::size_t i) -> std::string {
      return i < labels.gammas.size() ? labels.gammas[i] : std::to_string(i);
    };
    switch (kind) {
      case ErrorKind::index_out_of_range:
        os << "IndexOutOfRange: entry (" << el(a) << ',' << gm(g1) << ','
           << el(b) << ") = " << lhs << " is not an element index";
        break;
      case ErrorKind::not_associative:
        os << "NotAssociative: (" << el(a) << ',' << gm(g1) << ',' << el(b)
           << ',' << gm(g2) << ',' << el(c) << "): (" << el(a) << gm(g1)
           << el(b) << ')' << gm(g2) << el(c) << " = " << el(lhs) << " but "
           << el(a) << gm(g1) << '(' << el(b) << gm(g2) << el(c)
           << ") = " << el(rhs);
        break;
      default:
        os << to_string(kind);
        break;
    }
    return os.str();
  }

  ValidationResult validate(std::vector<std::size_t> const& table,
                            std::size_t                     n,
                            std::size_t                     k,
                            std::optional<Labels>           labels) {
    ValidationResult result;
    if (n == 0) {
      result.issues.push_back({ErrorKind::empty_carrier});
    }
    if (k == 0) {
      result.issues.push_back({ErrorKind::empty_gamma});
    }
    if (!result.issues.empty()) {
      return result;
    }
    if (n > max_carrier_size) {
      throw Error(ErrorKind::carrier_too_large,
                  "carrier size " + std::to_string(n) + " exceeds "
                      + std::to_string(max_carrier_size));
    }
    if (k > max_carrier_size) {
      throw Error(ErrorKind::carrier_too_large,
                  "gamma size " + std::to_string(k) + " exceeds "
                      + std::to_string(max_carrier_size));
    }
    if (table.size() != n * k * n) {
      throw Error(ErrorKind::size_mismatch,
                  "table has " + std::to_string(table.size())
                      + " entries, expected " + std::to_string(n * k * n));
    }
    if (labels) {
      check_labels(*labels, n, k);
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const v = table[(a * k + g) * n + b];
          if (v >= n) {
            result.issues.push_back(
                {ErrorKind::index_out_of_range, a, g, b, 0, 0, v, 0});
          }
        }
      }
    }
    if (!result.issues.empty()) {
      return result;
    }

    auto at = [&](std::size_t a, std::size_t g, std::size_t b) {
      return table[(a * k + g) * n + b];
    };
    collect_associativity_issues(at, n, k, result.issues);
    if (!result.issues.empty()) {
      return result;
    }

    std::vector<element_index> compact(table.begin(), table.end());
    result.semigroup = GammaSemigroup(
        n, k, std::move(compact), labels ? *labels : default_labels(n, k));
    return result;
  }

  GammaSemigroup detail::make_unchecked(std::size_t                n,
                                        std::size_t                k,
                                        std::vector<element_index> table,
                                        Labels                     labels) {
    assert(table.size() == n * k * n);
#ifndef NDEBUG
    {
      std::vector<ValidationIssue> issues;
      auto at = [&](std::size_t a, std::size_t g, std::size_t b) {
        return std::size_t{table[(a * k + g) * n + b]};
      };
      collect_associativity_issues(at, n, k, issues);
      assert(issues.empty());
    }
#endif
    return GammaSemigroup(n, k, std::move(table), std::move(labels));
  }

  GammaSemigroup GammaSemigroup::make(std::size_t                     n,
                                      std::size_t                     k,
                                      std::vector<std::size_t> const& table,
                                      std::optional<Labels>           labels) {
    auto result = validate(table, n, k, std::move(labels));
    if (!result.ok()) {
      auto const& first = result.issues.front();
      throw Error(first.kind, first.describe(default_labels(n, k)));
    }
    return std::move(*result.semigroup);
  }

  ElementSet product(GammaSemigroup const& s,
                     ElementSet            lhs,
                     GammaSet              gammas,
                     ElementSet            rhs) {
    if (lhs.empty() || gammas.empty() || rhs.empty()) {
      throw Error(ErrorKind::empty_operand, "set product of an empty operand");
    }
    ElementSet out;
    for (auto a : lhs) {
      for (auto g : gammas) {
        for (auto b : rhs) {
          out.insert(s.at(a, g, b));
        }
      }
    }
    return out;
  }

  ElementSet product(GammaSemigroup const& s, ElementSet lhs, ElementSet rhs) {
    return product(s, lhs, s.gammas(), rhs);
  }

  GammaSemigroup opposite(GammaSemigroup const& s) {
    auto const                 n = s.size();
    auto const                 k = s.gamma_count();
    std::vector<element_index> table(n * k * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t b = 0; b < n; ++b) {
          table[(a * k + g) * n + b] = s.at(b, g, a);
        }
      }
    }
    return detail::make_unchecked(n, k, std::move(table), s.labels());
  }

  Restriction restrict(GammaSemigroup const& s, ElementSet subset) {
    if (subset.empty()) {
      throw Error(ErrorKind::empty_subset, "cannot restrict to the empty set");
    }
    if (!subset.is_subset_of(s.elements())) {
      throw Error(ErrorKind::index_out_of_range,
                  "subset " + to_string(subset) + " is not inside the carrier");
    }
    std::vector<element_index> to_parent;
    std::vector<element_index> to_child(s.size(), 0);
    for (auto x : subset) {
      to_child[x] = static_cast<element_index>(to_parent.size());
      to_parent.push_back(static_cast<element_index>(x));
    }
    auto const m = to_parent.size();
    auto const k = s.gamma_count();

    std::vector<element_index> table(m * k * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t j = 0; j < m; ++j) {
          auto const v = s.at(to_parent[i], g, to_parent[j]);
          if (!subset.contains(v)) {
            auto const& lb = s.labels();
            throw Error(ErrorKind::not_closed,
                        "subset " + to_string(subset) + " is not closed: "
                            + lb.elements[to_parent[i]] + lb.gammas[g]
                            + lb.elements[to_parent[j]] + " = "
                            + lb.elements[v]);
          }
          table[(i * k + g) * m + j] = to_child[v];
        }
      }
    }
    Labels labels;
    for (auto p : to_parent) {
      labels.elements.push_back(s.labels().elements[p]);
    }
    labels.gammas = s.labels().gammas;
    return {detail::make_unchecked(m, k, std::move(table), std::move(labels)),
            std::move(to_parent)};
  }

  GammaSemigroup relabel(GammaSemigroup const&        s,
                         std::span<std::size_t const> element_perm,
                         std::span<std::size_t const> gamma_perm) {
    auto const n = s.size();
    auto const k = s.gamma_count();
    if (element_perm.size() != n || gamma_perm.size() != k) {
      throw Error(ErrorKind::size_mismatch, "permutation has the wrong size");
    }
    auto is_permutation = [](std::span<std::size_t const> p) {
      std::uint64_t seen = 0;
      for (auto v : p) {
        if (v >= p.size() || ((seen >> v) & 1U)) {
          return false;
        }
        seen |= std::uint64_t{1} << v;
      }
      return true;
    };
    if (!is_permutation(element_perm) || !is_permutation(gamma_perm)) {
      throw Error(ErrorKind::index_out_of_range, "not a permutation");
    }
    std::vector<element_index> table(n * k * n);
    Labels                     labels{std::vector<std::string>(n),
                                      std::vector<std::string>(k)};
    for (std::size_t a = 0; a < n; ++a) {
      labels.elements[element_perm[a]] = s.labels().elements[a];
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t b = 0; b < n; ++b) {
          table[(element_perm[a] * k + gamma_perm[g]) * n + element_perm[b]]
              = static_cast<element_index>(element_perm[s.at(a, g, b)]);
        }
      }
    }
    for (std::size_t g = 0; g < k; ++g) {
      labels.gammas[gamma_perm[g]] = s.labels().gammas[g];
    }
    return detail::make_unchecked(n, k, std::move(table), std::move(labels));
  }

}  // namespace gammakit
