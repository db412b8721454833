#include "gammakit/fixtures.hpp"

#include <algorithm>
#include <functional>

namespace gammakit::fixtures {

  namespace {

    GammaSemigroup
    from_rule(std::vector<std::string>                                  elements,
              std::vector<std::string>                                  gammas,
              std::function<std::size_t(std::size_t, std::size_t)> const& op) {
      auto const               n = elements.size();
      auto const               k = gammas.size();
      std::vector<std::size_t> table;
      table.reserve(n * k * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t g = 0; g < k; ++g) {
          for (std::size_t b = 0; b < n; ++b) {
            table.push_back(op(a, b));
          }
        }
      }
      return GammaSemigroup::make(
          n, k, table, Labels{std::move(elements), std::move(gammas)});
    }

  }  // namespace

  GammaSemigroup trivial() {
    return from_rule({"e"}, {"γ"}, [](auto, auto) { return 0; });
  }

  GammaSemigroup left_zero() {
    return from_rule({"a", "b"}, {"γ"}, [](auto x, auto) { return x; });
  }

  GammaSemigroup right_zero() {
    return from_rule({"a", "b"}, {"γ"}, [](auto, auto y) { return y; });
  }

  GammaSemigroup semilattice2() {
    return from_rule(
        {"0", "1"}, {"γ"}, [](auto x, auto y) { return std::min(x, y); });
  }

  GammaSemigroup null2() {
    return from_rule({"0", "a"}, {"γ"}, [](auto, auto) { return 0; });
  }

  GammaSemigroup semilattice2_two_gammas() {
    return from_rule(
        {"0", "1"}, {"γ", "δ"}, [](auto x, auto y) { return std::min(x, y); });
  }

  std::vector<Named> all() {
    std::vector<Named> out;
    out.push_back({"triv", trivial()});
    out.push_back({"lz", left_zero()});
    out.push_back({"rz", right_zero()});
    out.push_back({"sl2", semilattice2()});
    out.push_back({"null", null2()});
    out.push_back({"sl2g2", semilattice2_two_gammas()});
    return out;
  }

}  // namespace gammakit::fixtures
