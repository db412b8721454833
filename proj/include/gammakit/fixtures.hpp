#pragma once

#include <string_view>
#include <vector>

#include "gammakit/gamma_semigroup.hpp"

// Small named instances used throughout the tests and documentation.
namespace gammakit::fixtures {

  // M = {e}, Γ = {γ}, eγe = e.
  GammaSemigroup trivial();
  // M = {a, b}, xγy = x.
  GammaSemigroup left_zero();
  // M = {a, b}, xγy = y.
  GammaSemigroup right_zero();
  // M = {0, 1}, xγy = min(x, y).
  GammaSemigroup semilattice2();
  // M = {0, a}, xγy = 0.
  GammaSemigroup null2();
  // M = {0, 1}, Γ = {γ, δ}, both operations min.
  GammaSemigroup semilattice2_two_gammas();

  struct Named {
    std::string_view name;
    GammaSemigroup   semigroup;
  };

  // All of the above, keyed by their short names (triv, lz, rz, sl2, null,
  // sl2g2).
  std::vector<Named> all();

}  // namespace gammakit::fixtures
