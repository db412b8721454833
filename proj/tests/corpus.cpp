#include "corpus.hpp"

#include "gammakit/enumerator.hpp"

namespace gammakit::corpus {

  std::vector<GammaSemigroup> exhaustive(std::size_t n, std::size_t k) {
    std::vector<GammaSemigroup> out;
    enumerate_instances(n, k, [&](GammaSemigroup const& s) { out.push_back(s); });
    return out;
  }

  std::vector<GammaSemigroup> small_exhaustive() {
    std::vector<GammaSemigroup> out;
    for (auto [n, k] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
      auto part = exhaustive(n, k);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<GammaSemigroup> random(std::size_t count, std::uint64_t first_seed) {
    std::vector<GammaSemigroup> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const n = 2 + i % 3;
      std::size_t const k = 1 + (i / 3) % 3;
      out.push_back(random_instance(n, k, first_seed + i));
    }
    return out;
  }

}  // namespace gammakit::corpus
