#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "gammakit/fixtures.hpp"
#include "gammakit/relations.hpp"
#include "oracles.hpp"

using namespace gammakit;

namespace {

  Partition from_ids(std::vector<std::size_t> ids) {
    return Partition(std::span<std::size_t const>(ids));
  }

  void check_quotient_is_semilattice(GammaSemigroup const& q) {
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t g = 0; g < q.gamma_count(); ++g) {
        CHECK(q.at(a, g, a) == a);
        for (std::size_t b = 0; b < q.size(); ++b) {
          CHECK(q.at(a, g, b) == q.at(b, g, a));
        }
      }
    }
  }

}  // namespace

TEST_CASE("Partition is canonical") {
  auto const p = from_ids({5, 2, 5, 7});
  CHECK(std::vector<std::size_t>(p.ids().begin(), p.ids().end())
        == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(p.class_count() == 3);
  CHECK(p.class_of(2) == ElementSet{0, 2});
  CHECK(p.classes() == std::vector<ElementSet>{ElementSet{0, 2}, ElementSet{1}, ElementSet{3}});
  CHECK(p == from_ids({1, 0, 1, 3}));
  ElementSet const classes[] = {ElementSet{3}, ElementSet{1}, ElementSet{0, 2}};
  CHECK(Partition::from_classes(4, classes) == p);
  CHECK(refines(Partition::identity(4), p));
  CHECK(refines(p, Partition::single_class(4)));
  CHECK_FALSE(refines(p, Partition::identity(4)));
}

TEST_CASE("Partition::from_classes rejects non-partitions") {
  ElementSet const overlap[] = {ElementSet{0, 1}, ElementSet{1}};
  CHECK_THROWS_AS(Partition::from_classes(2, overlap), Error);
  ElementSet const missing[] = {ElementSet{0}};
  CHECK_THROWS_AS(Partition::from_classes(2, missing), Error);
}

TEST_CASE("relation_from_map examples") {
  auto const rz = fixtures::right_zero();
  CHECK(ideal_relation(rz, Side::left) == Partition::identity(2));
  CHECK(relation_from_map(rz, [&](std::size_t x) {
          return principal_ideal(rz, x, Side::left);
        }) == Partition::identity(2));
  CHECK(filter_relation(rz) == Partition::single_class(2));
  CHECK(relation_from_map(fixtures::trivial(), [](std::size_t) {
          return ElementSet{};
        }) == Partition::single_class(1));
}

TEST_CASE("congruence examples") {
  auto const null = fixtures::null2();
  for (auto const& [name, s] : fixtures::all()) {
    CAPTURE(name);
    for (auto side : {Side::left, Side::right, Side::two_sided}) {
      CHECK(is_congruence(s, Partition::identity(s.size()), side));
      CHECK(is_congruence(s, Partition::single_class(s.size()), side));
    }
  }
  CHECK(is_congruence(null, Partition::identity(2), Side::two_sided));
  CHECK_THROWS_AS(is_congruence(null, Partition::identity(3), Side::left), Error);

  CHECK_FALSE(is_semilattice_congruence(null, Partition::identity(2)));
  CHECK(is_semilattice_congruence(null, Partition::single_class(2)));
  CHECK(is_semilattice_congruence(fixtures::semilattice2(), Partition::identity(2)));
  CHECK_THROWS_AS(is_semilattice_congruence(null, Partition::identity(1)), Error);
}

TEST_CASE("is_congruence agrees with the definition on every partition") {
  auto all_partitions = [](std::size_t n) {
    std::vector<Partition>   out;
    std::vector<std::size_t> ids(n, 0);
    for (std::size_t code = 0; code < std::size_t{1} << (2 * n); ++code) {
      for (std::size_t i = 0; i < n; ++i) {
        ids[i] = (code >> (2 * i)) & 3U;
      }
      auto const p = from_ids(ids);
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(p);
      }
    }
    return out;
  };
  std::size_t one_sided = 0;
  for (auto const& s : corpus::small_exhaustive()) {
    for (auto const& p : all_partitions(s.size())) {
      bool left = true, right = true;
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < s.size(); ++b) {
          if (p[a] != p[b]) {
            continue;
          }
          for (std::size_t c = 0; c < s.size(); ++c) {
            for (std::size_t g = 0; g < s.gamma_count(); ++g) {
              left  = left && p[s.at(c, g, a)] == p[s.at(c, g, b)];
              right = right && p[s.at(a, g, c)] == p[s.at(b, g, c)];
            }
          }
        }
      }
      CHECK(is_congruence(s, p, Side::left) == left);
      CHECK(is_congruence(s, p, Side::right) == right);
      CHECK(is_congruence(s, p, Side::two_sided) == (left && right));
      one_sided += left != right;
    }
  }
  // The corpus does separate the two sides.
  CHECK(one_sided > 0);
}

TEST_CASE("quotient examples") {
  auto const sl2 = fixtures::semilattice2();
  CHECK(quotient(sl2, Partition::identity(2)) == sl2);
  for (auto const& [name, s] : fixtures::all()) {
    CAPTURE(name);
    auto const q = quotient(s, Partition::single_class(s.size()));
    CHECK(q.size() == 1);
    CHECK(q.gamma_count() == s.gamma_count());
  }
  auto const null = fixtures::null2();
  auto const q    = quotient(null, filter_relation(null));
  CHECK(q.size() == 1);
  CHECK(q.labels().elements == std::vector<std::string>{"{0,a}"});
}

TEST_CASE("quotient rejects a non-congruence") {
  // Semilattice on a chain 0 < 1 < 2 with min; {0,2},{1} is not compatible:
  // 0 ~ 2 but 1γ0 = 0 and 1γ2 = 1 are not related.
  std::vector<std::size_t> t(9);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      t[a * 3 + b] = std::min(a, b);
    }
  }
  auto const chain = GammaSemigroup::make(3, 1, t);
  auto const p     = from_ids({0, 1, 0});
  CHECK_FALSE(is_congruence(chain, p, Side::two_sided));
  try {
    quotient(chain, p);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_a_congruence);
  }
}

TEST_CASE("enumerate_semilattice_congruences examples") {
  auto const triv = enumerate_semilattice_congruences(fixtures::trivial());
  CHECK(triv.size() == 1);

  auto const null = enumerate_semilattice_congruences(fixtures::null2());
  CHECK(std::count(null.begin(), null.end(), Partition::single_class(2)) == 1);
  CHECK(std::count(null.begin(), null.end(), Partition::identity(2)) == 0);

  auto const sl2 = enumerate_semilattice_congruences(fixtures::semilattice2());
  CHECK(std::count(sl2.begin(), sl2.end(), Partition::single_class(2)) == 1);
  CHECK(std::count(sl2.begin(), sl2.end(), Partition::identity(2)) == 1);

  std::vector<std::size_t> t(81, 0);
  auto const               nine_null = GammaSemigroup::make(9, 1, t);
  try {
    enumerate_semilattice_congruences(nine_null);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::carrier_too_large);
  }
}

TEST_CASE("semilattice congruence enumeration equals brute force") {
  auto check = [](GammaSemigroup const& s) {
    auto const found = enumerate_semilattice_congruences(s);
    auto const brute = oracle::semilattice_congruences_by_brute_force(s);
    REQUIRE(found.size() == brute.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      CHECK(std::vector<std::size_t>(found[i].ids().begin(), found[i].ids().end())
            == brute[i]);
      CHECK(is_semilattice_congruence(s, found[i]));
    }
  };
  for (auto const& s : corpus::small_exhaustive()) {
    check(s);
  }
  for (auto const& s : corpus::random(300, 4000)) {
    check(s);
  }
}

TEST_CASE("relation properties on the corpus") {
  auto instances = corpus::small_exhaustive();
  auto sampled   = corpus::random(1500, 100);
  instances.insert(instances.end(), sampled.begin(), sampled.end());
  for (auto const& s : instances) {
    auto const N = filter_relation(s);
    CHECK(is_semilattice_congruence(s, N));
    CHECK(refines(ideal_relation(s, Side::two_sided), N));
    CHECK(refines(ideal_relation(s, Side::left), N));
    CHECK(refines(ideal_relation(s, Side::right), N));
    // L and R both refine I.
    CHECK(refines(ideal_relation(s, Side::left), ideal_relation(s, Side::two_sided)));
    CHECK(refines(ideal_relation(s, Side::right), ideal_relation(s, Side::two_sided)));

    for (auto const& cls : N.classes()) {
      CHECK(is_subsemigroup(s, cls));
    }
    auto const q = quotient(s, N);
    CHECK(validate(std::vector<std::size_t>(q.table().begin(), q.table().end()),
                   q.size(),
                   q.gamma_count())
              .ok());
    check_quotient_is_semilattice(q);
  }
}

TEST_CASE("classes of every semilattice congruence are subsemigroups") {
  for (auto const& s : corpus::small_exhaustive()) {
    for (auto const& sigma : enumerate_semilattice_congruences(s)) {
      for (auto const& cls : sigma.classes()) {
        CHECK(is_subsemigroup(s, cls));
      }
      check_quotient_is_semilattice(quotient(s, sigma));
    }
  }
}
