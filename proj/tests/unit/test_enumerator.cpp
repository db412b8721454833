#include <doctest.h>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "gammakit/enumerator.hpp"
#include "gammakit/fixtures.hpp"
#include "oracles.hpp"

using namespace gammakit;

namespace {

  std::vector<std::uint8_t> table_of(GammaSemigroup const& s) {
    return {s.table().begin(), s.table().end()};
  }

  GammaSemigroup random_relabel(GammaSemigroup const& s, std::mt19937_64& rng) {
    std::vector<std::size_t> pe(s.size()), pg(s.gamma_count());
    std::iota(pe.begin(), pe.end(), 0);
    std::iota(pg.begin(), pg.end(), 0);
    std::shuffle(pe.begin(), pe.end(), rng);
    std::shuffle(pg.begin(), pg.end(), rng);
    return relabel(s, pe, pg);
  }

  // Number of isomorphism classes, by pairwise brute-force isomorphism tests.
  std::size_t classes_by_brute_force(std::vector<GammaSemigroup> const& all) {
    std::vector<GammaSemigroup> reps;
    for (auto const& s : all) {
      bool seen = false;
      for (auto const& r : reps) {
        if (oracle::isomorphic(s, r)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        reps.push_back(s);
      }
    }
    return reps.size();
  }

}  // namespace

TEST_CASE("counts match unpruned brute force") {
  struct Case {
    std::size_t   n, k;
    std::uint64_t expected;
  };
  for (auto [n, k, expected] : {Case{1, 1, 1}, {1, 2, 1}, {2, 1, 8}, {2, 2, 14}, {3, 1, 113}}) {
    CAPTURE(n);
    CAPTURE(k);
    std::set<std::vector<std::uint8_t>> pruned, brute;
    auto const count = enumerate_instances(n, k, [&](GammaSemigroup const& s) {
      pruned.insert(table_of(s));
    });
    auto const brute_count = oracle::tables_by_brute_force(
        n, k, [&](GammaSemigroup const& s) { brute.insert(table_of(s)); });
    CHECK(count == expected);
    CHECK(brute_count == expected);
    // Each table exactly once, and the same tables.
    CHECK(pruned.size() == count);
    CHECK(pruned == brute);
  }
}

TEST_CASE("enumeration order is lexicographic and deterministic") {
  std::vector<std::vector<std::uint8_t>> first, second;
  enumerate_instances(3, 1, [&](GammaSemigroup const& s) { first.push_back(table_of(s)); });
  enumerate_instances(3, 1, [&](GammaSemigroup const& s) { second.push_back(table_of(s)); });
  CHECK(first == second);
  CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("parallel enumeration visits the same tables") {
  std::set<std::vector<std::uint8_t>> seq, par;
  enumerate_instances(2, 2, [&](GammaSemigroup const& s) { seq.insert(table_of(s)); });
  std::mutex m;
  auto const count = enumerate_instances_parallel(
      2,
      2,
      [&](GammaSemigroup const& s) {
        std::lock_guard lock(m);
        par.insert(table_of(s));
      },
      3);
  CHECK(count == 14);
  CHECK(seq == par);
}

TEST_CASE("enumeration bounds") {
  struct Case {
    std::size_t n, k;
    ErrorKind   kind;
  };
  for (auto [n, k, kind] : {Case{4, 1, ErrorKind::search_space_too_large},
                            {1, 3, ErrorKind::search_space_too_large},
                            {0, 1, ErrorKind::empty_carrier},
                            {1, 0, ErrorKind::empty_gamma}}) {
    try {
      enumerate_instances(n, k, [](GammaSemigroup const&) {});
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.kind() == kind);
    }
  }
}

TEST_CASE("random_instance") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto const n = 1 + seed % 5;
    auto const k = 1 + seed % 3;
    auto const a = random_instance(n, k, seed);
    CHECK(a == random_instance(n, k, seed));
    CHECK(a.size() == n);
    CHECK(a.gamma_count() == k);
    CHECK(validate(std::vector<std::size_t>(a.table().begin(), a.table().end()), n, k)
              .ok());
  }
  // n = 1 has a single table for any k.
  CHECK(random_instance(1, 3, 42) == GammaSemigroup::make(1, 3, {0, 0, 0}));
  // Different seeds reach different tables.
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    seen.insert(table_of(random_instance(3, 1, seed)));
  }
  CHECK(seen.size() > 10);
  CHECK_THROWS_AS(random_instance(0, 1, 0), Error);
  CHECK_THROWS_AS(random_instance(65, 1, 0), Error);
}

TEST_CASE("canonical_key examples") {
  CHECK(to_hex(canonical_key(fixtures::trivial())) == "010100");
  CHECK(canonical_key(fixtures::left_zero()) != canonical_key(fixtures::right_zero()));
  CHECK(canonical_key(fixtures::semilattice2())
        == canonical_key(GammaSemigroup::make(2, 1, {0, 1, 1, 1})));
  CHECK(to_hex(std::string("\x00\xff", 2)) == "00ff");
  std::vector<std::size_t> t(81, 0);
  CHECK_THROWS_AS(canonical_key(GammaSemigroup::make(9, 1, t)), Error);
}

TEST_CASE("canonical_key is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (auto const& s : corpus::random(400, 11000)) {
    auto const key = canonical_key(s);
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(canonical_key(random_relabel(s, rng)) == key);
    }
  }
}

TEST_CASE("canonical_key separates exactly the isomorphism classes") {
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto const all = corpus::exhaustive(n, k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        CHECK((canonical_key(all[i]) == canonical_key(all[j]))
              == oracle::isomorphic(all[i], all[j]));
      }
    }
  }
}

TEST_CASE("instance flags are invariant under relabeling") {
  std::mt19937_64 rng(9);
  for (auto const& s : corpus::random(300, 12000)) {
    CHECK(make_record(s).flags == make_record(random_relabel(s, rng)).flags);
  }
}

TEST_CASE("make_record") {
  auto const r = make_record(fixtures::null2());
  CHECK_FALSE(r.flag("intra-regular"));
  CHECK(r.flag("duo-left"));
  CHECK(r.flag("theorem3-all-equal"));
  CHECK(r.canonical_key == canonical_key(fixtures::null2()));
  CHECK_THROWS_AS(r.flag("no-such-flag"), Error);
}

TEST_CASE("census") {
  auto const c11 = census(1, 1);
  CHECK(c11.tables == 1);
  CHECK(c11.classes == 1);

  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto const c = census(n, k);
    CHECK(c.tables == enumerate_instances(n, k, [](GammaSemigroup const&) {}));
    CHECK(c.classes == classes_by_brute_force(corpus::exhaustive(n, k)));
    // The theorems hold on every class.
    CHECK(c.classes_with_flag[5] == c.classes);
    CHECK(c.classes_with_flag[6] == c.classes);
    CHECK(c.classes_with_flag[7] == c.classes);
  }
  auto const c21 = census(2, 1);
  CHECK(c21.classes == 5);
  CHECK(census(3, 1).classes == 24);
}
