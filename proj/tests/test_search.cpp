#include "kcf/constructions.hpp"
#include "kcf/search.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace kcf;

TEST_CASE("uniform level caps") {
  CHECK(uniform_level_cap(5, 0, 3, crossing_mode::strict) == 1);
  CHECK(uniform_level_cap(5, 5, 3, crossing_mode::weak) == 1);
  CHECK(uniform_level_cap(6, 2, 2, crossing_mode::weak) == 3);
  CHECK(uniform_level_cap(6, 4, 2, crossing_mode::weak) == 1);
  CHECK(uniform_level_cap(6, 4, 2, crossing_mode::strict) == 3);
  CHECK(uniform_level_cap(7, 3, 3, crossing_mode::strict) == 4);
}

TEST_CASE("uniform level caps hold on exhaustive levels") {
  for (int n = 3; n <= 5; ++n)
    for (int level = 1; level < n; ++level)
      for (int k = 2; k <= 3; ++k)
        for (auto mode : {crossing_mode::strict, crossing_mode::weak}) {
          std::vector<subset_mask> sets;
          for (subset_mask a = 0; a < (subset_mask{1} << n); ++a)
            if (cardinality(a) == level)
              sets.push_back(a);
          family u(ground_set(n), sets);
          auto r = max_cross_free(u, k, mode);
          CHECK(static_cast<long>(r.size) <= uniform_level_cap(n, level, k, mode));
        }
}

TEST_CASE("search examples on all subsets") {
  struct row {
    int n, k;
    crossing_mode mode;
    std::size_t expect;
  };
  // Exact values checked independently in the acceptance tests.
  for (auto [n, k, mode, expect] : std::vector<row>{{3, 2, crossing_mode::weak, 6},
                                                     {4, 2, crossing_mode::weak, 8},
                                                     {3, 2, crossing_mode::strict, 8},
                                                     {4, 2, crossing_mode::strict, 12},
                                                     {4, 3, crossing_mode::strict, 14}}) {
    auto r = max_cross_free(make_universe(universe_kind::all, n), k, mode);
    CHECK(r.size == expect);
    CHECK(r.best.size() == expect);
    CHECK(r.proven_optimal);
  }
}

TEST_CASE("search is exact against enumeration") {
  seeded_rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng.below(4));
    family u = kcf::testing::random_draws(rng, n, 4 + static_cast<int>(rng.below(17)));
    if (u.size() > 20)
      continue;
    int k = 2 + static_cast<int>(rng.below(3));
    auto mode = kcf::testing::random_mode(rng);
    auto par = max_cross_free(u, k, mode);
    auto ser = max_cross_free_serial(u, k, mode);
    CHECK(par.size == kcf::testing::brute_max_cross_free(u, k, mode));
    CHECK(par.best == ser.best);
    CHECK_FALSE(kcf::testing::brute_has_witness(par.best, k, mode));
    for (subset_mask a : par.best)
      CHECK(u.contains(a));
  }
}

TEST_CASE("search returns the least optimum") {
  // Four 2-sets on a 4-cycle pattern: {0,1},{1,2},{2,3},{0,3} cross cyclically in strict mode.
  family u(ground_set(4), {make_mask({0, 1}), make_mask({1, 2}), make_mask({2, 3}), make_mask({0, 3})});
  auto r = max_cross_free(u, 2, crossing_mode::strict);
  CHECK(r.size == 2);
  CHECK(r.best == family(ground_set(4), {make_mask({0, 1}), make_mask({2, 3})}));
}

TEST_CASE("search is monotone in k and universe") {
  seeded_rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    family u = kcf::testing::random_family(rng, 5, 0.5);
    auto mode = kcf::testing::random_mode(rng);
    std::size_t prev = 0;
    for (int k = 2; k <= 4; ++k) {
      auto r = max_cross_free(u, k, mode);
      CHECK(r.size >= prev);
      prev = r.size;
    }
    auto strict = max_cross_free(u, 3, crossing_mode::strict).size;
    auto weak = max_cross_free(u, 3, crossing_mode::weak).size;
    CHECK(strict >= weak);
  }
}

TEST_CASE("parallel and serial search agree with several threads") {
  for (int threads : {1, 2, 4}) {
    search_options opts;
    opts.threads = threads;
    auto u = make_universe(universe_kind::intervals, 7);
    auto a = max_cross_free(u, 3, crossing_mode::strict, opts);
    auto b = max_cross_free_serial(u, 3, crossing_mode::strict);
    CHECK(a.size == 36);
    CHECK(a.best == b.best);
  }
}

TEST_CASE("node limit stops the search") {
  search_options opts;
  opts.node_limit = 50;
  auto r = max_cross_free_serial(make_universe(universe_kind::all, 5), 3, crossing_mode::strict, opts);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.size > 0);
  auto p = max_cross_free(make_universe(universe_kind::all, 5), 3, crossing_mode::strict, opts);
  CHECK_FALSE(p.proven_optimal);
}

TEST_CASE("search input errors") {
  auto u = make_universe(universe_kind::all, 3);
  CHECK_THROWS_AS(max_cross_free(u, 1, crossing_mode::strict), std::invalid_argument);
  std::vector<subset_mask> many;
  for (subset_mask a = 0; a <= max_search_universe; ++a)
    many.push_back(a);
  CHECK_THROWS_AS(max_cross_free(family(ground_set(13), many), 2, crossing_mode::strict), std::invalid_argument);
  CHECK_THROWS_AS(make_universe(universe_kind::all, 13), std::invalid_argument);
  CHECK_THROWS_AS(parse_universe_kind("cubes"), std::invalid_argument);
  CHECK(parse_universe_kind("intervals") == universe_kind::intervals);
  CHECK(max_cross_free(family(ground_set(3)), 2, crossing_mode::strict).size == 0);
}

TEST_CASE("bound table") {
  auto rows = bound_table(2, 4, 2, 2, universe_kind::all, crossing_mode::weak);
  REQUIRE(rows.size() == 3);
  for (const auto &r : rows) {
    CHECK(r.formula_name == "2n");
    CHECK(r.tight == true);
    CHECK(r.exact == static_cast<std::size_t>(2 * r.n));
  }
  auto strict = bound_table(3, 3, 2, 3, universe_kind::all, crossing_mode::strict);
  CHECK(strict[0].formula_name == "4n-2");
  CHECK_FALSE(strict[0].tight);
  CHECK(strict[1].formula_name == "8n-20");
  auto none = bound_table(3, 3, 3, 3, universe_kind::all, crossing_mode::weak);
  CHECK(none[0].formula_name == "none");
  CHECK_FALSE(none[0].formula);
  auto iv = bound_table(6, 6, 3, 3, universe_kind::intervals, crossing_mode::strict);
  CHECK(iv[0].formula == 28);
  CHECK(iv[0].tight == true);
  CHECK_THROWS_AS(bound_table(6, 6, 2, 2, universe_kind::all, crossing_mode::strict), std::invalid_argument);
  CHECK_THROWS_AS(bound_table(4, 3, 2, 2, universe_kind::all, crossing_mode::strict), std::invalid_argument);
}
