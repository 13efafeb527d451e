#include "doctest.h"

#include "braidperm/enumerate.hpp"
#include "braidperm/shuffle.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace
{

ShuffleSpec spec_of(std::size_t d, char const *tau,
                    std::vector<std::pair<Point, Point>> const &u,
                    std::vector<InitialChoice> const &choices)
{
  CycleMap const map = CycleMap::from_least_elements(parse_cycles(tau), d, u);
  return ShuffleSpec(map, choices);
}

} // namespace

TEST_CASE("build_sigma examples")
{
  CHECK(print_cycles(build_sigma(spec_of(2, "(1 2)", {}, {{1, 1}}))) == "(1 3 2 4)");
  CHECK(print_cycles(build_sigma(spec_of(2, "(1 2)", {}, {{1, 2}}))) == "(1 4 2 3)");
  CHECK(print_cycles(build_sigma(spec_of(2, "()", {{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}))) ==
        "(1 4)(2 3)");
  CHECK(print_cycles(build_sigma(spec_of(2, "()", {}, {{1, 1}, {2, 2}}))) == "(1 3)(2 4)");
}

TEST_CASE("invalid specs are rejected")
{
  auto const tau = parse_cycles("(1 2)(3 4 5)");
  CHECK_THROWS_AS(CycleMap(tau, 5, {1, 0, 2}), InvalidSpec);  // swaps cycles of unequal length
  CHECK_THROWS_AS(CycleMap(tau, 5, {0, 0}), InvalidSpec);     // wrong size
  CHECK_THROWS_AS(CycleMap::from_least_elements(tau, 5, {{2, 1}}), InvalidSpec);
  CycleMap const id = CycleMap::identity(tau, 5);
  CHECK_THROWS_AS(ShuffleSpec(id, {{1, 3}, {3, 3}}), InvalidSpec); // j1 outside u(alpha)
  CHECK_THROWS_AS(ShuffleSpec(id, {{1, 1}}), InvalidSpec);         // one choice missing
  CHECK_NOTHROW(ShuffleSpec(id, {{2, 1}, {5, 4}}));
}

TEST_CASE("build_pair examples")
{
  auto const pair = build_pair(spec_of(2, "(1 2)", {}, {{1, 1}}));
  CHECK(pair.first.is_identity());
  CHECK(pair.second == parse_cycles("(1 2)"));

  auto const swap = build_pair(spec_of(2, "()", {{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}));
  CHECK(swap.first == parse_cycles("(1 2)"));
  CHECK(swap.second == parse_cycles("(1 2)"));

  CHECK(sigma_from_pair(Permutation::identity(2), parse_cycles("(1 2)"), 2) ==
        parse_cycles("(1 3 2 4)"));
  CHECK(sigma_from_pair(Permutation::identity(3), Permutation::identity(3), 3) ==
        theta(1, 3, 2));
  CHECK_THROWS_AS(CommutingPair(parse_cycles("(1 2)"), parse_cycles("(2 3)")),
                  std::invalid_argument);
}

TEST_CASE("braid-like predicate")
{
  CHECK(is_braid_like(parse_cycles("(1 2)"), parse_cycles("(2 3)")));
  CHECK_FALSE(is_braid_like(parse_cycles("(1 2)"), parse_cycles("(3 4)")));
  CHECK_FALSE(is_braid_like(parse_cycles("(1 2 3)"), parse_cycles("(1 2 3)")));
}

TEST_CASE("decompose_commuting_pair examples")
{
  auto const spec = decompose_commuting_pair(Permutation::identity(2), parse_cycles("(1 2)"), 2);
  CHECK(spec.tau() == parse_cycles("(1 2)"));
  CHECK(spec.u.images() == std::vector<std::size_t>{0});
  CHECK(spec.choices[0] == InitialChoice{1, 1});

  auto const swap = decompose_commuting_pair(parse_cycles("(1 2)"), parse_cycles("(1 2)"), 2);
  CHECK(swap.tau().is_identity());
  CHECK(swap.u.images() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(decompose_commuting_pair(parse_cycles("(1 2)"), parse_cycles("(2 3)"), 3),
                  InvalidSpec);
}

TEST_CASE("components")
{
  auto const spec = spec_of(2, "()", {}, {{1, 1}, {2, 2}});
  auto const comps = restrict_components(build_sigma(spec), spec);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].factor == parse_cycles("(1 3)"));
  CHECK(comps[1].factor == parse_cycles("(2 4)"));
  CHECK(comps[0].support == std::vector<Point>{1});

  auto const long_spec = spec_of(3, "(1 2 3)", {}, {{2, 3}});
  auto const one = restrict_components(build_sigma(long_spec), long_spec);
  REQUIRE(one.size() == 1);
  CHECK(one[0].factor == build_sigma(long_spec));
  CHECK_THROWS_AS(restrict_components(theta(1, 3, 2), long_spec), InvalidSpec);
}

TEST_CASE("construction against the coset oracle")
{
  for (std::size_t d = 1; d <= 4; ++d) {
    std::size_t total = 0;
    for (auto const &tau_images : oracle::all_images(d)) {
      Permutation const tau = oracle::to_perm(tau_images);
      auto const expected = oracle::coset_solutions(d, tau_images);
      std::set<oracle::Images> built;
      for (auto const &spec : all_specs(d, tau)) {
        Permutation const sigma = build_sigma(spec);
        built.insert(oracle::to_images(sigma, 2 * d));

        auto const pair = build_pair(spec);
        CHECK(pair.product == tau);
        CHECK(pair.first.commutes_with(pair.second));
        CHECK(sigma_from_pair(pair.first, pair.second, d) == sigma);
        auto const tau_back = square_root_tau(sigma, d);
        REQUIRE(tau_back.has_value());
        CHECK(*tau_back == tau);
        auto const factors = coset_factors(sigma, d);
        REQUIRE(factors.has_value());
        CHECK(factors->first == pair.first);
        CHECK(factors->second == pair.second);
      }
      CHECK(built == expected);
      CHECK(built.size() == z_of(cycle_type(tau, d)));
      total += built.size();
    }
    CHECK(total == partition_count(d) * factorial(d));
  }
}

TEST_CASE("every commuting pair roundtrips through its shuffle data")
{
  for (std::size_t d = 1; d <= 4; ++d) {
    auto const elements = oracle::all_images(d);
    std::size_t commuting = 0;
    for (auto const &a : elements) {
      for (auto const &b : elements) {
        if (oracle::compose(a, b, d) != oracle::compose(b, a, d))
          continue;
        ++commuting;
        Permutation const pa = oracle::to_perm(a);
        Permutation const pb = oracle::to_perm(b);
        auto const spec = decompose_commuting_pair(pa, pb, d);
        auto const rebuilt = build_pair(spec);
        CHECK(rebuilt.first == pa);
        CHECK(rebuilt.second == pb);
      }
    }
    CHECK(commuting == factorial(d) * partition_count(d));
  }
}
