#include <doctest.h>

#include "freelip/freelip.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/spaces.hpp"

using namespace freelip;
using namespace freelip::testsupport;

TEST_SUITE("extremal") {

TEST_CASE("metric criterion on the line") {
  SpacePtr line = line_space();

  ExtremalityCertificate extreme = is_extreme_molecule(line, 2, 1);
  CHECK(extreme.verdict == Verdict::extreme);
  CHECK(extreme.pair == std::make_pair(2, 1));
  CHECK(!extreme.violating_point.has_value());
  REQUIRE(extreme.exposed_constant.has_value());
  // direct evaluation: x=0 gives (2+1-1)/1, x=3 gives (1+2-1)/1
  CHECK(extreme.exposed_constant->value() == Rational(2));

  ExtremalityCertificate collinear = is_extreme_molecule(line, 2, 0);
  CHECK(collinear.verdict == Verdict::not_extreme);
  REQUIRE(collinear.violating_point.has_value());
  CHECK(*collinear.violating_point == 1);
  // the violation is exact triangle equality
  CHECK(line->dist(2, 1) + line->dist(0, 1) == line->dist(2, 0));

  CHECK_THROWS_AS(is_extreme_molecule(line, 1, 1), DegeneratePair);
}

TEST_CASE("metric criterion on the equilateral triangle") {
  SpacePtr tri = equilateral_space();
  ExtremalityCertificate cert = is_extreme_molecule(tri, 1, 2);
  CHECK(cert.verdict == Verdict::extreme);
  REQUIRE(cert.exposed_constant.has_value());
  CHECK(cert.exposed_constant->value() == Rational(1));  // (1+1-1)/1 at x=0
}

TEST_CASE("strongly exposed constant") {
  SpacePtr line = line_space();
  auto c21 = strongly_exposed_constant(line, 2, 1);
  REQUIRE(c21.has_value());
  CHECK(c21->value() == Rational(2));

  CHECK(!strongly_exposed_constant(line, 2, 0).has_value());

  SpacePtr two = make_space({"0", "a"}, {{0, 1}, {1, 0}}, 0);
  auto c = strongly_exposed_constant(two, 1, 0);
  REQUIRE(c.has_value());
  CHECK(c->is_unbounded());
}

TEST_CASE("exposed constant present exactly when extreme") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 30; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 7), rng());
    for (int p = 0; p < space->size(); ++p) {
      for (int q = p + 1; q < space->size(); ++q) {
        bool extreme =
            is_extreme_molecule(space, p, q).verdict == Verdict::extreme;
        CHECK(strongly_exposed_constant(space, p, q).has_value() == extreme);
      }
    }
  }
}

TEST_CASE("enumerate_extreme") {
  SpacePtr line = line_space();
  CHECK(enumerate_extreme(line) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  CHECK(enumerate_extreme(equilateral_space()) ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  SpacePtr two = make_space({"0", "a"}, {{0, 1}, {1, 0}}, 0);
  CHECK(enumerate_extreme(two) ==
        std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("enumerate_extreme matches pairwise criterion calls") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 15; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 7), rng());
    std::vector<std::pair<int, int>> manual;
    for (int p = 0; p < space->size(); ++p) {
      for (int q = p + 1; q < space->size(); ++q) {
        if (is_extreme_molecule(space, p, q).verdict == Verdict::extreme) {
          manual.emplace_back(p, q);
        }
      }
    }
    CHECK(enumerate_extreme(space) == manual);
  }
}

TEST_CASE("on chains exactly the adjacent pairs are extreme") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    SpacePtr chain = chain_space(n);
    std::vector<std::pair<int, int>> adjacent;
    for (int k = 0; k < n; ++k) adjacent.emplace_back(k, k + 1);
    CHECK(enumerate_extreme(chain) == adjacent);
  }
}

TEST_CASE("vertex oracle on the line") {
  SpacePtr line = line_space();

  CHECK(is_extreme_oracle(molecule(line, 2, 1)));
  // exhaustive independent route
  CHECK_FALSE(conv_membership_exhaustive(molecule(line, 2, 1),
                                         other_molecules(line, 2, 1)));

  // the explicit midpoint combination m_20 = (m_21 + m_10) / 2
  FreeElement m20 = molecule(line, 2, 0);
  CHECK(m20 == scale(Rational(1, 2),
                     add(molecule(line, 2, 1), molecule(line, 1, 0))));
  CHECK_FALSE(is_extreme_oracle(m20));
  CHECK(conv_membership_exhaustive(m20, other_molecules(line, 2, 0)));

  // off the unit sphere nothing is extreme
  CHECK_FALSE(is_extreme_oracle(line_example_element(line)));
  CHECK_FALSE(is_extreme_oracle(FreeElement::zero(line)));
  // not a molecule at all
  CHECK_FALSE(is_extreme_oracle(
      scale(Rational(1, 3), line_example_element(line))));
}

TEST_CASE("flow-based oracle agrees with exhaustive hull membership") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 12; ++round) {
    SpacePtr space = random_space(4, rng());
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        if (p == q) continue;
        FreeElement m = molecule(space, p, q);
        bool member =
            conv_membership_exhaustive(m, other_molecules(space, p, q));
        CHECK(is_extreme_oracle(m) == !member);
      }
    }
  }
}

TEST_CASE("criterion and oracle agree (main equivalence, small sample)") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 25; ++round) {
    SpacePtr space = random_space(draw(rng, 3, 7), rng());
    for (int p = 0; p < space->size(); ++p) {
      for (int q = 0; q < space->size(); ++q) {
        if (p == q) continue;
        bool criterion =
            is_extreme_molecule(space, p, q).verdict == Verdict::extreme;
        CHECK(criterion == is_extreme_oracle(molecule(space, p, q)));
      }
    }
  }
}

TEST_CASE("bump weight is the unit cone at x vanishing at z") {
  SpacePtr line = line_space();
  WeightFunction h = bump_weight(line, 2, 0);
  CHECK(h.values() == std::vector<Rational>{Rational(0), Rational(1, 2),
                                            Rational(1), Rational(1, 2)});

  std::mt19937_64 rng(34);
  for (int round = 0; round < 20; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 7), rng());
    int x = draw(rng, 0, space->size() - 1);
    int z = draw(rng, 0, space->size() - 1);
    if (x == z) continue;
    WeightFunction b = bump_weight(space, x, z);
    CHECK(b.value(x) == 1);
    CHECK(b.value(z) == 0);
  }
  CHECK_THROWS_AS(bump_weight(line, 3, 3), DegeneratePair);
}

TEST_CASE("localize certifies extreme molecules with a Dirac mass") {
  SpacePtr line = line_space();
  ExtremalityCertificate cert = localize(molecule(line, 2, 1));
  CHECK(cert.verdict == Verdict::extreme);
  CHECK(cert.pair == std::make_pair(2, 1));
  REQUIRE(cert.localized.has_value());
  CHECK(*cert.localized == dirac(line, 2, 1));
}

TEST_CASE("localize rejects the collinear molecule") {
  SpacePtr line = line_space();
  FreeElement m20 = molecule(line, 2, 0);
  ExtremalityCertificate cert = localize(m20);
  CHECK(cert.verdict == Verdict::not_extreme);
  CHECK_FALSE(is_extreme_oracle(m20));  // oracle concurs
}

TEST_CASE("localize rejects proper convex combinations") {
  SpacePtr line = line_space();
  FreeElement mix = scale(
      Rational(1, 2), add(molecule(line, 1, 0), molecule(line, 2, 1)));
  FreeElement unit = scale(Rational(1) / free_norm(mix).value, mix);
  REQUIRE(free_norm(unit).value == 1);

  ExtremalityCertificate cert = localize(unit);
  CHECK(cert.verdict == Verdict::not_extreme);
  CHECK_FALSE(is_extreme_oracle(unit));
}

TEST_CASE("localize requires unit norm") {
  SpacePtr line = line_space();
  CHECK_THROWS_AS(localize(line_example_element(line)), NotUnitNorm);
  CHECK_THROWS_AS(localize(FreeElement::zero(line)), NotUnitNorm);
}

TEST_CASE("localization is sound against the oracle") {
  std::mt19937_64 rng(35);
  for (int round = 0; round < 20; ++round) {
    SpacePtr space = random_space(draw(rng, 3, 6), rng());
    for (int p = 0; p < space->size(); ++p) {
      for (int q = 0; q < space->size(); ++q) {
        if (p == q) continue;
        FreeElement m = molecule(space, p, q);
        ExtremalityCertificate cert = localize(m);
        if (cert.verdict == Verdict::extreme) {
          CHECK(is_extreme_oracle(m));
          REQUIRE(cert.pair.has_value());
          FreeElement found =
              molecule(space, cert.pair->first, cert.pair->second);
          CHECK((found == m || found == scale(Rational(-1), m)));
        } else {
          CHECK_FALSE(is_extreme_oracle(m));
        }
      }
    }
  }
}

TEST_CASE("a sharper bump family yields the same verdicts") {
  // h = 1 on the open half-radius ball around x, 0 elsewhere
  BumpFn indicator = [](const SpacePtr& space, int x, int z) {
    std::vector<Rational> values(space->size());
    Rational half = space->dist(x, z) / 2;
    for (int w = 0; w < space->size(); ++w) {
      values[w] = space->dist(w, x) < half ? Rational(1) : Rational(0);
    }
    return WeightFunction::from_values(space, std::move(values));
  };

  std::mt19937_64 rng(36);
  for (int round = 0; round < 12; ++round) {
    SpacePtr space = random_space(draw(rng, 3, 5), rng());
    for (int p = 0; p < space->size(); ++p) {
      for (int q = 0; q < space->size(); ++q) {
        if (p == q) continue;
        FreeElement m = molecule(space, p, q);
        CHECK(localize(m).verdict == localize(m, indicator).verdict);
      }
    }
  }
}

TEST_CASE("oracle-backed certificates") {
  SpacePtr line = line_space();

  ExtremalityCertificate ext = oracle_certificate(molecule(line, 2, 1));
  CHECK(ext.verdict == Verdict::extreme);
  CHECK(ext.pair == std::make_pair(2, 1));
  REQUIRE(ext.exposed_constant.has_value());
  CHECK(ext.exposed_constant->value() == Rational(2));

  CHECK(oracle_certificate(molecule(line, 2, 0)).verdict ==
        Verdict::not_extreme);
  CHECK(oracle_certificate(line_example_element(line)).verdict ==
        Verdict::not_a_molecule);
  CHECK(oracle_certificate(FreeElement::zero(line)).verdict ==
        Verdict::not_a_molecule);
}

TEST_CASE("match_molecule identifies signed molecules only") {
  SpacePtr line = line_space();
  CHECK(match_molecule(molecule(line, 3, 1)) == std::make_pair(3, 1));
  CHECK(match_molecule(molecule(line, 1, 0)) == std::make_pair(1, 0));
  CHECK(!match_molecule(line_example_element(line)).has_value());
  CHECK(!match_molecule(FreeElement::zero(line)).has_value());
  CHECK(!match_molecule(scale(Rational(2), molecule(line, 2, 1))).has_value());
}

}  // TEST_SUITE
