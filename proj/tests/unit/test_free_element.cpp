#include <doctest.h>

#include "freelip/freelip.hpp"
#include "support/generators.hpp"
#include "support/spaces.hpp"

using namespace freelip;
using namespace freelip::testsupport;

TEST_SUITE("free_element") {

TEST_CASE("from_weights canonicalizes") {
  SpacePtr line = line_space();

  FreeElement m = line_example_element(line);
  REQUIRE(m.weights().size() == 3);
  CHECK(m.coefficient(1) == Rational(-2));
  CHECK(m.coefficient(2) == Rational(1));
  CHECK(m.coefficient(3) == Rational(1));

  // a base-point entry is delta(0) = 0
  FreeElement base_only =
      FreeElement::from_weights(line, {{0, Rational(5)}});
  CHECK(base_only.is_zero());

  // explicit zero coefficients are dropped
  FreeElement zeros = FreeElement::from_weights(
      line, {{1, Rational(0)}, {2, Rational(3)}});
  CHECK(zeros.weights().size() == 1);

  CHECK_THROWS_AS(FreeElement::from_weights(line, {{9, Rational(1)}}),
                  UnknownPoint);
}

TEST_CASE("opposite weights cancel to the zero element") {
  SpacePtr line = line_space();
  FreeElement m = add(delta(line, 1), scale(Rational(-1), delta(line, 1)));
  CHECK(m.is_zero());
  CHECK(m == FreeElement::zero(line));
}

TEST_CASE("molecule weights") {
  SpacePtr line = line_space();

  FreeElement m21 = molecule(line, 2, 1);
  CHECK(m21.coefficient(2) == Rational(1));
  CHECK(m21.coefficient(1) == Rational(-1));

  FreeElement m31 = molecule(line, 3, 1);
  CHECK(m31.coefficient(3) == Rational(1, 2));
  CHECK(m31.coefficient(1) == Rational(-1, 2));

  // base endpoint is dropped
  FreeElement m10 = molecule(line, 1, 0);
  CHECK(m10.weights().size() == 1);
  CHECK(m10.coefficient(1) == Rational(1));

  CHECK_THROWS_AS(molecule(line, 2, 2), DegeneratePair);
}

TEST_CASE("support is the key set") {
  SpacePtr line = line_space();
  CHECK(support(line_example_element(line)) == std::set<int>{1, 2, 3});
  CHECK(support(FreeElement::zero(line)).empty());
  CHECK(support(molecule(line, 1, 0)) == std::set<int>{1});
}

TEST_CASE("pairing evaluates the dual product") {
  SpacePtr line = line_space();
  LipschitzFunction id = LipschitzFunction::from_values(
      line, {Rational(0), Rational(1), Rational(2), Rational(3)});

  CHECK(pairing(id, line_example_element(line)) == Rational(3));
  CHECK(pairing(id, FreeElement::zero(line)) == 0);
  // identity norms the molecule on adjacent points
  CHECK(pairing(id, molecule(line, 2, 1)) == Rational(1));

  SpacePtr other = chain_space(2);
  CHECK_THROWS_AS(pairing(LipschitzFunction::zero(other),
                          line_example_element(line)),
                  SpaceMismatch);
}

TEST_CASE("lip_norm is the max difference quotient") {
  SpacePtr line = line_space();
  LipschitzFunction id = LipschitzFunction::from_values(
      line, {Rational(0), Rational(1), Rational(2), Rational(3)});
  CHECK(lip_norm(id) == Rational(1));
  CHECK(lip_norm(LipschitzFunction::zero(line)) == 0);

  // zigzag: oracle = explicit scan over all ordered pairs
  LipschitzFunction zigzag = LipschitzFunction::from_values(
      line, {Rational(0), Rational(1), Rational(0), Rational(1)});
  Rational brute = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x == y) continue;
      Rational slope = rational_abs(zigzag.value(x) - zigzag.value(y)) /
                       line->dist(x, y);
      if (slope > brute) brute = slope;
    }
  }
  CHECK(brute == Rational(1));
  CHECK(lip_norm(zigzag) == brute);
}

TEST_CASE("from_values enforces the base convention") {
  SpacePtr line = line_space();
  CHECK_THROWS_AS(
      LipschitzFunction::from_values(line, {Rational(1), 0, 0, 0}),
      InvalidFunction);
  CHECK_THROWS_AS(LipschitzFunction::from_values(line, {Rational(0), 0}),
                  InvalidFunction);
}

TEST_CASE("vector-space identities") {
  SpacePtr line = line_space();
  FreeElement m21 = molecule(line, 2, 1);

  CHECK(add(m21, scale(Rational(-1), m21)).is_zero());

  // d(p,q) * molecule(p,q) = delta(p) - delta(q)
  FreeElement diff = FreeElement::from_weights(
      line, {{3, Rational(1)}, {1, Rational(-1)}});
  CHECK(scale(line->dist(3, 1), molecule(line, 3, 1)) == diff);

  FreeElement sum = add(
      FreeElement::from_weights(line, {{2, Rational(1)}, {1, Rational(-1)}}),
      FreeElement::from_weights(line, {{3, Rational(1)}, {1, Rational(-1)}}));
  CHECK(sum == line_example_element(line));

  CHECK_THROWS_AS(add(m21, molecule(chain_space(3), 2, 1)), SpaceMismatch);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 40; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 6), rng());
    LipschitzFunction f = random_function(space, rng);
    LipschitzFunction g = random_function(space, rng);
    FreeElement m1 = random_element(space, rng);
    FreeElement m2 = random_element(space, rng);
    Rational c = random_rational(rng);

    CHECK(pairing(f, add(m1, m2)) == pairing(f, m1) + pairing(f, m2));
    CHECK(pairing(f, scale(c, m1)) == c * pairing(f, m1));

    std::vector<Rational> fg(space->size());
    for (int i = 0; i < space->size(); ++i) fg[i] = f.value(i) + g.value(i);
    LipschitzFunction f_plus_g =
        LipschitzFunction::from_values(space, std::move(fg));
    CHECK(pairing(f_plus_g, m1) == pairing(f, m1) + pairing(g, m1));
  }
}

TEST_CASE("duality bound |<f,m>| <= lip(f) * norm(m)") {
  std::mt19937_64 rng(202);
  for (int round = 0; round < 40; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 6), rng());
    LipschitzFunction f = random_function(space, rng);
    FreeElement m = random_element(space, rng);
    CHECK(rational_abs(pairing(f, m)) <= lip_norm(f) * free_norm(m).value);
  }
}

TEST_CASE("lip_norm vanishes only on the zero function") {
  std::mt19937_64 rng(303);
  for (int round = 0; round < 40; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 6), rng());
    LipschitzFunction f = random_function(space, rng);
    bool is_zero = f == LipschitzFunction::zero(space);
    CHECK((lip_norm(f) == 0) == is_zero);
  }
}

TEST_CASE("support of a sum is inside the union of supports") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 40; ++round) {
    SpacePtr space = random_space(draw(rng, 2, 6), rng());
    FreeElement m1 = random_element(space, rng);
    FreeElement m2 = random_element(space, rng);
    std::set<int> unioned = support(m1);
    for (int x : support(m2)) unioned.insert(x);
    for (int x : support(add(m1, m2))) CHECK(unioned.count(x) == 1);
  }
}

}  // TEST_SUITE
