#pragma once

#include <cstdlib>

#include "freelip/freelip.hpp"

namespace freelip::testsupport {

/// M = {0,1,2,3} on the real line, base 0. The running worked example.
inline SpacePtr line_space() {
  std::vector<std::vector<Rational>> dist(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) dist[i][j] = Rational(std::abs(i - j));
  }
  return make_space({"0", "1", "2", "3"}, dist, 0);
}

/// Unit equilateral triangle {0,a,b}.
inline SpacePtr equilateral_space() {
  return make_space({"0", "a", "b"},
                    {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 0);
}

/// delta(2) + delta(3) - 2 delta(1) on the line: norm 3, support {1,2,3},
/// two distinct minimal representations.
inline FreeElement line_example_element(const SpacePtr& line) {
  return FreeElement::from_weights(
      line, {{2, Rational(1)}, {3, Rational(1)}, {1, Rational(-2)}});
}

}  // namespace freelip::testsupport
