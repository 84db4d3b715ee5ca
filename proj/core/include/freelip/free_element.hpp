#pragma once

#include <map>
#include <set>

#include "freelip/metric_space.hpp"
#include "freelip/rational.hpp"

namespace freelip {

/// An element of the Lipschitz-free space F(M) in canonical form: a sparse
/// signed weight vector over the non-base points. The base point never
/// appears as a key (delta of the base point is zero) and no stored
/// coefficient is zero, so the support is just the key set.
class FreeElement {
 public:
  /// Canonicalizes: merges nothing (input is a map), drops the base entry
  /// and zero coefficients. Throws UnknownPoint for out-of-range keys.
  static FreeElement from_weights(SpacePtr space,
                                  const std::map<int, Rational>& raw);

  static FreeElement zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::map<int, Rational>& weights() const { return weights_; }
  bool is_zero() const { return weights_.empty(); }

  /// Coefficient of delta(point); zero for absent keys and for the base.
  Rational coefficient(int point) const;

  bool operator==(const FreeElement& other) const;

 private:
  FreeElement(SpacePtr space, std::map<int, Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {}

  SpacePtr space_;
  std::map<int, Rational> weights_;
};

/// A real function on M vanishing at the base point; an element of the
/// dual space Lip_0(M), stored as a dense value vector in point order.
class LipschitzFunction {
 public:
  /// Throws InvalidFunction unless values has one entry per point and
  /// values[base] == 0.
  static LipschitzFunction from_values(SpacePtr space,
                                       std::vector<Rational> values);

  static LipschitzFunction zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(int i) const { return values_.at(i); }

  bool operator==(const LipschitzFunction& other) const;

 private:
  LipschitzFunction(SpacePtr space, std::vector<Rational> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  SpacePtr space_;
  std::vector<Rational> values_;
};

/// delta(x): the evaluation functional, canonicalized (zero if x is base).
FreeElement delta(SpacePtr space, int x);

/// The elementary molecule (delta(p) - delta(q)) / d(p,q). Throws
/// DegeneratePair when p == q.
FreeElement molecule(SpacePtr space, int p, int q);

/// Key set of the canonical weights; never contains the base point.
std::set<int> support(const FreeElement& m);

/// Dual pairing <f, m> = sum of weights[x] * f(x). Exact and bilinear.
/// Throws SpaceMismatch when f and m live over different spaces.
Rational pairing(const LipschitzFunction& f, const FreeElement& m);

/// The Lipschitz constant: max over ordered pairs of |f(x)-f(y)| / d(x,y).
Rational lip_norm(const LipschitzFunction& f);

FreeElement add(const FreeElement& a, const FreeElement& b);
FreeElement scale(const Rational& c, const FreeElement& m);

}  // namespace freelip
