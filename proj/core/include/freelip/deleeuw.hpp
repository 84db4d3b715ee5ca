#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "freelip/free_element.hpp"
#include "freelip/kr_solver.hpp"

namespace freelip {

/// A signed measure on the off-diagonal pair set M~ = {(x,y) : x != y},
/// stored sparsely in canonical form (no zero masses, no diagonal pairs).
///
/// Over a finite space this pair set is its own compactification, so the
/// adjoint of any measure lands in the free space. That is what fails in
/// the infinite setting: norm-attaining representations of a limit like
/// delta(1) on [0,1] can concentrate on the diagonal at infinity, where no
/// sparse pair vector can follow them. Nothing of that pathology is
/// representable here by construction.
class DeLeeuwMeasure {
 public:
  /// Throws UnknownPoint for out-of-range indices, DegeneratePair for a
  /// diagonal key. Zero masses are dropped.
  static DeLeeuwMeasure from_masses(
      SpacePtr space, const std::map<std::pair<int, int>, Rational>& masses);

  static DeLeeuwMeasure zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::map<std::pair<int, int>, Rational>& mass() const { return mass_; }
  bool is_zero() const { return mass_.empty(); }
  bool is_nonnegative() const;

  Rational total_variation() const;

  bool operator==(const DeLeeuwMeasure& other) const;

 private:
  DeLeeuwMeasure(SpacePtr space, std::map<std::pair<int, int>, Rational> mass)
      : space_(std::move(space)), mass_(std::move(mass)) {}

  SpacePtr space_;
  std::map<std::pair<int, int>, Rational> mass_;
};

/// A plain weight function on M with rational values in [0,1]. Unlike a
/// LipschitzFunction it need not vanish at the base point; it only ever
/// multiplies measures. Throws WeightOutOfRange outside [0,1].
class WeightFunction {
 public:
  static WeightFunction from_values(SpacePtr space,
                                    std::vector<Rational> values);

  static WeightFunction one(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(int i) const { return values_.at(i); }

 private:
  WeightFunction(SpacePtr space, std::vector<Rational> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  SpacePtr space_;
  std::vector<Rational> values_;
};

/// Dense pair-indexed values, the codomain of the difference-quotient map.
using PairValues = std::map<std::pair<int, int>, Rational>;

/// The de Leeuw map: Phi f(x,y) = (f(x) - f(y)) / d(x,y) over all ordered
/// pairs. Its sup norm equals lip_norm(f).
PairValues de_leeuw(const LipschitzFunction& f);

/// Same quotient for an arbitrary value vector (weight functions do not
/// vanish at the base, so they are not LipschitzFunctions).
PairValues difference_quotient(const SpacePtr& space,
                               const std::vector<Rational>& values);

/// The adjoint Phi*: mass(x,y) integrates the molecule m_xy, so
/// <f, adjoint(mu)> = sum mass(x,y) * Phi f(x,y) for every f.
FreeElement adjoint(const DeLeeuwMeasure& mu);

/// Pushforward along the coordinate swap (x,y) -> (y,x). An involution;
/// adjoint(mu + reflect(mu)) = 0.
DeLeeuwMeasure reflect(const DeLeeuwMeasure& mu);

/// Jordan decomposition: (positive part, negative part), both nonnegative
/// with disjoint supports, mu = pos - neg.
std::pair<DeLeeuwMeasure, DeLeeuwMeasure> jordan(const DeLeeuwMeasure& mu);

/// Replaces each negative atom by its reflected positive atom, which
/// represents the same functional: result = pos + reflect(neg). Output is
/// nonnegative, has the same adjoint, and never larger total variation.
DeLeeuwMeasure symmetrize(const DeLeeuwMeasure& mu);

/// Union of first and second coordinates of a pair set.
std::set<int> shadow(const std::set<std::pair<int, int>>& pairs);

std::set<std::pair<int, int>> support_pairs(const DeLeeuwMeasure& mu);

/// A positive measure with adjoint m, total variation equal to the free
/// norm of m, and every atom's endpoints inside support(m) + {base}.
/// Computed by solving the flow problem on the subspace spanned by
/// support(m) and the base, then changing variables mass = a * d. The
/// result is the solver's deterministic choice; valid representations are
/// not unique in general (verify_representation accepts any).
DeLeeuwMeasure minimal_representation(const FreeElement& m);

/// Checker for the minimal-representation contract: mu >= 0, adjoint(mu)
/// equals m, total variation equals the free norm of m, and the shadow of
/// the support is contained in support(m) + {base}.
bool verify_representation(const FreeElement& m, const DeLeeuwMeasure& mu);

/// Test probe for the support inclusion law: support(m) is contained in
/// the shadow of the support of any measure representing m. Throws
/// NotARepresentation unless adjoint(mu) == m. A false return indicates an
/// implementation bug, never a property of valid inputs.
bool support_inclusion_check(const FreeElement& m, const DeLeeuwMeasure& mu);

enum class Coordinate { first = 1, second = 2 };

/// Reweights mass(x,y) by h(x) (Coordinate::first) or h(y)
/// (Coordinate::second), dropping zeros. For nonnegative mu the output is
/// squeezed between 0 and mu pointwise.
DeLeeuwMeasure weighted_restriction(const DeLeeuwMeasure& mu,
                                    const WeightFunction& h, Coordinate which);

/// Unit mass on the ordered pair (x,y).
DeLeeuwMeasure dirac(SpacePtr space, int x, int y);

DeLeeuwMeasure add(const DeLeeuwMeasure& a, const DeLeeuwMeasure& b);
DeLeeuwMeasure scale(const Rational& c, const DeLeeuwMeasure& mu);

}  // namespace freelip
