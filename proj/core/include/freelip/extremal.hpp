#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "freelip/deleeuw.hpp"
#include "freelip/free_element.hpp"

namespace freelip {

enum class Verdict { extreme, not_extreme, not_a_molecule };

/// The best constant C in
///   d(p,x) + d(q,x) - d(p,q) >= C * min{d(p,x), d(q,x)}
/// over competing points x; `unbounded` when no competing point exists
/// (the two-point space).
class ExposedBound {
 public:
  static ExposedBound finite(Rational c) { return ExposedBound(std::move(c), false); }
  static ExposedBound unbounded() { return ExposedBound(Rational(0), true); }

  bool is_unbounded() const { return unbounded_; }
  const Rational& value() const { return value_; }

  bool operator==(const ExposedBound& other) const {
    return unbounded_ == other.unbounded_ &&
           (unbounded_ || value_ == other.value_);
  }

 private:
  ExposedBound(Rational v, bool u) : value_(std::move(v)), unbounded_(u) {}
  Rational value_;
  bool unbounded_;
};

/// Verdict plus witness data. Invariants:
///   extreme      => pair set, violating_point empty, exposed_constant set.
///   not_extreme with pair set => violating_point set, and it witnesses
///                 exact equality d(p,x) + d(q,x) = d(p,q).
struct ExtremalityCertificate {
  Verdict verdict;
  std::optional<std::pair<int, int>> pair;
  std::optional<int> violating_point;
  std::optional<ExposedBound> exposed_constant;
  std::optional<DeLeeuwMeasure> localized;
};

/// Metric criterion: the molecule m_pq is extreme iff every x outside
/// {p,q} satisfies d(p,x) + d(q,x) > d(p,q). NotExtreme certificates carry
/// the first violating x in point order; Extreme ones carry the exposed
/// constant. Throws DegeneratePair when p == q.
ExtremalityCertificate is_extreme_molecule(const SpacePtr& space, int p,
                                           int q);

/// The largest admissible exposed constant, or nullopt when some point
/// yields zero slack (molecule not strongly exposed). Over a finite space
/// this is present exactly when is_extreme_molecule says extreme.
std::optional<ExposedBound> strongly_exposed_constant(const SpacePtr& space,
                                                      int p, int q);

/// All unordered pairs p < q (point order) whose molecules are extreme,
/// in lexicographic order.
std::vector<std::pair<int, int>> enumerate_extreme(const SpacePtr& space);

/// If m equals molecule(p,q) for some ordered pair, that pair (the
/// lexicographically first); otherwise nullopt.
std::optional<std::pair<int, int>> match_molecule(const FreeElement& m);

/// Brute-force vertex test, independent of the metric criterion: m is
/// extreme iff it has unit norm, equals some molecule m_pq, and is not a
/// convex combination of the other signed molecules. The membership LP is
/// decided by the exact flow solver: after the change of variables
/// lambda = a * d, "m in conv(molecules without the pair)" is exactly
/// "the flow optimum excluding arcs (p,q) and (q,p) still equals 1".
bool is_extreme_oracle(const FreeElement& m);

/// The cone bump h(w) = max(0, 1 - d(w,x)/d(x,z)): a [0,1] weight with
/// h(x) = 1 and h(z) = 0. Throws DegeneratePair when x == z.
WeightFunction bump_weight(const SpacePtr& space, int x, int z);

using BumpFn = std::function<WeightFunction(const SpacePtr&, int, int)>;

/// Executable localization of the support of a unit-norm element:
/// starting from a positive minimal representation, repeatedly restrict by
/// bump weights to expel every point z from the first and then the second
/// coordinate of the support, renormalizing each time. For an extreme m
/// every restriction keeps representing m and the measure collapses to a
/// single Dirac atom, whose pair is then cross-checked with the metric
/// criterion. Any restriction that stops representing m certifies
/// NotExtreme. Throws NotUnitNorm unless the free norm of m is 1.
ExtremalityCertificate localize(const FreeElement& m);

/// Same algorithm with a custom bump family; any valid bump (h(x)=1,
/// h(z)=0, values in [0,1]) must yield the same verdict.
ExtremalityCertificate localize(const FreeElement& m, const BumpFn& bump);

/// Oracle-backed certificate for arbitrary elements, used by the CLI:
/// NotAMolecule when m matches no signed molecule or is not unit norm,
/// otherwise the oracle's verdict for the matched pair.
ExtremalityCertificate oracle_certificate(const FreeElement& m);

}  // namespace freelip
