#pragma once

#include <map>
#include <set>
#include <utility>

#include "freelip/free_element.hpp"

namespace freelip {

/// Certified optimum of the Kantorovich-Rubinstein transshipment problem
///   minimize  sum a_xy * d(x,y)
///   subject to  sum a_xy * (delta(x) - delta(y)) = m,  a >= 0
/// together with the dual optimum: a 1-Lipschitz witness attaining
/// <witness, m> = value. `flow` keeps positive entries only, so a basic
/// optimum has at most (#points - 1) atoms.
struct NormSolution {
  Rational value;
  std::map<std::pair<int, int>, Rational> flow;
  LipschitzFunction witness;
};

/// The free-space norm of m, solved by primal network simplex over exact
/// rationals on the complete directed graph, Bland's pivot rule, initial
/// basis = star routing through the base point. Deterministic: ties break
/// toward the lowest pair index (x*n + y). The zero element yields value 0,
/// empty flow and the zero witness.
NormSolution free_norm(const FreeElement& m);

/// Same problem with a set of ordered pairs removed from the arc set. The
/// extremal vertex oracle uses this to decide convex-hull membership; note
/// the witness is then only guaranteed 1-Lipschitz on the surviving arcs.
/// Requires at least 3 points when an excluded pair touches the base.
NormSolution free_norm_excluding(
    const FreeElement& m, const std::set<std::pair<int, int>>& excluded);

/// Certificate checker, independent of solver internals. True iff
///   value = sum a_xy d(x,y),  all a_xy > 0,
///   the flow's divergence equals m with the base absorbing the imbalance,
///   lip_norm(witness) <= 1 and <witness, m> = value,
///   a_xy > 0 implies witness(x) - witness(y) = d(x,y).
bool verify_solution(const FreeElement& m, const NormSolution& s);

}  // namespace freelip
