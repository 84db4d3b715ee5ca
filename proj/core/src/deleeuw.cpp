#include "freelip/deleeuw.hpp"

#include <algorithm>

#include "freelip/errors.hpp"

namespace freelip {

namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b,
                        const char* what) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw SpaceMismatch(std::string(what) +
                      ": operands live over different spaces");
}

}  // namespace

DeLeeuwMeasure DeLeeuwMeasure::from_masses(
    SpacePtr space, const std::map<std::pair<int, int>, Rational>& masses) {
  std::map<std::pair<int, int>, Rational> mass;
  for (const auto& [pair, w] : masses) {
    auto [x, y] = pair;
    if (x < 0 || y < 0 || x >= space->size() || y >= space->size()) {
      throw UnknownPoint("pair index out of range");
    }
    if (x == y) {
      throw DegeneratePair("diagonal pair (" + space->label(x) + ", " +
                           space->label(y) + ") is not in the pair set");
    }
    if (w != 0) mass.emplace(pair, w);
  }
  return DeLeeuwMeasure(std::move(space), std::move(mass));
}

DeLeeuwMeasure DeLeeuwMeasure::zero(SpacePtr space) {
  return DeLeeuwMeasure(std::move(space), {});
}

bool DeLeeuwMeasure::is_nonnegative() const {
  return std::all_of(mass_.begin(), mass_.end(),
                     [](const auto& entry) { return entry.second > 0; });
}

Rational DeLeeuwMeasure::total_variation() const {
  Rational total = 0;
  for (const auto& [pair, w] : mass_) total += rational_abs(w);
  return total;
}

bool DeLeeuwMeasure::operator==(const DeLeeuwMeasure& other) const {
  return mass_ == other.mass_ &&
         (space_ == other.space_ || *space_ == *other.space_);
}

WeightFunction WeightFunction::from_values(SpacePtr space,
                                           std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != space->size()) {
    throw WeightOutOfRange("expected " + std::to_string(space->size()) +
                           " values, got " + std::to_string(values.size()));
  }
  for (int i = 0; i < space->size(); ++i) {
    if (values[i] < 0 || values[i] > 1) {
      throw WeightOutOfRange("weight at " + space->label(i) +
                             " outside [0,1]: " + format_rational(values[i]));
    }
  }
  return WeightFunction(std::move(space), std::move(values));
}

WeightFunction WeightFunction::one(SpacePtr space) {
  std::vector<Rational> values(space->size(), Rational(1));
  return WeightFunction(std::move(space), std::move(values));
}

PairValues difference_quotient(const SpacePtr& space,
                               const std::vector<Rational>& values) {
  PairValues out;
  for (int x = 0; x < space->size(); ++x) {
    for (int y = 0; y < space->size(); ++y) {
      if (x == y) continue;
      out[{x, y}] = (values[x] - values[y]) / space->dist(x, y);
    }
  }
  return out;
}

PairValues de_leeuw(const LipschitzFunction& f) {
  return difference_quotient(f.space(), f.values());
}

FreeElement adjoint(const DeLeeuwMeasure& mu) {
  std::map<int, Rational> weights;
  const auto& space = *mu.space();
  for (const auto& [pair, w] : mu.mass()) {
    auto [x, y] = pair;
    Rational a = w / space.dist(x, y);
    weights[x] += a;
    weights[y] -= a;
  }
  return FreeElement::from_weights(mu.space(), weights);
}

DeLeeuwMeasure reflect(const DeLeeuwMeasure& mu) {
  std::map<std::pair<int, int>, Rational> mass;
  for (const auto& [pair, w] : mu.mass()) {
    mass[{pair.second, pair.first}] = w;
  }
  return DeLeeuwMeasure::from_masses(mu.space(), mass);
}

std::pair<DeLeeuwMeasure, DeLeeuwMeasure> jordan(const DeLeeuwMeasure& mu) {
  std::map<std::pair<int, int>, Rational> pos, neg;
  for (const auto& [pair, w] : mu.mass()) {
    if (w > 0) {
      pos.emplace(pair, w);
    } else {
      neg.emplace(pair, -w);
    }
  }
  return {DeLeeuwMeasure::from_masses(mu.space(), pos),
          DeLeeuwMeasure::from_masses(mu.space(), neg)};
}

DeLeeuwMeasure symmetrize(const DeLeeuwMeasure& mu) {
  auto [pos, neg] = jordan(mu);
  return add(pos, reflect(neg));
}

std::set<int> shadow(const std::set<std::pair<int, int>>& pairs) {
  std::set<int> points;
  for (const auto& [x, y] : pairs) {
    points.insert(x);
    points.insert(y);
  }
  return points;
}

std::set<std::pair<int, int>> support_pairs(const DeLeeuwMeasure& mu) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [pair, w] : mu.mass()) pairs.insert(pair);
  return pairs;
}

DeLeeuwMeasure minimal_representation(const FreeElement& m) {
  const SpacePtr& parent = m.space();
  if (m.is_zero()) return DeLeeuwMeasure::zero(parent);

  // Solve on the subspace spanned by support(m) and the base; this pins the
  // shadow inside support(m) + {base}, and the subspace optimum equals the
  // full-space norm because detours can always be shortcut.
  std::vector<int> sub_to_parent;
  sub_to_parent.push_back(parent->base());
  for (int x : support(m)) sub_to_parent.push_back(x);
  std::sort(sub_to_parent.begin(), sub_to_parent.end());

  const int s = static_cast<int>(sub_to_parent.size());
  std::vector<std::string> labels(s);
  std::vector<std::vector<Rational>> dist(s, std::vector<Rational>(s));
  int sub_base = 0;
  for (int i = 0; i < s; ++i) {
    labels[i] = parent->label(sub_to_parent[i]);
    if (sub_to_parent[i] == parent->base()) sub_base = i;
    for (int j = 0; j < s; ++j) {
      dist[i][j] = parent->dist(sub_to_parent[i], sub_to_parent[j]);
    }
  }
  SpacePtr sub = make_space(std::move(labels), std::move(dist), sub_base);

  std::map<int, Rational> sub_weights;
  for (int i = 0; i < s; ++i) {
    Rational w = m.coefficient(sub_to_parent[i]);
    if (w != 0) sub_weights.emplace(i, w);
  }
  NormSolution solution =
      free_norm(FreeElement::from_weights(sub, sub_weights));

  std::map<std::pair<int, int>, Rational> mass;
  for (const auto& [pair, a] : solution.flow) {
    int x = sub_to_parent[pair.first];
    int y = sub_to_parent[pair.second];
    mass[{x, y}] = a * parent->dist(x, y);
  }
  return DeLeeuwMeasure::from_masses(parent, mass);
}

bool verify_representation(const FreeElement& m, const DeLeeuwMeasure& mu) {
  require_same_space(m.space(), mu.space(), "verify_representation");
  if (!mu.is_nonnegative()) return false;
  if (!(adjoint(mu) == m)) return false;
  if (mu.total_variation() != free_norm(m).value) return false;
  std::set<int> allowed = support(m);
  allowed.insert(m.space()->base());
  for (int x : shadow(support_pairs(mu))) {
    if (!allowed.count(x)) return false;
  }
  return true;
}

bool support_inclusion_check(const FreeElement& m, const DeLeeuwMeasure& mu) {
  require_same_space(m.space(), mu.space(), "support_inclusion_check");
  if (!(adjoint(mu) == m)) {
    throw NotARepresentation("adjoint of the measure differs from the element");
  }
  std::set<int> hull = shadow(support_pairs(mu));
  for (int x : support(m)) {
    if (!hull.count(x)) return false;
  }
  return true;
}

DeLeeuwMeasure weighted_restriction(const DeLeeuwMeasure& mu,
                                    const WeightFunction& h,
                                    Coordinate which) {
  require_same_space(mu.space(), h.space(), "weighted_restriction");
  std::map<std::pair<int, int>, Rational> mass;
  for (const auto& [pair, w] : mu.mass()) {
    int anchor = which == Coordinate::first ? pair.first : pair.second;
    Rational scaled = w * h.value(anchor);
    if (scaled != 0) mass.emplace(pair, scaled);
  }
  return DeLeeuwMeasure::from_masses(mu.space(), mass);
}

DeLeeuwMeasure dirac(SpacePtr space, int x, int y) {
  return DeLeeuwMeasure::from_masses(std::move(space), {{{x, y}, Rational(1)}});
}

DeLeeuwMeasure add(const DeLeeuwMeasure& a, const DeLeeuwMeasure& b) {
  require_same_space(a.space(), b.space(), "add");
  std::map<std::pair<int, int>, Rational> merged = a.mass();
  for (const auto& [pair, w] : b.mass()) {
    auto [it, inserted] = merged.emplace(pair, w);
    if (!inserted) it->second += w;
  }
  return DeLeeuwMeasure::from_masses(a.space(), merged);
}

DeLeeuwMeasure scale(const Rational& c, const DeLeeuwMeasure& mu) {
  std::map<std::pair<int, int>, Rational> scaled;
  if (c != 0) {
    for (const auto& [pair, w] : mu.mass()) scaled.emplace(pair, c * w);
  }
  return DeLeeuwMeasure::from_masses(mu.space(), scaled);
}

}  // namespace freelip
