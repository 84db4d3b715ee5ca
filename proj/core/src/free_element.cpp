#include "freelip/free_element.hpp"

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

FreeElement FreeElement::from_weights(SpacePtr space,
                                      const std::map<int, Rational>& raw) {
  std::map<int, Rational> weights;
  for (const auto& [point, w] : raw) {
    if (point < 0 || point >= space->size()) {
      throw UnknownPoint("point index " + std::to_string(point) +
                         " out of range");
    }
    if (point == space->base() || w == 0) continue;  // delta(0) = 0
    weights.emplace(point, w);
  }
  return FreeElement(std::move(space), std::move(weights));
}

FreeElement FreeElement::zero(SpacePtr space) {
  return FreeElement(std::move(space), {});
}

Rational FreeElement::coefficient(int point) const {
  auto it = weights_.find(point);
  return it == weights_.end() ? Rational(0) : it->second;
}

bool FreeElement::operator==(const FreeElement& other) const {
  return weights_ == other.weights_ &&
         (space_ == other.space_ || *space_ == *other.space_);
}

LipschitzFunction LipschitzFunction::from_values(SpacePtr space,
                                                 std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != space->size()) {
    throw InvalidFunction("expected " + std::to_string(space->size()) +
                          " values, got " + std::to_string(values.size()));
  }
  if (values[space->base()] != 0) {
    throw InvalidFunction("value at the base point must be 0");
  }
  return LipschitzFunction(std::move(space), std::move(values));
}

LipschitzFunction LipschitzFunction::zero(SpacePtr space) {
  std::vector<Rational> values(space->size(), Rational(0));
  return LipschitzFunction(std::move(space), std::move(values));
}

bool LipschitzFunction::operator==(const LipschitzFunction& other) const {
  return values_ == other.values_ &&
         (space_ == other.space_ || *space_ == *other.space_);
}

FreeElement delta(SpacePtr space, int x) {
  return FreeElement::from_weights(std::move(space), {{x, Rational(1)}});
}

FreeElement molecule(SpacePtr space, int p, int q) {
  if (p == q) {
    throw DegeneratePair("molecule requires p != q");
  }
  if (p < 0 || p >= space->size() || q < 0 || q >= space->size()) {
    throw UnknownPoint("molecule endpoint out of range");
  }
  Rational inv = Rational(1) / space->dist(p, q);
  return FreeElement::from_weights(std::move(space),
                                   {{p, inv}, {q, -inv}});
}

std::set<int> support(const FreeElement& m) {
  std::set<int> points;
  for (const auto& [point, w] : m.weights()) points.insert(point);
  return points;
}

Rational pairing(const LipschitzFunction& f, const FreeElement& m) {
  require_same_space(f.space(), m.space(), "pairing");
  Rational sum = 0;
  for (const auto& [point, w] : m.weights()) sum += w * f.value(point);
  return sum;
}

Rational lip_norm(const LipschitzFunction& f) {
  const auto& space = *f.space();
  Rational best = 0;
  for (int x = 0; x < space.size(); ++x) {
    for (int y = x + 1; y < space.size(); ++y) {
      Rational slope =
          rational_abs(f.value(x) - f.value(y)) / space.dist(x, y);
      if (slope > best) best = slope;
    }
  }
  return best;
}

FreeElement add(const FreeElement& a, const FreeElement& b) {
  require_same_space(a.space(), b.space(), "add");
  std::map<int, Rational> merged = a.weights();
  for (const auto& [point, w] : b.weights()) {
    auto [it, inserted] = merged.emplace(point, w);
    if (!inserted) it->second += w;
  }
  return FreeElement::from_weights(a.space(), merged);
}

FreeElement scale(const Rational& c, const FreeElement& m) {
  std::map<int, Rational> scaled;
  if (c != 0) {
    for (const auto& [point, w] : m.weights()) scaled.emplace(point, c * w);
  }
  return FreeElement::from_weights(m.space(), scaled);
}

}  // namespace freelip
