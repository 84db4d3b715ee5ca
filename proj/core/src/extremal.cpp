#include "freelip/extremal.hpp"

#include <stdexcept>

#include "freelip/errors.hpp"

namespace freelip {

namespace {

void check_pair(const SpacePtr& space, int p, int q, const char* what) {
  if (p < 0 || p >= space->size() || q < 0 || q >= space->size()) {
    throw UnknownPoint(std::string(what) + ": endpoint out of range");
  }
  if (p == q) {
    throw DegeneratePair(std::string(what) + " requires two distinct points");
  }
}

}  // namespace

ExtremalityCertificate is_extreme_molecule(const SpacePtr& space, int p,
                                           int q) {
  check_pair(space, p, q, "is_extreme_molecule");
  const Rational d_pq = space->dist(p, q);

  std::optional<Rational> best;
  for (int x = 0; x < space->size(); ++x) {
    if (x == p || x == q) continue;
    Rational slack = space->dist(p, x) + space->dist(q, x) - d_pq;
    if (slack <= 0) {
      // metric validity forces slack == 0: x lies metrically between p, q
      ExtremalityCertificate cert;
      cert.verdict = Verdict::not_extreme;
      cert.pair = {p, q};
      cert.violating_point = x;
      return cert;
    }
    Rational ratio = slack / std::min(space->dist(p, x), space->dist(q, x));
    if (!best || ratio < *best) best = ratio;
  }

  ExtremalityCertificate cert;
  cert.verdict = Verdict::extreme;
  cert.pair = {p, q};
  cert.exposed_constant =
      best ? ExposedBound::finite(*best) : ExposedBound::unbounded();
  return cert;
}

std::optional<ExposedBound> strongly_exposed_constant(const SpacePtr& space,
                                                      int p, int q) {
  check_pair(space, p, q, "strongly_exposed_constant");
  ExtremalityCertificate cert = is_extreme_molecule(space, p, q);
  if (cert.verdict != Verdict::extreme) return std::nullopt;
  return cert.exposed_constant;
}

std::vector<std::pair<int, int>> enumerate_extreme(const SpacePtr& space) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < space->size(); ++p) {
    for (int q = p + 1; q < space->size(); ++q) {
      if (is_extreme_molecule(space, p, q).verdict == Verdict::extreme) {
        pairs.emplace_back(p, q);
      }
    }
  }
  return pairs;
}

std::optional<std::pair<int, int>> match_molecule(const FreeElement& m) {
  const auto& space = m.space();
  if (m.weights().size() > 2 || m.is_zero()) return std::nullopt;
  for (int p = 0; p < space->size(); ++p) {
    for (int q = 0; q < space->size(); ++q) {
      if (p == q) continue;
      if (molecule(space, p, q) == m) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

bool is_extreme_oracle(const FreeElement& m) {
  if (free_norm(m).value != 1) return false;
  auto pq = match_molecule(m);
  if (!pq) return false;
  auto [p, q] = *pq;

  if (m.space()->size() == 2) return true;  // no other molecules exist

  // m in conv(other signed molecules) iff some flow of cost exactly 1
  // represents m without the arcs (p,q), (q,p); the restricted optimum can
  // never drop below the norm, so membership is "optimum still 1".
  NormSolution restricted = free_norm_excluding(m, {{p, q}, {q, p}});
  return restricted.value > 1;
}

WeightFunction bump_weight(const SpacePtr& space, int x, int z) {
  check_pair(space, x, z, "bump_weight");
  const Rational radius = space->dist(x, z);
  std::vector<Rational> values(space->size());
  for (int w = 0; w < space->size(); ++w) {
    Rational v = 1 - space->dist(w, x) / radius;
    values[w] = v > 0 ? v : Rational(0);
  }
  return WeightFunction::from_values(space, std::move(values));
}

ExtremalityCertificate localize(const FreeElement& m) {
  return localize(m, [](const SpacePtr& space, int x, int z) {
    return bump_weight(space, x, z);
  });
}

ExtremalityCertificate localize(const FreeElement& m, const BumpFn& bump) {
  if (free_norm(m).value != 1) {
    throw NotUnitNorm("localize requires a unit-norm element");
  }
  const SpacePtr& space = m.space();
  DeLeeuwMeasure mu = minimal_representation(m);
  const auto first_pair = mu.mass().begin()->first;
  const auto [x, y] = first_pair;

  // Expel every other point from one coordinate of the support at a time.
  // For an extreme element each renormalized restriction must keep
  // representing m; a failure is a constructive non-extremality witness.
  for (Coordinate which : {Coordinate::first, Coordinate::second}) {
    int anchor = which == Coordinate::first ? x : y;
    for (int z = 0; z < space->size(); ++z) {
      if (z == x || z == y) continue;
      DeLeeuwMeasure restricted =
          weighted_restriction(mu, bump(space, anchor, z), which);
      if (restricted.is_zero()) {
        ExtremalityCertificate cert;
        cert.verdict = Verdict::not_extreme;
        return cert;
      }
      DeLeeuwMeasure renormalized =
          scale(Rational(1) / restricted.total_variation(), restricted);
      if (!(adjoint(renormalized) == m)) {
        ExtremalityCertificate cert;
        cert.verdict = Verdict::not_extreme;
        return cert;
      }
      mu = renormalized;
    }
  }

  // All mass now sits over {x,y}; a positive unit-norm measure on both
  // (x,y) and (y,x) could not represent a unit-norm element, so the
  // surviving measure is the single Dirac atom on (x,y).
  if (!(mu == dirac(space, x, y))) {
    throw std::logic_error("localization did not collapse to a Dirac atom");
  }

  ExtremalityCertificate cert = is_extreme_molecule(space, x, y);
  if (cert.verdict == Verdict::extreme) cert.localized = mu;
  return cert;
}

ExtremalityCertificate oracle_certificate(const FreeElement& m) {
  auto pq = match_molecule(m);
  if (!pq || free_norm(m).value != 1) {
    ExtremalityCertificate cert;
    cert.verdict = Verdict::not_a_molecule;
    return cert;
  }
  if (is_extreme_oracle(m)) {
    ExtremalityCertificate cert;
    cert.verdict = Verdict::extreme;
    cert.pair = *pq;
    cert.exposed_constant =
        strongly_exposed_constant(m.space(), pq->first, pq->second);
    return cert;
  }
  ExtremalityCertificate cert;
  cert.verdict = Verdict::not_extreme;
  return cert;
}

}  // namespace freelip
