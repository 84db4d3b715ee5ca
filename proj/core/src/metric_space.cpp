#include "freelip/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "freelip/errors.hpp"

namespace freelip {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<std::vector<Rational>> dist,
                                     int base)
    : points_(std::move(points)), dist_(std::move(dist)), base_(base) {
  for (int i = 0; i < size(); ++i) index_[points_[i]] = i;
}

FiniteMetricSpace FiniteMetricSpace::build(
    std::vector<std::string> points, std::vector<std::vector<Rational>> dist,
    int base) {
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    throw DimensionMismatch("a metric space needs at least 2 points, got " +
                            std::to_string(n));
  }
  if (base < 0 || base >= n) {
    throw DimensionMismatch("base index " + std::to_string(base) +
                            " out of range for " + std::to_string(n) +
                            " points");
  }
  std::map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    const std::string& label = points[i];
    if (label.empty()) {
      throw DimensionMismatch("point " + std::to_string(i) +
                              " has an empty label");
    }
    if (label.find("->") != std::string::npos) {
      throw DimensionMismatch("label \"" + label +
                              "\" contains the reserved pair separator "
                              "\"->\"");
    }
    if (!seen.emplace(label, i).second) {
      throw DimensionMismatch("duplicate label \"" + label + "\"");
    }
  }
  if (static_cast<int>(dist.size()) != n) {
    throw DimensionMismatch("distance matrix has " +
                            std::to_string(dist.size()) + " rows, expected " +
                            std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n) {
      throw DimensionMismatch("distance matrix row " + std::to_string(i) +
                              " has " + std::to_string(dist[i].size()) +
                              " entries, expected " + std::to_string(n));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (dist[i][i] != 0) {
      throw NonPositiveDistance(i, i,
                                "d(" + points[i] + ", " + points[i] +
                                    ") must be 0");
    }
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) {
        throw AsymmetricDistance(i, j,
                                 "d(" + points[i] + ", " + points[j] +
                                     ") != d(" + points[j] + ", " + points[i] +
                                     ")");
      }
      if (dist[i][j] <= 0) {
        throw NonPositiveDistance(i, j,
                                  "d(" + points[i] + ", " + points[j] +
                                      ") must be positive");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          throw TriangleViolation(
              i, j, k,
              "d(" + points[i] + ", " + points[k] + ") > d(" + points[i] +
                  ", " + points[j] + ") + d(" + points[j] + ", " + points[k] +
                  ")");
        }
      }
    }
  }
  return FiniteMetricSpace(std::move(points), std::move(dist), base);
}

std::optional<int> FiniteMetricSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteMetricSpace::operator==(const FiniteMetricSpace& other) const {
  return base_ == other.base_ && points_ == other.points_ &&
         dist_ == other.dist_;
}

SpacePtr make_space(std::vector<std::string> points,
                    std::vector<std::vector<Rational>> dist, int base) {
  return std::make_shared<const FiniteMetricSpace>(
      FiniteMetricSpace::build(std::move(points), std::move(dist), base));
}

SpacePtr chain_space(int n) {
  if (n < 1) {
    throw DimensionMismatch("chain_space needs n >= 1, got " +
                            std::to_string(n));
  }
  std::vector<std::string> points;
  points.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    points.push_back(format_rational(Rational(k, n)));
  }
  std::vector<std::vector<Rational>> dist(n + 1,
                                          std::vector<Rational>(n + 1, 0));
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      dist[j][k] = Rational(j > k ? j - k : k - j, n);
    }
  }
  return make_space(std::move(points), std::move(dist), 0);
}

std::vector<std::vector<Rational>> shortest_path_closure(
    std::vector<std::vector<Rational>> dist) {
  const int n = static_cast<int>(dist.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational via = dist[i][k] + dist[k][j];
        if (via < dist[i][j]) dist[i][j] = via;
      }
    }
  }
  return dist;
}

namespace {

// Engine output used directly (modulo, not uniform_int_distribution) so the
// stream is identical across standard library implementations.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

SpacePtr random_space(int n, std::uint64_t seed, const Rational& scale) {
  if (n < 2) {
    throw DimensionMismatch("random_space needs n >= 2, got " +
                            std::to_string(n));
  }
  if (scale <= 0) {
    throw DimensionMismatch("random_space needs a positive scale");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));

  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, 0));
  if (seed % 4 == 0) {
    // Collinear rational points: every in-between point meets the triangle
    // inequality with equality, so these spaces are dense in degenerate
    // (non-extreme) molecule instances.
    std::vector<int> coords;
    int next = 0;
    while (static_cast<int>(coords.size()) < n) {
      next += draw(rng, 1, 6);
      coords.push_back(next);
    }
    const int denom = draw(rng, 1, 4);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] =
            Rational(std::abs(coords[i] - coords[j]), denom) * scale;
      }
    }
  } else {
    const int denom = draw(rng, 1, 6);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Rational d = Rational(draw(rng, 1, 3 * n), denom) * scale;
        dist[i][j] = d;
        dist[j][i] = d;
      }
    }
    dist = shortest_path_closure(std::move(dist));
  }
  const int base = draw(rng, 0, n - 1);
  return make_space(std::move(points), std::move(dist), base);
}

}  // namespace freelip
