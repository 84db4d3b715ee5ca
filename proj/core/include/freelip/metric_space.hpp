#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freelip/rational.hpp"

namespace freelip {

/// A finite pointed metric space: distinct point labels, an exact rational
/// distance matrix and a distinguished base point. Instances are validated
/// eagerly at construction and immutable afterwards, so they can be shared
/// freely across threads.
class FiniteMetricSpace {
 public:
  /// Validates and constructs. Checks, in order: label sanity (distinct,
  /// non-empty, no "->" substring, which is reserved as the pair separator
  /// in serialized form), matrix shape, zero diagonal, symmetry, positivity
  /// off the diagonal, and the triangle inequality over all triples.
  static FiniteMetricSpace build(std::vector<std::string> points,
                                 std::vector<std::vector<Rational>> dist,
                                 int base);

  int size() const { return static_cast<int>(points_.size()); }
  int base() const { return base_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(int i) const { return points_.at(i); }
  const Rational& dist(int i, int j) const { return dist_.at(i).at(j); }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  std::optional<int> index_of(const std::string& label) const;

  /// Structural equality: same labels in the same order, same base, same
  /// distance matrix.
  bool operator==(const FiniteMetricSpace& other) const;

 private:
  FiniteMetricSpace(std::vector<std::string> points,
                    std::vector<std::vector<Rational>> dist, int base);

  std::vector<std::string> points_;
  std::vector<std::vector<Rational>> dist_;
  int base_;
  std::map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// Convenience: validate with FiniteMetricSpace::build and wrap in a
/// shared_ptr, the form every element/measure constructor takes.
SpacePtr make_space(std::vector<std::string> points,
                    std::vector<std::vector<Rational>> dist, int base);

/// The uniform (n+1)-point discretization of the unit interval: points
/// labeled k/n in lowest terms, d(j/n, k/n) = |j-k|/n, base at 0.
SpacePtr chain_space(int n);

/// Deterministic pseudo-random space, valid by construction. Seeds with
/// seed % 4 == 0 yield collinear rational points (a rich source of exact
/// triangle-equality instances); other seeds yield a random symmetric
/// rational matrix repaired by shortest-path closure. All distances are
/// multiplied by `scale`.
SpacePtr random_space(int n, std::uint64_t seed, const Rational& scale = 1);

/// All-pairs shortest-path closure (min-plus), the repair step used by
/// random_space. Exposed so its idempotence on already-valid matrices can
/// be checked directly. Requires a symmetric zero-diagonal input.
std::vector<std::vector<Rational>> shortest_path_closure(
    std::vector<std::vector<Rational>> dist);

}  // namespace freelip
