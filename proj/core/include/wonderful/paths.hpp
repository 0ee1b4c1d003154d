#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wonderful/rootsys.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// A straight piece of an LS-path: the path moves along `direction` for
/// `duration` units of time. Directions are elements of the Weyl orbit of the
/// shape, so proportional directions are equal.
struct Segment {
  Weight direction;
  Rational duration;

  auto operator<=>(const Segment& o) const {
    if (auto c = direction <=> o.direction; c != 0) return c;
    if (duration == o.duration) return std::strong_ordering::equal;
    return duration < o.duration ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  bool operator==(const Segment& o) const = default;
};

/// Piecewise-linear LS-path in canonical (merged) segment form.
class LSPath {
 public:
  LSPath(Weight shape, std::vector<Segment> segments);

  const Weight& shape() const { return shape_; }
  const std::vector<Segment>& segments() const { return segments_; }
  bool is_zero() const { return shape_.is_zero(); }

  /// pi(1); integral for every LS-path.
  Weight endpoint() const;
  /// pi(t) for rational t in [0,1], as exact rational coordinates.
  std::vector<Rational> at(const Rational& t) const;

  /// Merges adjacent equal directions and drops zero-duration pieces.
  LSPath canonical() const;

  auto operator<=>(const LSPath&) const = default;

 private:
  Weight shape_;
  std::vector<Segment> segments_;
};

/// LS-paths of shape -w0(mu) and mu, indexing a section on G/B x G/B.
struct PathPair {
  LSPath left;
  LSPath right;
  Weight mu;
};

/// The dominant path t -> t*lambda.
LSPath straight_path(const RootSystem& rs, const Weight& lambda);

/// Lowering root operator f_i (0-based index). nullopt when f_i(pi) = 0.
std::optional<LSPath> root_operator_f(const RootSystem& rs, int i, const LSPath& pi);

/// B_lambda: closure of the straight path under all f_i, breadth-first order.
std::vector<LSPath> generate_paths(const RootSystem& rs, const Weight& lambda);

/// Minimal-length w with w(shape) a positive multiple of the first direction.
/// For the zero shape this is the identity.
WeylElement initial_direction(const WeylGroup& g, const LSPath& pi);

/// generate_paths(-w0 mu) x generate_paths(mu); left index varies slowest.
std::vector<PathPair> generate_pairs(const WeylGroup& g, const Weight& mu);

/// (-left(1), -right(1)).
std::pair<Weight, Weight> pair_weight(const PathPair& p);

/// Memoized B_lambda together with initial directions.
///
/// Not thread-safe; give each thread its own cache.
class PathCache {
 public:
  struct Entry {
    std::vector<LSPath> paths;
    std::vector<WeylElement> initial;
  };

  explicit PathCache(const WeylGroup& g) : group_(&g) {}

  const WeylGroup& group() const { return *group_; }
  const Entry& get(const Weight& lambda);
  const std::vector<LSPath>& paths(const Weight& lambda) { return get(lambda).paths; }
  const std::vector<WeylElement>& initial_directions(const Weight& lambda) { return get(lambda).initial; }

 private:
  const WeylGroup* group_;
  std::map<Weight, Entry> cache_;
};

}  // namespace wonderful
