#include "wonderful/paths.hpp"

#include <set>

namespace wonderful {

LSPath::LSPath(Weight shape, std::vector<Segment> segments) : shape_(std::move(shape)) {
  Rational total = 0;
  for (const auto& s : segments) {
    if (s.duration < 0) throw DomainError("negative segment duration");
    if (s.direction.rank() != shape_.rank()) throw DomainError("segment direction has wrong rank");
    total += s.duration;
  }
  if (total != 1) throw DomainError("segment durations must sum to 1");
  for (auto& s : segments) {
    if (s.duration == 0) continue;
    if (!segments_.empty() && segments_.back().direction == s.direction)
      segments_.back().duration += s.duration;
    else
      segments_.push_back(std::move(s));
  }
}

LSPath LSPath::canonical() const { return LSPath(shape_, segments_); }

Weight LSPath::endpoint() const {
  auto end = at(Rational(1));
  Weight w = Weight::zero(shape_.rank());
  for (std::size_t k = 0; k < end.size(); ++k) {
    if (end[k].denominator() != 1) throw std::logic_error("LS-path endpoint is not integral");
    w.coords[k] = static_cast<int>(end[k].numerator());
  }
  return w;
}

std::vector<Rational> LSPath::at(const Rational& t) const {
  std::vector<Rational> pos(shape_.rank(), Rational(0));
  Rational remaining = t;
  for (const auto& s : segments_) {
    if (remaining <= 0) break;
    const Rational d = remaining < s.duration ? remaining : s.duration;
    for (std::size_t k = 0; k < pos.size(); ++k) pos[k] += d * s.direction.coords[k];
    remaining -= d;
  }
  return pos;
}

LSPath straight_path(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
  return LSPath(lambda, {Segment{lambda, Rational(1)}});
}

std::optional<LSPath> root_operator_f(const RootSystem& rs, int i, const LSPath& pi) {
  if (i < 0 || i >= rs.rank()) throw DomainError("simple root index out of range");
  if (pi.is_zero()) return std::nullopt;
  const auto& segs = pi.segments();
  const std::size_t K = segs.size();

  // Height h(t) = <pi(t), alpha_i^vee> at the breakpoints.
  std::vector<Rational> height(K + 1, Rational(0));
  for (std::size_t k = 0; k < K; ++k) height[k + 1] = height[k] + segs[k].duration * segs[k].direction.coords[i];
  Rational minimum = height[0];
  std::size_t last_min = 0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (height[k] <= minimum) {
      minimum = height[k];
      last_min = k;
    }
  }
  if (height[K] - minimum < 1) return std::nullopt;

  // Reflect by s_i on [last time h = m, first later time h = m + 1].
  const Rational target = minimum + 1;
  std::vector<Segment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(last_min));
  std::size_t k = last_min;
  for (; k < K; ++k) {
    const auto& s = segs[k];
    if (height[k + 1] < target) {
      out.push_back({rs.reflect(s.direction, i), s.duration});
      continue;
    }
    const Rational cut = (target - height[k]) / Rational(s.direction.coords[i]);
    out.push_back({rs.reflect(s.direction, i), cut});
    out.push_back({s.direction, s.duration - cut});
    ++k;
    break;
  }
  for (; k < K; ++k) out.push_back(segs[k]);
  return LSPath(pi.shape(), std::move(out));
}

std::vector<LSPath> generate_paths(const RootSystem& rs, const Weight& lambda) {
  std::vector<LSPath> out{straight_path(rs, lambda)};
  std::set<LSPath> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      auto next = root_operator_f(rs, i, out[head]);
      if (next && seen.insert(*next).second) out.push_back(std::move(*next));
    }
  }
  return out;
}

WeylElement initial_direction(const WeylGroup& g, const LSPath& pi) {
  if (pi.is_zero()) return g.identity();
  return g.min_element_mapping(pi.shape(), pi.segments().front().direction);
}

std::vector<PathPair> generate_pairs(const WeylGroup& g, const Weight& mu) {
  const auto& rs = g.root_system();
  rs.check_weight(mu);
  if (!mu.is_dominant()) throw DomainError("weight not dominant: " + to_string(mu));
  const Weight dual = g.neg_w0(mu);
  const auto left = generate_paths(rs, dual);
  const auto right = generate_paths(rs, mu);
  std::vector<PathPair> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) out.push_back({a, b, mu});
  return out;
}

std::pair<Weight, Weight> pair_weight(const PathPair& p) { return {-p.left.endpoint(), -p.right.endpoint()}; }

const PathCache::Entry& PathCache::get(const Weight& lambda) {
  auto it = cache_.find(lambda);
  if (it != cache_.end()) return it->second;
  Entry e;
  e.paths = generate_paths(group_->root_system(), lambda);
  e.initial.reserve(e.paths.size());
  for (const auto& p : e.paths) e.initial.push_back(initial_direction(*group_, p));
  return cache_.emplace(lambda, std::move(e)).first->second;
}

}  // namespace wonderful
