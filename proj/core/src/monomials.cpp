#include "wonderful/monomials.hpp"

#include <algorithm>

namespace wonderful {

std::size_t GradedTable::total() const {
  std::size_t s = 0;
  for (const auto& row : rows)
    for (const auto& e : row.entries) s += e.count;
  return s;
}

bool standard_on_Y_union(const WeylGroup& g, WeylElement left_dir, WeylElement right_dir,
                         std::span<const SchubertPair> comps) {
  return std::any_of(comps.begin(), comps.end(), [&](const SchubertPair& c) {
    return g.bruhat_leq(left_dir, c.a) && g.bruhat_leq(right_dir, c.b);
  });
}

bool standard_on_Y_union(const WeylGroup& g, const PathPair& p, std::span<const SchubertPair> comps) {
  return standard_on_Y_union(g, initial_direction(g, p.left), initial_direction(g, p.right), comps);
}

bool standard_on_Z(const WeylGroup& g, const PathPair& p, const OrbitLabel& z) {
  return standard_on_Y_union(g, p, schubert_components_in_Y(g, z));
}

bool standard_wrt_lambda(const WeylGroup& g, const MonomialIndex& idx, const OrbitLabel& z, const Weight& lambda) {
  const auto& rs = g.root_system();
  rs.check_weight(idx.mu);
  if (!idx.mu.is_dominant()) throw DomainError("mu not dominant: " + to_string(idx.mu));
  const auto n = rs.dominance_diff(lambda, idx.mu);
  if (!n || *n != idx.n) throw DomainError("mu != lambda - n.alpha for mu = " + to_string(idx.mu));
  if ((idx.n.support() & ~z.I.bits()) != 0) return false;
  return standard_on_Z(g, idx.pair, z);
}

namespace {

void check_dominant(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
}

template <typename OnStandard>
void for_each_standard(PathCache& cache, const OrbitLabel& z, const Weight& lambda, OnStandard&& on_standard) {
  const WeylGroup& g = cache.group();
  check_dominant(g.root_system(), lambda);
  const auto comps = schubert_components_in_Y(g, z);
  for (const auto& term : g.root_system().dominant_below(lambda)) {
    if ((term.n.support() & ~z.I.bits()) != 0) continue;
    const auto& left = cache.get(g.neg_w0(term.mu));
    const auto& right = cache.get(term.mu);
    for (std::size_t a = 0; a < left.paths.size(); ++a)
      for (std::size_t b = 0; b < right.paths.size(); ++b)
        if (standard_on_Y_union(g, left.initial[a], right.initial[b], comps)) on_standard(term, left, right, a, b);
  }
}

}  // namespace

std::vector<MonomialIndex> enumerate_MZ(PathCache& cache, const OrbitLabel& z, const Weight& lambda) {
  std::vector<MonomialIndex> out;
  for_each_standard(cache, z, lambda,
                    [&](const DominantTerm& t, const PathCache::Entry& left, const PathCache::Entry& right,
                        std::size_t a, std::size_t b) {
                      out.push_back({t.n, t.mu, PathPair{left.paths[a], right.paths[b], t.mu}, a, b});
                    });
  return out;
}

GradedTable graded_table(PathCache& cache, const OrbitLabel& z, const Weight& lambda) {
  const WeylGroup& g = cache.group();
  check_dominant(g.root_system(), lambda);
  std::vector<GradedEntry> entries;
  for (const auto& term : g.root_system().dominant_below(lambda))
    if ((term.n.support() & ~z.I.bits()) == 0) entries.push_back({term.mu, term.n, 0});
  for_each_standard(cache, z, lambda,
                    [&](const DominantTerm& t, const PathCache::Entry&, const PathCache::Entry&, std::size_t,
                        std::size_t) {
                      auto it = std::find_if(entries.begin(), entries.end(),
                                             [&](const GradedEntry& e) { return e.n == t.n; });
                      ++it->count;
                    });
  GradedTable table;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const GradedEntry& a, const GradedEntry& b) { return a.n.total() < b.n.total(); });
  for (auto& e : entries) {
    const int degree = e.n.total();
    if (table.rows.empty() || table.rows.back().degree != degree) table.rows.push_back({degree, {}});
    table.rows.back().entries.push_back(std::move(e));
  }
  return table;
}

bool dabrowski_nonvanishing(const WeylGroup& g, WeylElement w, const Weight& mu) {
  g.root_system().check_weight(mu);
  for (int i = 0; i < g.rank(); ++i)
    if (g.has_right_descent(w, i) && mu.coords[i] < 0) return false;
  return true;
}

NonstandardLocus nonstandard_locus(const OrbitPoset& poset, const PathPair& p) {
  const WeylGroup& g = poset.group();
  const WeylElement left = initial_direction(g, p.left);
  const WeylElement right = initial_direction(g, p.right);
  NonstandardLocus locus{OrbitPoset::Bits(poset.size()), {}};
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto comps = schubert_components_in_Y(g, poset.label(i));
    if (!standard_on_Y_union(g, left, right, comps)) locus.members.set(i);
  }
  locus.components = poset.maximal(locus.members);
  return locus;
}

std::vector<MonomialIndex> correction_candidates(PathCache& cache, const OrbitPoset& poset, const PathPair& p,
                                                 const OrbitLabel& z, const Weight& lambda) {
  if (p.mu != lambda) throw DomainError("path pair does not have shape " + to_string(lambda));
  const auto locus = nonstandard_locus(poset, p);
  const std::size_t zi = poset.index_of(z);
  if (std::find(locus.components.begin(), locus.components.end(), zi) == locus.components.end())
    throw DomainError("orbit " + to_string(poset.group(), z) + " is not a component of the non-standard locus");
  const auto target = pair_weight(p);
  std::vector<MonomialIndex> out;
  for (auto& idx : enumerate_MZ(cache, z, lambda))
    if (idx.mu != lambda && pair_weight(idx.pair) == target) out.push_back(std::move(idx));
  return out;
}

}  // namespace wonderful
