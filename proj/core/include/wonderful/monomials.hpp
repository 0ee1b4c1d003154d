#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "wonderful/orbits.hpp"
#include "wonderful/paths.hpp"

namespace wonderful {

/// Index (n, mu, pair) of the monomial sigma^n x_pair^(mu), mu = lambda - n.alpha.
///
/// left_id and right_id are the positions of the pair's paths in
/// generate_paths(-w0 mu) and generate_paths(mu).
struct MonomialIndex {
  RootVector n;
  Weight mu;
  PathPair pair;
  std::size_t left_id = 0;
  std::size_t right_id = 0;

  auto key() const { return std::tie(n, left_id, right_id); }
};

struct GradedEntry {
  Weight mu;
  RootVector n;
  std::size_t count = 0;
};

/// Degree n = |n| rows of the associated graded of the sigma-filtration.
struct GradedRow {
  int degree = 0;
  std::vector<GradedEntry> entries;
};

struct GradedTable {
  std::vector<GradedRow> rows;
  std::size_t total() const;
};

/// True iff some (a, b) in comps has i(left) <= a and i(right) <= b.
bool standard_on_Y_union(const WeylGroup& g, const PathPair& p, std::span<const SchubertPair> comps);
bool standard_on_Y_union(const WeylGroup& g, WeylElement left_dir, WeylElement right_dir,
                         std::span<const SchubertPair> comps);

/// Standard on the union of Schubert varieties Z cap Y.
bool standard_on_Z(const WeylGroup& g, const PathPair& p, const OrbitLabel& z);

/// support(n) within z.I and the pair standard on Z. Throws DomainError if
/// mu is not dominant or mu != lambda - n.alpha.
bool standard_wrt_lambda(const WeylGroup& g, const MonomialIndex& idx, const OrbitLabel& z, const Weight& lambda);

/// M_Z^(lambda), ordered lexicographically by n, then by pair position.
std::vector<MonomialIndex> enumerate_MZ(PathCache& cache, const OrbitLabel& z, const Weight& lambda);

/// Number of standard pairs per dominant mu, grouped by |lambda - mu|.
GradedTable graded_table(PathCache& cache, const OrbitLabel& z, const Weight& lambda);

/// H^0(S(w), L_mu) != 0 criterion: <mu, alpha^vee> >= 0 whenever w(alpha) < 0.
bool dabrowski_nonvanishing(const WeylGroup& g, WeylElement w, const Weight& mu);

/// Orbits on which a pair of shape lambda is not standard.
struct NonstandardLocus {
  OrbitPoset::Bits members;               // downward closed, over poset indices
  std::vector<std::size_t> components;   // maximal elements
};

NonstandardLocus nonstandard_locus(const OrbitPoset& poset, const PathPair& p);

/// Indices of M_Z^(lambda) with mu < lambda and the same weight as p.
/// Throws DomainError unless z is a component of the non-standard locus of p.
std::vector<MonomialIndex> correction_candidates(PathCache& cache, const OrbitPoset& poset, const PathPair& p,
                                                 const OrbitLabel& z, const Weight& lambda);

}  // namespace wonderful
