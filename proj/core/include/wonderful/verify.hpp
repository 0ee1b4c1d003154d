#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wonderful/demazure.hpp"
#include "wonderful/monomials.hpp"
#include "wonderful/orbits.hpp"
#include "wonderful/paths.hpp"

namespace wonderful::verify {

enum class Status { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  Status status = Status::kPass;
  std::string detail;

  bool passed() const { return status != Status::kFail; }
};

struct Report {
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::size_t failures() const;
};

/// All dominant weights with every coordinate in [0, max_coord], lexicographic.
std::vector<Weight> dominant_grid(const RootSystem& rs, int max_coord);

/// Shared state for the cross-module checks: one group, a lazily built orbit
/// poset, a path cache and memoized index sets M_Z^(lambda).
class Workspace {
 public:
  explicit Workspace(const WeylGroup& g);
  ~Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const WeylGroup& group() const { return *group_; }
  PathCache& cache() { return cache_; }
  std::size_t expected_orbit_count() const;
  bool poset_feasible() const { return expected_orbit_count() <= OrbitPoset::kMaxSize; }
  const OrbitPoset& poset();

  /// M_Z^(lambda) for every orbit, as bitsets over the positions of M_X^(lambda).
  const std::vector<OrbitPoset::Bits>& index_sets(const Weight& lambda);
  /// M_X^(lambda); the universe that index_sets() refers to.
  const std::vector<MonomialIndex>& full_index_set(const Weight& lambda);
  /// Non-standard locus of a pair with the given initial directions.
  const OrbitPoset::Bits& nonstandard_set(WeylElement left_dir, WeylElement right_dir);
  const std::vector<SchubertPair>& components(std::size_t orbit);

 private:
  struct Impl;
  const WeylGroup* group_;
  PathCache cache_;
  std::unique_ptr<Impl> impl_;
};

// rootsys
CheckResult check_cartan(const RootSystem& rs);
CheckResult check_dominance(const RootSystem& rs, const std::vector<Weight>& grid);

// weyl
CheckResult check_group_tables(const WeylGroup& g);
CheckResult check_bruhat_order(const WeylGroup& g);
CheckResult check_min_coset_reps(const WeylGroup& g);
CheckResult check_neg_w0(const WeylGroup& g, const std::vector<Weight>& grid);

// orbits
CheckResult check_orbit_census(Workspace& ws);
CheckResult check_poset_soundness(Workspace& ws);
CheckResult check_irreducible_components(Workspace& ws);

// paths and demazure
CheckResult check_path_invariants(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_paths_weyl_dimension(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_paths_weyl_character(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_paths_demazure(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_demazure_idempotence(const WeylGroup& g, const std::vector<Weight>& grid);
CheckResult check_demazure_braid(const WeylGroup& g, const std::vector<Weight>& grid);
CheckResult check_demazure_weyl_dim(const WeylGroup& g, const std::vector<Weight>& grid);

// monomials
CheckResult check_basis_cardinalities(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_graded_tables(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_vanishing_criterion(Workspace& ws, int max_coord);
CheckResult check_single_component_counts(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_index_monotonicity(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_locus_downward_closed(Workspace& ws, const std::vector<Weight>& grid);
CheckResult check_standard_on_intersections(Workspace& ws, const std::vector<Weight>& grid);

/// Every check above over dominant weights with coordinates <= max_weight.
Report run_suite(const WeylGroup& g, int max_weight);

}  // namespace wonderful::verify
