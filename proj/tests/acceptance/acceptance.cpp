// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "cli/commands.hpp"
#include "wonderful/monomials.hpp"
#include "wonderful/verify.hpp"

using namespace wonderful;
namespace v = wonderful::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
  void require(const v::CheckResult& r, const std::string& group) {
    require(r.status == v::Status::kPass, group + " " + r.name + ": " + r.detail);
  }
};

const WeylGroup& group(const std::string& name) {
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<WeylGroup>(cli::parse_group(name));
  return *slot;
}

std::vector<Weight> grid(const std::string& name, int k) { return v::dominant_grid(group(name).root_system(), k); }

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > budget_seconds) {
    o.ok = false;
    o.detail = "over the time budget";
  }
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, budget_seconds);
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + "\x1f" + err.str();
}

}  // namespace

int main() {
  criterion(1, "orbit census A1 6, A2 78, B2 136", 3, [] {
    Outcome o;
    const std::pair<const char*, std::size_t> expected[] = {{"A1", 6}, {"A2", 78}, {"B2", 136}};
    for (const auto& [name, n] : expected) {
      const auto start = std::chrono::steady_clock::now();
      v::Workspace ws(group(name));
      o.require(ws.expected_orbit_count() == n, std::string(name) + " census formula");
      o.require(ws.poset().size() == n, std::string(name) + " poset size");
      o.require(v::check_orbit_census(ws), name);
      o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), std::string(name) + " over 1 s");
    }
    return o;
  });

  criterion(2, "poset soundness over A1, A2, B2", 60, [] {
    Outcome o;
    for (const char* name : {"A1", "A2", "B2"}) {
      v::Workspace ws(group(name));
      o.require(v::check_bruhat_order(group(name)), name);
      o.require(v::check_poset_soundness(ws), name);
      const auto& P = ws.poset();
      const auto& g = group(name);
      for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j)
          o.require(P.leq(i, j) == closure_leq(g, P.label(i), P.label(j)), std::string(name) + " cached order");
    }
    return o;
  });

  criterion(3, "components in X_J equal maximal poset elements, rank <= 2", 120, [] {
    Outcome o;
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      v::Workspace ws(group(name));
      o.require(v::check_irreducible_components(ws), name);
    }
    return o;
  });

  criterion(4, "path counts, endpoint characters and Demazure counts", 180, [] {
    Outcome o;
    const std::pair<const char*, int> cases[] = {{"A1", 3}, {"A2", 2}, {"B2", 2}, {"G2", 2}};
    for (const auto& [name, k] : cases) {
      v::Workspace ws(group(name));
      const auto lambdas = grid(name, k);
      o.require(v::check_path_invariants(ws, lambdas), name);
      o.require(v::check_paths_weyl_dimension(ws, lambdas), name);
      o.require(v::check_paths_weyl_character(ws, lambdas), name);
      o.require(v::check_paths_demazure(ws, lambdas), name);
    }
    return o;
  });

  criterion(5, "basis cardinalities of M_X and M_Y; A1 values 10, 9, 6", 60, [] {
    Outcome o;
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      v::Workspace ws(group(name));
      o.require(v::check_basis_cardinalities(ws, grid(name, 2)), name);
    }
    const auto& g = group("A1");
    PathCache cache(g);
    const Weight two(std::vector<int>{2});
    const auto e = g.identity();
    o.require(enumerate_MZ(cache, make_orbit(g, SubsetD::full(1), e, g.longest()), two).size() == 10, "|M_X| != 10");
    o.require(enumerate_MZ(cache, make_orbit(g, SubsetD(), e, g.longest()), two).size() == 9, "|M_Y| != 9");
    o.require(enumerate_MZ(cache, make_orbit(g, SubsetD::full(1), e, e), two).size() == 6, "|M_X(e)| != 6");
    return o;
  });

  criterion(6, "graded tables sum to |M_Z| and pass the vanishing check, A1 and A2", 120, [] {
    Outcome o;
    for (const char* name : {"A1", "A2"}) {
      v::Workspace ws(group(name));
      o.require(v::check_graded_tables(ws, grid(name, 2)), name);
      o.require(v::check_vanishing_criterion(ws, 2), name);
    }
    return o;
  });

  criterion(7, "index-set monotonicity and closed non-standard loci, A1 and A2", 120, [] {
    Outcome o;
    for (const char* name : {"A1", "A2"}) {
      v::Workspace ws(group(name));
      o.require(v::check_index_monotonicity(ws, grid(name, 2)), name);
      o.require(v::check_locus_downward_closed(ws, grid(name, 2)), name);
    }
    return o;
  });

  criterion(8, "standard on two components implies standard on their intersection, rank <= 2", 120, [] {
    Outcome o;
    const std::pair<const char*, int> cases[] = {{"A1", 2}, {"A2", 2}, {"B2", 2}, {"G2", 2}};
    for (const auto& [name, k] : cases) {
      v::Workspace ws(group(name));
      o.require(v::check_standard_on_intersections(ws, grid(name, k)), name);
    }
    return o;
  });

  criterion(9, "repeated CLI runs are byte-identical", 120, [] {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"poset", "A1", "--format", "json"},
        {"poset", "A2", "--format", "json", "--full-order"},
        {"poset", "A2", "--format", "csv"},
        {"poset", "B2", "--format", "dot"},
        {"poset", "Z9"},
        {"paths", "A1", "--weight", "2"},
        {"paths", "G2", "--weight", "1,1", "--format", "json"},
        {"paths", "A1", "--weight", "-1"},
        {"monomials", "A1", "--weight", "2", "--orbit", "I=1;x=e;w=e"},
        {"monomials", "A2", "--weight", "1,1", "--orbit", "I=1;x=e;w=w0", "--format", "json"},
        {"monomials", "A1", "--weight", "2", "--orbit", "I=1;x=e;w=w0", "--count-only"},
        {"verify", "A1", "--max-weight", "3"},
        {"verify", "A2", "--max-weight", "1", "--format", "json"},
    };
    for (const auto& c : commands) {
      int c1 = 0, c2 = 0;
      const auto first = run_cli(c, c1);
      const auto second = run_cli(c, c2);
      std::string line;
      for (const auto& a : c) line += a + " ";
      o.require(first == second && c1 == c2, "output differs for " + line);
    }
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
