#include "wonderful/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wonderful::verify {

using Bits = OrbitPoset::Bits;

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed(); }));
}

std::vector<Weight> dominant_grid(const RootSystem& rs, int max_coord) {
  std::vector<Weight> out;
  std::vector<int> c(rs.rank(), 0);
  while (true) {
    out.emplace_back(c);
    int pos = rs.rank() - 1;
    while (pos >= 0 && c[pos] == max_coord) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
  }
  return out;
}

namespace {

// Collects the first failure message and a running count of verified cases.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void ok(std::size_t n = 1) { cases_ += n; }
  void fail(const std::string& what) {
    ++failures_;
    if (first_failure_.empty()) first_failure_ = what;
  }
  bool expect(bool cond, const std::string& what) {
    if (cond)
      ok();
    else
      fail(what);
    return cond;
  }

  CheckResult result(std::string extra = {}) const {
    std::ostringstream os;
    if (failures_ == 0) {
      os << cases_ << " cases";
    } else {
      os << failures_ << " failures; first: " << first_failure_;
    }
    if (!extra.empty()) os << "; " << extra;
    return {name_, failures_ == 0 ? Status::kPass : Status::kFail, os.str()};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

CheckResult skipped(std::string name, std::string why) { return {std::move(name), Status::kSkip, std::move(why)}; }

std::string w_str(const WeylGroup& g, WeylElement w) { return g.word_string(w); }

std::size_t known_positive_roots(const RootSystem& rs) {
  const std::size_t l = static_cast<std::size_t>(rs.rank());
  switch (rs.type_letter()) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

std::size_t known_group_order(const RootSystem& rs) {
  const std::size_t l = static_cast<std::size_t>(rs.rank());
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= l; ++k) fact *= k;
  switch (rs.type_letter()) {
    case 'A': return fact * (l + 1);
    case 'B':
    case 'C': return fact << l;
    case 'D': return fact << (l - 1);
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

Character endpoint_character(const std::vector<LSPath>& paths) {
  Character c;
  for (const auto& p : paths) c.add(p.endpoint(), 1);
  return c;
}

}  // namespace

// ---------------------------------------------------------------- Workspace

struct Workspace::Impl {
  std::optional<OrbitPoset> poset;
  std::vector<std::vector<SchubertPair>> comps;
  std::map<Weight, std::vector<MonomialIndex>> full;
  std::map<Weight, std::vector<Bits>> sets;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Bits> nonstandard;
};

Workspace::Workspace(const WeylGroup& g) : group_(&g), cache_(g), impl_(std::make_unique<Impl>()) {}
Workspace::~Workspace() = default;

std::size_t Workspace::expected_orbit_count() const { return orbit_count(*group_); }

const OrbitPoset& Workspace::poset() {
  if (!impl_->poset) {
    impl_->poset.emplace(*group_);
    for (const auto& z : impl_->poset->labels()) impl_->comps.push_back(schubert_components_in_Y(*group_, z));
  }
  return *impl_->poset;
}

const std::vector<SchubertPair>& Workspace::components(std::size_t orbit) {
  poset();
  return impl_->comps[orbit];
}

const std::vector<MonomialIndex>& Workspace::full_index_set(const Weight& lambda) {
  auto it = impl_->full.find(lambda);
  if (it != impl_->full.end()) return it->second;
  const auto& P = poset();
  return impl_->full.emplace(lambda, enumerate_MZ(cache_, P.label(P.top()), lambda)).first->second;
}

const std::vector<Bits>& Workspace::index_sets(const Weight& lambda) {
  auto it = impl_->sets.find(lambda);
  if (it != impl_->sets.end()) return it->second;
  const auto& P = poset();
  const auto& full = full_index_set(lambda);
  const WeylGroup& g = *group_;
  // Membership straight from the definition: support of n inside I and the
  // pair's initial directions below some Schubert component of Z cap Y.
  std::vector<WeylElement> left(full.size()), right(full.size());
  std::vector<std::uint32_t> support(full.size());
  for (std::size_t k = 0; k < full.size(); ++k) {
    left[k] = cache_.initial_directions(g.neg_w0(full[k].mu))[full[k].left_id];
    right[k] = cache_.initial_directions(full[k].mu)[full[k].right_id];
    support[k] = full[k].n.support();
  }
  std::vector<Bits> sets;
  sets.reserve(P.size());
  for (std::size_t z = 0; z < P.size(); ++z) {
    const auto I = P.label(z).I.bits();
    const auto& comps = impl_->comps[z];
    Bits b(full.size());
    for (std::size_t k = 0; k < full.size(); ++k)
      if ((support[k] & ~I) == 0 && standard_on_Y_union(g, left[k], right[k], comps)) b.set(k);
    sets.push_back(std::move(b));
  }
  return impl_->sets.emplace(lambda, std::move(sets)).first->second;
}

const Bits& Workspace::nonstandard_set(WeylElement left_dir, WeylElement right_dir) {
  const auto key = std::make_pair(left_dir.id(), right_dir.id());
  auto it = impl_->nonstandard.find(key);
  if (it != impl_->nonstandard.end()) return it->second;
  const auto& P = poset();
  Bits b(P.size());
  for (std::size_t z = 0; z < P.size(); ++z)
    if (!standard_on_Y_union(*group_, left_dir, right_dir, impl_->comps[z])) b.set(z);
  return impl_->nonstandard.emplace(key, std::move(b)).first->second;
}

// ---------------------------------------------------------------- rootsys

CheckResult check_cartan(const RootSystem& rs) {
  Tally t("rootsys.cartan");
  const auto& C = rs.cartan();
  const auto& Ci = rs.inverse_cartan();
  const int l = rs.rank();
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (i == j)
        t.expect(C[i][j] == 2, "diagonal entry != 2");
      else
        t.expect(C[i][j] <= 0, "positive off-diagonal entry");
      t.expect(Ci[i][j] >= 0, "negative inverse Cartan entry");
      Rational s = 0;
      for (int k = 0; k < l; ++k) s += Rational(C[i][k]) * Ci[k][j];
      t.expect(s == Rational(i == j ? 1 : 0), "C * C^{-1} != identity");
    }
  }
  t.expect(rs.positive_roots().size() == known_positive_roots(rs),
           "|Phi+| = " + std::to_string(rs.positive_roots().size()));
  t.expect(rs.roots().size() == 2 * rs.positive_roots().size(), "Phi != Phi+ union -Phi+");
  return t.result();
}

CheckResult check_dominance(const RootSystem& rs, const std::vector<Weight>& grid) {
  Tally t("rootsys.dominance");
  const int l = rs.rank();
  std::size_t skipped_boxes = 0;
  for (const auto& lambda : grid) {
    const auto below = rs.dominant_below(lambda);
    std::set<Weight> members;
    for (const auto& [mu, n] : below) {
      members.insert(mu);
      const auto d = rs.dominance_diff(lambda, mu);
      if (!t.expect(d && *d == n, "dominance_diff disagrees with dominant_below at " + to_string(mu))) continue;
      Weight recon = mu;
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) recon.coords[k] += rs.cartan()[k][j] * n[j];
      t.expect(recon == lambda, "lambda - mu != C n");
    }
    t.expect(std::is_sorted(below.begin(), below.end(),
                            [](const DominantTerm& a, const DominantTerm& b) { return a.n < b.n; }),
             "dominant_below not lexicographic");
    for (const auto& [mu, n] : below)
      for (const auto& [nu, m] : rs.dominant_below(mu))
        t.expect(members.count(nu) == 1, "dominant_below not transitively closed at " + to_string(nu));

    // Brute force over a box of dominant weights that contains every mu <= lambda.
    int bound = 0;
    for (const auto& beta : rs.positive_roots()) bound = std::max(bound, rs.coroot_pairing(lambda, beta));
    bound += 1;
    double volume = 1;
    for (int k = 0; k < l; ++k) volume *= bound + 1;
    if (volume > 50000) {
      ++skipped_boxes;
      continue;
    }
    std::vector<int> c(l, 0);
    while (true) {
      const Weight mu(c);
      const auto q = rs.to_root_coords(lambda - mu);
      const bool integral_nonneg =
          std::all_of(q.begin(), q.end(), [](const Rational& r) { return r >= 0 && r.denominator() == 1; });
      t.expect(integral_nonneg == (members.count(mu) == 1), "box membership mismatch at " + to_string(mu));
      t.expect(rs.dominance_diff(lambda, mu).has_value() == integral_nonneg, "dominance_diff mismatch");
      int pos = l - 1;
      while (pos >= 0 && c[pos] == bound) c[pos--] = 0;
      if (pos < 0) break;
      ++c[pos];
    }
  }
  return t.result(skipped_boxes ? std::to_string(skipped_boxes) + " boxes too large" : std::string{});
}

// ---------------------------------------------------------------- weyl

CheckResult check_group_tables(const WeylGroup& g) {
  Tally t("weyl.group");
  const auto& rs = g.root_system();
  const int l = g.rank();
  t.expect(g.order() == known_group_order(rs), "|W| = " + std::to_string(g.order()));
  t.expect(g.length(g.longest()) == static_cast<int>(rs.positive_roots().size()), "l(w0) != |Phi+|");

  auto mat_mul = [](const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.size(), std::vector<int>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<IntMatrix> gens;
  for (int i = 0; i < l; ++i) gens.push_back(g.action(g.generator(i)));

  int max_len = 0;
  for (auto w : g.elements()) {
    t.expect(g.length(w) == g.inversion_count(w), "length != inversion count for " + w_str(g, w));
    t.expect(static_cast<int>(g.word(w).size()) == g.length(w), "canonical word length mismatch");
    t.expect(g.from_word(g.word(w)) == w, "canonical word does not multiply out");
    IntMatrix m = g.action(g.identity());
    for (int i : g.word(w)) m = mat_mul(m, gens[i]);
    t.expect(m == g.action(w), "action != product of generator matrices for " + w_str(g, w));
    t.expect(g.multiply(w, g.inverse(w)) == g.identity(), "w w^{-1} != e");
    max_len = std::max(max_len, g.length(w));
  }
  t.expect(std::count_if(g.elements().begin(), g.elements().end(),
                         [&](WeylElement w) { return g.length(w) == max_len; }) == 1,
           "longest element not unique");
  t.expect(g.multiply(g.longest(), g.longest()) == g.identity(), "w0 is not an involution");

  std::vector<WeylElement> right_factors;
  if (g.order() <= 192) {
    right_factors = g.elements();
  } else {
    for (int i = 0; i < l; ++i) right_factors.push_back(g.generator(i));
    right_factors.push_back(g.longest());
  }
  for (auto u : g.elements()) {
    for (auto v : right_factors) {
      const auto uv = g.multiply(u, v);
      t.expect(g.action(uv) == mat_mul(g.action(u), g.action(v)), "multiply != matrix product");
      const int lu = g.length(u), lv = g.length(v), luv = g.length(uv);
      t.expect(luv <= lu + lv && (lu + lv - luv) % 2 == 0, "length not subadditive with parity");
      t.expect(g.inversion_count(uv) == luv || g.order() > 192, "length of product != matrix inversion count");
    }
  }
  return t.result();
}

CheckResult check_bruhat_order(const WeylGroup& g) {
  Tally t("weyl.bruhat");
  const auto& els = g.elements();
  const WeylElement w0 = g.longest();
  for (auto w : els) {
    t.expect(g.bruhat_leq(w, w), "not reflexive");
    t.expect(g.bruhat_leq(g.identity(), w) && g.bruhat_leq(w, w0), "e <= w <= w0 fails");
    const auto& down = g.lower_interval(w);
    for (auto u = down.find_first(); u != Bits::npos; u = down.find_next(u)) {
      const WeylElement ue(static_cast<std::uint32_t>(u));
      t.expect(g.lower_interval(ue).is_subset_of(down), "not transitive");
      if (ue != w) t.expect(!g.bruhat_leq(w, ue), "not antisymmetric");
      t.expect(g.length(ue) <= g.length(w), "u <= w with l(u) > l(w)");
    }
    for (auto u : els) {
      t.expect(g.bruhat_leq(u, w) == g.bruhat_leq(g.multiply(w0, w), g.multiply(w0, u)),
               "order reversal by w0 fails at (" + w_str(g, u) + ", " + w_str(g, w) + ")");
      // Lifting property: for ws < w, u <= w iff min(u, us) <= ws.
      for (int s = 0; s < g.rank(); ++s) {
        if (!g.has_right_descent(w, s)) continue;
        const auto ws = g.times_generator(w, s);
        const auto us = g.times_generator(u, s);
        const auto lo = g.length(us) < g.length(u) ? us : u;
        t.expect(g.bruhat_leq(u, w) == g.bruhat_leq(lo, ws), "lifting property fails");
        break;
      }
    }
  }
  return t.result();
}

CheckResult check_min_coset_reps(const WeylGroup& g) {
  Tally t("weyl.min_coset_reps");
  for (auto I : all_subsets(g.rank())) {
    const auto WI = g.parabolic(I);
    t.expect(g.order() % WI.size() == 0, "|W_I| does not divide |W|");
    t.expect(g.min_coset_reps(I).size() * WI.size() == g.order(), "|W^I| |W_I| != |W|");
    for (auto w : g.elements()) {
      const auto dec = g.min_coset_rep(w, I);
      t.expect(g.multiply(dec.min_rep, dec.remainder) == w, "w != x (x^{-1} w)");
      t.expect(g.in_parabolic(dec.remainder, I), "remainder not in W_I");
      t.expect(g.length(w) == g.length(dec.min_rep) + g.length(dec.remainder), "lengths do not add");
      t.expect(g.bruhat_leq(dec.min_rep, w), "min rep not below w");
      t.expect(g.is_min_coset_rep(dec.min_rep, I), "min rep has a right descent in I");
      for (auto u : WI) {
        const auto wu = g.multiply(w, u);
        if (wu == dec.min_rep) continue;
        t.expect(g.length(wu) > g.length(dec.min_rep), "coset element shorter than min rep");
      }
    }
  }
  return t.result();
}

CheckResult check_neg_w0(const WeylGroup& g, const std::vector<Weight>& grid) {
  Tally t("weyl.neg_w0");
  for (const auto& lambda : grid) {
    const auto dual = g.neg_w0(lambda);
    t.expect(dual.is_dominant(), "-w0 lambda not dominant for " + to_string(lambda));
    t.expect(g.neg_w0(dual) == lambda, "-w0 not an involution at " + to_string(lambda));
    t.expect(g.neg_w0(-lambda) == -dual, "-w0 not linear");
  }
  return t.result();
}

// ---------------------------------------------------------------- orbits

CheckResult check_orbit_census(Workspace& ws) {
  const std::string name = "orbits.census";
  if (!ws.poset_feasible()) return skipped(name, std::to_string(ws.expected_orbit_count()) + " orbits");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  std::size_t expected = 0;
  for (auto I : all_subsets(g.rank())) expected += g.min_coset_reps(I).size() * g.order();
  t.expect(expected == ws.expected_orbit_count(), "census formula disagrees with |W|/|W_I|");
  t.expect(P.size() == expected, "orbit count " + std::to_string(P.size()) + " != " + std::to_string(expected));
  t.expect(std::adjacent_find(P.labels().begin(), P.labels().end()) == P.labels().end(), "duplicate labels");
  for (const auto& z : P.labels()) t.expect(g.is_min_coset_rep(z.x, z.I), "label with x outside W^I");
  return t.result(std::to_string(P.size()) + " orbits");
}

CheckResult check_poset_soundness(Workspace& ws) {
  const std::string name = "orbits.poset";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  const std::size_t n = P.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& down = P.down_set(j);
    t.expect(down.test(j), "not reflexive");
    for (auto i = down.find_first(); i != Bits::npos; i = down.find_next(i)) {
      t.expect(P.down_set(i).is_subset_of(down), "not transitive");
      if (i == j) continue;
      t.expect(!P.leq(j, i), "not antisymmetric at " + to_string(g, P.label(i)) + ", " + to_string(g, P.label(j)));
      t.expect(P.dimension(i) < P.dimension(j), "no strict dimension drop below " + to_string(g, P.label(j)));
    }
  }
  Bits all(n);
  all.set();
  const auto maxima = P.maximal(all);
  t.expect(maxima.size() == 1 && maxima.front() == P.top(), "maximum is not [D, e, w0]");
  t.expect(P.down_set(P.top()).count() == n, "[D, e, w0] is not above everything");
  t.expect(P.up_set(P.bottom()).count() == n, "[0, w0, e] is not below everything");
  for (std::size_t i = 0; i < n; ++i)
    if (i != P.bottom()) t.expect(P.down_set(i).count() > 1, "a second minimal element exists");
  t.expect(P.dimension(P.top()) == g.length(g.longest()) * 2 + g.rank(), "dim X != dim G");
  t.expect(P.dimension(P.bottom()) == 0, "minimum is not a point");

  // I = J = empty: closure order is x' >= x and w' <= w.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = P.label(i);
    if (!a.I.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = P.label(j);
      if (!b.I.empty()) continue;
      t.expect(P.leq(i, j) == (g.bruhat_leq(b.x, a.x) && g.bruhat_leq(a.w, b.w)),
               "Schubert product order mismatch at " + to_string(g, a) + " <= " + to_string(g, b));
    }
  }
  std::size_t covers = 0;
  for (std::size_t j = 0; j < n; ++j) covers += P.covers(j).size();
  return t.result(std::to_string(covers) + " cover relations");
}

CheckResult check_irreducible_components(Workspace& ws) {
  const std::string name = "orbits.components_in_XJ";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  for (std::size_t zi = 0; zi < P.size(); ++zi) {
    const auto& z = P.label(zi);
    for (auto J : all_subsets(g.rank())) {
      if (!J.subset_of(z.I)) continue;
      Bits candidates(P.size());
      const auto& down = P.down_set(zi);
      for (auto i = down.find_first(); i != Bits::npos; i = down.find_next(i))
        if (P.label(i).I == J) candidates.set(i);
      std::vector<OrbitLabel> brute;
      for (auto i : P.maximal(candidates)) brute.push_back(P.label(i));
      t.expect(components_in_XJ(g, z, J) == brute,
               "components of " + to_string(g, z) + " in X_" + to_string(J) + " differ from poset scan");
    }
  }
  return t.result();
}

// ---------------------------------------------------------------- paths and demazure

CheckResult check_path_invariants(Workspace& ws, const std::vector<Weight>& grid) {
  Tally t("paths.invariants");
  const auto& g = ws.group();
  for (const auto& lambda : grid) {
    const auto& paths = ws.cache().paths(lambda);
    std::set<LSPath> distinct(paths.begin(), paths.end());
    t.expect(distinct.size() == paths.size(), "duplicate paths for " + to_string(lambda));
    for (const auto& p : paths) {
      Rational total = 0;
      for (std::size_t k = 0; k < p.segments().size(); ++k) {
        const auto& s = p.segments()[k];
        total += s.duration;
        t.expect(s.duration > 0, "non-positive duration");
        if (k > 0) t.expect(p.segments()[k - 1].direction != s.direction, "adjacent directions not merged");
        if (!lambda.is_zero()) {
          const auto tau = g.min_element_mapping(lambda, s.direction);
          t.expect(g.act(tau, lambda) == s.direction, "direction outside the Weyl orbit");
        }
      }
      t.expect(total == 1, "durations do not sum to 1");
      t.expect(p.canonical() == p, "canonical form not idempotent");
      const auto end = p.at(Rational(1));
      t.expect(std::all_of(end.begin(), end.end(), [](const Rational& r) { return r.denominator() == 1; }),
               "non-integral endpoint");
    }
  }
  return t.result();
}

CheckResult check_paths_weyl_dimension(Workspace& ws, const std::vector<Weight>& grid) {
  Tally t("paths.weyl_dimension");
  const auto& rs = ws.group().root_system();
  for (const auto& lambda : grid) {
    const auto n = ws.cache().paths(lambda).size();
    t.expect(static_cast<std::int64_t>(n) == weyl_dim(rs, lambda),
             "|B_" + to_string(lambda) + "| = " + std::to_string(n));
  }
  return t.result();
}

CheckResult check_paths_weyl_character(Workspace& ws, const std::vector<Weight>& grid) {
  Tally t("paths.weyl_character");
  const auto& g = ws.group();
  for (const auto& lambda : grid)
    t.expect(endpoint_character(ws.cache().paths(lambda)) == demazure_character(g, g.longest(), lambda),
             "endpoint multiset differs from the character at " + to_string(lambda));
  return t.result();
}

CheckResult check_paths_demazure(Workspace& ws, const std::vector<Weight>& grid) {
  Tally t("paths.demazure");
  const auto& g = ws.group();
  for (const auto& lambda : grid) {
    const auto& entry = ws.cache().get(lambda);
    for (auto w : g.elements()) {
      std::vector<LSPath> below;
      for (std::size_t k = 0; k < entry.paths.size(); ++k)
        if (g.bruhat_leq(entry.initial[k], w)) below.push_back(entry.paths[k]);
      const auto ch = demazure_character(g, w, lambda);
      t.expect(static_cast<std::int64_t>(below.size()) == char_dim(ch),
               "count mismatch at w = " + w_str(g, w) + ", lambda = " + to_string(lambda));
      t.expect(endpoint_character(below) == ch,
               "weight multiset mismatch at w = " + w_str(g, w) + ", lambda = " + to_string(lambda));
    }
  }
  return t.result();
}

CheckResult check_demazure_idempotence(const WeylGroup& g, const std::vector<Weight>& grid) {
  Tally t("demazure.idempotence");
  const auto& rs = g.root_system();
  std::vector<WeylElement> ws;
  if (g.order() <= 48) {
    ws = g.elements();
  } else {
    ws.push_back(g.identity());
    for (int i = 0; i < g.rank(); ++i) ws.push_back(g.generator(i));
  }
  for (const auto& lambda : grid) {
    for (auto w : ws) {
      const auto c = demazure_character(g, w, lambda);
      for (int i = 0; i < g.rank(); ++i) {
        const auto once = demazure_op(rs, i, c);
        t.expect(demazure_op(rs, i, once) == once, "D_i D_i != D_i");
      }
    }
  }
  return t.result();
}

CheckResult check_demazure_braid(const WeylGroup& g, const std::vector<Weight>& grid) {
  const std::string name = "demazure.braid";
  if (g.order() > 48) return skipped(name, "|W| > 48");
  Tally t(name);
  // All reduced words, built from right descents.
  std::vector<std::vector<std::vector<int>>> words(g.order());
  words[0] = {{}};
  for (auto w : g.elements()) {
    if (w == g.identity()) continue;
    for (int i = 0; i < g.rank(); ++i) {
      if (!g.has_right_descent(w, i)) continue;
      for (auto word : words[g.times_generator(w, i).id()]) {
        word.push_back(i);
        words[w.id()].push_back(std::move(word));
      }
    }
  }
  for (const auto& lambda : grid) {
    for (auto w : g.elements()) {
      const auto reference = demazure_character(g, w, lambda);
      for (const auto& word : words[w.id()])
        t.expect(demazure_character(g, word, lambda) == reference, "reduced words disagree for " + w_str(g, w));
    }
  }
  return t.result();
}

CheckResult check_demazure_weyl_dim(const WeylGroup& g, const std::vector<Weight>& grid) {
  Tally t("demazure.weyl_dimension");
  for (const auto& lambda : grid)
    t.expect(char_dim(demazure_character(g, g.longest(), lambda)) == weyl_dim(g.root_system(), lambda),
             "char_dim(D_w0) != weyl_dim at " + to_string(lambda));
  return t.result();
}

// ---------------------------------------------------------------- monomials

CheckResult check_basis_cardinalities(Workspace& ws, const std::vector<Weight>& grid) {
  Tally t("monomials.basis_cardinality");
  const auto& g = ws.group();
  const auto& rs = g.root_system();
  const OrbitLabel X{SubsetD::full(g.rank()), g.identity(), g.longest()};
  const OrbitLabel Y{SubsetD(), g.identity(), g.longest()};
  for (const auto& lambda : grid) {
    std::int64_t expected_x = 0;
    for (const auto& term : rs.dominant_below(lambda))
      expected_x += weyl_dim(rs, term.mu) * weyl_dim(rs, g.neg_w0(term.mu));
    const auto mx = enumerate_MZ(ws.cache(), X, lambda).size();
    const auto my = enumerate_MZ(ws.cache(), Y, lambda).size();
    t.expect(static_cast<std::int64_t>(mx) == expected_x, "|M_X| mismatch at " + to_string(lambda));
    t.expect(static_cast<std::int64_t>(my) == weyl_dim(rs, lambda) * weyl_dim(rs, g.neg_w0(lambda)),
             "|M_Y| mismatch at " + to_string(lambda));
  }
  return t.result();
}

CheckResult check_graded_tables(Workspace& ws, const std::vector<Weight>& grid) {
  const std::string name = "monomials.graded_table";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  for (const auto& lambda : grid) {
    for (std::size_t zi = 0; zi < P.size(); ++zi) {
      const auto& z = P.label(zi);
      const auto table = graded_table(ws.cache(), z, lambda);
      const auto indices = enumerate_MZ(ws.cache(), z, lambda);
      t.expect(table.total() == indices.size(),
               "row sums != |M_Z| for " + to_string(g, z) + ", lambda = " + to_string(lambda));
      const auto& full = ws.full_index_set(lambda);
      Bits listed(full.size());
      for (const auto& idx : indices) {
        auto pos = std::lower_bound(full.begin(), full.end(), idx,
                                    [](const MonomialIndex& a, const MonomialIndex& c) { return a.key() < c.key(); });
        if (pos != full.end() && pos->key() == idx.key()) listed.set(static_cast<std::size_t>(pos - full.begin()));
      }
      t.expect(listed.count() == indices.size() && listed == ws.index_sets(lambda)[zi],
               "enumerate_MZ differs from the definition for " + to_string(g, z) + ", lambda = " + to_string(lambda));
      int last_degree = -1;
      for (const auto& row : table.rows) {
        t.expect(row.degree > last_degree, "rows not ascending");
        last_degree = row.degree;
        for (const auto& e : row.entries) {
          t.expect(e.n.total() == row.degree && (e.n.support() & ~z.I.bits()) == 0, "entry in wrong row");
          if (e.count == 0) continue;
          const Weight dual = g.neg_w0(e.mu);
          const auto& comps = ws.components(zi);
          t.expect(std::any_of(comps.begin(), comps.end(),
                               [&](const SchubertPair& c) {
                                 return dabrowski_nonvanishing(g, c.a, dual) && dabrowski_nonvanishing(g, c.b, e.mu);
                               }),
                   "Dabrowski check fails for mu = " + to_string(e.mu) + " on " + to_string(g, z));
        }
      }
    }
  }
  return t.result();
}

CheckResult check_vanishing_criterion(Workspace& ws, int max_coord) {
  const std::string name = "monomials.vanishing";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  const int l = g.rank();
  const int k = max_coord + 1;
  for (std::size_t zi = 0; zi < P.size(); ++zi) {
    const auto& z = P.label(zi);
    const auto& comps = ws.components(zi);
    std::vector<int> c(l, -k);
    while (true) {
      const Weight mu(c);
      bool outside = false;
      for (int i : z.I.members()) outside |= mu.coords[i] < 0;
      if (outside) {
        const Weight dual = g.neg_w0(mu);
        t.expect(std::none_of(comps.begin(), comps.end(),
                              [&](const SchubertPair& s) {
                                return dabrowski_nonvanishing(g, s.a, dual) && dabrowski_nonvanishing(g, s.b, mu);
                              }),
                 "sections survive for mu = " + to_string(mu) + " on " + to_string(g, z));
      }
      int pos = l - 1;
      while (pos >= 0 && c[pos] == k) c[pos--] = -k;
      if (pos < 0) break;
      ++c[pos];
    }
  }
  return t.result();
}

CheckResult check_single_component_counts(Workspace& ws, const std::vector<Weight>& grid) {
  const std::string name = "monomials.single_component_demazure";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  for (std::size_t zi = 0; zi < P.size(); ++zi) {
    const auto& comps = ws.components(zi);
    if (comps.size() != 1) continue;
    const auto& [a, b] = comps.front();
    for (const auto& lambda : grid) {
      for (const auto& row : graded_table(ws.cache(), P.label(zi), lambda).rows) {
        for (const auto& e : row.entries) {
          const auto expected = char_dim(demazure_character(g, a, g.neg_w0(e.mu))) *
                                char_dim(demazure_character(g, b, e.mu));
          t.expect(static_cast<std::int64_t>(e.count) == expected,
                   "standard pair count != Demazure product on " + to_string(g, P.label(zi)));
        }
      }
    }
  }
  return t.result();
}

CheckResult check_index_monotonicity(Workspace& ws, const std::vector<Weight>& grid) {
  const std::string name = "monomials.monotonicity";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  for (const auto& lambda : grid) {
    const auto& sets = ws.index_sets(lambda);
    for (std::size_t j = 0; j < P.size(); ++j) {
      const auto& down = P.down_set(j);
      for (auto i = down.find_first(); i != Bits::npos; i = down.find_next(i))
        t.expect(sets[i].is_subset_of(sets[j]), "M_Z not monotone: " + to_string(g, P.label(i)) + " <= " +
                                                    to_string(g, P.label(j)) + ", lambda = " + to_string(lambda));
    }
  }
  return t.result();
}

CheckResult check_locus_downward_closed(Workspace& ws, const std::vector<Weight>& grid) {
  const std::string name = "monomials.locus_closed";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  std::size_t pairs = 0;
  for (const auto& lambda : grid) {
    const auto& left = ws.cache().get(g.neg_w0(lambda));
    const auto& right = ws.cache().get(lambda);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto a : left.initial) {
      for (auto b : right.initial) {
        // The locus depends on the pair only through its initial directions.
        if (!seen.insert({a.id(), b.id()}).second) continue;
        ++pairs;
        const auto& bad = ws.nonstandard_set(a, b);
        for (auto i = bad.find_first(); i != Bits::npos; i = bad.find_next(i))
          t.expect(P.down_set(i).is_subset_of(bad), "non-standard set not downward closed below " +
                                                        to_string(g, P.label(i)));
      }
    }
  }
  return t.result(std::to_string(pairs) + " direction pairs");
}

CheckResult check_standard_on_intersections(Workspace& ws, const std::vector<Weight>& grid) {
  const std::string name = "monomials.standard_on_intersection";
  if (!ws.poset_feasible()) return skipped(name, "poset too large");
  Tally t(name);
  const auto& g = ws.group();
  const auto& P = ws.poset();
  std::size_t loci = 0;
  std::size_t indices = 0;
  for (const auto& lambda : grid) {
    const auto& sets = ws.index_sets(lambda);
    const auto& left = ws.cache().get(g.neg_w0(lambda));
    const auto& right = ws.cache().get(lambda);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto a : left.initial) {
      for (auto b : right.initial) {
        if (!seen.insert({a.id(), b.id()}).second) continue;
        const auto comps = P.maximal(ws.nonstandard_set(a, b));
        if (comps.size() < 2) continue;
        ++loci;
        for (std::size_t p = 0; p < comps.size(); ++p) {
          for (std::size_t q = p + 1; q < comps.size(); ++q) {
            const auto common = sets[comps[p]] & sets[comps[q]];
            if (common.none()) continue;
            const auto inter = P.maximal(P.down_set(comps[p]) & P.down_set(comps[q]));
            Bits covered(common.size());
            for (auto c : inter) covered |= sets[c];
            indices += common.count();
            t.expect(common.is_subset_of(covered),
                     "index standard on " + to_string(g, P.label(comps[p])) + " and " +
                         to_string(g, P.label(comps[q])) + " but not on their intersection, lambda = " +
                         to_string(lambda));
          }
        }
      }
    }
  }
  return t.result(std::to_string(loci) + " loci, " + std::to_string(indices) + " shared indices");
}

// ---------------------------------------------------------------- suite

Report run_suite(const WeylGroup& g, int max_weight) {
  const auto& rs = g.root_system();
  const auto grid = dominant_grid(rs, max_weight);
  Workspace ws(g);
  Report r;
  auto add = [&](CheckResult c) { r.results.push_back(std::move(c)); };
  add(check_cartan(rs));
  add(check_dominance(rs, grid));
  add(check_group_tables(g));
  add(check_bruhat_order(g));
  add(check_min_coset_reps(g));
  add(check_neg_w0(g, grid));
  add(check_orbit_census(ws));
  add(check_poset_soundness(ws));
  add(check_irreducible_components(ws));
  add(check_path_invariants(ws, grid));
  add(check_paths_weyl_dimension(ws, grid));
  add(check_paths_weyl_character(ws, grid));
  add(check_paths_demazure(ws, grid));
  add(check_demazure_idempotence(g, grid));
  add(check_demazure_braid(g, grid));
  add(check_demazure_weyl_dim(g, grid));
  add(check_basis_cardinalities(ws, grid));
  add(check_graded_tables(ws, grid));
  add(check_vanishing_criterion(ws, max_weight));
  add(check_single_component_counts(ws, grid));
  add(check_index_monotonicity(ws, grid));
  add(check_locus_downward_closed(ws, grid));
  add(check_standard_on_intersections(ws, grid));
  return r;
}

}  // namespace wonderful::verify
