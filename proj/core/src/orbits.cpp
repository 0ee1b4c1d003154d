#include "wonderful/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wonderful {

namespace {

// Candidate (u, v) lists: u ranges over W_I, v over W_J cap W^I.
struct WitnessDomain {
  std::vector<WeylElement> u;
  std::vector<WeylElement> v;
};

WitnessDomain witness_domain(const WeylGroup& g, SubsetD I, SubsetD J) {
  return {g.parabolic(I), g.parabolic_min_reps(J, I)};
}

template <typename OnWitness>
void search_witnesses(const WeylGroup& g, const OrbitLabel& lower, const OrbitLabel& upper,
                      const WitnessDomain& dom, OnWitness&& on_witness) {
  for (auto v : dom.v) {
    const WeylElement wv = g.multiply(upper.w, v);
    if (g.length(wv) != g.length(upper.w) + g.length(v)) continue;
    const WeylElement xv = g.multiply(upper.x, v);
    for (auto u : dom.u) {
      if (!g.bruhat_leq(g.multiply(xv, g.inverse(u)), lower.x)) continue;
      if (!g.bruhat_leq(g.multiply(lower.w, u), wv)) continue;
      if (!on_witness(ClosureWitness{u, v})) return;
    }
  }
}

}  // namespace

OrbitLabel make_orbit(const WeylGroup& g, SubsetD I, WeylElement x, WeylElement w) {
  if (!I.subset_of(SubsetD::full(g.rank()))) throw DomainError("subset I has indices outside the Dynkin diagram");
  if (!g.is_min_coset_rep(x, I))
    throw DomainError("x = " + g.word_string(x) + " is not a minimal coset representative for I = " + to_string(I));
  return {I, x, w};
}

std::string to_string(const WeylGroup& g, const OrbitLabel& z) {
  return "[" + to_string(z.I) + "; " + g.word_string(z.x) + "; " + g.word_string(z.w) + "]";
}

int dimension(const WeylGroup& g, const OrbitLabel& z) {
  return g.length(g.longest()) - g.length(z.x) + g.length(z.w) + z.I.size();
}

bool closure_leq(const WeylGroup& g, const OrbitLabel& lower, const OrbitLabel& upper) {
  if (!lower.I.subset_of(upper.I)) return false;
  bool found = false;
  search_witnesses(g, lower, upper, witness_domain(g, lower.I, upper.I), [&](const ClosureWitness&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<ClosureWitness> closure_witnesses(const WeylGroup& g, const OrbitLabel& lower, const OrbitLabel& upper) {
  std::vector<ClosureWitness> out;
  if (!lower.I.subset_of(upper.I)) return out;
  search_witnesses(g, lower, upper, witness_domain(g, lower.I, upper.I), [&](const ClosureWitness& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitLabel> components_in_XJ(const WeylGroup& g, const OrbitLabel& z, SubsetD J) {
  if (!J.subset_of(z.I)) throw DomainError("J = " + to_string(J) + " is not contained in I = " + to_string(z.I));
  std::vector<OrbitLabel> out;
  for (auto v : g.parabolic_min_reps(z.I, J)) {
    const WeylElement wv = g.multiply(z.w, v);
    if (g.length(wv) != g.length(z.w) + g.length(v)) continue;
    const WeylElement xv = g.multiply(z.x, v);
    const auto dec = g.min_coset_rep(xv, J);
    if (dec.remainder != g.identity())
      throw std::logic_error("x v is not a minimal coset representative in components_in_XJ");
    out.push_back({J, dec.min_rep, wv});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SchubertPair> schubert_components_in_Y(const WeylGroup& g, const OrbitLabel& z) {
  std::vector<SchubertPair> out;
  for (const auto& c : components_in_XJ(g, z, SubsetD())) out.push_back({g.multiply(c.x, g.longest()), c.w});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OrbitLabel> all_orbits(const WeylGroup& g) {
  std::vector<OrbitLabel> out;
  for (auto I : all_subsets(g.rank()))
    for (auto x : g.min_coset_reps(I))
      for (auto w : g.elements()) out.push_back({I, x, w});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t orbit_count(const WeylGroup& g) {
  std::size_t total = 0;
  for (auto I : all_subsets(g.rank())) total += g.order() / g.parabolic(I).size();
  return total * g.order();
}

namespace {

const WeylGroup& check_poset_envelope(const WeylGroup& g) {
  const auto n = orbit_count(g);
  if (n > OrbitPoset::kMaxSize)
    throw DomainError("orbit poset of " + g.root_system().name() + " has " + std::to_string(n) +
                      " orbits, outside the supported envelope of " + std::to_string(OrbitPoset::kMaxSize));
  return g;
}

}  // namespace

OrbitPoset::OrbitPoset(const WeylGroup& g) : group_(&check_poset_envelope(g)), labels_(all_orbits(g)) {
  const std::size_t n = labels_.size();
  dims_.reserve(n);
  for (const auto& z : labels_) dims_.push_back(wonderful::dimension(g, z));

  std::map<std::pair<std::uint32_t, std::uint32_t>, WitnessDomain> domains;
  for (auto I : all_subsets(g.rank()))
    for (auto J : all_subsets(g.rank()))
      if (I.subset_of(J)) domains.emplace(std::make_pair(I.bits(), J.bits()), witness_domain(g, I, J));

  down_.assign(n, Bits(n));
  up_.assign(n, Bits(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& lo = labels_[i];
      const auto& hi = labels_[j];
      if (!lo.I.subset_of(hi.I)) continue;
      bool found = false;
      search_witnesses(g, lo, hi, domains.at({lo.I.bits(), hi.I.bits()}), [&](const ClosureWitness&) {
        found = true;
        return false;
      });
      if (found) {
        down_[j].set(i);
        up_[i].set(j);
      }
    }
  }

  // Transitive reduction: i is covered by j iff i < j with nothing strictly between.
  covers_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Bits strict = down_[j];
    strict.reset(j);
    Bits between(n);
    for (auto k = strict.find_first(); k != Bits::npos; k = strict.find_next(k)) {
      Bits below_k = down_[k];
      below_k.reset(k);
      between |= below_k;
    }
    Bits cov = strict - between;
    for (auto i = cov.find_first(); i != Bits::npos; i = cov.find_next(i)) covers_[j].push_back(i);
  }
}

std::size_t OrbitPoset::index_of(const OrbitLabel& z) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), z);
  if (it == labels_.end() || *it != z) throw DomainError("orbit label not in poset");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> OrbitPoset::maximal(const Bits& subset) const {
  std::vector<std::size_t> out;
  for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) {
    Bits above = up_[i] & subset;
    above.reset(i);
    if (above.none()) out.push_back(i);
  }
  return out;
}

std::vector<OrbitLabel> OrbitPoset::intersect_closures(const OrbitLabel& z1, const OrbitLabel& z2) const {
  const Bits common = down_[index_of(z1)] & down_[index_of(z2)];
  std::vector<OrbitLabel> out;
  for (auto i : maximal(common)) out.push_back(labels_[i]);
  return out;
}

std::size_t OrbitPoset::top() const {
  return index_of({SubsetD::full(group_->rank()), group_->identity(), group_->longest()});
}

std::size_t OrbitPoset::bottom() const { return index_of({SubsetD(), group_->longest(), group_->identity()}); }

}  // namespace wonderful
