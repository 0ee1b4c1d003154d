#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wonderful/weyl.hpp"

namespace wonderful {

/// The B x B-orbit [I, x, w] of the wonderful compactification, x in W^I.
struct OrbitLabel {
  SubsetD I;
  WeylElement x;
  WeylElement w;
  auto operator<=>(const OrbitLabel&) const = default;
};

/// Schubert variety S(a) x S(b) in G/B x G/B.
struct SchubertPair {
  WeylElement a;
  WeylElement b;
  auto operator<=>(const SchubertPair&) const = default;
};

/// (u, v) with u in W_I, v in W_J cap W^I satisfying the closure conditions.
struct ClosureWitness {
  WeylElement u;
  WeylElement v;
  auto operator<=>(const ClosureWitness&) const = default;
};

/// Validates x in W^I; throws DomainError otherwise.
OrbitLabel make_orbit(const WeylGroup& g, SubsetD I, WeylElement x, WeylElement w);

std::string to_string(const WeylGroup& g, const OrbitLabel& z);

/// l(w0) - l(x) + l(w) + |I|.
int dimension(const WeylGroup& g, const OrbitLabel& z);

/// closure([I,x',w']) subset of closure([J,x,w]): I subset J and there are
/// u in W_I, v in W_J cap W^I with l(wv) = l(w) + l(v), x' >= x v u^{-1} and
/// w' u <= w v. Decided by exhaustive search.
bool closure_leq(const WeylGroup& g, const OrbitLabel& lower, const OrbitLabel& upper);

/// Every (u, v) witnessing closure_leq(lower, upper).
std::vector<ClosureWitness> closure_witnesses(const WeylGroup& g, const OrbitLabel& lower, const OrbitLabel& upper);

/// Irreducible components [J, xv, wv] of Z cap X_J, v in W_I cap W^J with
/// l(wv) = l(w) + l(v). Requires J subset I.
std::vector<OrbitLabel> components_in_XJ(const WeylGroup& g, const OrbitLabel& z, SubsetD J);

/// Components of Z cap Y as Schubert pairs (x v w0, w v).
std::vector<SchubertPair> schubert_components_in_Y(const WeylGroup& g, const OrbitLabel& z);

/// All labels (I, x in W^I, w), ascending.
std::vector<OrbitLabel> all_orbits(const WeylGroup& g);
/// Sum over I of |W^I| |W|, without enumerating.
std::size_t orbit_count(const WeylGroup& g);

/// Springer's poset of B x B-orbit closures with the full order and its covers.
class OrbitPoset {
 public:
  using Bits = boost::dynamic_bitset<>;
  static constexpr std::size_t kMaxSize = 2000;

  /// Throws DomainError when the group has more than kMaxSize orbits.
  explicit OrbitPoset(const WeylGroup& g);

  const WeylGroup& group() const { return *group_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<OrbitLabel>& labels() const { return labels_; }
  const OrbitLabel& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const OrbitLabel& z) const;
  int dimension(std::size_t i) const { return dims_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return down_[j].test(i); }
  /// {i : i <= j}.
  const Bits& down_set(std::size_t j) const { return down_[j]; }
  /// {j : i <= j}.
  const Bits& up_set(std::size_t i) const { return up_[i]; }
  /// Elements covered by j, ascending.
  const std::vector<std::size_t>& covers(std::size_t j) const { return covers_[j]; }

  /// Maximal elements (ascending) of a subset.
  std::vector<std::size_t> maximal(const Bits& subset) const;

  /// Maximal elements of the common lower set of z1 and z2.
  std::vector<OrbitLabel> intersect_closures(const OrbitLabel& z1, const OrbitLabel& z2) const;

  std::size_t top() const;
  std::size_t bottom() const;

 private:
  const WeylGroup* group_;
  std::vector<OrbitLabel> labels_;
  std::vector<int> dims_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<std::vector<std::size_t>> covers_;
};

}  // namespace wonderful
