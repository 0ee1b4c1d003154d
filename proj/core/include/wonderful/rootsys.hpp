#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 reversed-candidate rules; exact non-template overloads win the tie.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}

}  // namespace boost

namespace wonderful {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Raised for invalid input: unknown types, non-dominant weights, malformed labels.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of the weight lattice, in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);

  auto operator<=>(const Weight&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
/// "(1,0)" style rendering.
std::string to_string(const Weight& w);

/// Nonnegative coefficients n_1..n_l of a combination of simple roots.
struct RootVector {
  std::vector<int> n;

  RootVector() = default;
  explicit RootVector(std::vector<int> v);

  std::size_t rank() const { return n.size(); }
  int operator[](std::size_t i) const { return n[i]; }
  /// |n| = n_1 + ... + n_l.
  int total() const;
  bool is_zero() const;
  /// Bitmask of indices with n_i > 0.
  std::uint32_t support() const;

  auto operator<=>(const RootVector&) const = default;
};

/// A root in simple-root coordinates (all coefficients share one sign).
struct Root {
  std::vector<int> coords;

  bool is_positive() const;
  auto operator<=>(const Root&) const = default;
};

struct DominantTerm {
  Weight mu;
  RootVector n;
  auto operator<=>(const DominantTerm&) const = default;
};

/// Exact Cartan data of a simple root system of rank at most 4.
///
/// Simple roots follow Bourbaki numbering. Indices are 0-based in the API;
/// user-facing strings (words, subsets) are 1-based. The Cartan matrix is
/// stored as C[i][j] = <alpha_j, alpha_i^vee>, so column j of C is alpha_j
/// expressed in fundamental weights.
class RootSystem {
 public:
  static constexpr int kMaxRank = 4;

  /// Throws DomainError for invalid or unsupported (type, rank).
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& inverse_cartan() const { return inverse_cartan_; }
  /// Squared lengths of simple roots, scaled to integers (shortest root has norm 2
  /// except in F4 and G2 where the table is scaled consistently).
  const std::vector<int>& simple_root_norms() const { return norms_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const std::vector<Root>& roots() const { return roots_; }

  /// <lambda, alpha_i^vee>.
  int pairing(const Weight& lambda, int i) const;
  /// <lambda, beta^vee> for an arbitrary root beta.
  int coroot_pairing(const Weight& lambda, const Root& beta) const;

  Weight simple_root(int i) const;
  Weight root_weight(const Root& beta) const;
  Weight rho() const;
  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  Weight reflect(const Weight& lambda, int i) const;
  Root reflect(const Root& beta, int i) const;

  /// n with lambda - mu = sum n_i alpha_i, n_i >= 0 integral; nullopt otherwise.
  std::optional<RootVector> dominance_diff(const Weight& lambda, const Weight& mu) const;

  /// All dominant mu <= lambda, ordered lexicographically by n (n = 0 first).
  std::vector<DominantTerm> dominant_below(const Weight& lambda) const;

  /// Exact C^{-1} * coords.
  std::vector<Rational> to_root_coords(const Weight& lambda) const;

  void check_weight(const Weight& lambda) const;

  bool operator==(const RootSystem& o) const { return type_ == o.type_ && rank_ == o.rank_; }

 private:
  RootSystem(char type, int rank, std::vector<std::vector<int>> gram);

  char type_;
  int rank_;
  std::vector<std::vector<int>> gram_;  // (alpha_i, alpha_j), scaled
  std::vector<int> norms_;
  IntMatrix cartan_;
  RationalMatrix inverse_cartan_;
  std::vector<Root> roots_;
  std::vector<Root> positive_roots_;
};

std::string to_string(const Rational& r);

}  // namespace wonderful
