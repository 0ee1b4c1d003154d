#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wonderful/rootsys.hpp"

namespace wonderful {

/// A subset of the simple-root indices {0, ..., l-1}, stored as a bitmask.
class SubsetD {
 public:
  constexpr SubsetD() = default;
  constexpr explicit SubsetD(std::uint32_t bits) : bits_(bits) {}
  static SubsetD full(int rank) { return SubsetD((1u << rank) - 1); }
  static SubsetD of(std::initializer_list<int> members);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> members() const;
  constexpr bool subset_of(SubsetD o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr SubsetD operator&(SubsetD o) const { return SubsetD(bits_ & o.bits_); }

  auto operator<=>(const SubsetD&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of {0, ..., rank-1}, ascending by bitmask.
std::vector<SubsetD> all_subsets(int rank);
/// "{1,2}" with 1-based members.
std::string to_string(SubsetD s);

/// Handle to an element of a WeylGroup.
///
/// Ids follow the group's enumeration order (length, then canonical word), so
/// comparing handles compares in that order. Equality of handles is equality
/// of the underlying linear maps.
class WeylElement {
 public:
  constexpr WeylElement() = default;
  constexpr explicit WeylElement(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t id() const { return id_; }
  auto operator<=>(const WeylElement&) const = default;

 private:
  std::uint32_t id_ = 0;
};

struct CosetDecomposition {
  WeylElement min_rep;    // x in W^I
  WeylElement remainder;  // x^{-1} w in W_I
};

/// The Weyl group of a RootSystem, fully enumerated.
///
/// Elements act on weights (fundamental-weight coordinates) by integer
/// matrices. Words are sequences of 0-based generator indices multiplied left
/// to right. The canonical word of an element is its lexicographically
/// smallest reduced word. All tables are built in the constructor; the object
/// is immutable afterwards.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 1152;

  explicit WeylGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  WeylElement identity() const { return WeylElement(0); }
  WeylElement longest() const { return longest_; }
  WeylElement generator(int i) const { return times_generator(identity(), i); }

  int length(WeylElement w) const { return data_[w.id()].length; }
  const std::vector<int>& word(WeylElement w) const { return data_[w.id()].word; }
  const IntMatrix& action(WeylElement w) const { return data_[w.id()].action; }

  /// w * s_i and s_i * w.
  WeylElement times_generator(WeylElement w, int i) const { return WeylElement(right_[w.id() * rank() + i]); }
  WeylElement generator_times(int i, WeylElement w) const { return WeylElement(left_[w.id() * rank() + i]); }

  WeylElement multiply(WeylElement u, WeylElement v) const { return WeylElement(product_[u.id() * order() + v.id()]); }
  WeylElement inverse(WeylElement w) const { return WeylElement(inverse_[w.id()]); }
  /// Product of an arbitrary (not necessarily reduced) word.
  WeylElement from_word(std::span<const int> word) const;
  bool is_reduced(std::span<const int> word) const;

  Weight act(WeylElement w, const Weight& lambda) const;
  /// -w0(lambda).
  Weight neg_w0(const Weight& lambda) const;

  /// True iff w(alpha_i) is a negative root, i.e. l(w s_i) < l(w).
  bool has_right_descent(WeylElement w, int i) const { return length(times_generator(w, i)) < length(w); }
  bool has_left_descent(WeylElement w, int i) const { return length(generator_times(i, w)) < length(w); }

  /// Number of positive roots sent to negative roots, computed from the action.
  int inversion_count(WeylElement w) const;

  /// Bruhat order u <= w (subword property against the canonical word of w).
  bool bruhat_leq(WeylElement u, WeylElement w) const { return lower_[w.id()].test(u.id()); }
  /// The Bruhat interval [e, w] as a bitset over element ids.
  const boost::dynamic_bitset<>& lower_interval(WeylElement w) const { return lower_[w.id()]; }

  bool in_parabolic(WeylElement w, SubsetD I) const;
  bool is_min_coset_rep(WeylElement w, SubsetD I) const;
  /// w = x * (x^{-1} w) with x in W^I, x^{-1} w in W_I and lengths adding.
  CosetDecomposition min_coset_rep(WeylElement w, SubsetD I) const;

  /// W_first cap W^second: elements of the parabolic subgroup W_first that are
  /// minimal representatives of cosets w W_second. Sorted by id.
  std::vector<WeylElement> parabolic_min_reps(SubsetD first, SubsetD second) const;
  std::vector<WeylElement> parabolic(SubsetD I) const;
  std::vector<WeylElement> min_coset_reps(SubsetD I) const;

  /// Minimal element w with w(shape) = dir; throws if dir is not in the orbit.
  WeylElement min_element_mapping(const Weight& shape, const Weight& dir) const;

  /// "s1 s2 s1", or "e" for the identity (1-based).
  std::string word_string(WeylElement w) const;
  /// Canonical word with 1-based letters.
  std::vector<int> word_one_based(WeylElement w) const;

 private:
  struct ElementData {
    IntMatrix action;
    std::vector<int> word;
    int length = 0;
  };

  WeylElement lookup(const IntMatrix& action) const;

  RootSystem rs_;
  std::vector<ElementData> data_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::uint32_t> by_rho_image_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> product_;
  std::vector<std::uint32_t> inverse_;
  std::vector<boost::dynamic_bitset<>> lower_;
  WeylElement longest_;
};

}  // namespace wonderful
