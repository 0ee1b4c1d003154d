#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "wonderful/rootsys.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// Finite formal sum of exponentials e^nu with integer multiplicities.
class Character {
 public:
  Character() = default;
  static Character monomial(const Weight& nu) {
    Character c;
    c.add(nu, 1);
    return c;
  }

  void add(const Weight& nu, std::int64_t mult);
  std::int64_t coefficient(const Weight& nu) const;
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool operator==(const Character&) const = default;

 private:
  std::map<Weight, std::int64_t> terms_;  // never stores zero
};

/// D_i(f) = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), evaluated as alpha_i-strings.
Character demazure_op(const RootSystem& rs, int i, const Character& c);

/// D_{i1} ... D_{ik}(e^lambda) for a reduced word (i1, ..., ik), 0-based letters.
Character demazure_character(const WeylGroup& g, std::span<const int> word, const Weight& lambda);
Character demazure_character(const WeylGroup& g, WeylElement w, const Weight& lambda);

/// Weyl dimension formula, exact.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Sum of multiplicities.
std::int64_t char_dim(const Character& c);

}  // namespace wonderful
