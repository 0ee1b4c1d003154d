#include "wonderful/demazure.hpp"

#include <numeric>

namespace wonderful {

void Character::add(const Weight& nu, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(nu, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Character::coefficient(const Weight& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? 0 : it->second;
}

Character demazure_op(const RootSystem& rs, int i, const Character& c) {
  if (i < 0 || i >= rs.rank()) throw DomainError("simple root index out of range");
  const Weight alpha = rs.simple_root(i);
  Character out;
  for (const auto& [nu, mult] : c.terms()) {
    const int m = nu.coords[i];
    if (m >= 0) {
      // nu, nu - alpha, ..., s_i nu = nu - m alpha
      Weight cur = nu;
      for (int k = 0; k <= m; ++k) {
        out.add(cur, mult);
        cur -= alpha;
      }
    } else if (m <= -2) {
      // -(nu + alpha + ... + (s_i nu - alpha)), s_i nu = nu + |m| alpha
      Weight cur = nu;
      for (int k = 1; k <= -m - 1; ++k) {
        cur += alpha;
        out.add(cur, -mult);
      }
    }
  }
  return out;
}

Character demazure_character(const WeylGroup& g, std::span<const int> word, const Weight& lambda) {
  const auto& rs = g.root_system();
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
  if (!g.is_reduced(word)) throw DomainError("word is not reduced");
  Character c = Character::monomial(lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = demazure_op(rs, *it, c);
  return c;
}

Character demazure_character(const WeylGroup& g, WeylElement w, const Weight& lambda) {
  return demazure_character(g, g.word(w), lambda);
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
  const Weight shifted = lambda + rs.rho();
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (const auto& beta : rs.positive_roots()) {
    num *= rs.coroot_pairing(shifted, beta);
    den *= rs.coroot_pairing(rs.rho(), beta);
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("Weyl dimension is not integral");
  return num;
}

std::int64_t char_dim(const Character& c) {
  std::int64_t s = 0;
  for (const auto& [nu, mult] : c.terms()) s += mult;
  return s;
}

}  // namespace wonderful
