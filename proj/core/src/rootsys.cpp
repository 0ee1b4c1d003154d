#include "wonderful/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wonderful {

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RootVector::RootVector(std::vector<int> v) : n(std::move(v)) {
  if (std::any_of(n.begin(), n.end(), [](int c) { return c < 0; }))
    throw DomainError("root vector with negative entry");
}

int RootVector::total() const {
  int s = 0;
  for (int c : n) s += c;
  return s;
}

bool RootVector::is_zero() const { return total() == 0; }

std::uint32_t RootVector::support() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] > 0) bits |= 1u << i;
  return bits;
}

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

namespace {

// Gram matrices (alpha_i, alpha_j), scaled to integers, Bourbaki numbering.
std::vector<std::vector<int>> gram_matrix(char type, int l) {
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < l; ++i) g[i][i] = 4;
      g[l - 1][l - 1] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      g[l - 1][l - 1] = 4;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
      link(l - 2, l - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
      link(l - 3, l - 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

RationalMatrix invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  if (type_letter < 'A' || type_letter > 'G')
    throw DomainError(std::string("unknown type '") + type_letter + "'");
  if (rank < 1) throw DomainError("rank must be positive");
  bool valid = false;
  switch (type_letter) {
    case 'A': valid = rank >= 1; break;
    case 'B':
    case 'C': valid = rank >= 2; break;
    case 'D': valid = rank >= 4; break;
    case 'E': valid = rank >= 6 && rank <= 8; break;
    case 'F': valid = rank == 4; break;
    case 'G': valid = rank == 2; break;
  }
  const std::string name = std::string(1, type_letter) + std::to_string(rank);
  if (!valid) throw DomainError("invalid type/rank combination " + name);
  if (rank > kMaxRank) throw DomainError("type " + name + " is outside the supported envelope");
  return RootSystem(type_letter, rank, gram_matrix(type_letter, rank));
}

RootSystem::RootSystem(char type, int rank, std::vector<std::vector<int>> gram)
    : type_(type), rank_(rank), gram_(std::move(gram)) {
  const int l = rank_;
  norms_.resize(l);
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    norms_[i] = gram_[i][i];
    for (int j = 0; j < l; ++j) {
      const int num = 2 * gram_[i][j];
      if (num % gram_[i][i] != 0) throw std::logic_error("non-integral Cartan entry");
      cartan_[i][j] = num / gram_[i][i];
    }
  }
  for (int i = 0; i < l; ++i) {
    if (cartan_[i][i] != 2) throw std::logic_error("Cartan diagonal must be 2");
    for (int j = 0; j < l; ++j)
      if (i != j && cartan_[i][j] > 0) throw std::logic_error("positive off-diagonal Cartan entry");
  }
  inverse_cartan_ = invert(cartan_);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (inverse_cartan_[i][j] < 0) throw std::logic_error("negative inverse Cartan entry");
      Rational s = 0;
      for (int k = 0; k < l; ++k) s += Rational(cartan_[i][k]) * inverse_cartan_[k][j];
      if (s != Rational(i == j ? 1 : 0)) throw std::logic_error("inverse Cartan check failed");
    }
  }

  // Saturate the simple roots under simple reflections.
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < l; ++i) {
    Root r{std::vector<int>(l, 0)};
    r.coords[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < l; ++i) {
        Root s = reflect(r, i);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  roots_.assign(seen.begin(), seen.end());
  for (const auto& r : roots_)
    if (r.is_positive()) positive_roots_.push_back(r);
  // Height order reads better than lexicographic for positive roots.
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int c : a.coords) ha += c;
    for (int c : b.coords) hb += c;
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

void RootSystem::check_weight(const Weight& lambda) const {
  if (static_cast<int>(lambda.rank()) != rank_)
    throw DomainError("weight " + to_string(lambda) + " has " + std::to_string(lambda.rank()) +
                      " coordinates, expected " + std::to_string(rank_));
}

int RootSystem::pairing(const Weight& lambda, int i) const {
  check_weight(lambda);
  if (i < 0 || i >= rank_) throw DomainError("simple root index out of range");
  return lambda.coords[i];
}

int RootSystem::coroot_pairing(const Weight& lambda, const Root& beta) const {
  check_weight(lambda);
  std::int64_t num = 0;
  std::int64_t norm = 0;
  for (int i = 0; i < rank_; ++i) {
    num += static_cast<std::int64_t>(beta.coords[i]) * lambda.coords[i] * norms_[i];
    for (int j = 0; j < rank_; ++j)
      norm += static_cast<std::int64_t>(beta.coords[i]) * beta.coords[j] * gram_[i][j];
  }
  // <lambda, beta^vee> = 2 (lambda, beta) / (beta, beta), with (lambda, alpha_j) = lambda_j |alpha_j|^2 / 2.
  if (num % norm != 0) throw std::logic_error("non-integral coroot pairing");
  return static_cast<int>(num / norm);
}

Weight RootSystem::simple_root(int i) const {
  Weight w = Weight::zero(rank_);
  for (int k = 0; k < rank_; ++k) w.coords[k] = cartan_[k][i];
  return w;
}

Weight RootSystem::root_weight(const Root& beta) const {
  Weight w = Weight::zero(rank_);
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) w.coords[k] += cartan_[k][j] * beta.coords[j];
  return w;
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank_, 1)); }

Weight RootSystem::reflect(const Weight& lambda, int i) const {
  Weight r = lambda;
  const int m = lambda.coords[i];
  for (int k = 0; k < rank_; ++k) r.coords[k] -= m * cartan_[k][i];
  return r;
}

Root RootSystem::reflect(const Root& beta, int i) const {
  int m = 0;
  for (int j = 0; j < rank_; ++j) m += beta.coords[j] * cartan_[i][j];
  Root r = beta;
  r.coords[i] -= m;
  return r;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& lambda) const {
  check_weight(lambda);
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += inverse_cartan_[i][j] * lambda.coords[j];
  return out;
}

std::optional<RootVector> RootSystem::dominance_diff(const Weight& lambda, const Weight& mu) const {
  check_weight(mu);
  const auto n = to_root_coords(lambda - mu);
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (n[i].denominator() != 1 || n[i] < 0) return std::nullopt;
    out[i] = static_cast<int>(n[i].numerator());
  }
  return RootVector(std::move(out));
}

std::vector<DominantTerm> RootSystem::dominant_below(const Weight& lambda) const {
  check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
  const auto bound_q = to_root_coords(lambda);
  std::vector<int> bound(rank_);
  for (int i = 0; i < rank_; ++i) bound[i] = static_cast<int>(boost::rational_cast<std::int64_t>(bound_q[i]));

  std::vector<DominantTerm> out;
  std::vector<int> n(rank_, 0);
  // Odometer over the box, last coordinate fastest: lexicographic on n.
  while (true) {
    Weight mu = lambda;
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) mu.coords[k] -= cartan_[k][j] * n[j];
    if (mu.is_dominant()) out.push_back({std::move(mu), RootVector(n)});
    int pos = rank_ - 1;
    while (pos >= 0 && n[pos] == bound[pos]) n[pos--] = 0;
    if (pos < 0) break;
    ++n[pos];
  }
  return out;
}

}  // namespace wonderful
