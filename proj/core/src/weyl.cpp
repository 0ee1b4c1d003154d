#include "wonderful/weyl.hpp"

#include <algorithm>
#include <bit>

namespace wonderful {

SubsetD SubsetD::of(std::initializer_list<int> members) {
  std::uint32_t bits = 0;
  for (int m : members) bits |= 1u << m;
  return SubsetD(bits);
}

int SubsetD::size() const { return std::popcount(bits_); }

std::vector<int> SubsetD::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<SubsetD> all_subsets(int rank) {
  std::vector<SubsetD> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  return out;
}

std::string to_string(SubsetD s) {
  std::string out = "{";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ',';
    out += std::to_string(m + 1);
    first = false;
  }
  return out + "}";
}

namespace {

IntMatrix identity_matrix(int l) {
  IntMatrix m(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<int> mat_vec(const IntMatrix& a, const std::vector<int>& v) {
  std::vector<int> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int l = rs_.rank();
  const auto& C = rs_.cartan();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < l; ++i) {
    IntMatrix s = identity_matrix(l);
    for (int k = 0; k < l; ++k) s[k][i] -= C[k][i];
    gens.push_back(std::move(s));
  }
  const std::vector<int> rho = rs_.rho().coords;

  data_.push_back({identity_matrix(l), {}, 0});
  by_rho_image_.emplace(rho, 0);
  std::vector<std::uint32_t> parent{0};
  right_.assign(l, 0);

  // Breadth-first over words in lexicographic order per level: the first word
  // reaching an element is its lexicographically smallest reduced word.
  std::size_t level_begin = 0;
  while (level_begin < data_.size()) {
    const std::size_t level_end = data_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (int i = 0; i < l; ++i) {
        IntMatrix a = mat_mul(data_[p].action, gens[i]);
        auto key = mat_vec(a, rho);
        auto it = by_rho_image_.find(key);
        std::uint32_t id;
        if (it == by_rho_image_.end()) {
          id = static_cast<std::uint32_t>(data_.size());
          if (id >= kMaxOrder) throw DomainError("Weyl group of " + rs_.name() + " exceeds the supported envelope");
          ElementData d{std::move(a), data_[p].word, data_[p].length + 1};
          d.word.push_back(i);
          data_.push_back(std::move(d));
          by_rho_image_.emplace(std::move(key), id);
          parent.push_back(static_cast<std::uint32_t>(p));
          right_.resize(right_.size() + l, 0);
        } else {
          id = it->second;
        }
        right_[p * l + i] = id;
      }
    }
    level_begin = level_end;
  }

  const std::size_t n = data_.size();
  elements_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) elements_.emplace_back(static_cast<std::uint32_t>(k));
  longest_ = WeylElement(static_cast<std::uint32_t>(n - 1));

  left_.assign(n * l, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (int i = 0; i < l; ++i) left_[k * l + i] = lookup(mat_mul(gens[i], data_[k].action)).id();

  // u * w = (u * p) * s_a along the canonical word w = p s_a.
  product_.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    product_[u * n] = static_cast<std::uint32_t>(u);
    for (std::size_t k = 1; k < n; ++k)
      product_[u * n + k] = right_[product_[u * n + parent[k]] * l + data_[k].word.back()];
  }
  inverse_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& wd = data_[k].word;
    std::vector<int> rev(wd.rbegin(), wd.rend());
    inverse_[k] = from_word(rev).id();
  }

  // [e, w] = [e, p] union [e, p] s_a where w = p s_a along the canonical word.
  lower_.assign(n, boost::dynamic_bitset<>(n));
  lower_[0].set(0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t p = parent[k];
    const int a = data_[k].word.back();
    auto& bits = lower_[k];
    bits = lower_[p];
    for (auto u = lower_[p].find_first(); u != boost::dynamic_bitset<>::npos; u = lower_[p].find_next(u))
      bits.set(right_[u * l + a]);
  }
}

WeylElement WeylGroup::lookup(const IntMatrix& action) const {
  auto it = by_rho_image_.find(mat_vec(action, rs_.rho().coords));
  if (it == by_rho_image_.end()) throw std::logic_error("matrix is not a Weyl group element");
  return WeylElement(it->second);
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  WeylElement r = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw DomainError("generator index out of range");
    r = times_generator(r, i);
  }
  return r;
}

bool WeylGroup::is_reduced(std::span<const int> word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

Weight WeylGroup::act(WeylElement w, const Weight& lambda) const {
  rs_.check_weight(lambda);
  return Weight(mat_vec(action(w), lambda.coords));
}

Weight WeylGroup::neg_w0(const Weight& lambda) const { return -act(longest_, lambda); }

int WeylGroup::inversion_count(WeylElement w) const {
  int count = 0;
  for (const auto& beta : rs_.positive_roots()) {
    const auto image = rs_.to_root_coords(act(w, rs_.root_weight(beta)));
    if (std::any_of(image.begin(), image.end(), [](const Rational& c) { return c < 0; })) ++count;
  }
  return count;
}

bool WeylGroup::in_parabolic(WeylElement w, SubsetD I) const {
  const auto& wd = word(w);
  return std::all_of(wd.begin(), wd.end(), [&](int i) { return I.contains(i); });
}

bool WeylGroup::is_min_coset_rep(WeylElement w, SubsetD I) const {
  for (int i : I.members())
    if (has_right_descent(w, i)) return false;
  return true;
}

CosetDecomposition WeylGroup::min_coset_rep(WeylElement w, SubsetD I) const {
  WeylElement x = w;
  std::vector<int> stripped;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : I.members()) {
      if (has_right_descent(x, i)) {
        x = times_generator(x, i);
        stripped.push_back(i);
        changed = true;
        break;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return {x, from_word(stripped)};
}

std::vector<WeylElement> WeylGroup::parabolic(SubsetD I) const {
  std::vector<WeylElement> out;
  for (auto w : elements_)
    if (in_parabolic(w, I)) out.push_back(w);
  return out;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(SubsetD I) const {
  std::vector<WeylElement> out;
  for (auto w : elements_)
    if (is_min_coset_rep(w, I)) out.push_back(w);
  return out;
}

std::vector<WeylElement> WeylGroup::parabolic_min_reps(SubsetD first, SubsetD second) const {
  std::vector<WeylElement> out;
  for (auto w : elements_)
    if (in_parabolic(w, first) && is_min_coset_rep(w, second)) out.push_back(w);
  return out;
}

WeylElement WeylGroup::min_element_mapping(const Weight& shape, const Weight& dir) const {
  rs_.check_weight(shape);
  rs_.check_weight(dir);
  if (!shape.is_dominant()) throw DomainError("shape not dominant: " + to_string(shape));
  Weight d = dir;
  std::vector<int> letters;
  while (!d.is_dominant()) {
    int i = 0;
    while (d.coords[i] >= 0) ++i;
    d = rs_.reflect(d, i);
    letters.push_back(i);
  }
  if (d != shape) throw DomainError(to_string(dir) + " is not in the Weyl orbit of " + to_string(shape));
  std::uint32_t stab = 0;
  for (int i = 0; i < rank(); ++i)
    if (shape.coords[i] == 0) stab |= 1u << i;
  return min_coset_rep(from_word(letters), SubsetD(stab)).min_rep;
}

std::string WeylGroup::word_string(WeylElement w) const {
  const auto& wd = word(w);
  if (wd.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < wd.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(wd[k] + 1);
  }
  return out;
}

std::vector<int> WeylGroup::word_one_based(WeylElement w) const {
  std::vector<int> out = word(w);
  for (auto& c : out) ++c;
  return out;
}

}  // namespace wonderful
