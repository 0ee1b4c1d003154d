#include <functional>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace wonderful;
using oracle::group;
using oracle::wt;

namespace {

std::vector<std::pair<char, int>> small_types() { return {{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}; }

}  // namespace

TEST(WeylGroup, Orders) {
  EXPECT_EQ(group('A', 1).order(), 2u);
  EXPECT_EQ(group('A', 2).order(), 6u);
  EXPECT_EQ(group('A', 2).length(group('A', 2).longest()), 3);
  EXPECT_EQ(group('B', 2).order(), 8u);
  EXPECT_EQ(group('B', 2).length(group('B', 2).longest()), 4);
  EXPECT_EQ(group('G', 2).order(), 12u);
  EXPECT_EQ(group('D', 4).order(), 192u);
  EXPECT_EQ(group('F', 4).order(), 1152u);
  EXPECT_EQ(group('F', 4).length(group('F', 4).longest()), 24);
}

TEST(WeylGroup, EnumerationOrder) {
  const auto& g = group('B', 3);
  for (std::size_t k = 1; k < g.order(); ++k) {
    const auto& a = g.elements()[k - 1];
    const auto& b = g.elements()[k];
    EXPECT_TRUE(g.length(a) < g.length(b) || (g.length(a) == g.length(b) && g.word(a) < g.word(b)));
  }
}

TEST(WeylGroup, CanonicalWordIsLexMinimalReduced) {
  const auto& g = group('A', 3);
  std::map<WeylElement, std::vector<int>> best;
  // Every reduced word by depth-first extension; keep the smallest per element.
  std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& word) {
    const auto w = g.from_word(word);
    if (g.length(w) != static_cast<int>(word.size())) return;
    auto it = best.find(w);
    if (it == best.end() || word < it->second) best[w] = word;
    for (int i = 0; i < g.rank(); ++i) {
      word.push_back(i);
      walk(word);
      word.pop_back();
    }
  };
  std::vector<int> empty;
  walk(empty);
  ASSERT_EQ(best.size(), g.order());
  for (const auto& [w, word] : best) EXPECT_EQ(g.word(w), word);
}

TEST(WeylGroup, Multiplication) {
  const auto& a2 = group('A', 2);
  const auto s1 = a2.generator(0), s2 = a2.generator(1);
  EXPECT_EQ(a2.multiply(s1, s1), a2.identity());
  EXPECT_EQ(a2.length(a2.multiply(s1, s2)), 2);
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    EXPECT_EQ(g.multiply(g.longest(), g.longest()), g.identity());
  }
}

TEST(WeylGroup, MultiplicationMatchesWords) {
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    for (auto u : g.elements()) {
      for (auto v : g.elements()) {
        std::vector<int> word = g.word(u);
        word.insert(word.end(), g.word(v).begin(), g.word(v).end());
        EXPECT_EQ(g.multiply(u, v), g.from_word(word));
      }
      std::vector<int> rev(g.word(u).rbegin(), g.word(u).rend());
      EXPECT_EQ(g.inverse(u), g.from_word(rev));
    }
  }
}

TEST(WeylGroup, LengthAgainstMatrixInversions) {
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    for (auto u : g.elements())
      for (auto v : g.elements()) {
        const auto uv = g.multiply(u, v);
        EXPECT_EQ(g.length(uv), g.inversion_count(uv));
        EXPECT_LE(g.length(uv), g.length(u) + g.length(v));
      }
  }
}

TEST(WeylGroup, BruhatExamples) {
  const auto& a2 = group('A', 2);
  const auto s1 = a2.generator(0), s2 = a2.generator(1);
  for (auto w : a2.elements()) EXPECT_TRUE(a2.bruhat_leq(a2.identity(), w));
  EXPECT_TRUE(a2.bruhat_leq(s1, a2.multiply(s1, s2)));
  const auto s12 = a2.multiply(s1, s2), s21 = a2.multiply(s2, s1);
  EXPECT_FALSE(a2.bruhat_leq(s12, s21));
  EXPECT_FALSE(a2.bruhat_leq(s21, s12));
}

TEST(WeylGroup, BruhatMatchesSubwordSearch) {
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    for (auto u : g.elements())
      for (auto w : g.elements())
        EXPECT_EQ(g.bruhat_leq(u, w), oracle::bruhat_subword(g, u, w))
            << g.root_system().name() << " " << g.word_string(u) << " <= " << g.word_string(w);
  }
}

TEST(WeylGroup, BruhatIsPartialOrderReversedByW0) {
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    const auto w0 = g.longest();
    for (auto u : g.elements()) {
      EXPECT_TRUE(g.bruhat_leq(u, u));
      for (auto w : g.elements()) {
        if (u != w && g.bruhat_leq(u, w)) EXPECT_FALSE(g.bruhat_leq(w, u));
        EXPECT_EQ(g.bruhat_leq(u, w), g.bruhat_leq(g.multiply(w0, w), g.multiply(w0, u)));
        for (auto v : g.elements())
          if (g.bruhat_leq(u, w) && g.bruhat_leq(w, v)) EXPECT_TRUE(g.bruhat_leq(u, v));
      }
    }
  }
}

TEST(WeylGroup, MinCosetRep) {
  const auto& a2 = group('A', 2);
  const auto w0 = a2.from_word(std::vector<int>{0, 1, 0});
  const auto dec = a2.min_coset_rep(w0, SubsetD::of({0}));
  // s1 s2 s1 = (s1 s2) s1, and s2 s1 ends in s1 so it is not in W^{1}.
  EXPECT_EQ(dec.min_rep, a2.from_word(std::vector<int>{0, 1}));
  EXPECT_FALSE(a2.is_min_coset_rep(a2.from_word(std::vector<int>{1, 0}), SubsetD::of({0})));
  EXPECT_EQ(a2.min_coset_rep(w0, SubsetD::of({1})).min_rep, a2.from_word(std::vector<int>{1, 0}));
  EXPECT_EQ(a2.multiply(dec.min_rep, dec.remainder), w0);
  for (auto w : a2.elements()) EXPECT_EQ(a2.min_coset_rep(w, SubsetD()).min_rep, w);
}

TEST(WeylGroup, MinCosetRepIsShortestInCoset) {
  for (auto [t, r] : small_types()) {
    const auto& g = group(t, r);
    for (auto I : all_subsets(g.rank())) {
      const auto WI = g.parabolic(I);
      for (auto w : g.elements()) {
        WeylElement shortest = w;
        for (auto u : WI) {
          const auto wu = g.multiply(w, u);
          if (g.length(wu) < g.length(shortest)) shortest = wu;
        }
        const auto x = g.min_coset_rep(w, I).min_rep;
        EXPECT_EQ(x, shortest);
        EXPECT_TRUE(g.bruhat_leq(x, w));
        if (g.is_min_coset_rep(w, I)) EXPECT_EQ(x, w);
      }
    }
  }
}

TEST(WeylGroup, ParabolicMinReps) {
  const auto& a2 = group('A', 2);
  for (auto J : all_subsets(2)) {
    const auto v = a2.parabolic_min_reps(SubsetD(), J);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v.front(), a2.identity());
  }
  EXPECT_EQ(a2.parabolic_min_reps(SubsetD::of({0, 1}), SubsetD()).size(), 6u);
  const auto one = a2.parabolic_min_reps(SubsetD::of({0}), SubsetD::of({0}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), a2.identity());
}

TEST(WeylGroup, NegW0) {
  const auto& a1 = group('A', 1);
  EXPECT_EQ(a1.neg_w0(wt({2})), wt({2}));
  const auto& a2 = group('A', 2);
  EXPECT_EQ(a2.neg_w0(wt({1, 0})), wt({0, 1}));
  const auto& b2 = group('B', 2);
  EXPECT_EQ(b2.neg_w0(wt({3, 5})), wt({3, 5}));
  const auto& a3 = group('A', 3);
  EXPECT_EQ(a3.neg_w0(wt({1, 2, 3})), wt({3, 2, 1}));
  EXPECT_EQ(a3.neg_w0(a3.neg_w0(wt({-1, 4, 0}))), wt({-1, 4, 0}));
}

TEST(WeylGroup, MinElementMapping) {
  const auto& a2 = group('A', 2);
  const Weight lambda = wt({1, 0});
  for (auto w : a2.elements()) {
    const auto dir = a2.act(w, lambda);
    const auto tau = a2.min_element_mapping(lambda, dir);
    EXPECT_EQ(a2.act(tau, lambda), dir);
    EXPECT_TRUE(a2.is_min_coset_rep(tau, SubsetD::of({1})));
  }
  EXPECT_THROW(a2.min_element_mapping(lambda, wt({0, 1})), DomainError);
}

TEST(WeylGroup, WordFormatting) {
  const auto& a2 = group('A', 2);
  EXPECT_EQ(a2.word_string(a2.identity()), "e");
  EXPECT_EQ(a2.word_string(a2.longest()), "s1 s2 s1");
  EXPECT_EQ(a2.word_one_based(a2.longest()), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(to_string(SubsetD::of({0, 1})), "{1,2}");
  EXPECT_EQ(to_string(SubsetD()), "{}");
}
