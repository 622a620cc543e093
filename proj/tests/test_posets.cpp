#include "coxbal/convex.hpp"
#include "coxbal/heap.hpp"
#include "coxbal/io.hpp"
#include "coxbal/weyl.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace coxbal;

namespace {

// Random poset on n elements: i < j is forced with probability p, for i < j.
LabeledPoset random_poset(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return LabeledPoset::from_covers(n, pairs);
}

}  // namespace

TEST(Poset, ValidatesRelations) {
  EXPECT_THROW(LabeledPoset::from_relation(2, {1, 1, 1, 1}), Error);  // not antisymmetric
  EXPECT_THROW(LabeledPoset::from_relation(2, {0, 0, 0, 1}), Error);  // not reflexive
  EXPECT_THROW(LabeledPoset::from_relation(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}), Error);  // not transitive
  EXPECT_THROW(LabeledPoset::from_covers(2, {{0, 2}}), Error);
  EXPECT_THROW(LabeledPoset::from_covers(2, {}, {1}), Error);
  EXPECT_THROW(LabeledPoset::from_covers(2, {{0, 1}, {1, 0}}), Error);
}

TEST(Poset, CoversDualInducedComponents) {
  const auto P = LabeledPoset::from_covers(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(P.cover_pairs(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 4}}));
  EXPECT_TRUE(P.less(0, 2));
  EXPECT_FALSE(P.comparable(0, 3));
  EXPECT_TRUE(P.dual().less(2, 0));
  EXPECT_EQ(P.components(), (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}}));
  EXPECT_TRUE(is_isomorphic(P.induced({0, 1, 2}), chain(3)));
  const auto ext = P.linear_extension();
  std::vector<int> pos(5);
  for (int k = 0; k < 5; ++k) pos[ext[k]] = k;
  for (auto [a, b] : P.cover_pairs()) EXPECT_LT(pos[a], pos[b]);
}

TEST(Poset, IdealsMatchSubsetScanOnRandomPosets) {
  std::mt19937 rng(3);
  for (int s = 0; s < 60; ++s) {
    const int n = 1 + s % 12;
    const auto P = random_poset(rng, n, 0.3);
    const auto ideals = order_ideals(P);
    EXPECT_EQ(ideals.size(), oracle::subset_ideal_count(P));
    EXPECT_EQ(ideal_count(P), ideals.size());
    for (const auto& I : ideals) EXPECT_TRUE(P.is_ideal(I));
    EXPECT_EQ(di_all(P), oracle::subset_di(P));
    EXPECT_TRUE(ideals.front().none());
  }
}

TEST(Poset, ClosedFormCounts) {
  EXPECT_EQ(ideal_count(chain(10)), 11u);
  EXPECT_EQ(ideal_count(antichain(10)), 1024u);
  EXPECT_EQ(ideal_count(claw_chain(3, 4)), 8u + 4u);
  EXPECT_THROW(order_ideals(chain(41)), Error);
  EXPECT_EQ(ideal_count(claw_chain(8, 64)), 256u + 64u);
  EXPECT_THROW(di(chain(2), 5), Error);
  EXPECT_THROW(claw_chain(0, 1), Error);
}

// k incomparable minima under an l-chain: di of the chain bottom is
// 1/(2^k + l) and di of a minimum is (2^{k-1} + l)/(2^k + l).
TEST(Poset, ClawChainStatistics) {
  for (int k = 1; k <= 6; ++k) {
    const int l = 1 << (k - 1);
    const auto P = claw_chain(k, l);
    const std::int64_t total = (std::int64_t{1} << k) + l;
    EXPECT_EQ(di(P, 0), Rational((std::int64_t{1} << (k - 1)) + l, total));
    EXPECT_EQ(di(P, k), Rational(l, total));
    EXPECT_EQ(bi(P), Rational(1, 3)) << k;
  }
  EXPECT_EQ(bi(chain(1)), Rational(1, 2));
  EXPECT_EQ(bi(chain(2)), Rational(1, 3));
}

TEST(Poset, IsomorphismRespectsLabelsOnRequest) {
  const auto a = LabeledPoset::from_covers(2, {{0, 1}}, {1, 2});
  const auto b = LabeledPoset::from_covers(2, {{0, 1}}, {2, 1});
  EXPECT_TRUE(is_isomorphic(a, b));
  EXPECT_FALSE(is_isomorphic(a, b, true));
  EXPECT_FALSE(is_isomorphic(chain(3), antichain(3)));
  EXPECT_TRUE(is_isomorphic(claw_chain(2, 2), claw_chain(2, 2).induced({3, 2, 1, 0})));
}

TEST(Poset, UpdegreeLemmaHoldsOnRandomPosets) {
  std::mt19937 rng(5);
  for (int s = 0; s < 80; ++s) EXPECT_TRUE(lemma_updegree_check(random_poset(rng, 3 + s % 8, 0.35)));
}

TEST(Poset, JsonRoundTrip) {
  const auto P = claw_chain(2, 3);
  const auto j = poset_json(P);
  EXPECT_EQ(j.at("schema"), 1);
  const auto Q = poset_from_json(Json::parse(j.dump()));
  EXPECT_EQ(Q.cover_pairs(), P.cover_pairs());
  EXPECT_EQ(Q.labels(), P.labels());
  EXPECT_NE(to_dot(P).find("n0 -> n2"), std::string::npos);
}

TEST(Heap, LaterLettersSitLower) {
  const auto m = CoxeterMatrix::path({3, 3});
  const auto H = heap_from_word(m, {2, 1, 3, 2});
  EXPECT_TRUE(H.less(3, 1));
  EXPECT_TRUE(H.less(3, 2));
  EXPECT_TRUE(H.less(1, 0));
  EXPECT_FALSE(H.comparable(1, 2));
  EXPECT_TRUE(lemma_heap_graph_check(H, m));
  EXPECT_THROW(heap_from_word(m, {1, 1}), Error);
  EXPECT_THROW(lemma_heap_graph_check(chain(2), m), Error);
}

TEST(Heap, FullCommutativityCriteriaAgree) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
    const auto rs = build_root_system(f, r);
    for (const auto& w : all_elements(rs)) {
      const auto word = w.reduced_word();
      EXPECT_EQ(heap_is_fully_commutative(rs->coxeter_matrix(), word),
                is_fully_commutative(rs->coxeter_matrix(), word))
          << rs->name() << " " << to_string(word);
    }
  }
}

// Every word in the commutation class has the same heap up to a
// label-preserving isomorphism.
TEST(Heap, InvariantAcrossCommutationClasses) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
    const auto rs = build_root_system(f, r);
    const auto& m = rs->coxeter_matrix();
    for (const auto& w : all_elements(rs)) {
      const auto word = w.reduced_word();
      const auto H = heap_from_word(m, word);
      for (const auto& v : commutation_class(m, word)) {
        EXPECT_EQ(WeylElement::from_word(rs, v), w);
        EXPECT_TRUE(is_isomorphic(heap_from_word(m, v), H, true)) << to_string(word) << " vs " << to_string(v);
      }
    }
  }
}

// For fully commutative w, delta over [id, w]_L of psi(x) equals di(x).
TEST(Heap, DeltaEqualsDiThroughPsi) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
    const auto rs = build_root_system(f, r);
    const WeylGroup G(rs);
    const auto& m = rs->coxeter_matrix();
    for (const auto& w : all_elements(rs)) {
      const auto word = w.reduced_word();
      if (word.empty() || !is_fully_commutative(m, word)) continue;
      const auto H = heap_from_word(m, word);
      const auto roots = psi(G, word);
      const auto C = interval_left(G, w);
      auto inv = w.inversion_set();
      auto sorted = roots;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, inv);
      const auto d = di_all(H);
      for (int x = 0; x < H.size(); ++x) EXPECT_EQ(C.delta(roots[x]), d[x]) << rs->name() << " " << to_string(word);
      EXPECT_EQ(C.balance().value, bi(H));
      EXPECT_EQ(C.size(), ideal_count(H));
      for (const auto& u : C.elements()) EXPECT_TRUE(H.is_ideal(psi_image(G, word, u)));
    }
  }
}

TEST(Heap, PsiRejectsNonFullyCommutative) {
  const WeylGroup G(build_root_system(Family::A, 2));
  EXPECT_THROW(psi(G, {1, 2, 1}), Error);
}
