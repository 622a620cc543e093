#include "coxbal/io.hpp"
#include "coxbal/rootsys.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace coxbal;

namespace {

std::vector<std::pair<Family, int>> types_up_to(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int f = 0; f < 7; ++f)
    for (int r = 1; r <= max_rank; ++r)
      if (valid_type(static_cast<Family>(f), r)) out.emplace_back(static_cast<Family>(f), r);
  return out;
}

int binom(int n, int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return static_cast<int>(c);
}

}  // namespace

TEST(RootSystem, PositiveRootCounts) {
  for (auto [f, r] : types_up_to(8)) {
    const auto rs = build_root_system(f, r);
    int want = 0;
    switch (f) {
      case Family::A: want = r * (r + 1) / 2; break;
      case Family::B:
      case Family::C: want = r * r; break;
      case Family::D: want = r * (r - 1); break;
      case Family::E: want = r == 6 ? 36 : r == 7 ? 63 : 120; break;
      case Family::F: want = 24; break;
      case Family::G: want = 6; break;
    }
    EXPECT_EQ(rs->num_positive(), want) << rs->name();
  }
}

TEST(RootSystem, InvalidTypesThrow) {
  EXPECT_THROW(build_root_system(Family::A, 0), Error);
  EXPECT_THROW(build_root_system(Family::B, 1), Error);
  EXPECT_THROW(build_root_system(Family::C, 1), Error);
  EXPECT_THROW(build_root_system(Family::D, 3), Error);
  EXPECT_THROW(build_root_system(Family::E, 5), Error);
  EXPECT_THROW(build_root_system(Family::E, 9), Error);
  EXPECT_THROW(build_root_system(Family::F, 3), Error);
  EXPECT_THROW(build_root_system(Family::G, 3), Error);
  EXPECT_THROW(build_root_system("X", 2), Error);
  EXPECT_NO_THROW(build_root_system("e", 6));
}

// Closure: reflecting any root in any simple root lands on +-(a listed root).
TEST(RootSystem, RootsClosedUnderSimpleReflections) {
  for (auto [f, r] : types_up_to(8)) {
    const auto rs = build_root_system(f, r);
    for (int i = 1; i <= r; ++i)
      for (int k = 0; k < rs->num_positive(); ++k) {
        const auto img = reflect(rs->root(rs->simple_root(i)), rs->root(k));
        const auto found = rs->find_root(img);
        ASSERT_TRUE(found.has_value()) << rs->name();
        EXPECT_EQ(*found, rs->simple_reflect(i, k));
        EXPECT_EQ(rs->vector(*found), img);
      }
  }
}

TEST(RootSystem, CoefficientsHeightsAndOrdering) {
  for (auto [f, r] : types_up_to(8)) {
    const auto rs = build_root_system(f, r);
    for (int i = 1; i <= r; ++i) {
      EXPECT_EQ(rs->simple_root(i), i - 1);
      EXPECT_TRUE(rs->is_simple(i - 1));
      EXPECT_EQ(rs->height(i - 1), 1);
    }
    for (int k = 0; k < rs->num_positive(); ++k) {
      const auto& c = rs->coefficients(k);
      int h = 0;
      QVec v(static_cast<std::size_t>(rs->ambient_dim()), Rational(0));
      for (int j = 0; j < r; ++j) {
        EXPECT_GE(c[j], 0);
        h += c[j];
        v = v + Rational(c[j]) * rs->root(j);
      }
      EXPECT_EQ(v, rs->root(k));
      EXPECT_EQ(rs->height(k), h);
      EXPECT_EQ(rs->height_of(rs->root(k)), Rational(h));
      if (k > 0) EXPECT_LE(rs->height(k - 1), rs->height(k));
      EXPECT_TRUE(rs->root_poset_leq(k, rs->highest_root()));
    }
  }
}

TEST(RootSystem, HighestRootHeights) {
  const std::map<std::string, int> ht{{"A5", 5}, {"B3", 5}, {"B8", 15}, {"C4", 7}, {"D4", 5}, {"D8", 13},
                                      {"E6", 11}, {"E7", 17}, {"E8", 29}, {"F4", 11}, {"G2", 5}};
  for (const auto& [name, h] : ht) {
    const auto rs = build_root_system(name.substr(0, 1), std::stoi(name.substr(1)));
    EXPECT_EQ(rs->height(rs->highest_root()), h) << name;
  }
  const auto b3 = build_root_system(Family::B, 3);
  const auto e1e2 = b3->find_root({Rational(1), Rational(1), Rational(0)});
  ASSERT_TRUE(e1e2);
  EXPECT_EQ(b3->height(*e1e2), 5);
}

TEST(RootSystem, HighestRootCoefficientsE8) {
  const auto rs = build_root_system(Family::E, 8);
  auto c = rs->coefficients(rs->highest_root());
  std::sort(c.begin(), c.end());
  EXPECT_EQ(c, (std::vector<int>{2, 2, 3, 3, 4, 4, 5, 6}));
}

TEST(RootSystem, CoweightsAreDual) {
  for (auto [f, r] : types_up_to(8)) {
    const auto rs = build_root_system(f, r);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        EXPECT_EQ(dot(rs->root(rs->simple_root(i)), rs->coweight(j)), Rational(i == j ? 1 : 0)) << rs->name();
  }
}

TEST(RootSystem, CartanAndCoxeterLabels) {
  const auto b2 = build_root_system(Family::B, 2);
  EXPECT_EQ(b2->cartan(1, 1), 2);
  EXPECT_EQ(b2->cartan(1, 2) * b2->cartan(2, 1), 2);
  EXPECT_EQ(b2->coxeter_matrix().label(1, 2), 4);
  const auto g2 = build_root_system(Family::G, 2);
  EXPECT_EQ(g2->cartan(1, 2) * g2->cartan(2, 1), 3);
  EXPECT_EQ(g2->coxeter_matrix().label(1, 2), 6);
  const auto f4 = build_root_system(Family::F, 4);
  EXPECT_EQ(f4->coxeter_matrix().label(2, 3), 4);
  const auto e6 = build_root_system(Family::E, 6);
  EXPECT_TRUE(e6->coxeter_matrix().is_acyclic());
  EXPECT_TRUE(e6->simply_laced());
  EXPECT_FALSE(b2->simply_laced());
  ASSERT_TRUE(b2->highest_short_root());
  EXPECT_FALSE(b2->is_long(*b2->highest_short_root()));
}

TEST(RootSystem, RootWordsRebuildRoots) {
  for (auto [f, r] : types_up_to(6)) {
    const auto rs = build_root_system(f, r);
    for (int k = 0; k < rs->num_positive(); ++k) {
      const auto& [prefix, i] = rs->root_word(k);
      QVec v = rs->root(rs->simple_root(i));
      for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) v = reflect(rs->root(rs->simple_root(*it)), v);
      EXPECT_EQ(v, rs->root(k));
    }
  }
}

TEST(RootSystem, ReflectErrors) {
  EXPECT_THROW(reflect(QVec{Rational(0), Rational(0)}, QVec{Rational(1), Rational(0)}), Error);
  const auto rs = build_root_system(Family::A, 2);
  EXPECT_THROW(reflect(*rs, rs->root(0), QVec{Rational(1)}), Error);
  EXPECT_FALSE(rs->find_root({Rational(1), Rational(1), Rational(1)}));
}

TEST(RootPoset, IdealCountsMatchSubsetScan) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
           {Family::C, 2}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}}) {
    const auto rs = build_root_system(f, r);
    EXPECT_EQ(enumerate_root_ideals(rs).size(), oracle::root_subset_ideal_count(*rs)) << rs->name();
  }
}

TEST(RootPoset, IdealCountsFollowClosedForms) {
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(enumerate_root_ideals(build_root_system(Family::A, n)).size(),
              static_cast<std::size_t>(binom(2 * n + 2, n + 1) / (n + 2)));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(enumerate_root_ideals(build_root_system(Family::B, n)).size(),
              static_cast<std::size_t>(binom(2 * n, n)));
    EXPECT_EQ(enumerate_root_ideals(build_root_system(Family::C, n)).size(),
              static_cast<std::size_t>(binom(2 * n, n)));
  }
  for (int n = 4; n <= 6; ++n)
    EXPECT_EQ(enumerate_root_ideals(build_root_system(Family::D, n)).size(),
              static_cast<std::size_t>(binom(2 * n, n) - binom(2 * n - 2, n - 1)));
  const std::map<std::string, std::size_t> exc{{"E6", 833}, {"E7", 4160}, {"E8", 25080}, {"F4", 105}, {"G2", 8}};
  for (const auto& [name, n] : exc)
    EXPECT_EQ(ideal_count(root_poset(*build_root_system(name.substr(0, 1), name[1] - '0'))), n) << name;
}

TEST(RootPoset, IdealsAreDownwardClosedAndDistinct) {
  const auto rs = build_root_system(Family::B, 3);
  std::set<std::vector<int>> seen;
  for (const auto& I : enumerate_root_ideals(rs)) {
    EXPECT_FALSE(ideal_violation(*rs, I.members));
    EXPECT_TRUE(seen.insert(I.members).second);
  }
  const auto bad = ideal_violation(*rs, {rs->highest_root()});
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->first, rs->highest_root());
  EXPECT_THROW(ideal_violation(*rs, {99}), Error);
}

TEST(RootGraph, EdgesAreSimpleReflections) {
  for (auto [f, r] : types_up_to(5)) {
    const auto rs = build_root_system(f, r);
    for (const auto& e : root_graph(*rs)) {
      EXPECT_EQ(rs->simple_reflect(e.label, e.a), e.b);
      EXPECT_LT(rs->height(e.a), rs->height(e.b));
      const int dh = rs->height(e.b) - rs->height(e.a);
      EXPECT_EQ(Rational(dh), Rational(rs->coefficients(e.b)[e.label - 1] - rs->coefficients(e.a)[e.label - 1]));
      if (rs->family() != Family::G) EXPECT_TRUE(dh == 1 || dh == 2) << rs->name();
    }
  }
}

TEST(RootGraph, DotOutput) {
  const auto rs = build_root_system(Family::A, 2);
  const auto dot = root_poset_dot(*rs);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("r0 -> r2"), std::string::npos);
  EXPECT_NE(root_poset_dot(*rs, true).find("--"), std::string::npos);
  EXPECT_EQ(root_label(*rs, 0), "e1-e2");
  EXPECT_EQ(root_label(*rs, rs->negate(0)), "-e1+e2");
}

TEST(RootSystemJson, RoundTrips) {
  for (auto [f, r] : types_up_to(4)) {
    const auto rs = build_root_system(f, r);
    const auto j = root_system_json(*rs);
    EXPECT_EQ(j.at("schema"), 1);
    const auto back = root_system_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back->name(), rs->name());
    EXPECT_EQ(root_system_json(*back), j);
  }
  auto j = root_system_json(*build_root_system(Family::A, 2));
  j["positive_roots"][0][0]["num"] = "5";
  EXPECT_THROW(root_system_from_json(j), Error);
}
