#include "coxbal/alcove.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace coxbal;

namespace {

QVec alcove_centroid_of(const WeylElement& w) {
  const auto v = alcove_vertices(w);
  QVec s(v.front().size(), Rational(0));
  for (const auto& x : v) s = s + x;
  return Rational(1, static_cast<std::int64_t>(v.size())) * s;
}

}  // namespace

TEST(TypeConstants, ClosedFormRows) {
  for (int r = 1; r <= 8; ++r) {
    const auto p = table1_params(*build_root_system(Family::A, r));
    EXPECT_EQ(std::tie(p.m0, p.m1, p.ht), std::make_tuple(1, 1, r));
    EXPECT_EQ(p.m, Rational(1));
    EXPECT_EQ(p.mm1, Rational(1));
  }
  for (int r = 2; r <= 8; ++r)
    for (auto f : {Family::B, Family::C}) {
      const auto p = table1_params(*build_root_system(f, r));
      EXPECT_EQ(std::tie(p.m0, p.m1, p.ht), std::make_tuple(1, 2, 2 * r - 1));
      EXPECT_EQ(p.mm1, Rational(2));
    }
  for (int r = 4; r <= 8; ++r) {
    const auto p = table1_params(*build_root_system(Family::D, r));
    EXPECT_EQ(std::tie(p.m0, p.m1, p.ht), std::make_tuple(1, 2, 2 * r - 3));
    EXPECT_EQ(p.m, Rational(2));
  }
  const auto e8 = table1_params(*build_root_system(Family::E, 8));
  EXPECT_EQ(std::tie(e8.m0, e8.m1, e8.ht), std::make_tuple(2, 6, 29));
  EXPECT_EQ(e8.m, Rational(7, 4));
  EXPECT_EQ(e8.mm1, Rational(21, 2));
  const auto f4 = table1_params(*build_root_system(Family::F, 4));
  EXPECT_EQ(f4.m, Rational(7, 8));
  EXPECT_EQ(f4.mm1, Rational(7, 2));
  const auto e6 = table1_params(*build_root_system(Family::E, 6));
  EXPECT_EQ(e6.m, Rational(8, 3));
  const auto e7 = table1_params(*build_root_system(Family::E, 7));
  EXPECT_EQ(e7.mm1, Rational(12));
  const auto g2 = table1_params(*build_root_system(Family::G, 2));
  EXPECT_EQ(std::tie(g2.m0, g2.m1, g2.ht), std::make_tuple(2, 3, 5));
  EXPECT_EQ(g2.m, Rational(1, 2));
  EXPECT_EQ(g2.mm1, g2.m * Rational(g2.m1));
}

TEST(Alcove, VerticesLieOnTheWalls) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::G, 2}, {Family::F, 4}}) {
    const auto rs = build_root_system(f, r);
    const auto d = alcove_data(*rs);
    const auto& xi = rs->root(rs->highest_root());
    ASSERT_EQ(d.vertices.size(), static_cast<std::size_t>(r + 1));
    EXPECT_TRUE(is_zero(d.vertices[0]));
    for (int i = 1; i <= r; ++i) {
      EXPECT_EQ(dot(xi, d.vertices[i]), Rational(1));
      for (int j = 1; j <= r; ++j)
        if (j != i) { EXPECT_EQ(dot(rs->root(rs->simple_root(j)), d.vertices[i]), Rational(0)); }
    }
    EXPECT_EQ(d.short_vertices.empty(), rs->simply_laced());
  }
}

TEST(Alcove, ActionInverse) {
  const auto rs = build_root_system(Family::B, 3);
  const auto w = WeylElement::from_word(rs, {3, 2, 3, 1});
  const QVec x{Rational(1, 3), Rational(-2), Rational(5, 7)};
  EXPECT_EQ(act(w, act_inverse(w, x)), x);
  for (int k = 0; k < rs->num_positive(); ++k) EXPECT_EQ(act(w, rs->root(k)), rs->vector(w.apply(k)));
}

// Alcoves of members satisfy every half-space; alcoves of non-members fail one.
TEST(Alcove, HalfSpaceDescriptionIsSound) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}, {Family::A, 3}, {Family::G, 2}}) {
    const auto rs = build_root_system(f, r);
    const auto all = all_elements(rs);
    for (const auto& C : enumerate_convex_ideals(rs)) {
      const auto hs = order_polytope_halfspaces(C);
      for (const auto& w : all) {
        if (C.contains(w)) {
          for (const auto& v : alcove_vertices(w)) EXPECT_TRUE(contains(hs, v));
        } else {
          EXPECT_FALSE(contains(hs, alcove_centroid_of(w)));
        }
      }
      EXPECT_TRUE(contains(hs, centroid(C)));
    }
  }
}

TEST(Alcove, CentroidPairingMatchesCoordinates) {
  const auto rs = build_root_system(Family::B, 3);
  for (const auto& C : enumerate_convex_ideals(rs)) {
    QVec mean(static_cast<std::size_t>(rs->ambient_dim()), Rational(0));
    for (const auto& w : C.elements()) mean = mean + alcove_centroid_of(w);
    mean = Rational(1, static_cast<std::int64_t>(C.size())) * mean;
    EXPECT_EQ(centroid(C), mean);
    for (int k = 0; k < rs->num_positive(); ++k) EXPECT_EQ(centroid_pairing(C, k), dot(centroid(C), rs->root(k)));
  }
}

TEST(Alcove, HeightAverageIsLinear) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::A, 3}, {Family::G, 2}}) {
    const auto rs = build_root_system(f, r);
    for (const auto& C : enumerate_convex_ideals(rs)) {
      if (C.is_singleton()) continue;
      for (int k = 0; k < rs->num_positive(); ++k) {
        EXPECT_EQ(h_value(C, rs->negate(k)), -h_value(C, k));
        for (int i = 1; i <= r; ++i) {
          const auto sum = rs->find_root(rs->root(k) + rs->root(rs->simple_root(i)));
          if (sum && rs->is_positive(*sum)) {
            EXPECT_EQ(h_value(C, *sum), h_value(C, k) + h_value(C, rs->simple_root(i)));
          }
        }
      }
    }
  }
}

TEST(Alcove, WitnessesExistForEveryNonSingleton) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::G, 2}}) {
    const auto rs = build_root_system(f, r);
    for (const auto& C : enumerate_convex_ideals(rs)) {
      if (C.is_singleton()) {
        EXPECT_THROW(lemma54_witness(C), Error);
        continue;
      }
      const auto b51 = lemma51_witness(C);
      ASSERT_TRUE(b51);
      EXPECT_TRUE(splits(C, *b51));
      const auto h = h_value(C, *b51);
      EXPECT_TRUE(h > Rational(-1) && h < Rational(1));
      const auto b54 = lemma54_witness(C);
      ASSERT_TRUE(b54);
      EXPECT_TRUE(splits(C, *b54));
      for (int k = 0; k < rs->num_positive(); ++k) EXPECT_TRUE(alcove_sides_match(C, k));
      EXPECT_TRUE(check_bound_55(C));
      if (f == Family::B) { EXPECT_TRUE(check_bound_56(C)); }
    }
  }
}

TEST(Alcove, ExponentialBoundIsDecidedExactly) {
  EXPECT_TRUE(exceeds_e_bound(Rational(1, 2), Rational(0)));
  EXPECT_TRUE(exceeds_e_bound(Rational(1, 5), Rational(1)));
  EXPECT_FALSE(exceeds_e_bound(Rational(1, 6), Rational(1)));
  EXPECT_TRUE(exceeds_e_bound(Rational(12, 100), Rational(3, 2)));
  EXPECT_FALSE(exceeds_e_bound(Rational(1, 10), Rational(3, 2)));
  EXPECT_TRUE(exceeds_e_bound(Rational(1, 3), Rational(21, 2)) );
  EXPECT_THROW(exceeds_e_bound(Rational(1, 3), Rational(1, 3)), Error);
  EXPECT_LT(kELower, Rational(2718281829, 1000000000));
  EXPECT_GT(kELower, Rational(2718281828, 1000000000) - Rational(1, 1000000000));
}

TEST(Alcove, BoundForTypesBAndCOnly) {
  const WeylGroup G(build_root_system(Family::A, 2));
  EXPECT_THROW(check_bound_56(interval_left(G, G.from_word({1, 2}))), Error);
  const WeylGroup H(build_root_system(Family::C, 3));
  const auto g = geometry_report(interval_left(H, H.from_word({3, 2, 3, 1})));
  ASSERT_TRUE(g.bound56_ok);
  EXPECT_TRUE(*g.bound56_ok);
  EXPECT_TRUE(g.bound55_ok);
}
