#pragma once
// Fundamental alcoves and generalized order polytopes as exact half-space
// systems, centroids, the per-type constants m0, m1, ht, m, and the
// e-based lower bounds on balance constants.

#include "coxbal/convex.hpp"
#include "coxbal/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxbal {

struct Table1Params {
  std::string type;
  int m0 = 0;
  int m1 = 0;
  int ht = 0;
  Rational m;
  Rational mm1;
};

/// m0, m1 = min, max coefficient of the highest root; ht = its height;
/// m = r/m0 + 1/m1 - ht/(m0 m1).
inline Table1Params table1_params(const RootSystem& rs) {
  const auto& c = rs.coefficients(rs.highest_root());
  Table1Params p;
  p.type = rs.name();
  p.m0 = *std::min_element(c.begin(), c.end());
  p.m1 = *std::max_element(c.begin(), c.end());
  p.ht = rs.height(rs.highest_root());
  p.m = Rational(rs.rank(), p.m0) + Rational(1, p.m1) - Rational(p.ht, p.m0 * p.m1);
  p.mm1 = p.m * p.m1;
  return p;
}

struct AlcoveData {
  std::vector<QVec> vertices;        // 0, then omega_i / c_i
  QVec centroid;
  std::vector<QVec> short_vertices;  // 0, then omega_i / <omega_i, eta>; empty if simply laced
};

inline AlcoveData alcove_data(const RootSystem& rs) {
  AlcoveData d;
  const int r = rs.rank();
  const QVec zero(static_cast<std::size_t>(rs.ambient_dim()), Rational(0));
  d.vertices.push_back(zero);
  d.centroid = zero;
  const auto& c = rs.coefficients(rs.highest_root());
  for (int i = 1; i <= r; ++i) {
    d.vertices.push_back(Rational(1, c[i - 1]) * rs.coweight(i));
    d.centroid = d.centroid + d.vertices.back();
  }
  d.centroid = Rational(1, r + 1) * d.centroid;
  if (auto eta = rs.highest_short_root()) {
    const auto& e = rs.coefficients(*eta);
    d.short_vertices.push_back(zero);
    for (int i = 1; i <= r; ++i) d.short_vertices.push_back(Rational(1, e[i - 1]) * rs.coweight(i));
  }
  return d;
}

/// w^{-1} x, via a reduced word of w.
inline QVec act_inverse(const WeylElement& w, QVec x) {
  for (int i : w.reduced_word()) x = reflect(w.rs().root(w.rs().simple_root(i)), x);
  return x;
}

/// w x
inline QVec act(const WeylElement& w, QVec x) { return act_inverse(w.inverse(), std::move(x)); }

/// <a, x> <= b
struct HalfSpace {
  QVec a;
  Rational b;
};

inline bool contains(const std::vector<HalfSpace>& hs, const QVec& x) {
  for (const auto& h : hs)
    if (dot(h.a, x) > h.b) return false;
  return true;
}

/// <x, alpha> <= 0 for alpha in D, <x, beta> >= 0 for beta outside A, and
/// <x, w^{-1} xi> <= 1 for every w in C.
inline std::vector<HalfSpace> order_polytope_halfspaces(const ConvexSet<WeylGroup>& C) {
  const auto& rs = *C.group().root_system();
  std::vector<HalfSpace> hs;
  const auto D = C.D();
  const auto& A = C.A();
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (std::binary_search(D.begin(), D.end(), k)) hs.push_back({rs.root(k), Rational(0)});
    if (!std::binary_search(A.begin(), A.end(), k)) hs.push_back({-rs.root(k), Rational(0)});
  }
  for (const auto& w : C.elements()) hs.push_back({rs.vector(w.apply_inverse(rs.highest_root())), Rational(1)});
  return hs;
}

/// Vertices of the alcove Q_w = w^{-1} Q_id.
inline std::vector<QVec> alcove_vertices(const WeylElement& w) {
  std::vector<QVec> out;
  for (const auto& v : alcove_data(w.rs()).vertices) out.push_back(act_inverse(w, v));
  return out;
}

/// o_C = 1/(r+1) * 1/|C| * sum_w w^{-1}(sum_i omega_i / c_i)
inline QVec centroid(const ConvexSet<WeylGroup>& C) {
  const auto& rs = *C.group().root_system();
  const auto v0 = Rational(rs.rank() + 1) * alcove_data(rs).centroid;
  QVec sum(static_cast<std::size_t>(rs.ambient_dim()), Rational(0));
  for (const auto& w : C.elements()) sum = sum + act_inverse(w, v0);
  return Rational(1, static_cast<std::int64_t>(C.size()) * (rs.rank() + 1)) * sum;
}

/// <o_C, beta> through the root action: 1/(r+1) 1/|C| sum_w <v0, w beta>.
inline Rational centroid_pairing(const ConvexSet<WeylGroup>& C, int beta) {
  const auto& rs = *C.group().root_system();
  const auto v0 = Rational(rs.rank() + 1) * alcove_data(rs).centroid;
  Rational s = 0;
  for (const auto& w : C.elements()) s += dot(v0, rs.vector(w.apply(beta)));
  return s / Rational(static_cast<std::int64_t>(C.size()) * (rs.rank() + 1));
}

inline void require_non_singleton(const ConvexSet<WeylGroup>& C, const char* what) {
  if (C.size() < 2) throw Error(std::string(what) + " needs a convex set with at least two elements");
}

/// Whether beta splits C: some but not all members have it as an inversion.
inline bool splits(const ConvexSet<WeylGroup>& C, int beta) {
  const auto d = C.delta(beta);
  return d > Rational(0) && d < Rational(1);
}

/// A positive root beta splitting C with |<o_C, beta>| <= m/(r+1); scans
/// roots in index order. nullopt would contradict the centroid lemma.
inline std::optional<int> lemma54_witness(const ConvexSet<WeylGroup>& C) {
  require_non_singleton(C, "lemma54_witness");
  const auto& rs = *C.group().root_system();
  const Rational bound = table1_params(rs).m / Rational(rs.rank() + 1);
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!splits(C, k)) continue;
    Rational p = centroid_pairing(C, k);
    if (p < Rational(0)) p = -p;
    if (p <= bound) return k;
  }
  return std::nullopt;
}

/// h(beta) = 1/|C| sum_w ht(w beta) for a signed root index beta.
inline Rational h_value(const ConvexSet<WeylGroup>& C, int beta) {
  require_non_singleton(C, "h_value");
  const auto& rs = *C.group().root_system();
  std::int64_t s = 0;
  for (const auto& w : C.elements()) s += rs.signed_height(w.apply(beta));
  return Rational(s, static_cast<std::int64_t>(C.size()));
}

/// First positive root with |h(beta)| < 1.
inline std::optional<int> lemma51_witness(const ConvexSet<WeylGroup>& C) {
  const auto& rs = *C.group().root_system();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto h = h_value(C, k);
    if (h < Rational(1) && h > Rational(-1)) return k;
  }
  return std::nullopt;
}

/// Rational lower bound on e; 1/(2 e^x) < 1/(2 kELower^x), so any balance at
/// least the latter provably satisfies the e-based bound.
inline const Rational kELower(27182818284LL, 10000000000LL);

/// b >= 1/(2 e^x) for x = p/q with q in {1, 2}, decided exactly as
/// (2b)^q * e_lo^p >= 1.
inline bool exceeds_e_bound(const Rational& b, const Rational& x) {
  using boost::multiprecision::cpp_rational;
  if (x.denominator() > 2) throw Error("exponent must be an integer or half-integer");
  const cpp_rational two_b = cpp_rational(b.numerator(), b.denominator()) * 2;
  const cpp_rational e(kELower.numerator(), kELower.denominator());
  cpp_rational lhs = 1;
  for (std::int64_t k = 0; k < x.denominator(); ++k) lhs *= two_b;
  for (std::int64_t k = 0; k < x.numerator(); ++k) lhs *= e;
  return lhs >= 1;
}

/// Alcoves of members having beta as an inversion lie on the side
/// <x, beta> <= 0, the others on <x, beta> >= 0; this is what turns the
/// volume ratio of the two halves of O(C) into |C_beta| / |C|.
inline bool alcove_sides_match(const ConvexSet<WeylGroup>& C, int beta) {
  const auto& rs = *C.group().root_system();
  const auto& b = rs.root(beta);
  for (const auto& w : C.elements()) {
    const bool neg = w.has_inversion(beta);
    for (const auto& v : alcove_vertices(w)) {
      const auto p = dot(v, b);
      if (neg ? p > Rational(0) : p < Rational(0)) return false;
    }
  }
  return true;
}

/// b(C) >= 1/(2 e^{m m1}) for the type of C, with the alcove-side identity
/// checked for the centroid-lemma root.
inline bool check_bound_55(const ConvexSet<WeylGroup>& C) {
  require_non_singleton(C, "check_bound_55");
  const auto& rs = *C.group().root_system();
  const auto beta = lemma54_witness(C);
  if (!beta || !alcove_sides_match(C, *beta)) return false;
  const auto x = table1_params(rs).mm1;
  return exceeds_e_bound(balance_of(C.delta(*beta)), x) && exceeds_e_bound(C.balance().value, x);
}

/// b(C) >= 1/(2e) in types B and C, using the root from the height lemma.
inline bool check_bound_56(const ConvexSet<WeylGroup>& C) {
  require_non_singleton(C, "check_bound_56");
  const auto& rs = *C.group().root_system();
  if (rs.family() != Family::B && rs.family() != Family::C)
    throw Error("check_bound_56 applies to types B and C only, got " + rs.name());
  const auto beta = lemma51_witness(C);
  if (!beta || !splits(C, *beta) || !alcove_sides_match(C, *beta)) return false;
  const auto d = C.delta(*beta);
  return exceeds_e_bound(balance_of(d), Rational(1)) && exceeds_e_bound(C.balance().value, Rational(1));
}

struct GeometryReport {
  std::string type;
  std::size_t size = 0;
  Rational balance;
  std::optional<int> lemma51;
  std::optional<int> lemma54;
  bool bound55_ok = false;
  std::optional<bool> bound56_ok;
};

inline GeometryReport geometry_report(const ConvexSet<WeylGroup>& C) {
  const auto& rs = *C.group().root_system();
  GeometryReport g;
  g.type = rs.name();
  g.size = C.size();
  g.balance = C.balance().value;
  g.lemma51 = lemma51_witness(C);
  g.lemma54 = lemma54_witness(C);
  g.bound55_ok = check_bound_55(C);
  if (rs.family() == Family::B || rs.family() == Family::C) g.bound56_ok = check_bound_56(C);
  return g;
}

}  // namespace coxbal
