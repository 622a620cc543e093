#pragma once
// Generalized semiorders: convex sets W^A where A is an order ideal of the
// root poset. Includes the unit-interval embedding of classical semiorders
// and exhaustive checks of the delta <= 1/2 bound and of the simple-root
// witness property used in the proof of the 1/3 bound.

#include "coxbal/convex.hpp"
#include "coxbal/rootsys.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace coxbal {

struct GeneralizedSemiorder {
  RootSystemPtr rs;
  RootPosetIdeal ideal;
  ConvexSet<WeylGroup> set;
};

inline GeneralizedSemiorder build_semiorder(const RootSystemPtr& rs, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto bad = ideal_violation(*rs, members))
    throw Error("not an order ideal of the root poset: " + root_label(*rs, bad->first) + " is in A but " +
                root_label(*rs, bad->second) + " <= it is not");
  WeylGroup G(rs);
  auto set = ideal_from_A(G, members);
  return {rs, RootPosetIdeal{rs, std::move(members)}, std::move(set)};
}

/// Semiorder of unit intervals starting at f_1 <= ... <= f_n: the allowed
/// inversions are e_i - e_j with f_j - f_i < 1.
inline GeneralizedSemiorder from_unit_interval(const std::vector<Rational>& f) {
  const int n = static_cast<int>(f.size());
  if (n < 2) throw Error("from_unit_interval needs at least two values");
  for (int i = 0; i + 1 < n; ++i)
    if (f[i + 1] < f[i]) throw Error("from_unit_interval needs values sorted ascending");
  auto rs = build_root_system(Family::A, n - 1);
  std::vector<int> A;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(f[j] - f[i] < Rational(1))) continue;
      QVec v(static_cast<std::size_t>(n), Rational(0));
      v[i] = 1;
      v[j] = -1;
      A.push_back(*rs->find_root(v));
    }
  return build_semiorder(rs, A);
}

struct DeltaHalfReport {
  bool ok = true;
  Rational max_delta = 0;
  std::optional<int> failing_root;  // delta above 1/2 or injection leaving C
};

/// delta(alpha) <= 1/2 for every positive root, together with the injection
/// w -> w s_alpha from C_alpha into C minus C_alpha.
inline DeltaHalfReport check_delta_half_report(const GeneralizedSemiorder& gs) {
  DeltaHalfReport rep;
  const auto& C = gs.set;
  const auto& rs = gs.rs;
  for (int k = 0; k < rs->num_positive(); ++k) {
    const Rational d = C.delta(k);
    rep.max_delta = std::max(rep.max_delta, d);
    bool ok = d <= Rational(1, 2);
    if (ok && d > Rational(0)) {
      const auto t = WeylElement::reflection(rs, k);
      for (const auto& w : C.elements()) {
        if (!w.has_inversion(k)) continue;
        const auto v = w * t;
        if (!C.contains(v) || v.has_inversion(k)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok && rep.ok) {
      rep.ok = false;
      rep.failing_root = k;
    }
  }
  return rep;
}

inline bool check_delta_half(const GeneralizedSemiorder& gs) { return check_delta_half_report(gs).ok; }

struct Lemma46Result {
  std::optional<int> witness;  // 1-based simple root index
  /// Per simple root alpha_i in J that fails: (i, beta1, beta2) with
  /// s_i beta1, s_i beta2 in Phi+ outside J.
  std::vector<std::tuple<int, int, int>> failures;
};

/// A simple root alpha_i in J such that at most one beta in J has
/// s_i beta in Phi+ \ J.
inline Lemma46Result lemma46_witness(const RootSystem& rs, const std::vector<int>& J) {
  if (J.empty()) throw Error("lemma46_witness needs a nonempty ideal");
  std::vector<char> in(static_cast<std::size_t>(rs.num_positive()), 0);
  for (int k : J) in.at(static_cast<std::size_t>(k)) = 1;
  Lemma46Result res;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!in[rs.simple_root(i)]) continue;
    int first = -1, second = -1;
    for (int b : J) {
      const int t = rs.simple_reflect(i, b);
      if (!rs.is_positive(t) || in[t]) continue;
      if (first < 0) first = b;
      else {
        second = b;
        break;
      }
    }
    if (second < 0) {
      res.witness = i;
      return res;
    }
    res.failures.emplace_back(i, first, second);
  }
  return res;
}

struct SemiorderScan {
  std::string type;
  std::uint64_t ideals_scanned = 0;
  bool lemma46_ok = true;
  bool delta_half_ok = true;
  bool balance_ok = true;                 // every non-singleton set has b >= 1/3
  std::optional<Rational> min_balance;    // over non-singleton sets
  std::vector<std::vector<int>> failures; // offending ideals
};

/// The simple-root witness over every nonempty ideal; with `with_groups`, also builds each
/// W^A and checks delta <= 1/2 and b >= 1/3.
inline SemiorderScan scan_semiorders(const RootSystemPtr& rs, bool with_groups) {
  SemiorderScan s;
  s.type = rs->name();
  for_each_root_ideal(rs, [&](const RootPosetIdeal& I) {
    ++s.ideals_scanned;
    if (!I.members.empty() && !lemma46_witness(*rs, I.members).witness) {
      s.lemma46_ok = false;
      s.failures.push_back(I.members);
    }
    if (!with_groups) return;
    const auto gs = build_semiorder(rs, I.members);
    if (!check_delta_half(gs)) {
      s.delta_half_ok = false;
      s.failures.push_back(I.members);
    }
    if (gs.set.is_singleton()) return;
    const auto b = gs.set.balance().value;
    if (!s.min_balance || b < *s.min_balance) s.min_balance = b;
    if (b < Rational(1, 3)) {
      s.balance_ok = false;
      s.failures.push_back(I.members);
    }
  });
  return s;
}

inline Rational min_semiorder_balance(const RootSystemPtr& rs) {
  const auto s = scan_semiorders(rs, true);
  if (!s.min_balance) throw Error("no non-singleton generalized semiorder in " + rs->name());
  return *s.min_balance;
}

}  // namespace coxbal
