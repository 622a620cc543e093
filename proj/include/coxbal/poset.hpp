#pragma once
// Finite posets with optional generator labels: order ideals, the di/bi
// statistics, claw-chains, isomorphism testing and the up-degree check.

#include "coxbal/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace coxbal {

using Ideal = boost::dynamic_bitset<>;

class LabeledPoset {
 public:
  LabeledPoset() = default;

  /// `leq` is row-major: leq[a * n + b] != 0 iff a <= b. Throws unless it
  /// is a partial order. `labels` is empty or has one entry per element.
  static LabeledPoset from_relation(int n, std::vector<char> leq, std::vector<int> labels = {}) {
    LabeledPoset p;
    p.n_ = n;
    p.leq_ = std::move(leq);
    p.labels_ = std::move(labels);
    p.validate();
    p.build_covers();
    return p;
  }

  /// Transitive closure of the pairs (lower, upper).
  static LabeledPoset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                  std::vector<int> labels = {}) {
    std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) rel[i * n + i] = 1;
    for (auto [a, b] : covers) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw Error("cover pair out of range");
      rel[a * n + b] = 1;
    }
    // Floyd-Warshall style closure.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (rel[i * n + k])
          for (int j = 0; j < n; ++j)
            if (rel[k * n + j]) rel[i * n + j] = 1;
    return from_relation(n, std::move(rel), std::move(labels));
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }

  bool labeled() const { return !labels_.empty(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int x) const { return labels_.at(x); }

  /// All cover relations as (lower, upper), sorted.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
      for (int y : up_[x]) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
  }

  LabeledPoset dual() const {
    std::vector<char> rel(leq_.size());
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) rel[a * n_ + b] = leq_[b * n_ + a];
    return from_relation(n_, std::move(rel), labels_);
  }

  /// Induced subposet on `subset` (elements renumbered in the given order).
  LabeledPoset induced(const std::vector<int>& subset) const {
    const int m = static_cast<int>(subset.size());
    std::vector<char> rel(static_cast<std::size_t>(m) * m);
    std::vector<int> lab;
    for (int i = 0; i < m; ++i) {
      if (labeled()) lab.push_back(labels_[subset[i]]);
      for (int j = 0; j < m; ++j) rel[i * m + j] = leq(subset[i], subset[j]);
    }
    return from_relation(m, std::move(rel), std::move(lab));
  }

  /// Connected components of the comparability graph, each sorted.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<int> stack{s};
      comp[s] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.back().push_back(x);
        for (int y = 0; y < n_; ++y)
          if (comp[y] < 0 && comparable(x, y)) {
            comp[y] = 1;
            stack.push_back(y);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  /// A linear extension (bottom first); ties broken by element index.
  std::vector<int> linear_extension() const {
    std::vector<int> below(static_cast<std::size_t>(n_), 0);
    for (int x = 0; x < n_; ++x) below[x] = static_cast<int>(down_[x].size());
    std::vector<int> order;
    std::vector<char> done(static_cast<std::size_t>(n_), 0);
    while (static_cast<int>(order.size()) < n_) {
      for (int x = 0; x < n_; ++x) {
        if (done[x] || below[x] != 0) continue;
        done[x] = 1;
        order.push_back(x);
        for (int y : up_[x]) --below[y];
        break;
      }
    }
    return order;
  }

  bool is_ideal(const Ideal& s) const {
    for (int x = 0; x < n_; ++x)
      if (s.test(x))
        for (int y : down_[x])
          if (!s.test(y)) return false;
    return true;
  }

 private:
  void validate() const {
    if (n_ < 0) throw Error("poset size must be nonnegative");
    if (leq_.size() != static_cast<std::size_t>(n_) * n_) throw Error("relation table has wrong size");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
      throw Error("label list has wrong size");
    for (int a = 0; a < n_; ++a) {
      if (!leq(a, a)) throw Error("relation is not reflexive at " + std::to_string(a));
      for (int b = 0; b < n_; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          throw Error("relation is not antisymmetric at (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
        if (!leq(a, b)) continue;
        for (int c = 0; c < n_; ++c)
          if (leq(b, c) && !leq(a, c)) throw Error("relation is not transitive");
      }
    }
  }

  void build_covers() {
    up_.assign(static_cast<std::size_t>(n_), {});
    down_.assign(static_cast<std::size_t>(n_), {});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!less(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < n_ && cover; ++c)
          if (less(a, c) && less(c, b)) cover = false;
        if (cover) {
          up_[a].push_back(b);
          down_[b].push_back(a);
        }
      }
  }

  int n_ = 0;
  std::vector<char> leq_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> up_, down_;
};

/// Calls f(const Ideal&) once for every order ideal of P, starting with the
/// empty ideal. Depth-first over a linear extension: an element may join
/// only when its lower covers are present, so every leaf is a distinct ideal.
template <class F>
void for_each_ideal(const LabeledPoset& P, F&& f) {
  const int n = P.size();
  const auto order = P.linear_extension();
  Ideal cur(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      f(static_cast<const Ideal&>(cur));
      return;
    }
    const int x = order[k];
    rec(k + 1);
    for (int y : P.lower_covers(x))
      if (!cur.test(y)) return;
    cur.set(x);
    rec(k + 1);
    cur.reset(x);
  };
  rec(0);
}

inline constexpr int kIdealElementCap = 40;

/// Materialized list of all order ideals; rejects posets above `cap` elements.
inline std::vector<Ideal> order_ideals(const LabeledPoset& P, int cap = kIdealElementCap) {
  if (P.size() > cap)
    throw Error("order_ideals: poset has " + std::to_string(P.size()) +
                " elements, above the enumeration cap of " + std::to_string(cap));
  std::vector<Ideal> out;
  for_each_ideal(P, [&](const Ideal& I) { out.push_back(I); });
  return out;
}

struct IdealStats {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> containing;  // per element
};

inline IdealStats ideal_stats(const LabeledPoset& P) {
  IdealStats st;
  st.containing.assign(static_cast<std::size_t>(P.size()), 0);
  for_each_ideal(P, [&](const Ideal& I) {
    ++st.count;
    for (auto x = I.find_first(); x != Ideal::npos; x = I.find_next(x)) ++st.containing[x];
  });
  return st;
}

inline std::uint64_t ideal_count(const LabeledPoset& P) {
  std::uint64_t n = 0;
  for_each_ideal(P, [&](const Ideal&) { ++n; });
  return n;
}

/// Fraction of order ideals containing each element.
inline std::vector<Rational> di_all(const LabeledPoset& P) {
  auto st = ideal_stats(P);
  std::vector<Rational> out;
  for (auto c : st.containing)
    out.emplace_back(static_cast<std::int64_t>(c), static_cast<std::int64_t>(st.count));
  return out;
}

inline Rational di(const LabeledPoset& P, int x) {
  if (x < 0 || x >= P.size()) throw Error("di: element out of range");
  return di_all(P)[x];
}

inline Rational balance_of(const Rational& d) { return std::min(d, Rational(1) - d); }

inline Rational bi(const LabeledPoset& P) {
  Rational best = 0;
  for (const auto& d : di_all(P)) best = std::max(best, balance_of(d));
  return best;
}

/// k minimal elements all covered by the bottom of an l-element chain.
/// Labels follow the picture: s_1..s_k below, s_{k+1}..s_{k+l} up the chain.
inline LabeledPoset claw_chain(int k, int l) {
  if (k < 1 || l < 1) throw Error("claw_chain needs k >= 1 and l >= 1");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i) covers.emplace_back(i, k);
  for (int j = k; j + 1 < k + l; ++j) covers.emplace_back(j, j + 1);
  std::vector<int> labels(static_cast<std::size_t>(k + l));
  for (int i = 0; i < k + l; ++i) labels[i] = i + 1;
  return LabeledPoset::from_covers(k + l, covers, labels);
}

inline LabeledPoset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return LabeledPoset::from_covers(n, covers);
}

inline LabeledPoset antichain(int n) { return LabeledPoset::from_covers(n, {}); }

namespace detail {

struct IsoSearch {
  const LabeledPoset& a;
  const LabeledPoset& b;
  bool labels;
  std::vector<long long> sig_a, sig_b;
  std::vector<int> map, used;

  static std::vector<long long> signatures(const LabeledPoset& p, bool with_labels) {
    std::vector<long long> sig(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
      long long below = 0, above = 0;
      for (int y = 0; y < p.size(); ++y) {
        if (p.less(y, x)) ++below;
        if (p.less(x, y)) ++above;
      }
      long long s = below;
      s = s * 64 + above;
      s = s * 64 + static_cast<long long>(p.lower_covers(x).size());
      s = s * 64 + static_cast<long long>(p.upper_covers(x).size());
      if (with_labels) s = s * 4096 + p.label(x);
      sig[x] = s;
    }
    return sig;
  }

  bool extend(int x) {
    if (x == a.size()) return true;
    for (int y = 0; y < b.size(); ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (int p = 0; p < x && ok; ++p)
        ok = a.leq(p, x) == b.leq(map[p], y) && a.leq(x, p) == b.leq(y, map[p]);
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// Poset isomorphism by signature refinement plus backtracking. With
/// `respect_labels` the bijection must also preserve labels.
inline bool is_isomorphic(const LabeledPoset& a, const LabeledPoset& b, bool respect_labels = false) {
  if (a.size() != b.size()) return false;
  if (respect_labels && (a.labeled() != b.labeled())) return false;
  const bool use_labels = respect_labels && a.labeled();
  detail::IsoSearch s{a, b, use_labels, {}, {}, {}, {}};
  s.sig_a = detail::IsoSearch::signatures(a, use_labels);
  s.sig_b = detail::IsoSearch::signatures(b, use_labels);
  auto sa = s.sig_a, sb = s.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  s.map.assign(static_cast<std::size_t>(a.size()), -1);
  s.used.assign(static_cast<std::size_t>(b.size()), 0);
  return s.extend(0);
}

/// If bi(P) < 1/3: every element maximal among those with di > 2/3 has at
/// least two upper covers, and every element minimal among those with
/// di < 1/3 has at least two lower covers. Vacuously true otherwise.
inline bool lemma_updegree_check(const LabeledPoset& P) {
  const auto d = di_all(P);
  Rational b = 0;
  for (const auto& x : d) b = std::max(b, balance_of(x));
  if (b >= Rational(1, 3)) return true;
  const int n = P.size();
  for (int x = 0; x < n; ++x) {
    if (d[x] > Rational(2, 3)) {
      bool maximal = true;
      for (int y = 0; y < n && maximal; ++y)
        if (P.less(x, y) && d[y] > Rational(2, 3)) maximal = false;
      if (maximal && P.upper_covers(x).size() < 2) return false;
    }
    if (d[x] < Rational(1, 3)) {
      bool minimal = true;
      for (int y = 0; y < n && minimal; ++y)
        if (P.less(y, x) && d[y] < Rational(1, 3)) minimal = false;
      if (minimal && P.lower_covers(x).size() < 2) return false;
    }
  }
  return true;
}

/// Graphviz Hasse diagram; labeled elements print as s_i.
inline std::string to_dot(const LabeledPoset& P, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int x = 0; x < P.size(); ++x) {
    os << "  n" << x << " [label=\"";
    if (P.labeled()) os << "s" << P.label(x);
    else os << x;
    os << "\"];\n";
  }
  for (auto [a, b] : P.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxbal
