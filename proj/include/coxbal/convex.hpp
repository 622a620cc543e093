#pragma once
// Convex subsets W_D^A of a Coxeter group (left weak order convention),
// delta and balance constants, hulls and translation.

#include "coxbal/parallel.hpp"
#include "coxbal/rational.hpp"
#include "coxbal/weyl.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxbal {

template <class Group>
class ConvexSet {
 public:
  using Element = typename Group::Element;
  using Root = typename Group::Root;
  using Bits = boost::dynamic_bitset<>;

  const Group& group() const { return G_; }
  std::size_t size() const { return elements_.size(); }
  bool is_singleton() const { return elements_.size() == 1; }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t k) const { return elements_[k]; }

  /// A: union of the member inversion sets, sorted.
  const std::vector<Root>& A() const { return universe_; }
  /// D: intersection of the member inversion sets, sorted.
  std::vector<Root> D() const {
    std::vector<Root> out;
    for (std::size_t j = 0; j < universe_.size(); ++j)
      if (count_[j] == elements_.size()) out.push_back(universe_[j]);
    return out;
  }

  /// Inversion set of element k as a bitset over A().
  const Bits& inversions(std::size_t k) const { return inv_[k]; }

  bool contains(const Element& w) const { return index_.count(w) > 0; }

  /// |C_t| / |C|
  Rational delta(const Root& t) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), t);
    if (it == universe_.end() || !(*it == t)) return 0;
    return Rational(static_cast<std::int64_t>(count_[static_cast<std::size_t>(it - universe_.begin())]),
                    static_cast<std::int64_t>(elements_.size()));
  }

  /// Number of members having A()[j] as an inversion.
  std::size_t count_at(std::size_t j) const { return count_[j]; }

  struct Balance {
    Rational value;
    std::vector<Root> witnesses;
  };

  /// max_t min(delta(t), 1 - delta(t)); only t in A with 0 < delta < 1 can
  /// contribute, every other reflection is constant on C.
  Balance balance() const {
    Balance b{Rational(0), {}};
    const auto n = static_cast<std::int64_t>(elements_.size());
    for (std::size_t j = 0; j < universe_.size(); ++j) {
      const auto c = static_cast<std::int64_t>(count_[j]);
      if (c == 0 || c == n) continue;
      const Rational v = balance_of(Rational(c, n));
      if (v > b.value) {
        b.value = v;
        b.witnesses.clear();
      }
      if (v == b.value) b.witnesses.push_back(universe_[j]);
    }
    return b;
  }

  bool operator==(const ConvexSet& o) const {
    if (size() != o.size()) return false;
    for (const auto& w : elements_)
      if (!o.contains(w)) return false;
    return true;
  }

  /// Built from elements already known to form the set; A and inversion
  /// bitsets are derived from them.
  static ConvexSet from_members(const Group& G, std::vector<Element> elems) {
    ConvexSet c(G);
    std::vector<std::vector<Root>> invs;
    for (const auto& w : elems) {
      invs.push_back(G.inversion_roots(w));
      c.universe_.insert(c.universe_.end(), invs.back().begin(), invs.back().end());
    }
    std::sort(c.universe_.begin(), c.universe_.end());
    c.universe_.erase(std::unique(c.universe_.begin(), c.universe_.end()), c.universe_.end());
    c.count_.assign(c.universe_.size(), 0);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      Bits b(c.universe_.size());
      for (const auto& r : invs[k]) {
        auto j = static_cast<std::size_t>(std::lower_bound(c.universe_.begin(), c.universe_.end(), r) -
                                          c.universe_.begin());
        b.set(j);
        ++c.count_[j];
      }
      c.inv_.push_back(std::move(b));
      c.index_.emplace(elems[k], k);
    }
    c.elements_ = std::move(elems);
    return c;
  }

 private:
  explicit ConvexSet(const Group& G) : G_(G) {}

  Group G_;
  std::vector<Element> elements_;
  std::vector<Root> universe_;
  std::vector<Bits> inv_;
  std::vector<std::size_t> count_;
  std::unordered_map<Element, std::size_t, typename Group::ElementHash> index_;
};

template <class Group>
std::vector<typename Group::Root> sorted_roots(std::vector<typename Group::Root> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// W^A: breadth-first from the identity, stepping to s_i w whenever the new
/// inversion w^{-1} alpha_i lies in A. Finite even in infinite groups since
/// every member has length at most |A|.
template <class Group>
ConvexSet<Group> ideal_from_A(const Group& G, std::vector<typename Group::Root> A) {
  using Element = typename Group::Element;
  A = sorted_roots<Group>(std::move(A));
  std::vector<Element> found{G.identity()};
  std::unordered_map<Element, char, typename Group::ElementHash> seen{{G.identity(), 1}};
  for (std::size_t k = 0; k < found.size(); ++k)
    for (int i = 1; i <= G.rank(); ++i) {
      const auto r = G.ascent_root(found[k], i);
      if (!r || !std::binary_search(A.begin(), A.end(), *r)) continue;
      auto v = G.left_mul_simple(i, found[k]);
      if (seen.emplace(v, 1).second) found.push_back(std::move(v));
    }
  return ConvexSet<Group>::from_members(G, std::move(found));
}

/// W_D^A = {w : D subset T_R(w) subset A}; throws when empty.
template <class Group>
ConvexSet<Group> convex_set(const Group& G, std::vector<typename Group::Root> D,
                            std::vector<typename Group::Root> A) {
  D = sorted_roots<Group>(std::move(D));
  A = sorted_roots<Group>(std::move(A));
  if (!std::includes(A.begin(), A.end(), D.begin(), D.end())) throw Error("convex_set: D is not contained in A");
  const auto ideal = ideal_from_A(G, A);
  if (D.empty()) return ideal;
  std::vector<typename Group::Element> keep;
  for (const auto& w : ideal.elements()) {
    const auto inv = G.inversion_roots(w);
    if (std::includes(inv.begin(), inv.end(), D.begin(), D.end())) keep.push_back(w);
  }
  if (keep.empty()) throw Error("convex_set: W_D^A is empty for the given D and A");
  return ConvexSet<Group>::from_members(G, std::move(keep));
}

/// [id, w]_L = W^{T_R(w)}
template <class Group>
ConvexSet<Group> interval_left(const Group& G, const typename Group::Element& w) {
  return ideal_from_A(G, G.inversion_roots(w));
}

/// Smallest convex set containing the given elements.
template <class Group>
ConvexSet<Group> convex_hull(const Group& G, const std::vector<typename Group::Element>& elems) {
  if (elems.empty()) throw Error("convex_hull of an empty list");
  auto D = G.inversion_roots(elems.front());
  std::vector<typename Group::Root> A;
  for (const auto& w : elems) {
    const auto inv = G.inversion_roots(w);
    std::vector<typename Group::Root> meet;
    std::set_intersection(D.begin(), D.end(), inv.begin(), inv.end(), std::back_inserter(meet));
    D = std::move(meet);
    A.insert(A.end(), inv.begin(), inv.end());
  }
  return convex_set(G, D, A);
}

/// C * w, recanonicalized; right multiplication preserves left convexity.
template <class Group>
ConvexSet<Group> translate(const ConvexSet<Group>& C, const typename Group::Element& w) {
  std::vector<typename Group::Element> moved;
  for (const auto& u : C.elements()) moved.push_back(C.group().multiply(u, w));
  auto out = convex_hull(C.group(), moved);
  if (out.size() != C.size()) throw Error("translate: translated set is not convex (internal error)");
  return out;
}

/// Weak-order Hasse diagram of C (edges u -> s_i u), with reduced words as labels.
template <class Group>
std::string convex_dot(const ConvexSet<Group>& C, const std::string& name = "convex") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  const auto& G = C.group();
  std::unordered_map<typename Group::Element, std::size_t, typename Group::ElementHash> at;
  for (std::size_t k = 0; k < C.size(); ++k) {
    at.emplace(C.element(k), k);
    const auto w = G.reduced_word(C.element(k));
    os << "  c" << k << " [label=\"" << (w.empty() ? std::string("id") : to_string(w)) << "\"];\n";
  }
  for (std::size_t k = 0; k < C.size(); ++k)
    for (int i = 1; i <= G.rank(); ++i) {
      if (!G.ascent_root(C.element(k), i)) continue;
      auto it = at.find(G.left_mul_simple(i, C.element(k)));
      if (it != at.end()) os << "  c" << k << " -> c" << it->second << " [label=\"" << i << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

inline constexpr int kConvexScanMaxRoots = 12;

/// Every W^A for A subset Phi+, each once (keyed by the union of member
/// inversion sets, i.e. the subsets A that equal their own canonical A).
/// Ordered by the bitmask of A.
inline std::vector<ConvexSet<WeylGroup>> enumerate_convex_ideals(const RootSystemPtr& rs, int jobs = 1) {
  const int N = rs->num_positive();
  if (N > kConvexScanMaxRoots)
    throw Error("enumerate_convex_ideals: " + rs->name() + " has " + std::to_string(N) +
                " positive roots, above the scan limit of " + std::to_string(kConvexScanMaxRoots));
  const WeylGroup G(rs);
  const std::size_t total = std::size_t{1} << N;
  std::vector<std::optional<ConvexSet<WeylGroup>>> slot(total);
  parallel_for(total, jobs, [&](std::size_t mask) {
    std::vector<int> A;
    for (int k = 0; k < N; ++k)
      if (mask >> k & 1) A.push_back(k);
    auto C = ideal_from_A(G, A);
    if (C.A() == A) slot[mask] = std::move(C);
  });
  std::vector<ConvexSet<WeylGroup>> out;
  for (auto& s : slot)
    if (s) out.push_back(std::move(*s));
  return out;
}

struct MinBalance {
  Rational value;
  std::vector<std::size_t> argmin;  // indices into the scanned list
  std::size_t scanned = 0;          // non-singleton sets examined
};

inline MinBalance min_balance(const std::vector<ConvexSet<WeylGroup>>& sets) {
  MinBalance m{Rational(1), {}, 0};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k].is_singleton()) continue;
    ++m.scanned;
    const auto b = sets[k].balance().value;
    if (b < m.value) {
      m.value = b;
      m.argmin.clear();
    }
    if (b == m.value) m.argmin.push_back(k);
  }
  return m;
}

inline MinBalance min_balance(const RootSystemPtr& rs, int jobs = 1) {
  return min_balance(enumerate_convex_ideals(rs, jobs));
}

}  // namespace coxbal
