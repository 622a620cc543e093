#pragma once
// Crystallographic root systems of every irreducible type, with exact
// rational coordinates, the root poset, heights, coweights and the graph
// of simple-reflection moves between positive roots.
//
// Roots are addressed by index. Positive roots occupy 0..N-1, sorted by
// height and then by simple-root coefficients (lexicographically
// descending, so the simple roots come first as 0..r-1). A signed root
// index s in [0, 2N) denotes the positive root s when s < N and the
// negative root -(s - N) otherwise.

#include "coxbal/coxeter_matrix.hpp"
#include "coxbal/poset.hpp"
#include "coxbal/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace coxbal {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw Error("unknown root system family '" + s + "'");
}

inline std::string type_name(Family f, int rank) { return family_letter(f) + std::to_string(rank); }

inline bool valid_type(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(Family family, int rank);

class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  std::string name() const { return type_name(family_, rank_); }

  /// |Phi+|
  int num_positive() const { return static_cast<int>(roots_.size()); }

  const QVec& root(int k) const { return roots_.at(k); }
  /// Coefficients of positive root k in the simple-root basis.
  const std::vector<int>& coefficients(int k) const { return coeffs_.at(k); }
  int height(int k) const { return heights_.at(k); }

  /// Index of the simple root alpha_i (i is 1-based).
  int simple_root(int i) const {
    if (i < 1 || i > rank_) throw Error("simple root index out of range");
    return i - 1;
  }
  std::vector<int> simple_indices() const {
    std::vector<int> out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) out[i] = i;
    return out;
  }
  bool is_simple(int k) const { return k < rank_; }

  /// Fundamental coweight omega_i^vee (1-based), in the span of the roots.
  const QVec& coweight(int i) const { return coweights_.at(i - 1); }

  int highest_root() const { return num_positive() - 1; }
  std::optional<int> highest_short_root() const { return highest_short_; }
  bool simply_laced() const { return !highest_short_.has_value(); }
  bool is_long(int k) const { return sq_len_[k] == max_sq_len_; }

  /// Cartan integer <alpha_i, alpha_j^vee> (1-based).
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const CoxeterMatrix& coxeter_matrix() const { return coxeter_; }

  // Signed root helpers.
  int negate(int s) const { return s < num_positive() ? s + num_positive() : s - num_positive(); }
  bool is_positive(int s) const { return s < num_positive(); }
  int positive_part(int s) const { return s < num_positive() ? s : s - num_positive(); }
  QVec vector(int s) const { return is_positive(s) ? root(s) : -root(positive_part(s)); }
  int signed_height(int s) const { return is_positive(s) ? height(s) : -height(positive_part(s)); }

  /// s_i applied to the signed root s (i is 1-based).
  int simple_reflect(int i, int s) const { return reflect_table_[i - 1][s]; }

  /// Signed index of the root with these ambient coordinates, if any.
  std::optional<int> find_root(const QVec& v) const {
    auto c = ambient_to_coefficients(v);
    if (!c) return std::nullopt;
    return find_by_coefficients(*c);
  }

  std::optional<int> find_by_coefficients(const std::vector<int>& c) const {
    if (auto it = index_.find(c); it != index_.end()) return it->second;
    std::vector<int> neg(c);
    for (auto& x : neg) x = -x;
    if (auto it = index_.find(neg); it != index_.end()) return it->second + num_positive();
    return std::nullopt;
  }

  /// A word p and a generator i with root k = s_{p1} ... s_{pm} alpha_i.
  const std::pair<Word, int>& root_word(int k) const { return root_words_.at(k); }

  /// Root poset order: beta2 - beta1 is a nonnegative combination of simple roots.
  bool root_poset_leq(int b1, int b2) const {
    for (int j = 0; j < rank_; ++j)
      if (coeffs_[b2][j] < coeffs_[b1][j]) return false;
    return true;
  }

  /// Height of an arbitrary vector: <x, omega_1 + ... + omega_r>.
  Rational height_of(const QVec& x) const { return dot(x, coweight_sum_); }
  const QVec& coweight_sum() const { return coweight_sum_; }

  /// Coefficients of a vector in the span of the roots, if integral.
  std::optional<std::vector<int>> ambient_to_coefficients(const QVec& v) const {
    if (static_cast<int>(v.size()) != dim_) return std::nullopt;
    std::vector<int> c(static_cast<std::size_t>(rank_));
    QVec rebuilt(static_cast<std::size_t>(dim_), Rational(0));
    for (int i = 0; i < rank_; ++i) {
      Rational q = dot(v, coweights_[i]);
      if (q.denominator() != 1) return std::nullopt;
      c[i] = static_cast<int>(q.numerator());
      rebuilt = rebuilt + Rational(c[i]) * simple_[i];
    }
    if (rebuilt != v) return std::nullopt;
    return c;
  }

 private:
  friend RootSystemPtr build_root_system(Family, int);

  Family family_ = Family::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<QVec> simple_;
  std::vector<QVec> roots_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<int> heights_;
  std::vector<Rational> sq_len_;
  Rational max_sq_len_;
  std::map<std::vector<int>, int> index_;
  std::vector<QVec> coweights_;
  QVec coweight_sum_;
  std::optional<int> highest_short_;
  std::vector<std::vector<int>> cartan_;
  CoxeterMatrix coxeter_;
  std::vector<std::vector<int>> reflect_table_;
  std::vector<std::pair<Word, int>> root_words_;
};

namespace detail {

inline QVec unit(int dim, int i, Rational c = 1) {
  QVec v(static_cast<std::size_t>(dim), Rational(0));
  v[i] = c;
  return v;
}

inline QVec e_diff(int dim, int i, int j) { return unit(dim, i) - unit(dim, j); }

/// Simple roots of the requested type in their ambient coordinates.
inline std::pair<int, std::vector<QVec>> simple_roots(Family f, int r) {
  std::vector<QVec> s;
  switch (f) {
    case Family::A: {
      const int dim = r + 1;
      for (int i = 0; i < r; ++i) s.push_back(e_diff(dim, i, i + 1));
      return {dim, s};
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      const int dim = r;
      for (int i = 0; i + 1 < r; ++i) s.push_back(e_diff(dim, i, i + 1));
      if (f == Family::B) s.push_back(unit(dim, r - 1));
      if (f == Family::C) s.push_back(unit(dim, r - 1, 2));
      if (f == Family::D) s.push_back(unit(dim, r - 2) + unit(dim, r - 1));
      return {dim, s};
    }
    case Family::E: {
      const int dim = 8;
      const Rational h(1, 2);
      // Bourbaki simple roots of E8; E7 and E6 use the first 7 and 6.
      std::vector<QVec> b;
      QVec b1(8, -h);
      b1[0] = h;
      b1[7] = h;
      b.push_back(b1);
      b.push_back(unit(dim, 0) + unit(dim, 1));
      for (int i = 1; i <= 6; ++i) b.push_back(e_diff(dim, i, i - 1));
      // Renumber as the chain b1 - b3 - b4 - ... - b_r with b2 attached to
      // the third node, so that E6 reads 1-2-3-4-5 with 6 hanging off 3.
      s.push_back(b[0]);
      for (int i = 2; i < r; ++i) s.push_back(b[i]);
      s.push_back(b[1]);
      return {dim, s};
    }
    case Family::F: {
      const int dim = 4;
      const Rational h(1, 2);
      s.push_back(e_diff(dim, 1, 2));
      s.push_back(e_diff(dim, 2, 3));
      s.push_back(unit(dim, 3));
      s.push_back(QVec{h, -h, -h, -h});
      return {dim, s};
    }
    case Family::G: {
      // G2 inside the A2 ambient space: short alpha_1, long alpha_2.
      s.push_back(QVec{1, -1, 0});
      s.push_back(QVec{-2, 1, 1});
      return {3, s};
    }
  }
  return {0, s};
}

inline int coxeter_label_from_cartan(int a, int b) {
  switch (a * b) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw Error("non-crystallographic Cartan entry");
}

}  // namespace detail

inline RootSystemPtr build_root_system(Family family, int rank) {
  if (!valid_type(family, rank))
    throw Error("invalid root system type (" + std::string(1, family_letter(family)) + ", " +
                std::to_string(rank) + ")");
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->family_ = family;
  rs->rank_ = rank;
  auto [dim, simple] = detail::simple_roots(family, rank);
  rs->dim_ = dim;
  rs->simple_ = simple;
  const int r = rank;

  std::vector<QVec> gram(static_cast<std::size_t>(r), QVec(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = dot(simple[i], simple[j]);
  rs->cartan_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational a = 2 * gram[i][j] / gram[j][j];
      if (a.denominator() != 1) throw Error("simple roots are not crystallographic");
      rs->cartan_[i][j] = static_cast<int>(a.numerator());
    }
  rs->coxeter_ = CoxeterMatrix(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      rs->coxeter_.set_label(i + 1, j + 1,
                             detail::coxeter_label_from_cartan(rs->cartan_[i][j], rs->cartan_[j][i]));

  // Positive roots by closure of the simple roots under simple reflections,
  // computed in simple-root coordinates: s_i(b) = b - <b, alpha_i^vee> alpha_i.
  std::map<std::vector<int>, std::pair<Word, int>> found;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    c[i] = 1;
    found.emplace(c, std::make_pair(Word{}, i + 1));
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += c[j] * rs->cartan_[j][i];
        if (pairing == 0) continue;
        auto d = c;
        d[i] -= pairing;
        if (*std::min_element(d.begin(), d.end()) < 0) continue;
        if (found.count(d)) continue;
        auto w = found.at(c);
        w.first.insert(w.first.begin(), i + 1);
        found.emplace(d, w);
        next.push_back(d);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> coeffs;
  for (const auto& [c, w] : found) coeffs.push_back(c);
  auto ht = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(coeffs.begin(), coeffs.end(), [&](const auto& a, const auto& b) {
    if (ht(a) != ht(b)) return ht(a) < ht(b);
    return a > b;
  });
  const int N = static_cast<int>(coeffs.size());
  for (int k = 0; k < N; ++k) {
    QVec v(static_cast<std::size_t>(dim), Rational(0));
    for (int j = 0; j < r; ++j)
      if (coeffs[k][j]) v = v + Rational(coeffs[k][j]) * simple[j];
    rs->roots_.push_back(v);
    rs->coeffs_.push_back(coeffs[k]);
    rs->heights_.push_back(ht(coeffs[k]));
    rs->sq_len_.push_back(dot(v, v));
    rs->index_.emplace(coeffs[k], k);
    rs->root_words_.push_back(found.at(coeffs[k]));
  }
  rs->max_sq_len_ = *std::max_element(rs->sq_len_.begin(), rs->sq_len_.end());
  const Rational min_sq = *std::min_element(rs->sq_len_.begin(), rs->sq_len_.end());
  if (min_sq != rs->max_sq_len_) {
    for (int k = N - 1; k >= 0; --k)
      if (rs->sq_len_[k] == min_sq) {
        rs->highest_short_ = k;
        break;
      }
  }

  // Coweights: dual basis to the simple roots inside their span.
  const auto ginv = invert(gram);
  for (int j = 0; j < r; ++j) {
    QVec w(static_cast<std::size_t>(dim), Rational(0));
    for (int k = 0; k < r; ++k) w = w + ginv[j][k] * simple[k];
    rs->coweights_.push_back(w);
  }
  rs->coweight_sum_ = QVec(static_cast<std::size_t>(dim), Rational(0));
  for (const auto& w : rs->coweights_) rs->coweight_sum_ = rs->coweight_sum_ + w;

  rs->reflect_table_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(2 * N)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < N; ++k) {
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += coeffs[k][j] * rs->cartan_[j][i];
      auto d = coeffs[k];
      d[i] -= pairing;
      auto s = rs->find_by_coefficients(d);
      if (!s) throw Error("root system is not closed under reflection");
      rs->reflect_table_[i][k] = *s;
      rs->reflect_table_[i][k + N] = rs->negate(*s);
    }
  return rs;
}

inline RootSystemPtr build_root_system(const std::string& family, int rank) {
  return build_root_system(parse_family(family), rank);
}

/// x - (2<alpha, x>/<alpha, alpha>) alpha, exactly.
inline QVec reflect(const QVec& alpha, const QVec& x) {
  if (is_zero(alpha)) throw Error("reflect: cannot reflect across the zero vector");
  return x - (2 * dot(alpha, x) / dot(alpha, alpha)) * alpha;
}

inline QVec reflect(const RootSystem& rs, const QVec& alpha, const QVec& x) {
  if (static_cast<int>(x.size()) != rs.ambient_dim() || static_cast<int>(alpha.size()) != rs.ambient_dim())
    throw Error("reflect: vector outside the ambient space of " + rs.name());
  return reflect(alpha, x);
}

/// Cover relations (lower, upper) of the root poset.
inline std::vector<std::pair<int, int>> hasse_edges(const RootSystem& rs) {
  std::vector<std::pair<int, int>> out;
  const int N = rs.num_positive();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (rs.height(b) == rs.height(a) + 1 && rs.root_poset_leq(a, b)) out.emplace_back(a, b);
  return out;
}

struct RootGraphEdge {
  int a;      // lower-height endpoint
  int b;
  int label;  // 1-based simple root with s_label(a) = b
  bool operator==(const RootGraphEdge&) const = default;
  auto operator<=>(const RootGraphEdge&) const = default;
};

/// Edges {beta, beta'} of positive roots with s_i beta = beta' != beta.
inline std::vector<RootGraphEdge> root_graph(const RootSystem& rs) {
  std::set<RootGraphEdge> edges;
  for (int i = 1; i <= rs.rank(); ++i)
    for (int k = 0; k < rs.num_positive(); ++k) {
      int t = rs.simple_reflect(i, k);
      if (t == k || !rs.is_positive(t)) continue;
      int lo = k, hi = t;
      if (rs.height(lo) > rs.height(hi)) std::swap(lo, hi);
      edges.insert({lo, hi, i});
    }
  return {edges.begin(), edges.end()};
}

/// The root poset as a LabeledPoset on the positive-root indices.
inline LabeledPoset root_poset(const RootSystem& rs) {
  return LabeledPoset::from_covers(rs.num_positive(), hasse_edges(rs));
}

/// A downward-closed set of positive roots (sorted indices).
struct RootPosetIdeal {
  RootSystemPtr rs;
  std::vector<int> members;

  bool contains(int k) const { return std::binary_search(members.begin(), members.end(), k); }
};

/// Pair (beta, beta') with beta in `set`, beta' <= beta and beta' missing;
/// nullopt when the set is downward closed.
inline std::optional<std::pair<int, int>> ideal_violation(const RootSystem& rs, const std::vector<int>& set) {
  std::vector<char> in(static_cast<std::size_t>(rs.num_positive()), 0);
  for (int k : set) {
    if (k < 0 || k >= rs.num_positive()) throw Error("root index out of range");
    in[k] = 1;
  }
  for (int b : set)
    for (int a = 0; a < rs.num_positive(); ++a)
      if (!in[a] && rs.root_poset_leq(a, b)) return std::make_pair(b, a);
  return std::nullopt;
}

/// Calls f(const RootPosetIdeal&) for every order ideal of the root poset,
/// exactly once each, in a deterministic order. Works up to E8 (120 roots).
template <class F>
void for_each_root_ideal(const RootSystemPtr& rs, F&& f) {
  const auto P = root_poset(*rs);
  RootPosetIdeal cur{rs, {}};
  for_each_ideal(P, [&](const Ideal& I) {
    cur.members.clear();
    for (auto x = I.find_first(); x != Ideal::npos; x = I.find_next(x)) cur.members.push_back(static_cast<int>(x));
    f(static_cast<const RootPosetIdeal&>(cur));
  });
}

inline std::vector<RootPosetIdeal> enumerate_root_ideals(const RootSystemPtr& rs) {
  std::vector<RootPosetIdeal> out;
  for_each_root_ideal(rs, [&](const RootPosetIdeal& I) { out.push_back(I); });
  return out;
}

/// Human-readable ambient form of a root, e.g. "e1-e2" or "(1/2)(...)".
inline std::string root_label(const RootSystem& rs, int s) {
  const auto v = rs.vector(s);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (c < 0) os << '-';
    else if (!first) os << '+';
    Rational a = c < 0 ? -c : c;
    if (a != 1) os << to_string(a);
    os << 'e' << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

/// Graphviz export of the root poset Hasse diagram, or of the labeled
/// simple-reflection graph when `graph_g` is set.
inline std::string root_poset_dot(const RootSystem& rs, bool graph_g = false) {
  std::ostringstream os;
  os << (graph_g ? "graph" : "digraph") << " \"" << rs.name() << (graph_g ? "_G" : "_root_poset")
     << "\" {\n";
  if (!graph_g) os << "  rankdir=BT;\n";
  for (int k = 0; k < rs.num_positive(); ++k)
    os << "  r" << k << " [label=\"" << root_label(rs, k) << "\"];\n";
  if (graph_g) {
    for (const auto& e : root_graph(rs))
      os << "  r" << e.a << " -- r" << e.b << " [label=\"" << e.label << "\"];\n";
  } else {
    for (auto [a, b] : hasse_edges(rs)) os << "  r" << a << " -> r" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxbal
