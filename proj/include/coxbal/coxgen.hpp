#pragma once
// Coxeter systems given by a diagram with labels in {2, 3, inf}, acting on
// the geometric representation. With a_ij = 2 B(alpha_i, alpha_j) the
// entries are 2, 0, -1, -2, so every root has integer coordinates in the
// simple-root basis and no rounding is ever needed.

#include "coxbal/coxeter_matrix.hpp"
#include "coxbal/rational.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxbal {

/// Coordinates of a vector in the simple-root basis.
using RootVec = std::vector<std::int64_t>;

inline bool is_positive_root(const RootVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

inline bool is_acyclic(const CoxeterMatrix& m) { return m.is_acyclic(); }

class CoxSystem;
using CoxSystemPtr = std::shared_ptr<const CoxSystem>;

class CoxSystem {
 public:
  explicit CoxSystem(CoxeterMatrix m) : m_(std::move(m)), r_(m_.rank()) {
    a_.assign(static_cast<std::size_t>(r_ * r_), 0);
    for (int i = 1; i <= r_; ++i)
      for (int j = 1; j <= r_; ++j) {
        const int l = m_.label(i, j);
        int a = 0;
        if (i == j) a = 2;
        else if (l == 2) a = 0;
        else if (l == 3) a = -1;
        else if (l == CoxeterMatrix::kInfinity) a = -2;
        else
          throw Error("label m(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(l) +
                      " is outside {2, 3, inf}; crystallographic labels 4 and 6 are served by the Weyl group "
                      "module (build_root_system)");
        a_[idx(i, j)] = a;
      }
  }

  const CoxeterMatrix& matrix() const { return m_; }
  int rank() const { return r_; }

  /// 2 B(alpha_i, alpha_j)
  int form2(int i, int j) const { return a_[idx(i, j)]; }
  /// B(alpha_i, alpha_j) in {1, 0, -1/2, -1}
  Rational form(int i, int j) const { return Rational(form2(i, j), 2); }

  /// s_i v = v - 2B(alpha_i, v) alpha_i
  RootVec reflect(int i, RootVec v) const {
    std::int64_t p = 0;
    for (int j = 1; j <= r_; ++j) p += a_[idx(i, j)] * v[j - 1];
    v[i - 1] -= p;
    return v;
  }

  RootVec simple_root(int i) const {
    RootVec v(static_cast<std::size_t>(r_), 0);
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
  }

  void check_generator(int i) const {
    if (i < 1 || i > r_)
      throw Error("generator " + std::to_string(i) + " out of range 1.." + std::to_string(r_));
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * r_ + (j - 1)); }

  CoxeterMatrix m_;
  int r_;
  std::vector<int> a_;
};

inline CoxSystemPtr build_system(const CoxeterMatrix& m) { return std::make_shared<const CoxSystem>(m); }

/// A group element as an integer matrix on the geometric representation:
/// column j of mat() is w(alpha_j).
class CoxElement {
 public:
  CoxElement() = default;

  static CoxElement identity(CoxSystemPtr sys) {
    CoxElement e;
    const int r = sys->rank();
    e.m_.assign(static_cast<std::size_t>(r * r), 0);
    for (int i = 0; i < r; ++i) e.m_[static_cast<std::size_t>(i * r + i)] = 1;
    e.inv_ = e.m_;
    e.sys_ = std::move(sys);
    return e;
  }

  static CoxElement from_word(CoxSystemPtr sys, const Word& word) {
    auto e = identity(std::move(sys));
    for (int i : word) e = e.times_simple(i);
    return e;
  }

  const CoxSystemPtr& system() const { return sys_; }
  int rank() const { return sys_->rank(); }

  RootVec apply(const RootVec& v) const { return mul(m_, v); }
  RootVec apply_inverse(const RootVec& v) const { return mul(inv_, v); }

  /// w s_i: columns transform as w(s_i alpha_j).
  CoxElement times_simple(int i) const {
    sys_->check_generator(i);
    CoxElement out(*this);
    const int r = rank();
    for (int j = 1; j <= r; ++j) {
      const int a = sys_->form2(i, j);
      if (a == 0 || j == i) continue;
      for (int row = 0; row < r; ++row) out.m_[at(row, j - 1)] -= a * m_[at(row, i - 1)];
    }
    for (int row = 0; row < r; ++row) out.m_[at(row, i - 1)] = -m_[at(row, i - 1)];
    out.inv_ = left_reflect(i, inv_);
    return out;
  }

  /// s_i w
  CoxElement simple_times(int i) const { return inverse().times_simple(i).inverse(); }

  CoxElement inverse() const {
    CoxElement out(*this);
    std::swap(out.m_, out.inv_);
    return out;
  }

  CoxElement operator*(const CoxElement& v) const {
    if (sys_ != v.sys_ && !(sys_->matrix() == v.sys_->matrix()))
      throw Error("multiplying elements of different Coxeter systems");
    CoxElement out(*this);
    out.m_ = matmul(m_, v.m_);
    out.inv_ = matmul(v.inv_, inv_);
    return out;
  }

  bool is_left_descent(int i) const { return !is_positive_root(apply_inverse(sys_->simple_root(i))); }
  bool is_right_descent(int i) const { return !is_positive_root(apply(sys_->simple_root(i))); }

  std::vector<int> left_descents() const {
    std::vector<int> out;
    for (int i = 1; i <= rank(); ++i)
      if (is_left_descent(i)) out.push_back(i);
    return out;
  }
  std::vector<int> right_descents() const { return inverse().left_descents(); }

  /// Lexicographically smallest reduced word (strip the smallest left descent).
  Word reduced_word() const {
    Word out;
    CoxElement w(*this);
    for (;;) {
      int d = 0;
      for (int i = 1; i <= rank() && !d; ++i)
        if (w.is_left_descent(i)) d = i;
      if (!d) break;
      out.push_back(d);
      w = w.simple_times(d);
    }
    return out;
  }

  int length() const { return static_cast<int>(reduced_word().size()); }

  /// Right inversion roots: for a reduced word i_1 ... i_l these are
  /// s_{i_l} ... s_{i_{k+1}} alpha_{i_k}, sorted.
  std::vector<RootVec> inversion_roots() const {
    const auto word = reduced_word();
    std::vector<RootVec> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
      RootVec v = sys_->simple_root(word[k]);
      for (std::size_t j = k + 1; j < word.size(); ++j) v = sys_->reflect(word[j], v);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_identity() const { return m_ == identity(sys_).m_; }
  bool operator==(const CoxElement& o) const { return m_ == o.m_; }

  struct Hash {
    std::size_t operator()(const CoxElement& w) const { return boost::hash_range(w.m_.begin(), w.m_.end()); }
  };

 private:
  std::size_t at(int row, int col) const { return static_cast<std::size_t>(row * rank() + col); }

  RootVec mul(const std::vector<std::int64_t>& m, const RootVec& v) const {
    const int r = rank();
    RootVec out(static_cast<std::size_t>(r), 0);
    for (int row = 0; row < r; ++row)
      for (int c = 0; c < r; ++c) out[row] += m[at(row, c)] * v[c];
    return out;
  }

  std::vector<std::int64_t> matmul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    const int r = rank();
    std::vector<std::int64_t> out(static_cast<std::size_t>(r * r), 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        if (!a[at(i, k)]) continue;
        for (int j = 0; j < r; ++j) out[at(i, j)] += a[at(i, k)] * b[at(k, j)];
      }
    return out;
  }

  /// s_i * m, acting on every column.
  std::vector<std::int64_t> left_reflect(int i, std::vector<std::int64_t> m) const {
    const int r = rank();
    for (int c = 0; c < r; ++c) {
      std::int64_t p = 0;
      for (int j = 1; j <= r; ++j) p += sys_->form2(i, j) * m[at(j - 1, c)];
      m[at(i - 1, c)] -= p;
    }
    return m;
  }

  CoxSystemPtr sys_;
  std::vector<std::int64_t> m_;
  std::vector<std::int64_t> inv_;
};

inline CoxElement elem_from_word(const CoxSystemPtr& sys, const Word& word) {
  return CoxElement::from_word(sys, word);
}

inline constexpr std::size_t kBraidClosureCap = 200'000;

namespace detail {

/// Every word reachable from `word` by braid moves (including commutations).
inline std::vector<Word> braid_closure(const CoxeterMatrix& m, const Word& word, bool commutations_only,
                                       std::size_t cap = kBraidClosureCap) {
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const int s = w[p], t = w[p + 1];
      if (s == t) continue;
      const int l = m.label(s, t);
      if (l == CoxeterMatrix::kInfinity || (commutations_only && l != 2)) continue;
      if (p + static_cast<std::size_t>(l) > w.size()) continue;
      bool alternating = true;
      for (int k = 0; k < l && alternating; ++k) alternating = w[p + k] == (k % 2 ? t : s);
      if (!alternating) continue;
      Word v = w;
      for (int k = 0; k < l; ++k) v[p + k] = k % 2 ? s : t;
      if (seen.insert(v).second) {
        if (seen.size() > cap) throw CapExceeded("braid-move closure", cap, seen.size());
        queue.push_back(std::move(v));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool labels_are_geometric(const CoxeterMatrix& m) {
  for (int i = 1; i <= m.rank(); ++i)
    for (int j = i + 1; j <= m.rank(); ++j) {
      int l = m.label(i, j);
      if (l != 2 && l != 3 && l != CoxeterMatrix::kInfinity) return false;
    }
  return true;
}

}  // namespace detail

/// Reducedness of a word. Labels in {2, 3, inf} use the geometric
/// representation; other labels fall back to the word criterion (a word is
/// reduced iff no word reachable by braid moves has two equal adjacent letters).
inline bool is_reduced_word(const CoxeterMatrix& m, const Word& word) {
  for (int i : word)
    if (i < 1 || i > m.rank()) throw Error("generator " + std::to_string(i) + " out of range");
  if (detail::labels_are_geometric(m)) return elem_from_word(build_system(m), word).length() == static_cast<int>(word.size());
  for (const auto& w : detail::braid_closure(m, word, false))
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] == w[p + 1]) return false;
  return true;
}

inline void require_reduced(const CoxeterMatrix& m, const Word& word) {
  if (!is_reduced_word(m, word)) throw Error("word '" + to_string(word) + "' is not reduced");
}

/// All words obtained from a reduced word by commuting adjacent letters
/// with m_ij = 2, sorted lexicographically.
inline std::vector<Word> commutation_class(const CoxeterMatrix& m, const Word& word) {
  require_reduced(m, word);
  return detail::braid_closure(m, word, true);
}

/// No word in the commutation class contains an alternating factor s t s ...
/// of length m_st with 3 <= m_st < inf.
inline bool is_fully_commutative(const CoxeterMatrix& m, const Word& word) {
  for (const auto& w : commutation_class(m, word))
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const int s = w[p], t = w[p + 1];
      if (s == t) continue;
      const int l = m.label(s, t);
      if (l == 2 || l == CoxeterMatrix::kInfinity || p + static_cast<std::size_t>(l) > w.size()) continue;
      bool alternating = true;
      for (int k = 0; k < l && alternating; ++k) alternating = w[p + k] == (k % 2 ? t : s);
      if (alternating) return false;
    }
  return true;
}

/// Group context over a Coxeter system with labels in {2, 3, inf}.
class CoxGroup {
 public:
  using Element = CoxElement;
  using Root = RootVec;
  using ElementHash = CoxElement::Hash;

  explicit CoxGroup(const CoxeterMatrix& m) : sys_(build_system(m)), id_(CoxElement::identity(sys_)) {}

  const CoxSystemPtr& system() const { return sys_; }
  int rank() const { return sys_->rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return sys_->matrix(); }
  const Element& identity() const { return id_; }
  Element from_word(const Word& w) const { return CoxElement::from_word(sys_, w); }
  Element left_mul_simple(int i, const Element& w) const { return w.simple_times(i); }
  Element multiply(const Element& u, const Element& v) const { return u * v; }
  Element inverse(const Element& u) const { return u.inverse(); }
  int length(const Element& w) const { return w.length(); }
  Word reduced_word(const Element& w) const { return w.reduced_word(); }

  std::optional<Root> ascent_root(const Element& w, int i) const {
    auto v = w.apply_inverse(sys_->simple_root(i));
    if (!is_positive_root(v)) return std::nullopt;
    return v;
  }
  std::vector<Root> inversion_roots(const Element& w) const { return w.inversion_roots(); }

  /// Positive root of the reflection p_1 ... p_m i p_m ... p_1.
  Root root_of_reflection_word(const Word& word) const {
    if (word.size() % 2 == 0 || !std::equal(word.begin(), word.end(), word.rbegin()))
      throw Error("reflection word must be an odd palindrome, got '" + to_string(word) + "'");
    const std::size_t m = word.size() / 2;
    Root v = sys_->simple_root(word[m]);
    for (std::size_t k = m; k-- > 0;) v = sys_->reflect(word[k], v);
    if (!is_positive_root(v))
      for (auto& x : v) x = -x;
    return v;
  }

  std::string root_name(const Root& v) const {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j]) continue;
      if (!out.empty()) out += '+';
      if (v[j] != 1) out += std::to_string(v[j]);
      out += "a" + std::to_string(j + 1);
    }
    return out.empty() ? "0" : out;
  }
  bool is_reduced(const Word& w) const { return from_word(w).length() == static_cast<int>(w.size()); }

 private:
  CoxSystemPtr sys_;
  CoxElement id_;
};

}  // namespace coxbal
