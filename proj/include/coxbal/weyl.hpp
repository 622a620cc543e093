#pragma once
// Finite Weyl group elements, stored as their signed action on the
// positive roots. Words are derived data.

#include "coxbal/rootsys.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace coxbal {

class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(RootSystemPtr rs) {
    WeylElement w;
    const int N = rs->num_positive();
    w.img_.resize(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) w.img_[k] = k;
    w.inv_ = w.img_;
    w.rs_ = std::move(rs);
    return w;
  }

  static WeylElement simple(RootSystemPtr rs, int i) {
    check_generator(*rs, i);
    return identity(std::move(rs)).times_simple(i);
  }

  /// s_{w1} s_{w2} ... s_{wl}
  static WeylElement from_word(RootSystemPtr rs, const Word& word) {
    auto w = identity(std::move(rs));
    for (int i : word) w = w.times_simple(i);
    return w;
  }

  /// The reflection s_beta for positive root k.
  static WeylElement reflection(RootSystemPtr rs, int k) {
    const auto& [prefix, i] = rs->root_word(k);
    Word word = prefix;
    word.push_back(i);
    word.insert(word.end(), prefix.rbegin(), prefix.rend());
    return from_word(std::move(rs), word);
  }

  const RootSystemPtr& root_system() const { return rs_; }
  const RootSystem& rs() const { return *rs_; }

  /// w applied to a signed root index.
  int apply(int s) const { return apply_with(img_, s); }
  int apply_inverse(int s) const { return apply_with(inv_, s); }
  /// Signed image of every positive root.
  const std::vector<int>& action() const { return img_; }

  int length() const {
    int n = 0;
    for (int x : img_) n += !rs_->is_positive(x);
    return n;
  }

  /// w * s_i
  WeylElement times_simple(int i) const {
    check_generator(*rs_, i);
    WeylElement out(*this);
    for (std::size_t k = 0; k < img_.size(); ++k) {
      out.img_[k] = apply(rs_->simple_reflect(i, static_cast<int>(k)));
      out.inv_[k] = rs_->simple_reflect(i, inv_[k]);
    }
    return out;
  }

  /// s_i * w
  WeylElement simple_times(int i) const {
    check_generator(*rs_, i);
    WeylElement out(*this);
    for (std::size_t k = 0; k < img_.size(); ++k) {
      out.img_[k] = rs_->simple_reflect(i, img_[k]);
      out.inv_[k] = apply_inverse(rs_->simple_reflect(i, static_cast<int>(k)));
    }
    return out;
  }

  WeylElement inverse() const {
    WeylElement out(*this);
    std::swap(out.img_, out.inv_);
    return out;
  }

  WeylElement operator*(const WeylElement& v) const {
    same_system(v);
    WeylElement out(*this);
    for (std::size_t k = 0; k < img_.size(); ++k) {
      out.img_[k] = apply(v.img_[k]);
      out.inv_[k] = v.apply_inverse(inv_[k]);
    }
    return out;
  }

  /// Right inversion set T_R(w) as positive-root indices, ascending.
  std::vector<int> inversion_set() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (!rs_->is_positive(img_[k])) out.push_back(static_cast<int>(k));
    return out;
  }
  std::vector<int> left_inversion_set() const { return inverse().inversion_set(); }

  bool has_inversion(int k) const { return !rs_->is_positive(img_[k]); }

  bool is_right_descent(int i) const { return !rs_->is_positive(img_[rs_->simple_root(i)]); }
  bool is_left_descent(int i) const { return !rs_->is_positive(inv_[rs_->simple_root(i)]); }

  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (int i = 1; i <= rs_->rank(); ++i)
      if (is_right_descent(i)) out.push_back(i);
    return out;
  }
  std::vector<int> left_descents() const { return inverse().right_descents(); }

  /// Lexicographically smallest reduced word, built by stripping the
  /// smallest left descent each time.
  Word reduced_word() const {
    Word out;
    WeylElement w(*this);
    for (;;) {
      int d = 0;
      for (int i = 1; i <= rs_->rank() && !d; ++i)
        if (w.is_left_descent(i)) d = i;
      if (!d) break;
      out.push_back(d);
      w = w.simple_times(d);
    }
    return out;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] != static_cast<int>(k)) return false;
    return true;
  }

  bool operator==(const WeylElement& o) const { return img_ == o.img_; }

  struct Hash {
    std::size_t operator()(const WeylElement& w) const { return boost::hash_range(w.img_.begin(), w.img_.end()); }
  };

 private:
  static void check_generator(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank())
      throw Error("generator " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank()) + " for " +
                  rs.name());
  }
  void same_system(const WeylElement& v) const {
    if (rs_ != v.rs_ && (rs_->family() != v.rs_->family() || rs_->rank() != v.rs_->rank()))
      throw Error("multiplying elements of different Weyl groups");
  }
  int apply_with(const std::vector<int>& table, int s) const {
    const int N = static_cast<int>(table.size());
    return s < N ? table[s] : rs_->negate(table[s - N]);
  }

  RootSystemPtr rs_;
  std::vector<int> img_;
  std::vector<int> inv_;
};

inline WeylElement multiply(const WeylElement& u, const WeylElement& v) { return u * v; }
inline WeylElement inverse(const WeylElement& u) { return u.inverse(); }

/// Splits an odd palindrome p i reverse(p) into (p, i).
inline std::pair<Word, int> split_reflection_word(const Word& word) {
  if (word.size() % 2 == 0 || !std::equal(word.begin(), word.end(), word.rbegin()))
    throw Error("reflection word must be an odd palindrome, got '" + to_string(word) + "'");
  const std::size_t m = word.size() / 2;
  return {Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(m)), word[m]};
}

enum class Side { Left, Right };

/// Left weak order compares right inversion sets, right weak order left ones.
inline bool weak_leq(const WeylElement& u, const WeylElement& w, Side side = Side::Left) {
  const auto a = side == Side::Left ? u.inversion_set() : u.left_inversion_set();
  const auto b = side == Side::Left ? w.inversion_set() : w.left_inversion_set();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Every group element, by length and then by lexicographically smallest
/// reduced word. Throws CapExceeded once more than `cap` are produced.
inline std::vector<WeylElement> all_elements(const RootSystemPtr& rs, std::size_t cap = kDefaultElementCap) {
  std::vector<WeylElement> out{WeylElement::identity(rs)};
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    const std::size_t level_end = out.size();
    // v = s_i w with lex-min word i + word(w) exactly when i is the smallest
    // left descent of v; iterating i outside keeps each level sorted.
    for (int i = 1; i <= rs->rank(); ++i)
      for (std::size_t k = level_begin; k < level_end; ++k) {
        const auto& w = out[k];
        if (w.is_left_descent(i)) continue;
        auto v = w.simple_times(i);
        bool smallest = true;
        for (int j = 1; j < i && smallest; ++j)
          if (v.is_left_descent(j)) smallest = false;
        if (!smallest) continue;
        if (out.size() >= cap) throw CapExceeded("Weyl group " + rs->name() + " enumeration", cap, out.size());
        out.push_back(std::move(v));
      }
    level_begin = level_end;
  }
  return out;
}

inline WeylElement longest_element(const RootSystemPtr& rs) {
  auto w = WeylElement::identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= rs->rank(); ++i)
      if (!w.is_right_descent(i)) {
        w = w.times_simple(i);
        grew = true;
      }
  }
  return w;
}

/// One-line notation of a type-A element: entry j is w(j) for the action
/// on the coordinates e_1..e_{r+1}.
inline std::vector<int> one_line(const WeylElement& w) {
  if (w.rs().family() != Family::A) throw Error("one-line notation needs type A");
  const int n = w.rs().rank() + 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[j] = j + 1;
  const auto word = w.reduced_word();
  for (int j = 0; j < n; ++j) {
    int x = j + 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
    }
    perm[j] = x;
  }
  return perm;
}

inline bool avoids_321(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (perm[a] < perm[b]) continue;
      for (int c = b + 1; c < n; ++c)
        if (perm[b] > perm[c]) return false;
    }
  return true;
}

/// Group context over a finite Weyl group, used by the convex-set code.
class WeylGroup {
 public:
  using Element = WeylElement;
  using Root = int;
  using ElementHash = WeylElement::Hash;

  explicit WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)), id_(WeylElement::identity(rs_)) {}

  const RootSystemPtr& root_system() const { return rs_; }
  int rank() const { return rs_->rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return rs_->coxeter_matrix(); }
  const Element& identity() const { return id_; }
  Element from_word(const Word& w) const { return WeylElement::from_word(rs_, w); }
  Element left_mul_simple(int i, const Element& w) const { return w.simple_times(i); }
  Element multiply(const Element& u, const Element& v) const { return u * v; }
  Element inverse(const Element& u) const { return u.inverse(); }
  int length(const Element& w) const { return w.length(); }
  Word reduced_word(const Element& w) const { return w.reduced_word(); }

  /// w^{-1} alpha_i when it is positive, i.e. the new inversion of s_i w.
  std::optional<Root> ascent_root(const Element& w, int i) const {
    int s = w.apply_inverse(rs_->simple_root(i));
    if (!rs_->is_positive(s)) return std::nullopt;
    return s;
  }
  std::vector<Root> inversion_roots(const Element& w) const { return w.inversion_set(); }

  /// Positive root of the reflection given by an odd palindromic word
  /// p_1 ... p_m i p_m ... p_1, namely s_{p_1} ... s_{p_m} alpha_i.
  Root root_of_reflection_word(const Word& word) const {
    const auto [prefix, i] = split_reflection_word(word);
    int s = rs_->simple_root(i);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) s = rs_->simple_reflect(*it, s);
    return rs_->positive_part(s);
  }

  std::string root_name(Root k) const { return root_label(*rs_, k); }
  bool is_reduced(const Word& w) const { return from_word(w).length() == static_cast<int>(w.size()); }

 private:
  RootSystemPtr rs_;
  WeylElement id_;
};

}  // namespace coxbal
