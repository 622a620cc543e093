#pragma once
// Coxeter matrices (diagram data) shared by the crystallographic and the
// generic Coxeter modules. Generators are numbered 1..rank everywhere.

#include "coxbal/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace coxbal {

/// A word in the simple generators, 1-based (s_1 is written 1).
using Word = std::vector<int>;

inline std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

/// Parses a space (or comma) separated list of 1-based generator indices.
inline Word parse_word(const std::string& text) {
  Word w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != token.size()) throw Error("cannot parse word letter '" + token + "'");
    w.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') flush();
    else token += c;
  }
  flush();
  return w;
}

class CoxeterMatrix {
 public:
  /// Label used for m_ij = infinity.
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;

  /// All off-diagonal labels start at 2 (commuting generators).
  explicit CoxeterMatrix(int rank) : rank_(rank), m_(static_cast<std::size_t>(rank * rank), 2) {
    if (rank < 1) throw Error("Coxeter matrix rank must be positive");
    for (int i = 0; i < rank; ++i) m_[idx(i + 1, i + 1)] = 1;
  }

  int rank() const { return rank_; }

  int label(int i, int j) const {
    check(i);
    check(j);
    return m_[idx(i, j)];
  }

  void set_label(int i, int j, int m) {
    check(i);
    check(j);
    if (i == j) throw Error("diagonal Coxeter label is fixed to 1");
    if (m != kInfinity && m < 2)
      throw Error("Coxeter label must be >= 2 or infinity, got " + std::to_string(m));
    m_[idx(i, j)] = m;
    m_[idx(j, i)] = m;
  }

  bool commute(int i, int j) const { return i != j && label(i, j) == 2; }
  /// Joined by an edge of the diagram (label >= 3 or infinity).
  bool adjacent(int i, int j) const { return i != j && label(i, j) != 2; }

  /// The diagram (edges m_ij >= 3) contains no cycle.
  bool is_acyclic() const {
    std::vector<int> parent(static_cast<std::size_t>(rank_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 1; i <= rank_; ++i)
      for (int j = i + 1; j <= rank_; ++j) {
        if (!adjacent(i, j)) continue;
        int a = find(i - 1), b = find(j - 1);
        if (a == b) return false;
        parent[a] = b;
      }
    return true;
  }

  bool is_irreducible() const { return components().size() == 1; }

  /// Connected components of the diagram, each sorted ascending.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<std::size_t>(rank_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= rank_; ++s) {
      if (comp[s - 1] >= 0) continue;
      out.emplace_back();
      std::vector<int> stack{s};
      comp[s - 1] = static_cast<int>(out.size()) - 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.back().push_back(x);
        for (int y = 1; y <= rank_; ++y)
          if (adjacent(x, y) && comp[y - 1] < 0) {
            comp[y - 1] = comp[s - 1];
            stack.push_back(y);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  bool operator==(const CoxeterMatrix&) const = default;

  /// A path 1 - 2 - ... - r with the given edge labels (size r-1).
  static CoxeterMatrix path(const std::vector<int>& edge_labels) {
    CoxeterMatrix m(static_cast<int>(edge_labels.size()) + 1);
    for (std::size_t i = 0; i < edge_labels.size(); ++i)
      m.set_label(static_cast<int>(i) + 1, static_cast<int>(i) + 2, edge_labels[i]);
    return m;
  }

  /// Complete graph on n vertices, every edge carrying label m.
  static CoxeterMatrix complete(int n, int m) {
    CoxeterMatrix out(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.set_label(i, j, m);
    return out;
  }

  /// Cycle 1 - 2 - ... - n - 1 with every label 3 (affine type A_{n-1}).
  static CoxeterMatrix affine_a(int n) {
    CoxeterMatrix out(n);
    for (int i = 1; i <= n; ++i) out.set_label(i, i % n + 1, 3);
    return out;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  void check(int i) const {
    if (i < 1 || i > rank_)
      throw Error("generator index " + std::to_string(i) + " out of range 1.." +
                  std::to_string(rank_));
  }

  int rank_ = 0;
  std::vector<int> m_;
};

}  // namespace coxbal
