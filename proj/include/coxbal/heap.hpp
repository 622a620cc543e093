#pragma once
// Heaps of reduced words and the correspondence between right inversions
// of a fully commutative element and the elements of its heap.

#include "coxbal/coxgen.hpp"
#include "coxbal/poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coxbal {

/// Heap of a reduced word s_{i_1} ... s_{i_l}: position j lies below
/// position k whenever j > k and the letters are equal or do not commute,
/// closed transitively. Element j (0-based) carries label i_{j+1}.
inline LabeledPoset heap_from_word(const CoxeterMatrix& m, const Word& word) {
  require_reduced(m, word);
  const int n = static_cast<int>(word.size());
  std::vector<std::pair<int, int>> rel;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < j; ++k)
      if (word[j] == word[k] || !m.commute(word[j], word[k])) rel.emplace_back(j, k);
  return LabeledPoset::from_covers(n, rel, word);
}

/// Lemma on heaps and the diagram: covers join adjacent labels, and
/// elements with equal or adjacent labels are comparable.
inline bool lemma_heap_graph_check(const LabeledPoset& P, const CoxeterMatrix& m) {
  if (!P.labeled()) throw Error("lemma_heap_graph_check needs a labeled poset");
  for (auto [a, b] : P.cover_pairs())
    if (!m.adjacent(P.label(a), P.label(b))) return false;
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y) {
      const int s = P.label(x), t = P.label(y);
      if ((s == t || m.adjacent(s, t)) && !P.comparable(x, y)) return false;
    }
  return true;
}

/// Full commutativity via the heap: no convex chain x_1 < ... < x_m whose
/// labels alternate s, t with 3 <= m_st < inf (and no two equal labels
/// adjacent in a chain of covers, which a reduced word already excludes).
inline bool heap_is_fully_commutative(const CoxeterMatrix& m, const Word& word) {
  const auto H = heap_from_word(m, word);
  const int n = H.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!H.less(x, y)) continue;
      // The interval [x, y] as a chain with alternating labels s, t, ... of length m(s, t).
      std::vector<int> interval;
      for (int z = 0; z < n; ++z)
        if (H.leq(x, z) && H.leq(z, y)) interval.push_back(z);
      std::sort(interval.begin(), interval.end(), [&](int a, int b) { return H.less(a, b); });
      const int s = H.label(interval[0]), t = H.label(interval[1]);
      const int l = s == t ? 0 : m.label(s, t);
      if (l < 3 || l == CoxeterMatrix::kInfinity || static_cast<int>(interval.size()) != l) continue;
      bool alternating = true;
      for (int k = 0; k < l && alternating; ++k) {
        alternating = H.label(interval[k]) == (k % 2 ? t : s);
        if (k && alternating) alternating = H.less(interval[k - 1], interval[k]);
      }
      if (alternating) return false;
    }
  return true;
}

/// psi: heap element k of `word` corresponds to the right inversion
/// s_{i_l} ... s_{i_{k+1}} alpha_{i_k}. Returns those roots by heap element.
template <class Group>
std::vector<typename Group::Root> psi(const Group& G, const Word& word) {
  if (!is_fully_commutative(G.coxeter_matrix(), word))
    throw Error("psi needs a fully commutative element, got '" + to_string(word) + "'");
  std::vector<typename Group::Root> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto suffix = G.from_word(Word(word.begin() + static_cast<std::ptrdiff_t>(k) + 1, word.end()));
    auto r = G.ascent_root(suffix, word[k]);
    if (!r) throw Error("word '" + to_string(word) + "' is not reduced");
    out.push_back(*r);
  }
  return out;
}

/// Psi(u) = {psi(t) : t in T_R(u)} as a subset of the heap of `word`.
template <class Group>
Ideal psi_image(const Group& G, const Word& word, const typename Group::Element& u) {
  const auto roots = psi(G, word);
  const auto inv = G.inversion_roots(u);
  Ideal out(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (std::binary_search(inv.begin(), inv.end(), roots[k])) out.set(k);
  return out;
}

}  // namespace coxbal
