#pragma once
// Brute-force reference computations used as independent oracles, plus a
// seeded generator for property tests.

#include "coxbal/rootsys.hpp"
#include "coxbal/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace coxbal;

/// Downward-closed subsets of P by scanning all 2^n subsets.
inline std::uint64_t subset_ideal_count(const LabeledPoset& P) {
  const int n = P.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (mask >> b & 1)
        for (int a = 0; a < n && ok; ++a)
          if (P.leq(a, b) && !(mask >> a & 1)) ok = false;
    count += ok;
  }
  return count;
}

/// Fraction of downward-closed subsets containing each element.
inline std::vector<Rational> subset_di(const LabeledPoset& P) {
  const int n = P.size();
  std::int64_t total = 0;
  std::vector<std::int64_t> with(static_cast<std::size_t>(n), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (mask >> b & 1)
        for (int a = 0; a < n && ok; ++a)
          if (P.leq(a, b) && !(mask >> a & 1)) ok = false;
    if (!ok) continue;
    ++total;
    for (int x = 0; x < n; ++x) with[x] += mask >> x & 1;
  }
  std::vector<Rational> out;
  for (auto c : with) out.emplace_back(c, total);
  return out;
}

/// Root-poset ideals counted over all subsets of Phi+, with the order read
/// off the simple-root coefficients directly.
inline std::uint64_t root_subset_ideal_count(const RootSystem& rs) {
  const int N = rs.num_positive();
  auto leq = [&](int a, int b) {
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.coefficients(a)[j] > rs.coefficients(b)[j]) return false;
    return true;
  };
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    bool ok = true;
    for (int b = 0; b < N && ok; ++b)
      if (mask >> b & 1)
        for (int a = 0; a < N && ok; ++a)
          if (!(mask >> a & 1) && leq(a, b)) ok = false;
    count += ok;
  }
  return count;
}

/// Group order by closing the images of the simple roots under reflections
/// in the ambient space.
inline std::size_t reflection_closure_order(const RootSystem& rs) {
  std::vector<QVec> simple;
  for (int i = 1; i <= rs.rank(); ++i) simple.push_back(rs.root(rs.simple_root(i)));
  std::set<std::vector<QVec>, std::less<>> seen;
  auto key = [](const std::vector<QVec>& v) { return v; };
  std::vector<std::vector<QVec>> queue{simple};
  seen.insert(simple);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& a : simple) {
      std::vector<QVec> next;
      for (const auto& x : queue[k]) next.push_back(reflect(a, x));
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  return queue.size();
}

/// Contains the pattern 321: i < j < k with p_i > p_j > p_k.
inline bool has_321(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p[i] > p[j] && p[j] > p[k]) return true;
  return false;
}

/// Linear extensions of the unit-interval order (i before j forced when
/// f_j - f_i >= 1), by trying every permutation.
inline std::size_t unit_interval_extensions(const std::vector<Rational>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[p[k]] = k;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (f[j] - f[i] >= Rational(1) && pos[i] > pos[j]) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Random word of the given length over generators in [lo, hi].
inline std::vector<int> random_word(std::mt19937& rng, int length, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> w(static_cast<std::size_t>(length));
  for (auto& x : w) x = d(rng);
  return w;
}

}  // namespace oracle
