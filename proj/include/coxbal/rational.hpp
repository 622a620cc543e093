#pragma once
// Exact rational scalars and small vector helpers shared by every module.

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxbal {

using Rational = boost::rational<std::int64_t>;
using QVec = std::vector<Rational>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed a caller-supplied cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t partial)
      : Error(what + " (cap " + std::to_string(cap) + " exceeded after " +
              std::to_string(partial) + " items)"),
        cap_(cap),
        partial_(partial) {}
  std::size_t cap() const { return cap_; }
  std::size_t partial() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

// boost 1.74 recurses forever on rational<int64_t> vs int comparisons;
// these exact-match overloads keep int literals safe inside the library.
#define COXBAL_RATIONAL_INT_CMP(op)                                                  \
  inline bool operator op(const Rational& a, int b) { return a op Rational(b); } \
  inline bool operator op(int a, const Rational& b) { return Rational(a) op b; }
COXBAL_RATIONAL_INT_CMP(==)
COXBAL_RATIONAL_INT_CMP(!=)
COXBAL_RATIONAL_INT_CMP(<)
COXBAL_RATIONAL_INT_CMP(>)
COXBAL_RATIONAL_INT_CMP(<=)
COXBAL_RATIONAL_INT_CMP(>=)
#undef COXBAL_RATIONAL_INT_CMP

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p", "p/q" or a finite decimal such as "0.35".
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw Error("cannot parse rational '" + text + "'"); };
  if (text.empty()) fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t used = 0;
      auto num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) fail();
      auto den_text = text.substr(slash + 1);
      auto den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) fail();
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::int64_t scale = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
      std::size_t used = 0;
      auto num = std::stoll(digits, &used);
      if (used != digits.size()) fail();
      return Rational(num, scale);
    }
    std::size_t used = 0;
    auto num = std::stoll(text, &used);
    if (used != text.size()) fail();
    return Rational(num);
  } catch (const std::logic_error&) {
    fail();
  }
  return {};
}

inline Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec operator+(QVec a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline QVec operator-(QVec a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline QVec operator*(const Rational& c, QVec a) {
  for (auto& x : a) x *= c;
  return a;
}

inline QVec operator-(QVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
inline std::vector<QVec> invert(std::vector<QVec> m) {
  const std::size_t n = m.size();
  std::vector<QVec> inv(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("invert: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace coxbal
