#pragma once
// Brute-force reference implementations used only by tests. They work on
// plain coefficient vectors and never call the library's elimination,
// projection or reduction code, so agreement with the library is evidence
// rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gf.hpp"
#include "linalg.hpp"

namespace oracle {

using codered::Elem;
using codered::Field;
using codered::Matrix;
using Vec = std::vector<Elem>;

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline Vec row_values(const Matrix& m, std::size_t r) {
  Vec v(m.num_cols());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = m.at(r, j);
  return v;
}

inline std::size_t weight(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

// Digits of `index` in base q, least significant first.
inline Vec digits(std::uint64_t index, std::uint32_t q, std::size_t len) {
  Vec d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return d;
}

inline Vec combine(const Field& f, const Matrix& m, const Vec& coeffs) {
  Vec out(m.num_cols(), 0);
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    if (!coeffs[r]) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(coeffs[r], m.at(r, j)));
  }
  return out;
}

// Every codeword, indexed by the coefficient vector's base-q value.
inline std::vector<Vec> all_codewords(const Matrix& m) {
  const Field& f = m.field();
  const std::uint64_t total = ipow(f.q(), m.num_rows());
  std::vector<Vec> out;
  out.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) out.push_back(combine(f, m, digits(t, f.q(), m.num_rows())));
  return out;
}

inline std::size_t min_distance(const Matrix& m) {
  std::size_t best = SIZE_MAX;
  for (const Vec& c : all_codewords(m)) {
    const std::size_t w = weight(c);
    if (w) best = std::min(best, w);
  }
  return best;
}

// Rank by counting distinct codewords: q^rank = |row space|.
inline std::size_t rank_by_counting(const Matrix& m) {
  std::set<Vec> words;
  for (const Vec& c : all_codewords(m)) words.insert(c);
  std::size_t r = 0;
  for (std::uint64_t s = words.size(); s > 1; s /= m.field().q()) ++r;
  return r;
}

inline std::set<Vec> span(const Matrix& m) {
  std::set<Vec> words;
  for (const Vec& c : all_codewords(m)) words.insert(c);
  return words;
}

// Epipodal lengths by explicit double loop over rows and columns.
inline std::vector<std::size_t> naive_profile(const Matrix& m) {
  std::vector<std::size_t> out;
  std::vector<bool> covered(m.num_cols(), false);
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = 0; j < m.num_cols(); ++j)
      if (m.at(i, j) && !covered[j]) ++len;
    out.push_back(len);
    for (std::size_t j = 0; j < m.num_cols(); ++j)
      if (m.at(i, j)) covered[j] = true;
  }
  return out;
}

// Repetition number: the largest class of pairwise proportional nonzero
// columns, found by comparing every pair of columns.
inline std::size_t naive_eta(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.num_cols(), k = m.num_rows();
  auto zero = [&](std::size_t j) {
    for (std::size_t r = 0; r < k; ++r)
      if (m.at(r, j)) return false;
    return true;
  };
  auto proportional = [&](std::size_t a, std::size_t b) {
    for (Elem s = 1; s < f.q(); ++s) {
      bool ok = true;
      for (std::size_t r = 0; r < k && ok; ++r) ok = m.at(r, b) == f.mul(s, m.at(r, a));
      if (ok) return true;
    }
    return false;
  };
  std::size_t best = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (zero(a)) continue;
    std::size_t count = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (proportional(a, b)) ++count;
    best = std::max(best, count);
  }
  return best;
}

inline Matrix random_matrix(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, k, n);
  std::uniform_int_distribution<Elem> d(0, f.q() - 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

// Random matrix of rank k, by rejection on the counting rank.
inline Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, k, n, rng);
    if (m.rank() == k) return m;
  }
}

// Proper basis: every row has a coordinate not covered by earlier rows.
inline bool naive_proper(const Matrix& m) {
  for (std::size_t len : naive_profile(m))
    if (len == 0) return false;
  return true;
}

// Minimum weight of the code spanned by rows first..last projected away from
// the support of rows 0..first-1.
inline std::size_t projected_min_weight(const Matrix& m, std::size_t first, std::size_t last) {
  std::vector<bool> covered(m.num_cols(), false);
  for (std::size_t i = 0; i < first; ++i)
    for (std::size_t j = 0; j < m.num_cols(); ++j)
      if (m.at(i, j)) covered[j] = true;
  std::vector<codered::Word> rows;
  for (std::size_t i = first; i <= last; ++i) {
    codered::Word w(m.field(), m.num_cols());
    for (std::size_t j = 0; j < m.num_cols(); ++j)
      if (!covered[j] && m.at(i, j)) w.set(j, m.at(i, j));
    rows.push_back(w);
  }
  return min_distance(Matrix(std::move(rows)));
}

inline std::size_t griesmer_sum(std::uint32_t q, std::size_t d, std::size_t k) {
  std::size_t s = 0;
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) {
    s += static_cast<std::size_t>((d + p - 1) / p);
    if (p < (std::uint64_t{1} << 40)) p *= q;
  }
  return s;
}

}  // namespace oracle
