#include "domain.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "error.hpp"

namespace codered {
namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt power(std::uint32_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::uint64_t objective(const Field& f, std::size_t weight, Elem tb_numerator) {
  return static_cast<std::uint64_t>(weight) * f.q() + tb_numerator;
}

}  // namespace

TieBreak tie_break(const Word& p, const Word& y) {
  if (&p.field() != &y.field() || p.size() != y.size()) throw UsageError("tie-break operands do not match");
  const std::size_t j = p.first_nonzero();
  if (j == p.size()) throw DomainError("tie-break reference word is zero");
  const Field& f = p.field();
  return {f.div(y.get(j), p.get(j)), f.q()};
}

Elem size_reduce_coefficient(const Word& e, const Word& b, const Word& b_plus) {
  const Field& f = e.field();
  if (&b.field() != &f || &b_plus.field() != &f || b.size() != e.size() || b_plus.size() != e.size()) {
    throw UsageError("size reduction operands do not match");
  }
  const std::size_t j = b_plus.first_nonzero();
  if (j == b_plus.size()) throw UsageError("cannot size reduce against a zero epipodal vector");

  if (f.is_binary()) {
    auto ew = e.bits(), bw = b.bits(), pw = b_plus.bits();
    std::size_t w0 = 0, w1 = 0;
    for (std::size_t t = 0; t < pw.size(); ++t) {
      w0 += static_cast<std::size_t>(std::popcount(ew[t] & pw[t]));
      w1 += static_cast<std::size_t>(std::popcount((ew[t] ^ bw[t]) & pw[t]));
    }
    const Elem ej = e.get(j), bj = b.get(j);
    return objective(f, w1, ej ^ bj) < objective(f, w0, ej) ? 1 : 0;
  }

  // a zeroes coordinate i exactly when a = -e_i / b_i.
  std::size_t support = 0, always_zero = 0;
  std::vector<Elem> roots;
  for (std::size_t i = j; i < e.size(); ++i) {
    if (b_plus.get(i) == 0) continue;
    ++support;
    const Elem bi = b.get(i), ei = e.get(i);
    if (bi != 0) {
      roots.push_back(f.neg(f.div(ei, bi)));
    } else if (ei == 0) {
      ++always_zero;
    }
  }
  std::sort(roots.begin(), roots.end());
  const Elem pj_inv = f.inv(b_plus.get(j));
  auto score = [&](Elem a, std::size_t hits) {
    const Elem tb = f.mul(f.add(e.get(j), f.mul(a, b.get(j))), pj_inv);
    return objective(f, support - always_zero - hits, tb);
  };
  const std::size_t zero_hits =
      static_cast<std::size_t>(std::upper_bound(roots.begin(), roots.end(), 0u) - roots.begin()) -
      static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), 0u) - roots.begin());
  Elem best = 0;
  std::uint64_t best_score = score(0, zero_hits);
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t t = i;
    while (t < roots.size() && roots[t] == roots[i]) ++t;
    const std::uint64_t s = score(roots[i], t - i);
    if (s < best_score) {
      best_score = s;
      best = roots[i];
    }
    i = t;
  }
  return best;
}

Word size_reduce(const CodeBasis& b, const Word& y) {
  if (&y.field() != &b.field() || y.size() != b.n()) throw UsageError("target does not match the basis");
  Word e = y;
  for (std::size_t i = b.k(); i-- > 0;) {
    const Elem a = size_reduce_coefficient(e, b.row(i), b.epipodal(i));
    e.add_scaled(b.row(i), a);
  }
  return e;
}

bool in_fundamental_domain(const CodeBasis& b, const Word& y) {
  if (&y.field() != &b.field() || y.size() != b.n()) throw UsageError("target does not match the basis");
  if (!b.is_proper()) throw UsageError("fundamental domain needs a proper basis");
  // The objective is injective in a, so membership means a = 0 is the unique minimizer.
  for (std::size_t i = 0; i < b.k(); ++i) {
    if (size_reduce_coefficient(y, b.row(i), b.epipodal(i)) != 0) return false;
  }
  return true;
}

BigInt count_bounded_occupancy(std::size_t n, std::uint32_t q, std::size_t m) {
  if (n == 0) return 1;
  if (q == 0 || static_cast<unsigned __int128>(q) * m < n) return 0;
  if (m >= n) return power(q, n);
  // f[c][len] = number of words of length len over c symbols with every count <= m.
  std::vector<std::vector<BigInt>> f(q + 1, std::vector<BigInt>(n + 1));
  f[0][0] = 1;
  std::vector<BigInt> pascal{1};
  for (std::size_t len = 0; len <= n; ++len) {
    if (len > 0) {
      std::vector<BigInt> next(std::min(len, m) + 1);
      next[0] = 1;
      for (std::size_t j = 1; j < next.size(); ++j) next[j] = pascal[j - 1] + (j < pascal.size() ? pascal[j] : 0);
      pascal = std::move(next);
    }
    for (std::uint32_t c = 1; c <= q; ++c) {
      BigInt total = 0;
      for (std::size_t j = 0; j < pascal.size(); ++j) {
        if (f[c - 1][len - j] != 0) total += pascal[j] * f[c - 1][len - j];
      }
      f[c][len] = std::move(total);
    }
  }
  return f[q][n];
}

std::vector<BigInt> block_weight_distribution(std::size_t ell, std::uint32_t q) {
  if (ell == 0) throw UsageError("epipodal lengths must be positive");
  std::vector<BigInt> w(ell + 1);
  for (std::size_t z = 1; z <= ell; ++z) {
    BigInt sum = 0;
    for (std::size_t s = 1; s <= q && s * z <= ell; ++s) {
      BigInt term = binomial(q - 1, s - 1);
      for (std::size_t t = 0; t < s && term != 0; ++t) term *= binomial(ell - z * t, z);
      if (term == 0) continue;
      term *= count_bounded_occupancy(ell - s * z, q - static_cast<std::uint32_t>(s), z - 1);
      if (term % s != 0) throw Error("weight count not divisible by the number of frequent symbols");
      sum += term / s;
    }
    w[ell - z] = std::move(sum);
  }
  return w;
}

std::vector<BigInt> fundamental_weight_distribution(std::span<const std::size_t> profile, std::uint32_t q,
                                                    std::optional<std::size_t> n) {
  Field::get(q);
  if (profile.empty()) throw UsageError("profile must be nonempty");
  const std::size_t support = std::accumulate(profile.begin(), profile.end(), std::size_t{0});
  const std::size_t length = n.value_or(support);
  if (length < support) throw UsageError("profile support exceeds the code length");

  std::vector<BigInt> dist{1};
  for (std::size_t ell : profile) dist = convolve(dist, block_weight_distribution(ell, q));
  const std::vector<BigInt> free_coordinate{1, q - 1};
  for (std::size_t i = support; i < length; ++i) dist = convolve(dist, free_coordinate);

  BigInt total = 0;
  for (const auto& v : dist) total += v;
  if (total != power(q, length - profile.size())) throw Error("weight distribution does not sum to q^(n-k)");
  return dist;
}

}  // namespace codered
