#include "reduce.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "backward.hpp"
#include "domain.hpp"
#include "proper.hpp"
#include "rng.hpp"

namespace codered {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

void require_proper(const CodeBasis& b) {
  if (!b.is_proper()) throw UsageError("reduction needs a proper basis");
}

Word lightest_row(const Matrix& rows) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < rows.num_rows(); ++r)
    if (rows.row(r).weight() < rows.row(best).weight()) best = r;
  return rows.row(best);
}

Word insertable(const Matrix& block, const Word& w, ShortestOracle::Kind kind) {
  // Exact minima are primitive already; sampled words may need trimming.
  if (kind == ShortestOracle::Kind::Exhaustive) return w;
  return make_primitive(CodeBasis::trusted(block), w);
}

}  // namespace

std::size_t default_exhaustive_cutoff(std::uint32_t q) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(20.0 / std::log2(static_cast<double>(q)))));
}

ShortestOracle ShortestOracle::exhaustive(std::size_t cutoff) {
  ShortestOracle o;
  o.kind_ = Kind::Exhaustive;
  o.cutoff_ = cutoff;
  return o;
}

ShortestOracle ShortestOracle::lee_brickell(unsigned p, std::size_t iterations, std::uint64_t seed) {
  if (p < 1 || p > 2) throw UsageError("Lee-Brickell combination size must be 1 or 2");
  ShortestOracle o;
  o.kind_ = Kind::LeeBrickell;
  o.p_ = p;
  o.iterations_ = iterations;
  o.rng_.seed(seed);
  return o;
}

std::size_t ShortestOracle::cutoff_for(const Field& f) const {
  return cutoff_ ? cutoff_ : default_exhaustive_cutoff(f.q());
}

Word ShortestOracle::shortest(const Matrix& rows) {
  ++calls_;
  return kind_ == Kind::Exhaustive ? exhaustive_search(rows) : lee_brickell_search(rows);
}

Word ShortestOracle::exhaustive_search(const Matrix& rows) const {
  const Field& f = rows.field();
  const std::size_t dim = rows.num_rows();
  if (dim > cutoff_for(f)) {
    throw UsageError("block dimension " + std::to_string(dim) + " exceeds the exhaustive search cutoff");
  }

  if (f.is_binary()) {
    // Gray-code walk. Coefficient vectors are read as integers with row 0 as
    // the most significant bit, which makes integer order the lexicographic
    // order; ties keep the smaller integer.
    const std::size_t words = rows.row(0).bits().size();
    std::vector<std::uint64_t> cur(words, 0);
    std::uint64_t best_index = 0, best_weight = UINT64_MAX;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
      const unsigned flip = static_cast<unsigned>(std::countr_zero(i));
      auto src = rows.row(dim - 1 - flip).bits();
      std::uint64_t w = 0;
      for (std::size_t t = 0; t < words; ++t) {
        cur[t] ^= src[t];
        w += static_cast<std::uint64_t>(std::popcount(cur[t]));
      }
      const std::uint64_t gray = i ^ (i >> 1);
      if (w < best_weight || (w == best_weight && gray < best_index)) {
        best_weight = w;
        best_index = gray;
      }
    }
    Word out(f, rows.num_cols());
    for (std::size_t r = 0; r < dim; ++r)
      if ((best_index >> (dim - 1 - r)) & 1u) out += rows.row(r);
    return out;
  }

  // Lexicographic odometer over projective representatives: leading
  // coefficient 1 at position lead, free tail after it.
  std::optional<Word> best;
  std::size_t best_weight = SIZE_MAX;
  for (std::size_t lead = dim; lead-- > 0;) {
    std::vector<Elem> coeff(dim, 0);
    Word cur = rows.row(lead);
    while (true) {
      const std::size_t w = cur.weight();
      if (w < best_weight) {
        best_weight = w;
        best = cur;
      }
      std::size_t pos = dim;
      while (pos-- > lead + 1) {
        const Elem old = coeff[pos];
        const Elem next = old + 1 == f.q() ? 0 : old + 1;
        coeff[pos] = next;
        cur.add_scaled(rows.row(pos), f.sub(next, old));
        if (next != 0) break;
      }
      if (pos == lead) break;
    }
  }
  return *best;
}

Word ShortestOracle::lee_brickell_search(const Matrix& rows) {
  const Field& f = rows.field();
  const std::size_t dim = rows.num_rows();
  const std::size_t budget = iterations_ ? iterations_ : 50 * dim;

  Word best = lightest_row(rows);
  std::size_t best_weight = best.weight();

  Mask support(rows.num_cols());
  for (const auto& r : rows.rows()) support |= r.support_mask();
  std::vector<std::size_t> columns = support.indices();

  for (std::size_t it = 0; it < budget; ++it) {
    for (std::size_t i = columns.size(); i > 1; --i) {
      std::swap(columns[i - 1], columns[uniform_below(rng_, i)]);
    }
    const RowEchelon e = row_echelon(rows, columns, false);
    const Matrix& g = e.rows;

    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t w = g.row(r).weight();
      if (w < best_weight) {
        best_weight = w;
        best = g.row(r);
      }
    }
    if (p_ < 2) continue;

    if (f.is_binary()) {
      const std::size_t words = g.row(0).bits().size();
      for (std::size_t r1 = 0; r1 < dim; ++r1) {
        auto a = g.row(r1).bits();
        for (std::size_t r2 = r1 + 1; r2 < dim; ++r2) {
          auto b = g.row(r2).bits();
          std::size_t w = 0;
          for (std::size_t t = 0; t < words && w < best_weight; ++t) {
            w += static_cast<std::size_t>(std::popcount(a[t] ^ b[t]));
          }
          if (w < best_weight) {
            best_weight = w;
            best = g.row(r1);
            best += g.row(r2);
          }
        }
      }
      continue;
    }
    for (std::size_t r1 = 0; r1 < dim; ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < dim; ++r2) {
        for (Elem a = 1; a < f.q(); ++a) {
          Word cand = g.row(r1);
          cand.add_scaled(g.row(r2), a);
          const std::size_t w = cand.weight();
          if (w < best_weight) {
            best_weight = w;
            best = std::move(cand);
          }
        }
      }
    }
  }
  return best;
}

std::pair<Elem, Elem> shortest_pair_coefficients(const Word& x1, const Word& x2) {
  const Elem a = size_reduce_coefficient(x1, x2, x2);
  Word cand = x1;
  cand.add_scaled(x2, a);
  if (cand.weight() < x2.weight()) return {1, a};
  return {0, 1};
}

namespace {

Word shortest_in_block(const Matrix& block, ShortestOracle& oracle) {
  if (block.num_rows() != 2) return oracle.shortest(block);
  const auto [a1, a2] = shortest_pair_coefficients(block.row(0), block.row(1));
  Word w = block.row(1);
  w.scale(a2);
  w.add_scaled(block.row(0), a1);
  return w;
}

// Inserts a shortest block word at `first` when it beats l_first.
bool forward_step(CodeBasis& b, std::size_t first, std::size_t last, ShortestOracle& oracle) {
  const Matrix block = b.block_rows(first, last);
  const Word w = shortest_in_block(block, oracle);
  if (b.epipodal_length(first) <= w.weight()) return false;
  const Word p = insertable(block, w, oracle.kind());
  b.apply_block_transform(first, std::min(last, b.k() - 1), insert_primitive(CodeBasis::trusted(block), p));
  return true;
}

}  // namespace

bool is_forward_reduced(const CodeBasis& b, std::size_t first, std::size_t last, ShortestOracle& oracle) {
  const Matrix block = b.block_rows(first, last);
  return b.epipodal_length(first) <= shortest_in_block(block, oracle).weight();
}

std::uint64_t bkz_iteration_bound(std::size_t n, std::size_t k, std::size_t beta) {
  std::uint64_t v = beta;
  for (std::size_t i = 1; i < k; ++i) v = saturating_mul(v, n);
  v = saturating_mul(v, n - k + 2);
  if (v == UINT64_MAX) return v;
  return v - 1 + k;
}

ReductionStats bkz_reduce(CodeBasis& b, std::size_t beta, ShortestOracle& oracle,
                          std::optional<std::uint64_t> max_iterations) {
  require_proper(b);
  const std::size_t k = b.k(), n = b.n();
  if (beta < 2 || beta > k) throw UsageError("block size must lie in [2, k]");
  const std::uint64_t cap = max_iterations.value_or(
      beta == 2 ? 2 * static_cast<std::uint64_t>(n) * k + k : saturating_mul(10000, static_cast<std::uint64_t>(n) * k));

  ReductionStats stats;
  std::size_t i = 0;
  while (i + 1 < k) {
    if (stats.loop_iterations == cap) {
      throw CapExhaustedError("BKZ iteration cap reached", b, stats);
    }
    ++stats.loop_iterations;
    const std::size_t j = std::min(i + beta - 1, k - 1);
    if (forward_step(b, i, j, oracle)) {
      ++stats.insertions;
      i = i + 1 >= beta ? i + 1 - beta : 0;
    } else {
      ++i;
    }
  }
  return stats;
}

ReductionStats lll_reduce(CodeBasis& b) {
  if (b.k() == 1) {
    require_proper(b);
    return {};
  }
  ShortestOracle unused = ShortestOracle::exhaustive();
  return bkz_reduce(b, 2, unused);
}

ReductionStats slide_reduce(CodeBasis& b, std::size_t beta, ShortestOracle& oracle,
                            std::optional<std::uint64_t> max_iterations) {
  require_proper(b);
  const std::size_t k = b.k(), n = b.n();
  if (beta < 2 || beta > k || k % beta != 0) throw UsageError("slide block size must divide k and lie in [2, k]");
  const std::size_t blocks = k / beta;
  const std::uint64_t cap = max_iterations.value_or(4 * static_cast<std::uint64_t>(k) * n / beta);

  ReductionStats stats;
  std::size_t i = 0;
  while (i < blocks) {
    if (stats.loop_iterations == cap) {
      throw CapExhaustedError("slide iteration cap reached", b, stats);
    }
    ++stats.loop_iterations;
    if (forward_step(b, i * beta, (i + 1) * beta - 1, oracle)) {
      ++stats.insertions;
      i = i > 0 ? i - 1 : 0;
      continue;
    }
    if (i + 2 <= blocks) {
      const std::size_t first = i * beta + 1, last = (i + 1) * beta;
      const CodeBasis block = CodeBasis::trusted(b.block_rows(first, last));
      if (!is_backward_reduced(block)) {
        b.apply_block_transform(first, last, backward_reduce(block));
        ++stats.backward_steps;
        i = i > 0 ? i - 1 : 0;
        continue;
      }
    }
    ++i;
  }
  return stats;
}

Word one_block_reduce(const CodeBasis& b, std::size_t beta, ShortestOracle& oracle) {
  if (beta < 1 || beta > b.k()) throw UsageError("block size must lie in [1, k]");
  const CodeBasis sys = systematize(b);
  return oracle.shortest(sys.block_rows(0, beta - 1));
}

ReductionStats approx_griesmer_reduce(CodeBasis& b, ShortestOracle& oracle, std::size_t skip_threshold) {
  require_proper(b);
  ReductionStats stats;
  for (std::size_t i = 0; i + 1 < b.k(); ++i) {
    ++stats.loop_iterations;
    if (b.epipodal_length(i) < skip_threshold) continue;
    const Matrix block = b.block_rows(i, b.k() - 1);
    const CodeBasis tail = CodeBasis::trusted(block);
    const Word c = oracle.shortest(block);
    const Word p = make_primitive(tail, c);
    b.apply_block_transform(i, b.k() - 1, insert_primitive(tail, p));
    ++stats.insertions;
  }
  return stats;
}

}  // namespace codered
