#include "backward.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace codered {
namespace {

// Elimination on the redundant set followed by moving the pivot row last.
// Performs no properness check so it also serves column-restricted windows.
Matrix backward_transform(const Matrix& rows) {
  const Field& f = rows.field();
  const std::size_t k = rows.num_rows();
  const RedundantSet s = max_redundant_set(rows);
  const std::size_t j1 = s.base;
  std::size_t m = 0;
  while (rows.at(m, j1) == 0) ++m;
  const Elem pivot_inv = f.inv(rows.at(m, j1));

  Matrix e = Matrix::identity(f, k);
  for (std::size_t r = m + 1; r < k; ++r) {
    const Elem v = rows.at(r, j1);
    if (v) e.set(r, m, f.neg(f.mul(pivot_inv, v)));
  }
  std::vector<Word> order;
  order.reserve(k);
  for (std::size_t r = 0; r < k; ++r)
    if (r != m) order.push_back(e.row(r));
  order.push_back(e.row(m));
  return Matrix(std::move(order));
}

}  // namespace

RedundantSet max_redundant_set(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t k = m.num_rows();
  struct Column {
    std::size_t index;
    Elem lead;
    Word normalized;
  };
  std::vector<Column> cols;
  for (std::size_t j = 0; j < m.num_cols(); ++j) {
    Word c(f, k);
    for (std::size_t r = 0; r < k; ++r) {
      const Elem v = m.at(r, j);
      if (v) c.set(r, v);
    }
    const std::size_t first = c.first_nonzero();
    if (first == k) continue;
    const Elem lead = c.get(first);
    if (lead != 1) c.scale(f.inv(lead));
    cols.push_back({j, lead, std::move(c)});
  }
  if (cols.empty()) throw DomainError("zero code has no redundant set");
  std::stable_sort(cols.begin(), cols.end(),
                   [](const Column& a, const Column& b) { return a.normalized.lex_less(b.normalized); });

  std::size_t best_begin = 0, best_len = 0;
  for (std::size_t i = 0; i < cols.size();) {
    std::size_t j = i + 1;
    while (j < cols.size() && cols[j].normalized == cols[i].normalized) ++j;
    if (j - i > best_len) {
      best_begin = i;
      best_len = j - i;
    }
    i = j;
  }

  RedundantSet out;
  const Elem base_lead_inv = f.inv(cols[best_begin].lead);
  out.base = cols[best_begin].index;
  for (std::size_t t = best_begin; t < best_begin + best_len; ++t) {
    out.coords.push_back(cols[t].index);
    out.scalars.push_back(f.mul(cols[t].lead, base_lead_inv));
  }
  return out;
}

std::size_t eta_lower_bound(std::uint32_t q, std::size_t k, std::size_t support) {
  // q^k - 1 saturates; once it exceeds (q-1)*support the bound is 1.
  const unsigned __int128 num = static_cast<unsigned __int128>(q - 1) * support;
  unsigned __int128 den = 1;
  for (std::size_t i = 0; i < k && den <= num; ++i) den *= q;
  if (support == 0) return 0;
  if (den - 1 > num) return 1;
  den -= 1;
  return static_cast<std::size_t>((num + den - 1) / den);
}

bool is_backward_reduced(const CodeBasis& b) {
  return b.is_proper() && b.epipodal_length(b.k() - 1) == max_redundant_set(b).coords.size();
}

Matrix backward_reduce(const CodeBasis& b) {
  if (!b.is_proper()) throw UsageError("backward reduction needs a proper basis");
  return backward_transform(b.matrix());
}

void full_backward_reduce(CodeBasis& b, std::size_t tau) {
  if (!b.is_proper()) throw UsageError("backward reduction needs a proper basis");
  if (tau < 1 || tau > b.k()) throw UsageError("threshold must lie in [1, k]");
  for (std::size_t i = tau; i >= 1; --i) {
    b.apply_block_transform(0, i - 1, backward_transform(b.block_rows(0, i - 1)));
  }
}

CodeBasis selective_backward_reduce(const Matrix& input, std::size_t beta) {
  const std::size_t k = input.num_rows(), n = input.num_cols();
  if (beta < 1 || n <= k || (n - k) % beta != 0) throw UsageError("block size must divide n - k");
  const std::size_t steps = (n - k) / beta;
  if (steps > k + 1) throw UsageError("block size too small for the code dimension");

  RowEchelon e = row_echelon(input, false);
  if (e.rank() != k) throw RetryableError("matrix is rank deficient");
  if (e.pivots.back() >= k + beta) throw RetryableError("first information set extends past k + beta");
  Matrix m = std::move(e.rows);

  std::size_t j = k + 2 * beta;
  for (std::size_t i = steps - 1; i >= 1; --i, j += beta) {
    const Matrix window = m.leading(i, std::min(j, n));
    const Matrix t = backward_transform(window);
    std::vector<Word> head(m.rows().begin(), m.rows().begin() + static_cast<std::ptrdiff_t>(i));
    const Matrix updated = t * Matrix(std::move(head));
    for (std::size_t r = 0; r < i; ++r) m.row(r) = updated.row(r);
  }
  return CodeBasis::trusted(std::move(m));
}

}  // namespace codered
