#include "proper.hpp"

#include "error.hpp"

namespace codered {
namespace {

std::vector<Elem> require_codeword(const CodeBasis& b, const Word& c) {
  if (&c.field() != &b.field() || c.size() != b.n()) throw UsageError("word does not match the basis");
  if (c.is_zero()) throw UsageError("codeword must be nonzero");
  auto a = solve_coefficients(b.matrix(), c);
  if (!a) throw UsageError("word is not a codeword of the basis");
  return *a;
}

Matrix projected_off(const Matrix& m, std::size_t from, const Mask& s) {
  std::vector<Word> rows;
  rows.reserve(m.num_rows() - from);
  for (std::size_t t = from; t < m.num_rows(); ++t) rows.push_back(m.row(t).projected_off(s));
  return Matrix(std::move(rows));
}

}  // namespace

std::optional<CodeBasis> special_subcode(const CodeBasis& b, const Mask& s) {
  if (s.size() != b.n()) throw UsageError("coordinate set length does not match code length");
  const auto columns = s.indices();
  RowEchelon e = row_echelon(b.matrix(), columns, false);
  if (e.rank() == b.k()) return std::nullopt;
  std::vector<Word> rows(e.rows.rows().begin() + static_cast<std::ptrdiff_t>(e.rank()), e.rows.rows().end());
  return CodeBasis::trusted(Matrix(std::move(rows)));
}

PrimitivityResult is_primitive(const CodeBasis& b, const Word& c) {
  require_codeword(b, c);
  const Mask supp = c.support_mask();
  if (b.k() == 1 || projected_off(b.matrix(), 0, supp).rank() == b.k() - 1) return {true, std::nullopt};
  auto sub = special_subcode(b, supp.complement());
  // The subcode holds c and at least one independent word; after
  // systematization the first row vanishes on the second row's pivot, which
  // lies inside Supp(c).
  CodeBasis sys = systematize(*sub);
  return {false, sys.row(0)};
}

Word make_primitive(const CodeBasis& b, const Word& c) {
  require_codeword(b, c);
  auto sub = special_subcode(b, c.support_mask().complement());
  return systematize(*sub).row(0);
}

Matrix insert_primitive(const CodeBasis& b, const Word& p) {
  const Field& f = b.field();
  const std::size_t k = b.k();
  const std::vector<Elem> a = require_codeword(b, p);
  std::size_t m = 0;
  while (a[m] == 0) ++m;

  Matrix lead = Matrix::identity(f, k);
  for (std::size_t r = 0; r < k; ++r) lead.set(m, r, a[r]);
  lead.swap_rows(0, m);
  if (k == 1) return lead;

  const Matrix moved = lead * b.matrix();
  RowEchelon tail = row_echelon(projected_off(moved, 1, p.support_mask()), true);
  if (tail.rank() != k - 1) throw DomainError("word is not primitive in the code");

  Matrix full = Matrix::identity(f, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j + 1 < k; ++j) full.set(i + 1, j + 1, tail.transform->at(i, j));
  }
  return full * lead;
}

}  // namespace codered
