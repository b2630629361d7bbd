#include "linalg.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "error.hpp"

namespace codered {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), cols_(cols), rows_(rows, Word(f, cols)) {}

Matrix::Matrix(std::vector<Word> rows) : field_(nullptr), cols_(0), rows_(std::move(rows)) {
  if (rows_.empty()) throw UsageError("matrix needs at least one row");
  field_ = &rows_.front().field();
  cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (&r.field() != field_ || r.size() != cols_) throw UsageError("matrix rows differ in field or length");
  }
}

Matrix Matrix::identity(const Field& f, std::size_t k) {
  Matrix m(f, k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw UsageError("matrix product over different fields");
  if (cols_ != rhs.num_rows()) throw UsageError("matrix product dimension mismatch");
  Matrix out(*field_, num_rows(), rhs.num_cols());
  for (std::size_t i = 0; i < num_rows(); ++i) {
    const Word& a = rows_[i];
    if (a.binary()) {
      for (std::size_t j : a.support()) out.rows_[i] += rhs.rows_[j];
    } else {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elem c = a.get(j);
        if (c) out.rows_[i].add_scaled(rhs.rows_[j], c);
      }
    }
  }
  return out;
}

Matrix Matrix::leading(std::size_t rows, std::size_t cols) const {
  if (rows > num_rows() || cols > cols_) throw UsageError("leading submatrix larger than matrix");
  Matrix out(*field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Elem v = at(i, j);
      if (v) out.set(i, j, v);
    }
  }
  return out;
}

std::size_t Matrix::rank() const { return row_echelon(*this, false).rank(); }

RowEchelon row_echelon(const Matrix& m, std::span<const std::size_t> columns, bool track) {
  const Field& f = m.field();
  RowEchelon r{m, {}, std::nullopt};
  if (track) r.transform = Matrix::identity(f, m.num_rows());
  Matrix& a = r.rows;
  const std::size_t rows = a.num_rows();
  for (std::size_t c : columns) {
    if (c >= a.num_cols()) throw UsageError("pivot column out of range");
    const std::size_t rank = r.pivots.size();
    if (rank == rows) break;
    std::size_t p = rank;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(rank, p);
    if (track) r.transform->swap_rows(rank, p);
    const Elem lead = a.at(rank, c);
    if (lead != 1) {
      const Elem s = f.inv(lead);
      a.row(rank).scale(s);
      if (track) r.transform->row(rank).scale(s);
    }
    for (std::size_t t = 0; t < rows; ++t) {
      if (t == rank) continue;
      const Elem v = a.at(t, c);
      if (v == 0) continue;
      const Elem factor = f.neg(v);
      a.row(t).add_scaled(a.row(rank), factor);
      if (track) r.transform->row(t).add_scaled(r.transform->row(rank), factor);
    }
    r.pivots.push_back(c);
  }
  return r;
}

RowEchelon row_echelon(const Matrix& m, bool track) {
  std::vector<std::size_t> cols(m.num_cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return row_echelon(m, cols, track);
}

std::optional<std::vector<Elem>> solve_coefficients(const Matrix& m, const Word& w) {
  if (&w.field() != &m.field() || w.size() != m.num_cols()) throw UsageError("word does not match the basis");
  const Field& f = m.field();
  RowEchelon e = row_echelon(m, true);
  Word check(f, m.num_cols());
  std::vector<Elem> in_reduced(e.rank());
  for (std::size_t t = 0; t < e.rank(); ++t) {
    in_reduced[t] = w.get(e.pivots[t]);
    check.add_scaled(e.rows.row(t), in_reduced[t]);
  }
  if (!(check == w)) return std::nullopt;
  std::vector<Elem> a(m.num_rows(), 0);
  for (std::size_t t = 0; t < e.rank(); ++t) {
    if (in_reduced[t] == 0) continue;
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
      a[r] = f.add(a[r], f.mul(in_reduced[t], e.transform->at(t, r)));
    }
  }
  return a;
}

CodeBasis::CodeBasis(Matrix rows) : CodeBasis(std::move(rows), true) {}

CodeBasis CodeBasis::trusted(Matrix rows) { return CodeBasis(std::move(rows), false); }

CodeBasis::CodeBasis(Matrix rows, bool check) : rows_(std::move(rows)) {
  if (check && rows_.rank() != rows_.num_rows()) throw DomainError("basis rows are linearly dependent");
  prefix_.assign(k() + 1, Mask(n()));
  refresh_prefix(1, k());
}

void CodeBasis::refresh_prefix(std::size_t from, std::size_t to) {
  for (std::size_t t = from; t <= to; ++t) {
    prefix_[t] = prefix_[t - 1];
    prefix_[t] |= rows_.row(t - 1).support_mask();
  }
}

std::vector<std::size_t> CodeBasis::profile() const {
  std::vector<std::size_t> out(k());
  for (std::size_t i = 0; i < k(); ++i) out[i] = epipodal_length(i);
  return out;
}

bool CodeBasis::is_proper() const {
  for (std::size_t i = 0; i < k(); ++i)
    if (epipodal_length(i) == 0) return false;
  return true;
}

Matrix CodeBasis::block_rows(std::size_t first, std::size_t last) const {
  if (first >= k() || last < first) throw UsageError("block range out of bounds");
  last = std::min(last, k() - 1);
  std::vector<Word> out;
  out.reserve(last - first + 1);
  for (std::size_t t = first; t <= last; ++t) out.push_back(rows_.row(t).projected_off(prefix_[first]));
  return Matrix(std::move(out));
}

CodeBasis CodeBasis::block(std::size_t first, std::size_t last) const { return CodeBasis(block_rows(first, last)); }

void CodeBasis::apply_block_transform(std::size_t first, std::size_t last, const Matrix& a) {
  if (first >= k() || last < first || last >= k()) throw UsageError("block range out of bounds");
  const std::size_t size = last - first + 1;
  if (a.num_rows() != size || a.num_cols() != size) throw UsageError("transform size does not match block");
  if (&a.field() != &field()) throw UsageError("transform over a different field");
  if (a.rank() != size) throw UsageError("block transform is not invertible");
  std::vector<Word> old;
  old.reserve(size);
  for (std::size_t t = first; t <= last; ++t) old.push_back(rows_.row(t));
  Matrix updated = a * Matrix(std::move(old));
  for (std::size_t t = 0; t < size; ++t) rows_.row(first + t) = updated.row(t);
  // s_{last+1} is the support of an unchanged span.
  refresh_prefix(first + 1, last);
}

void CodeBasis::add_row_multiple(std::size_t source, std::size_t target, Elem c) {
  if (source >= target || target >= k()) throw UsageError("row multiple needs source < target < k");
  rows_.row(target).add_scaled(rows_.row(source), c);
}

std::vector<std::size_t> first_information_set(const Matrix& m) {
  RowEchelon e = row_echelon(m, false);
  if (e.rank() != m.num_rows()) throw DomainError("matrix does not have full row rank");
  return e.pivots;
}

CodeBasis systematize(const CodeBasis& b) {
  RowEchelon e = row_echelon(b.matrix(), false);
  return CodeBasis::trusted(std::move(e.rows));
}

CodeBasis systematize(const CodeBasis& b, std::span<const std::size_t> info_set) {
  if (info_set.size() != b.k()) throw UsageError("information set must have exactly k coordinates");
  RowEchelon e = row_echelon(b.matrix(), info_set, false);
  if (e.rank() != b.k()) throw DomainError("columns do not form an information set");
  return CodeBasis::trusted(std::move(e.rows));
}

Matrix read_matrix(std::istream& in) {
  long long q = 0, k = 0, n = 0;
  if (!(in >> q >> k >> n)) throw UsageError("matrix header must be 'q k n'");
  if (q < 2 || q > kMaxFieldOrder || k < 1 || n < 1) throw UsageError("matrix header out of range");
  const Field& f = Field::get(static_cast<std::uint32_t>(q));
  Matrix m(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (long long i = 0; i < k; ++i) {
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v)) throw UsageError("matrix body truncated");
      if (v < 0 || v >= q) throw UsageError("matrix entry is not a field element");
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<Elem>(v));
    }
  }
  std::string extra;
  if (in >> extra) throw UsageError("trailing data after matrix body");
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.field().q() << ' ' << m.num_rows() << ' ' << m.num_cols() << '\n';
  for (const auto& row : m.rows()) {
    for (std::size_t j = 0; j < m.num_cols(); ++j) out << (j ? " " : "") << row.get(j);
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_matrix(out, m);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace codered
