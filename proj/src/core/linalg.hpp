#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gf.hpp"
#include "word.hpp"

namespace codered {

// Dense matrix over F_q stored as a list of row words.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  // Every row must share one field and one length; rows must be nonempty.
  explicit Matrix(std::vector<Word> rows);
  static Matrix identity(const Field& f, std::size_t k);

  const Field& field() const { return *field_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }

  const Word& row(std::size_t i) const { return rows_[i]; }
  Word& row(std::size_t i) { return rows_[i]; }
  const std::vector<Word>& rows() const { return rows_; }
  Elem at(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, Elem v) { rows_[i].set(j, v); }

  void swap_rows(std::size_t i, std::size_t j) { std::swap(rows_[i], rows_[j]); }
  Matrix operator*(const Matrix& rhs) const;
  // Submatrix of the given rows and the first `cols` columns.
  Matrix leading(std::size_t rows, std::size_t cols) const;
  std::size_t rank() const;
  bool operator==(const Matrix& o) const { return field_ == o.field_ && cols_ == o.cols_ && rows_ == o.rows_; }

 private:
  const Field* field_;
  std::size_t cols_;
  std::vector<Word> rows_;
};

// Result of Gauss-Jordan elimination. The first rank() rows carry a pivot 1
// in column pivots[t] and zeros in every other pivot column; remaining rows
// vanish on every column that was offered as a pivot candidate.
struct RowEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::optional<Matrix> transform;  // transform * input == rows, when tracked
  std::size_t rank() const { return pivots.size(); }
};

// Pivot columns are chosen greedily in the order given by `columns`.
RowEchelon row_echelon(const Matrix& m, std::span<const std::size_t> columns, bool track);
RowEchelon row_echelon(const Matrix& m, bool track);

// Coefficients a with sum_r a_r * m.row(r) == w, or nullopt if w is outside
// the row space. Rows must be independent.
std::optional<std::vector<Elem>> solve_coefficients(const Matrix& m, const Word& w);

// Basis of a k-dimensional code. Rows are linearly independent. The support
// prefixes s_t = Supp(b_0, ..., b_{t-1}) for t = 0..k are cached and kept
// current by the mutating operations.
class CodeBasis {
 public:
  // Throws DomainError if the rows are dependent.
  explicit CodeBasis(Matrix rows);
  // Skips the rank check; the caller guarantees independence.
  static CodeBasis trusted(Matrix rows);

  const Field& field() const { return rows_.field(); }
  std::size_t k() const { return rows_.num_rows(); }
  std::size_t n() const { return rows_.num_cols(); }
  const Matrix& matrix() const { return rows_; }
  const Word& row(std::size_t i) const { return rows_.row(i); }

  const Mask& prefix_support(std::size_t t) const { return prefix_[t]; }
  const Mask& support() const { return prefix_.back(); }

  // Epipodal vector b_i^+: b_i with the coordinates of s_i zeroed.
  Word epipodal(std::size_t i) const { return rows_.row(i).projected_off(prefix_[i]); }
  std::size_t epipodal_length(std::size_t i) const { return rows_.row(i).weight_off(prefix_[i]); }
  std::vector<std::size_t> profile() const;
  bool is_proper() const;

  // Projected block pi_first(b_first .. b_last), indices inclusive with `last`
  // clamped to k-1. The result is a basis of the projected code.
  CodeBasis block(std::size_t first, std::size_t last) const;
  Matrix block_rows(std::size_t first, std::size_t last) const;

  // Replaces rows first..last by a * (rows first..last); a must be invertible.
  void apply_block_transform(std::size_t first, std::size_t last, const Matrix& a);
  // b_target += c * b_source with source < target.
  void add_row_multiple(std::size_t source, std::size_t target, Elem c);

 private:
  CodeBasis(Matrix rows, bool check);
  void refresh_prefix(std::size_t from, std::size_t to);

  Matrix rows_;
  std::vector<Mask> prefix_;
};

// Systematic form (B|_S)^{-1} B. Without S the lexicographically first
// information set is used. Throws DomainError if B|_S is singular.
CodeBasis systematize(const CodeBasis& b);
CodeBasis systematize(const CodeBasis& b, std::span<const std::size_t> info_set);
// Lexicographically first information set of a full-rank matrix.
std::vector<std::size_t> first_information_set(const Matrix& m);

// Text format: a header line "q k n" then k lines of n integers.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace codered
