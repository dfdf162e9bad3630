#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgrass/field.hpp"

namespace qgrass {

// Dense row-major matrix over a Field. Entries are residues in [0, p) for
// prime fields and canonical GMP rationals otherwise, so equality is
// entry-wise.
class Matrix {
 public:
  using ModStore = std::vector<std::uint32_t>;
  using RatStore = std::vector<mpq_class>;

  Matrix() : Matrix(Field::prime(2), 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  // Integers are reduced into the field.
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);
  // Row-count-aware variant so that 0 x n matrices can be expressed.
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& row_major);
  // Single column from integers.
  static Matrix column(const Field& field, const std::vector<long long>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set_int(std::size_t r, std::size_t c, long long v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix scaled(const Scalar& s) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);

  friend bool operator==(const Matrix& a, const Matrix& b);
  // Lexicographic over (rows, cols, entries); used for deterministic ordering.
  friend bool operator<(const Matrix& a, const Matrix& b);

  // Prime-field storage, for hot loops and hashing.
  const ModStore& residues() const { return std::get<ModStore>(data_); }
  ModStore& residues() { return std::get<ModStore>(data_); }
  const RatStore& rationals() const { return std::get<RatStore>(data_); }
  RatStore& rationals() { return std::get<RatStore>(data_); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::variant<ModStore, RatStore> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
// Block-diagonal sum.
Matrix diag_sum(const Matrix& a, const Matrix& b);
// Kronecker product: entry (i*b.rows + k, j*b.cols + l) = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; the reduced matrix keeps the input shape.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Rows form the RREF basis of the null space {v : m v = 0}.
Matrix kernel_basis(const Matrix& m);

// Some x with a x = b, or nullopt when inconsistent. b is a column.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

bool is_invertible(const Matrix& m);
// Throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);

}  // namespace qgrass
