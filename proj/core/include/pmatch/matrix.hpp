#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pmatch/field.hpp"

namespace pmatch {

/// Dense row-major matrix over F_p. Zero-row and zero-column shapes are
/// ordinary values and stand for maps into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of the given shape.
  Matrix(std::size_t rows, std::size_t cols, PrimeModulus p = {});

  static Matrix identity(std::size_t n, PrimeModulus p = {});
  /// Builds from integer rows (reduced mod p). `cols` is needed to give a
  /// 0-row matrix its width; every row must have exactly `cols` entries.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                          PrimeModulus p = {});
  /// Convenience for literals; width is taken from the first row.
  static Matrix of(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                   PrimeModulus p = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PrimeModulus modulus() const noexcept { return p_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = p_.reduce(value);
  }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Residue> column(std::size_t c) const;

  bool is_zero() const noexcept;
  Matrix transpose() const;
  /// m * v for a column vector v of length cols().
  std::vector<Residue> apply(std::span<const Residue> v) const;

  /// Row-major integer view, used for serialization.
  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeModulus p_{};
  std::vector<Residue> data_;
};

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   ///< same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace pmatch
