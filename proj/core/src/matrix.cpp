#include "pmatch/matrix.hpp"

#include <sstream>
#include <utility>

#include "pmatch/error.hpp"

namespace pmatch {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (a.modulus() != b.modulus()) {
    throw DimensionMismatch(std::string(op) + ": operands over different fields");
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeModulus p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                         PrimeModulus p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                  PrimeModulus p) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v, v.empty() ? 0 : v.front().size(), p);
}

std::vector<Residue> Matrix::column(std::size_t c) const {
  std::vector<Residue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (Residue x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

std::vector<Residue> Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("apply: vector of length " + std::to_string(v.size()) + " to " +
                            shape(*this) + " matrix");
  }
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + std::uint64_t{(*this)(r, c)} * v[c]) % p_.value();
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("multiply: " + shape(a) + " * " + shape(b));
  }
  const std::uint64_t p = a.p_.value();
  Matrix out(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& cell = out.data_[i * b.cols_ + j];
        cell = static_cast<Residue>((cell + x * b(k, j)) % p);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("add: " + shape(a) + " + " + shape(b));
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.p_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "subtract");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("subtract: " + shape(a) + " - " + shape(b));
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.p_.sub(a.data_[i], b.data_[i]);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: " + shape(a) + " | " + shape(b));
  Matrix out(a.rows(), a.cols() + b.cols(), a.modulus());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + shape(a) + " ; " + shape(b));
  Matrix out(a.rows() + b.rows(), a.cols(), a.modulus());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "block_diagonal");
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  }
  return out;
}

RowEchelon rref(const Matrix& m) {
  const PrimeModulus p = m.modulus();
  std::vector<std::vector<Residue>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[lead], a[pivot]);
    const Residue inv = p.inverse(a[lead][c]);
    for (auto& x : a[lead]) x = p.mul(x, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || a[r][c] == 0) continue;
      const Residue f = a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[r][j] = p.sub(a[r][j], p.mul(f, a[lead][j]));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = Matrix(m.rows(), m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.reduced.set(r, c, a[r][c]);
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

}  // namespace pmatch
