#include "pmatch/persistence_module.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pmatch/error.hpp"

namespace pmatch {

std::string to_string(IntervalKey k) {
  return "[" + std::to_string(k.a) + "," + std::to_string(k.b) + "]";
}

PersistenceModule::PersistenceModule(std::vector<std::size_t> dims, std::vector<Matrix> maps,
                                     PrimeModulus p)
    : dims_(std::move(dims)), maps_(std::move(maps)), p_(p) {
  const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
  if (maps_.size() != expected) {
    throw DimensionMismatch("module of length " + std::to_string(dims_.size()) + " needs " +
                            std::to_string(expected) + " maps, got " +
                            std::to_string(maps_.size()));
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Matrix& f = maps_[i];
    if (f.rows() != dims_[i + 1] || f.cols() != dims_[i]) {
      throw DimensionMismatch("f_" + std::to_string(i + 1) + " has shape " +
                              std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                              ", expected " + std::to_string(dims_[i + 1]) + "x" +
                              std::to_string(dims_[i]));
    }
    if (f.modulus() != p_) {
      throw DimensionMismatch("f_" + std::to_string(i + 1) + " is over a different field");
    }
  }
}

PersistenceModule PersistenceModule::zero(Index n, PrimeModulus p) {
  if (n < 0) throw std::out_of_range("negative module length");
  std::vector<Matrix> maps(n > 0 ? n - 1 : 0, Matrix(0, 0, p));
  return PersistenceModule(std::vector<std::size_t>(n, 0), std::move(maps), p);
}

std::size_t PersistenceModule::dim(Index i) const noexcept {
  return (i >= 1 && i <= length()) ? dims_[i - 1] : 0;
}

Matrix PersistenceModule::map(Index i) const {
  if (i < 0 || i > length()) {
    throw std::out_of_range("structure map index " + std::to_string(i) + " outside [0," +
                            std::to_string(length()) + "]");
  }
  if (i >= 1 && i < length()) return maps_[i - 1];
  return Matrix(dim(i + 1), dim(i), p_);
}

Matrix composite(const PersistenceModule& v, Index a, Index b) {
  if (a < 0 || b > v.length() + 1 || a > b) {
    throw std::out_of_range("composite needs 0 <= a <= b <= n+1, got a=" + std::to_string(a) +
                            ", b=" + std::to_string(b));
  }
  Matrix m = Matrix::identity(v.dim(a), v.modulus());
  for (Index i = a; i < b; ++i) m = v.map(i) * m;
  return m;
}

Subspace persist_subspace(const PersistenceModule& v, Index a, Index b) {
  if (a < 1 || b > v.length() || a > b) return Subspace::zero(v.dim(b), v.modulus());
  return intersect(image(composite(v, a, b)), kernel(v.map(b)));
}

PersistSubspaces::PersistSubspaces(const PersistenceModule& v) : n_(v.length()) {
  const Index side = n_ + 2;
  table_.reserve(static_cast<std::size_t>(side) * side);
  for (Index a = 0; a < side; ++a) {
    for (Index b = 0; b < side; ++b) table_.push_back(persist_subspace(v, a, b));
  }
}

const Subspace& PersistSubspaces::operator()(Index a, Index b) const {
  if (a < 0 || b < 0 || a > n_ + 1 || b > n_ + 1) {
    throw std::out_of_range("S_{a,b} index outside [0, n+1]");
  }
  return table_[static_cast<std::size_t>(a) * (n_ + 2) + b];
}

std::size_t PersistenceDiagram::operator()(Index a, Index b) const {
  const auto it = m_.find(IntervalKey{a, b});
  return it == m_.end() ? 0 : it->second;
}

void PersistenceDiagram::add(IntervalKey k, std::size_t count) {
  if (k.a < 1 || k.a > k.b || k.b > n_) {
    throw std::out_of_range("interval " + to_string(k) + " outside length " + std::to_string(n_));
  }
  if (count > 0) m_[k] += count;
}

std::size_t PersistenceDiagram::total() const noexcept {
  std::size_t t = 0;
  for (const auto& [k, m] : m_) t += m;
  return t;
}

PersistenceDiagram operator+(const PersistenceDiagram& x, const PersistenceDiagram& y) {
  if (x.n_ != y.n_) throw DimensionMismatch("adding diagrams of different lengths");
  PersistenceDiagram out = x;
  for (const auto& [k, m] : y.m_) out.add(k, m);
  return out;
}

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  std::sort(bars_.begin(), bars_.end(), [](const Bar& x, const Bar& y) { return x.key < y.key; });
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    if (bars_[i].multiplicity == 0) {
      throw ValidationError("barcode entry " + to_string(bars_[i].key) + " has multiplicity 0");
    }
    if (i > 0 && bars_[i].key == bars_[i - 1].key) {
      throw ValidationError("barcode lists " + to_string(bars_[i].key) + " twice");
    }
  }
}

std::size_t Barcode::multiplicity(IntervalKey k) const noexcept {
  for (const Bar& bar : bars_) {
    if (bar.key == k) return bar.multiplicity;
  }
  return 0;
}

std::size_t Barcode::cardinality() const noexcept {
  std::size_t t = 0;
  for (const Bar& bar : bars_) t += bar.multiplicity;
  return t;
}

PersistenceDiagram diagram(const PersistSubspaces& s) {
  const Index n = s.length();
  PersistenceDiagram d(n);
  for (Index a = 1; a <= n; ++a) {
    for (Index b = a; b <= n; ++b) {
      // S_{a-1,b} ⊆ S_{a,b}, so this never underflows.
      d.add(IntervalKey{a, b}, s(a, b).dim() - s(a - 1, b).dim());
    }
  }
  return d;
}

PersistenceDiagram diagram(const PersistenceModule& v) { return diagram(PersistSubspaces(v)); }

Barcode barcode(const PersistenceDiagram& d) {
  std::vector<Bar> bars;
  for (const auto& [k, m] : d.entries()) bars.push_back(Bar{k, m});
  return Barcode(std::move(bars));
}

PersistenceModule interval_module(Index a, Index b, Index n, PrimeModulus p) {
  if (a < 1 || a > b || b > n) {
    throw std::out_of_range("interval [" + std::to_string(a) + "," + std::to_string(b) +
                            "] outside [1," + std::to_string(n) + "]");
  }
  std::vector<std::size_t> dims(n, 0);
  for (Index i = a; i <= b; ++i) dims[i - 1] = 1;
  std::vector<Matrix> maps;
  for (Index i = 1; i < n; ++i) {
    Matrix f(dims[i], dims[i - 1], p);
    if (i >= a && i < b) f.set(0, 0, 1);
    maps.push_back(std::move(f));
  }
  return PersistenceModule(std::move(dims), std::move(maps), p);
}

PersistenceModule direct_sum(const PersistenceModule& v, const PersistenceModule& w) {
  if (v.length() != w.length() || v.modulus() != w.modulus()) {
    throw DimensionMismatch("direct sum of modules with different length or field");
  }
  std::vector<std::size_t> dims(v.dims());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += w.dims()[i];
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < v.maps().size(); ++i) {
    maps.push_back(block_diagonal(v.maps()[i], w.maps()[i]));
  }
  return PersistenceModule(std::move(dims), std::move(maps), v.modulus());
}

}  // namespace pmatch
