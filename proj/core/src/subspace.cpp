#include "pmatch/subspace.hpp"

#include <optional>
#include <string>
#include <utility>

#include "pmatch/error.hpp"

namespace pmatch {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus()) {
    throw DimensionMismatch(std::string(op) + ": subspaces of F_" +
                            std::to_string(a.modulus().value()) + "^" +
                            std::to_string(a.ambient_dim()) + " and F_" +
                            std::to_string(b.modulus().value()) + "^" +
                            std::to_string(b.ambient_dim()));
  }
}

/// The first `count` rows of `m`.
Matrix take_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols(), m.modulus());
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
  }
  return out;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim, PrimeModulus p) {
  Subspace s;
  s.basis_ = Matrix(0, ambient_dim, p);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, PrimeModulus p) {
  Subspace s;
  s.basis_ = Matrix::identity(ambient_dim, p);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& generators) {
  RowEchelon e = rref(generators);
  Subspace s;
  s.basis_ = take_rows(e.reduced, e.rank);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::optional<std::vector<Residue>> Subspace::try_coordinates(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("coordinates: vector of length " + std::to_string(v.size()) +
                            " in ambient dimension " + std::to_string(ambient_dim()));
  }
  const PrimeModulus p = modulus();
  // In RREF the coordinate on row i is the entry of the residual at that row's pivot.
  std::vector<Residue> coords(dim());
  std::vector<Residue> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Residue x = rest[pivots_[i]];
    coords[i] = x;
    if (x == 0) continue;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      rest[c] = p.sub(rest[c], p.mul(x, basis_(i, c)));
    }
  }
  for (Residue r : rest) {
    if (r != 0) return std::nullopt;
  }
  return coords;
}

std::vector<Residue> Subspace::coordinates(std::span<const Residue> v) const {
  auto coords = try_coordinates(v);
  if (!coords) throw ValidationError("coordinates: vector is not in the subspace");
  return *std::move(coords);
}

bool Subspace::contains(std::span<const Residue> v) const { return try_coordinates(v).has_value(); }

Subspace kernel(const Matrix& m) {
  const PrimeModulus p = m.modulus();
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  Matrix gens(m.cols() - e.rank, m.cols(), p);
  std::size_t g = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    gens.set(g, free, 1);
    for (std::size_t i = 0; i < e.rank; ++i) gens.set(g, e.pivots[i], p.neg(e.reduced(i, free)));
    ++g;
  }
  return Subspace::span(gens);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace apply(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols() || s.modulus() != m.modulus()) {
    throw DimensionMismatch("apply: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix on a subspace of dimension-" +
                            std::to_string(s.ambient_dim()) + " space");
  }
  // Images of the basis vectors are the rows of basis * m^T.
  return Subspace::span(s.basis() * m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.rows() || s.modulus() != m.modulus()) {
    throw DimensionMismatch("preimage: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix against a subspace of dimension-" +
                            std::to_string(s.ambient_dim()) + " space");
  }
  const PrimeModulus p = m.modulus();
  // Solutions (x, y) of m x - B^T y = 0, projected onto x.
  Matrix neg_bt = s.basis().transpose();
  for (std::size_t r = 0; r < neg_bt.rows(); ++r) {
    for (std::size_t c = 0; c < neg_bt.cols(); ++c) neg_bt.set(r, c, p.neg(neg_bt(r, c)));
  }
  const Subspace solutions = kernel(hstack(m, neg_bt));
  Matrix xs(solutions.dim(), m.cols(), p);
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) xs.set(r, c, solutions.basis()(r, c));
  }
  return Subspace::span(xs);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  require_compatible(s1, s2, "intersect");
  const PrimeModulus p = s1.modulus();
  if (s1.is_zero() || s2.is_zero()) return Subspace::zero(s1.ambient_dim(), p);
  // Coefficients (u, w) with u B1 = w B2; the vectors are u B1.
  Matrix neg_b2t = s2.basis().transpose();
  for (std::size_t r = 0; r < neg_b2t.rows(); ++r) {
    for (std::size_t c = 0; c < neg_b2t.cols(); ++c) neg_b2t.set(r, c, p.neg(neg_b2t(r, c)));
  }
  const Subspace solutions = kernel(hstack(s1.basis().transpose(), neg_b2t));
  Matrix u(solutions.dim(), s1.dim(), p);
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    for (std::size_t c = 0; c < s1.dim(); ++c) u.set(r, c, solutions.basis()(r, c));
  }
  return Subspace::span(u * s1.basis());
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
  require_compatible(s1, s2, "sum");
  return Subspace::span(vstack(s1.basis(), s2.basis()));
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_compatible(outer, inner, "contains");
  for (std::size_t r = 0; r < inner.dim(); ++r) {
    if (!outer.contains(inner.basis().row(r))) return false;
  }
  return true;
}

}  // namespace pmatch
