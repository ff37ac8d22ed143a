#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pmatch/matrix.hpp"

namespace pmatch {

/// Linear subspace of F_p^d stored as the rows of a matrix in reduced
/// row-echelon form with full row rank. The representation is canonical:
/// two subspaces are equal as sets exactly when they compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim, PrimeModulus p = {});
  static Subspace full(std::size_t ambient_dim, PrimeModulus p = {});
  /// Row space of `generators` (any rank, any number of rows).
  static Subspace span(const Matrix& generators);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  PrimeModulus modulus() const noexcept { return basis_.modulus(); }
  /// dim() x ambient_dim() matrix in reduced row-echelon form.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Residue> v) const;
  /// Coordinates of a member vector with respect to basis(); throws
  /// ValidationError if v is not in the subspace.
  std::vector<Residue> coordinates(std::span<const Residue> v) const;
  /// As coordinates(), but empty instead of throwing for non-members.
  std::optional<std::vector<Residue>> try_coordinates(std::span<const Residue> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// { v : m v = 0 } inside F_p^{m.cols()}.
Subspace kernel(const Matrix& m);
/// Column space of m inside F_p^{m.rows()}.
Subspace image(const Matrix& m);
/// { m v : v in s }.
Subspace apply(const Matrix& m, const Subspace& s);
/// { v : m v in s }.
Subspace preimage(const Matrix& m, const Subspace& s);
Subspace intersect(const Subspace& s1, const Subspace& s2);
Subspace sum(const Subspace& s1, const Subspace& s2);
/// True when inner is a subset of outer.
bool contains(const Subspace& outer, const Subspace& inner);
inline std::size_t dim(const Subspace& s) noexcept { return s.dim(); }

}  // namespace pmatch
