#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/matching.hpp"
#include "pmatch/matrix.hpp"
#include "pmatch/persistence_module.hpp"
#include "pmatch/subspace.hpp"

namespace pmatch {

/// Morphism α : V -> U given by components α_i : V_i -> U_i (shape u_i x v_i).
/// Construction only stores the data; validate() checks it.
class LadderMorphism {
 public:
  LadderMorphism() = default;
  LadderMorphism(PersistenceModule source, PersistenceModule target, std::vector<Matrix> components)
      : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {}

  const PersistenceModule& source() const noexcept { return source_; }
  const PersistenceModule& target() const noexcept { return target_; }
  const std::vector<Matrix>& components() const noexcept { return components_; }
  Index length() const noexcept { return source_.length(); }
  PrimeModulus modulus() const noexcept { return source_.modulus(); }

  /// α_i for 1 <= i <= n, and the zero map at the virtual ends 0 and n+1.
  Matrix component(Index i) const;

  friend bool operator==(const LadderMorphism&, const LadderMorphism&) = default;

 private:
  PersistenceModule source_;
  PersistenceModule target_;
  std::vector<Matrix> components_;
};

struct MorphismViolation {
  enum class Kind { Length, Field, Shape, Commutativity };
  Kind kind = Kind::Length;
  /// Component index for Shape, square index i (α_{i+1} f_i vs f_i α_i) for
  /// Commutativity, 0 otherwise.
  Index index = 0;
  /// α_{i+1} f^V_i - f^U_i α_i for Commutativity.
  Matrix difference;
  std::string describe() const;
};

std::optional<MorphismViolation> validate(const LadderMorphism& alpha);
/// Throws ValidationError with the violation's description.
void require_valid(const LadderMorphism& alpha);

LadderMorphism identity_morphism(const PersistenceModule& v);
LadderMorphism zero_morphism(const PersistenceModule& v, const PersistenceModule& u);
/// β ∘ α.
LadderMorphism compose(const LadderMorphism& beta, const LadderMorphism& alpha);
LadderMorphism direct_sum(const LadderMorphism& l1, const LadderMorphism& l2);

/// Every component has trivial kernel.
bool is_injective(const LadderMorphism& alpha);
/// Every component has full row rank.
bool is_surjective(const LadderMorphism& alpha);

/// Ladder written as "top / bottom" dimension rows, e.g. "1 2 1 / 0 1 1": the
/// top row is the target U, the bottom row the source V. Rows of 0s and 1s
/// use identity maps wherever both ends are nonzero; "1 2 1 / 0 1 1" and
/// "1 1 0 / 1 2 1" are the two indecomposables with a 2-dimensional space.
/// Throws ParseError on malformed text, ValidationError if the result does
/// not commute.
LadderMorphism ladder_from_notation(std::string_view notation, PrimeModulus p = {});

/// X(a,b,a',b') = dim[S^V_{a,b} ∩ f^V_{b',b} α_{b'}^{-1}(S^U_{a',b'})]
///              - dim[S^V_{a,b} ∩ f^V_{b',b}(ker α_{b'})]   for b' <= b,
/// and 0 otherwise or when any index is outside [1, n].
std::size_t chi(const LadderMorphism& alpha, Index a, Index b, Index a2, Index b2);

/// chi over the whole index grid, filled once at construction.
class ChiTable {
 public:
  /// Throws ValidationError for an invalid morphism.
  explicit ChiTable(const LadderMorphism& alpha);

  Index length() const noexcept { return n_; }
  /// Zero outside [1, n]^4, so the elder operator can step to index 0.
  std::size_t operator()(Index a, Index b, Index a2, Index b2) const;

 private:
  Index n_ = 0;
  std::vector<std::size_t> values_;
};

/// M(a,b,a',b') = E_{1,3}(X)(a,b,a',b').
Matching induced_matching(const ChiTable& chi);
Matching induced_matching(const LadderMorphism& alpha);

}  // namespace pmatch
