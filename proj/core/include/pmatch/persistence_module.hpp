#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pmatch/matrix.hpp"
#include "pmatch/subspace.hpp"

namespace pmatch {

/// 1-based position in a persistence module; 0 and n+1 address the
/// virtual zero spaces at either end.
using Index = int;

/// Closed interval [a,b]. Ordered by a ascending, then b descending, which is
/// the canonical enumeration order of barcodes and matchings.
struct IntervalKey {
  Index a = 1;
  Index b = 1;

  friend constexpr std::strong_ordering operator<=>(IntervalKey x, IntervalKey y) noexcept {
    if (x.a != y.a) return x.a <=> y.a;
    return y.b <=> x.b;
  }
  friend constexpr bool operator==(IntervalKey, IntervalKey) noexcept = default;
};

/// "[a,b]".
std::string to_string(IntervalKey k);

/// V_1 -> V_2 -> ... -> V_n with V_i = F_p^{d_i}; maps()[i-1] is f_i of
/// shape d_{i+1} x d_i.
class PersistenceModule {
 public:
  PersistenceModule() = default;
  /// Throws DimensionMismatch on wrong map count, shape or field.
  PersistenceModule(std::vector<std::size_t> dims, std::vector<Matrix> maps, PrimeModulus p = {});

  static PersistenceModule zero(Index n, PrimeModulus p = {});

  Index length() const noexcept { return static_cast<Index>(dims_.size()); }
  PrimeModulus modulus() const noexcept { return p_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// d_i, or 0 for indices outside [1, n].
  std::size_t dim(Index i) const noexcept;
  /// f_i : V_i -> V_{i+1} for 0 <= i <= n; the end maps are zero maps.
  Matrix map(Index i) const;

  friend bool operator==(const PersistenceModule&, const PersistenceModule&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  PrimeModulus p_{};
};

/// f_{a,b} = f_{b-1} ... f_a, identity when a = b. Requires 0 <= a <= b <= n+1.
Matrix composite(const PersistenceModule& v, Index a, Index b);

/// S_{a,b} = f_{a,b}(V_a) ∩ ker f_b inside V_b; zero unless 1 <= a <= b <= n.
Subspace persist_subspace(const PersistenceModule& v, Index a, Index b);

/// All S_{a,b} for 0 <= a, b <= n+1, computed once.
class PersistSubspaces {
 public:
  explicit PersistSubspaces(const PersistenceModule& v);
  const Subspace& operator()(Index a, Index b) const;
  Index length() const noexcept { return n_; }

 private:
  Index n_ = 0;
  std::vector<Subspace> table_;
};

/// Interval multiplicities m_{a,b} (only positive ones are stored).
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(Index n) : n_(n) {}

  Index length() const noexcept { return n_; }
  std::size_t operator()(Index a, Index b) const;
  std::size_t operator()(IntervalKey k) const { return (*this)(k.a, k.b); }
  /// Adds `count` copies of [a,b]; throws std::out_of_range outside 1<=a<=b<=n.
  void add(IntervalKey k, std::size_t count);
  const std::map<IntervalKey, std::size_t>& entries() const noexcept { return m_; }
  /// Number of intervals counted with multiplicity.
  std::size_t total() const noexcept;

  friend PersistenceDiagram operator+(const PersistenceDiagram& x, const PersistenceDiagram& y);
  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  Index n_ = 0;
  std::map<IntervalKey, std::size_t> m_;
};

struct Bar {
  IntervalKey key;
  std::size_t multiplicity = 0;
  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Multiset of intervals, sorted canonically, multiplicities positive.
class Barcode {
 public:
  Barcode() = default;
  /// Sorts the bars; throws ValidationError on a zero multiplicity or a repeated key.
  explicit Barcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const noexcept { return bars_; }
  bool empty() const noexcept { return bars_.empty(); }
  std::size_t multiplicity(IntervalKey k) const noexcept;
  /// Number of intervals counted with multiplicity.
  std::size_t cardinality() const noexcept;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

/// D(a,b) = dim S_{a,b} - dim S_{a-1,b}.
PersistenceDiagram diagram(const PersistenceModule& v);
PersistenceDiagram diagram(const PersistSubspaces& s);
Barcode barcode(const PersistenceDiagram& d);
inline Barcode barcode(const PersistenceModule& v) { return barcode(diagram(v)); }

/// I[a,b] of length n. Throws std::out_of_range unless 1 <= a <= b <= n.
PersistenceModule interval_module(Index a, Index b, Index n, PrimeModulus p = {});
/// V ⊕ W with block-diagonal maps (V's coordinates first).
PersistenceModule direct_sum(const PersistenceModule& v, const PersistenceModule& w);

}  // namespace pmatch
