#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmatch/persistence_module.hpp"

namespace pmatch {

using KeyPair = std::pair<IntervalKey, IntervalKey>;

/// Basis-free partial matching: how many copies of [a,b] in the source
/// barcode are matched with copies of [a',b'] in the target barcode.
/// Iteration order of entries() is lexicographic in (a, -b, a', -b').
class Matching {
 public:
  Matching() = default;
  explicit Matching(Index n) : n_(n) {}

  Index length() const noexcept { return n_; }
  std::size_t operator()(IntervalKey v, IntervalKey u) const;
  std::size_t operator()(Index a, Index b, Index a2, Index b2) const {
    return (*this)(IntervalKey{a, b}, IntervalKey{a2, b2});
  }
  /// Throws std::out_of_range for keys outside 1 <= a <= b <= n.
  void add(IntervalKey v, IntervalKey u, std::size_t count);
  const std::map<KeyPair, std::size_t>& entries() const noexcept { return m_; }

  std::size_t row_sum(IntervalKey v) const;
  std::size_t column_sum(IntervalKey u) const;
  std::size_t total() const;

  friend Matching operator+(const Matching& x, const Matching& y);
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  Index n_ = 0;
  std::map<KeyPair, std::size_t> m_;
};

struct BoundViolation {
  bool row = true;  ///< row bound (source) or column bound (target)
  IntervalKey key;
  std::size_t sum = 0;
  std::size_t bound = 0;
  std::string describe() const;
};

/// First key whose row sum exceeds dv or whose column sum exceeds du.
std::optional<BoundViolation> check_bounds(const Matching& m, const PersistenceDiagram& dv,
                                           const PersistenceDiagram& du);

/// Copy number `copy` (1-based) of an interval in a barcode.
struct IndexedInterval {
  IntervalKey key;
  std::size_t copy = 1;
  friend auto operator<=>(const IndexedInterval&, const IndexedInterval&) = default;
};

/// "[a,b]#i".
std::string to_string(const IndexedInterval& x);

/// All copies of all bars, in canonical order.
std::vector<IndexedInterval> representation_set(const Barcode& b);

/// Partial bijection between two representation sets, sorted by source.
class SetMatching {
 public:
  using Pair = std::pair<IndexedInterval, IndexedInterval>;

  SetMatching() = default;
  /// Throws ValidationError if an element occurs twice on either side.
  explicit SetMatching(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::optional<IndexedInterval> image_of(const IndexedInterval& x) const;
  std::optional<IndexedInterval> preimage_of(const IndexedInterval& y) const;

  friend bool operator==(const SetMatching&, const SetMatching&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// τ ∘ σ: defined where σ is defined and τ is defined on σ's value.
SetMatching compose(const SetMatching& tau, const SetMatching& sigma);

/// Counts matched pairs per key pair.
Matching to_matching(const SetMatching& s, Index n);

/// A concrete partial bijection with the counts of m: key pairs are visited in
/// canonical order and each takes the lowest unused copies on both sides.
/// Throws ValidationError when m violates the bounds of dv, du.
SetMatching realize_matching(const Matching& m, const PersistenceDiagram& dv,
                             const PersistenceDiagram& du);

}  // namespace pmatch
