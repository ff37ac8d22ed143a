#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "pmatch/ladder.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/persistence_module.hpp"
#include "pmatch/subspace.hpp"

namespace pmatch {

/// V --α--> W <--β-- U.
class Span {
 public:
  Span() = default;
  /// Throws ValidationError unless both morphisms are valid and share their target.
  Span(LadderMorphism alpha, LadderMorphism beta);

  const LadderMorphism& alpha() const noexcept { return alpha_; }
  const LadderMorphism& beta() const noexcept { return beta_; }
  const PersistenceModule& v() const noexcept { return alpha_.source(); }
  const PersistenceModule& w() const noexcept { return alpha_.target(); }
  const PersistenceModule& u() const noexcept { return beta_.source(); }
  Index length() const noexcept { return alpha_.length(); }
  PrimeModulus modulus() const noexcept { return alpha_.modulus(); }

 private:
  LadderMorphism alpha_;
  LadderMorphism beta_;
};

/// The span with α and β exchanged.
Span swapped(const Span& s);

/// R(a,b,c,d) = α_d(f^V_{a,d}(V_a) ∩ ker f^V_{d,b+1}) ∩ S^W_{c,d} when
/// a, c <= d <= b, else the zero subspace of W_d.
Subspace r_space(const Span& s, Index a, Index b, Index c, Index d);
/// L(a',b',c,d): the same construction through β and U.
Subspace l_space(const Span& s, Index a2, Index b2, Index c, Index d);
/// Y = dim(R(a,b,c,d) ∩ L(a',b',c,d)).
std::size_t y_value(const Span& s, Index a, Index b, Index a2, Index b2, Index c, Index d);

/// Y over the whole index grid, filled once at construction.
class YTable {
 public:
  explicit YTable(const Span& s);

  Index length() const noexcept { return n_; }
  /// Zero whenever an index is outside [1, n].
  std::size_t operator()(Index a, Index b, Index a2, Index b2, Index c, Index d) const;
  /// e_{c,d}(a,b,a',b') = E_{1,2,3,4,5}(Y)(a,b,a',b',c,d), possibly negative.
  std::int64_t coefficient(Index a, Index b, Index a2, Index b2, Index c, Index d) const;

 private:
  std::size_t offset(Index a, Index b, Index a2, Index b2, Index c, Index d) const;

  Index n_ = 0;
  std::vector<std::size_t> values_;
};

/// Each interval pair ([a,b], [a',b']) carries a barcode of intervals [c,d].
class EnrichedMatching {
 public:
  EnrichedMatching() = default;
  explicit EnrichedMatching(Index n) : n_(n) {}

  Index length() const noexcept { return n_; }
  /// Empty barcode for pairs without entries.
  const Barcode& at(IntervalKey v, IntervalKey u) const;
  /// Stores a nonempty barcode (empty ones are dropped).
  void set(IntervalKey v, IntervalKey u, Barcode bars);
  const std::map<KeyPair, Barcode>& entries() const noexcept { return g_; }

  /// The Matching obtained by counting each barcode with multiplicity.
  Matching cardinalities() const;
  std::size_t total() const;

  friend bool operator==(const EnrichedMatching&, const EnrichedMatching&) = default;

 private:
  Index n_ = 0;
  std::map<KeyPair, Barcode> g_;
};

/// G(a,b,a',b') = {([c,d], e_{c,d}) : e_{c,d} > 0} with d restricted to
/// max(a,a') <= d <= min(b,b').
EnrichedMatching enriched_matching(const YTable& y);
EnrichedMatching enriched_matching(const Span& s);

/// K_i = α_i(V_i) ∩ β_i(U_i), coordinatized by the canonical basis of the
/// intersection, together with its inclusion into W.
struct KModule {
  PersistenceModule module;
  LadderMorphism inclusion;
};
KModule k_module(const Span& s);

/// Number of intervals (with multiplicity) ending at d over all entries of g.
std::size_t endpoint_count(const EnrichedMatching& g, Index d);
/// Σ_{c <= d} D^K(c,d).
std::size_t k_endpoint_count(const PersistenceModule& k, Index d);

}  // namespace pmatch
