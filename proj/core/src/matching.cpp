#include "pmatch/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pmatch/error.hpp"

namespace pmatch {

std::size_t Matching::operator()(IntervalKey v, IntervalKey u) const {
  const auto it = m_.find(KeyPair{v, u});
  return it == m_.end() ? 0 : it->second;
}

void Matching::add(IntervalKey v, IntervalKey u, std::size_t count) {
  for (IntervalKey k : {v, u}) {
    if (k.a < 1 || k.a > k.b || k.b > n_) {
      throw std::out_of_range("interval " + to_string(k) + " outside length " +
                              std::to_string(n_));
    }
  }
  if (count > 0) m_[KeyPair{v, u}] += count;
}

std::size_t Matching::row_sum(IntervalKey v) const {
  std::size_t s = 0;
  for (const auto& [k, m] : m_) {
    if (k.first == v) s += m;
  }
  return s;
}

std::size_t Matching::column_sum(IntervalKey u) const {
  std::size_t s = 0;
  for (const auto& [k, m] : m_) {
    if (k.second == u) s += m;
  }
  return s;
}

std::size_t Matching::total() const {
  std::size_t s = 0;
  for (const auto& [k, m] : m_) s += m;
  return s;
}

Matching operator+(const Matching& x, const Matching& y) {
  if (x.n_ != y.n_) throw DimensionMismatch("adding matchings of different lengths");
  Matching out = x;
  for (const auto& [k, m] : y.m_) out.add(k.first, k.second, m);
  return out;
}

std::string BoundViolation::describe() const {
  return std::string(row ? "row" : "column") + " sum at " + to_string(key) + " is " +
         std::to_string(sum) + ", exceeding " + std::to_string(bound);
}

std::optional<BoundViolation> check_bounds(const Matching& m, const PersistenceDiagram& dv,
                                           const PersistenceDiagram& du) {
  std::map<IntervalKey, std::size_t> rows, cols;
  for (const auto& [k, c] : m.entries()) {
    rows[k.first] += c;
    cols[k.second] += c;
  }
  for (const auto& [k, s] : rows) {
    if (s > dv(k)) return BoundViolation{true, k, s, dv(k)};
  }
  for (const auto& [k, s] : cols) {
    if (s > du(k)) return BoundViolation{false, k, s, du(k)};
  }
  return std::nullopt;
}

std::string to_string(const IndexedInterval& x) {
  return to_string(x.key) + "#" + std::to_string(x.copy);
}

std::vector<IndexedInterval> representation_set(const Barcode& b) {
  std::vector<IndexedInterval> out;
  for (const Bar& bar : b.bars()) {
    for (std::size_t i = 1; i <= bar.multiplicity; ++i) out.push_back({bar.key, i});
  }
  return out;
}

SetMatching::SetMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<IndexedInterval> targets;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0 && pairs_[i].first == pairs_[i - 1].first) {
      throw ValidationError("matching uses " + to_string(pairs_[i].first) + " twice");
    }
    if (!targets.insert(pairs_[i].second).second) {
      throw ValidationError("matching uses " + to_string(pairs_[i].second) + " twice");
    }
  }
}

std::optional<IndexedInterval> SetMatching::image_of(const IndexedInterval& x) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                                   [](const Pair& p, const IndexedInterval& v) { return p.first < v; });
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::optional<IndexedInterval> SetMatching::preimage_of(const IndexedInterval& y) const {
  for (const Pair& p : pairs_) {
    if (p.second == y) return p.first;
  }
  return std::nullopt;
}

SetMatching compose(const SetMatching& tau, const SetMatching& sigma) {
  std::vector<SetMatching::Pair> out;
  for (const auto& [x, y] : sigma.pairs()) {
    if (auto z = tau.image_of(y)) out.emplace_back(x, *z);
  }
  return SetMatching(std::move(out));
}

Matching to_matching(const SetMatching& s, Index n) {
  Matching m(n);
  for (const auto& [x, y] : s.pairs()) m.add(x.key, y.key, 1);
  return m;
}

SetMatching realize_matching(const Matching& m, const PersistenceDiagram& dv,
                             const PersistenceDiagram& du) {
  if (auto bad = check_bounds(m, dv, du)) {
    throw ValidationError("cannot realize matching: " + bad->describe());
  }
  std::map<IntervalKey, std::size_t> used_v, used_u;
  std::vector<SetMatching::Pair> pairs;
  for (const auto& [k, count] : m.entries()) {
    for (std::size_t i = 0; i < count; ++i) {
      pairs.emplace_back(IndexedInterval{k.first, ++used_v[k.first]},
                         IndexedInterval{k.second, ++used_u[k.second]});
    }
  }
  return SetMatching(std::move(pairs));
}

}  // namespace pmatch
