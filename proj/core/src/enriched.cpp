#include "pmatch/enriched.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pmatch/elder.hpp"
#include "pmatch/error.hpp"

namespace pmatch {

Span::Span(LadderMorphism alpha, LadderMorphism beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (auto bad = validate(alpha_)) throw ValidationError("invalid alpha: " + bad->describe());
  if (auto bad = validate(beta_)) throw ValidationError("invalid beta: " + bad->describe());
  if (!(alpha_.target() == beta_.target())) {
    throw ValidationError("alpha and beta do not have the same target module");
  }
}

Span swapped(const Span& s) { return Span(s.beta(), s.alpha()); }

namespace {

Subspace pushed_space(const LadderMorphism& m, const PersistSubspaces* sw, Index a, Index b,
                      Index c, Index d) {
  const PersistenceModule& src = m.source();
  const PersistenceModule& w = m.target();
  const Index n = m.length();
  if (a < 1 || c < 1 || a > d || c > d || d > b || b > n) {
    return Subspace::zero(w.dim(d), m.modulus());
  }
  const Subspace born = image(composite(src, a, d));
  const Subspace dies = kernel(composite(src, d, b + 1));
  const Subspace pushed = apply(m.component(d), intersect(born, dies));
  return intersect(pushed, sw ? (*sw)(c, d) : persist_subspace(w, c, d));
}

}  // namespace

Subspace r_space(const Span& s, Index a, Index b, Index c, Index d) {
  return pushed_space(s.alpha(), nullptr, a, b, c, d);
}

Subspace l_space(const Span& s, Index a2, Index b2, Index c, Index d) {
  return pushed_space(s.beta(), nullptr, a2, b2, c, d);
}

std::size_t y_value(const Span& s, Index a, Index b, Index a2, Index b2, Index c, Index d) {
  return intersect(r_space(s, a, b, c, d), l_space(s, a2, b2, c, d)).dim();
}

std::size_t YTable::offset(Index a, Index b, Index a2, Index b2, Index c, Index d) const {
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  std::size_t o = 0;
  for (Index i : {a, b, a2, b2, c, d}) o = o * side + static_cast<std::size_t>(i);
  return o;
}

YTable::YTable(const Span& s) : n_(s.length()) {
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  std::size_t cells = 1;
  for (int i = 0; i < 6; ++i) cells *= side;
  values_.assign(cells, 0);

  const PersistSubspaces sw(s.w());
  // R and L are zero unless a, c <= d <= b; only that region is tabulated.
  for (Index d = 1; d <= n_; ++d) {
    for (Index c = 1; c <= d; ++c) {
      std::vector<std::pair<std::pair<Index, Index>, Subspace>> rs, ls;
      for (Index a = 1; a <= d; ++a) {
        for (Index b = d; b <= n_; ++b) {
          Subspace r = pushed_space(s.alpha(), &sw, a, b, c, d);
          if (!r.is_zero()) rs.emplace_back(std::pair{a, b}, std::move(r));
          Subspace l = pushed_space(s.beta(), &sw, a, b, c, d);
          if (!l.is_zero()) ls.emplace_back(std::pair{a, b}, std::move(l));
        }
      }
      for (const auto& [ab, r] : rs) {
        for (const auto& [ab2, l] : ls) {
          values_[offset(ab.first, ab.second, ab2.first, ab2.second, c, d)] = intersect(r, l).dim();
        }
      }
    }
  }
}

std::size_t YTable::operator()(Index a, Index b, Index a2, Index b2, Index c, Index d) const {
  for (Index i : {a, b, a2, b2, c, d}) {
    if (i < 1 || i > n_) return 0;
  }
  return values_[offset(a, b, a2, b2, c, d)];
}

std::int64_t YTable::coefficient(Index a, Index b, Index a2, Index b2, Index c, Index d) const {
  static constexpr std::array<std::size_t, 5> axes{0, 1, 2, 3, 4};
  const auto y = [this](const IndexTuple<6>& t) { return (*this)(t[0], t[1], t[2], t[3], t[4], t[5]); };
  return elder_at<6>(y, IndexTuple<6>{a, b, a2, b2, c, d}, axes);
}

const Barcode& EnrichedMatching::at(IntervalKey v, IntervalKey u) const {
  static const Barcode empty;
  const auto it = g_.find(KeyPair{v, u});
  return it == g_.end() ? empty : it->second;
}

void EnrichedMatching::set(IntervalKey v, IntervalKey u, Barcode bars) {
  if (bars.empty()) {
    g_.erase(KeyPair{v, u});
  } else {
    g_[KeyPair{v, u}] = std::move(bars);
  }
}

Matching EnrichedMatching::cardinalities() const {
  Matching m(n_);
  for (const auto& [k, bars] : g_) m.add(k.first, k.second, bars.cardinality());
  return m;
}

std::size_t EnrichedMatching::total() const {
  std::size_t t = 0;
  for (const auto& [k, bars] : g_) t += bars.cardinality();
  return t;
}

EnrichedMatching enriched_matching(const YTable& y) {
  const Index n = y.length();
  EnrichedMatching g(n);
  for (Index a = 1; a <= n; ++a) {
    for (Index b = a; b <= n; ++b) {
      for (Index a2 = 1; a2 <= n; ++a2) {
        for (Index b2 = a2; b2 <= n; ++b2) {
          std::vector<Bar> bars;
          for (Index d = std::max(a, a2); d <= std::min(b, b2); ++d) {
            for (Index c = 1; c <= d; ++c) {
              const std::int64_t e = y.coefficient(a, b, a2, b2, c, d);
              if (e > 0) bars.push_back(Bar{IntervalKey{c, d}, static_cast<std::size_t>(e)});
            }
          }
          g.set(IntervalKey{a, b}, IntervalKey{a2, b2}, Barcode(std::move(bars)));
        }
      }
    }
  }
  return g;
}

EnrichedMatching enriched_matching(const Span& s) { return enriched_matching(YTable(s)); }

KModule k_module(const Span& s) {
  const Index n = s.length();
  const PrimeModulus p = s.modulus();
  const PersistenceModule& w = s.w();
  std::vector<Subspace> ks;
  for (Index i = 1; i <= n; ++i) {
    ks.push_back(intersect(image(s.alpha().component(i)), image(s.beta().component(i))));
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps, incl;
  for (Index i = 1; i <= n; ++i) {
    const Subspace& k = ks[i - 1];
    dims.push_back(k.dim());
    incl.push_back(k.basis().transpose());
    if (i == n) continue;
    const Matrix pushed = w.map(i) * k.basis().transpose();
    Matrix f(ks[i].dim(), k.dim(), p);
    for (std::size_t col = 0; col < pushed.cols(); ++col) {
      const auto coords = ks[i].coordinates(pushed.column(col));
      for (std::size_t r = 0; r < coords.size(); ++r) f.set(r, col, coords[r]);
    }
    maps.push_back(std::move(f));
  }
  PersistenceModule k(std::move(dims), std::move(maps), p);
  LadderMorphism inclusion(k, w, std::move(incl));
  return KModule{std::move(k), std::move(inclusion)};
}

std::size_t endpoint_count(const EnrichedMatching& g, Index d) {
  std::size_t t = 0;
  for (const auto& [k, bars] : g.entries()) {
    for (const Bar& bar : bars.bars()) {
      if (bar.key.b == d) t += bar.multiplicity;
    }
  }
  return t;
}

std::size_t k_endpoint_count(const PersistenceModule& k, Index d) {
  const PersistenceDiagram dk = diagram(k);
  std::size_t t = 0;
  for (Index c = 1; c <= d; ++c) t += dk(c, d);
  return t;
}

}  // namespace pmatch
