#include "pmatch/bl_matching.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "pmatch/error.hpp"

namespace pmatch {

namespace {

/// Columns of `m` written in the coordinates of `target` (which must contain them).
Matrix coordinates_of_columns(const Matrix& m, const Subspace& target) {
  Matrix out(target.dim(), m.cols(), m.modulus());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto coords = target.coordinates(m.column(c));
    for (std::size_t r = 0; r < coords.size(); ++r) out.set(r, c, coords[r]);
  }
  return out;
}

/// Splits both representation sets into slices by `group`, orders each slice
/// by `less` and pairs the i-th elements of corresponding slices.
template <class GroupKey, class Less>
SetMatching match_slices(const Barcode& from, const Barcode& to, GroupKey group, Less less) {
  std::map<Index, std::vector<IndexedInterval>> src, dst;
  for (const IndexedInterval& x : representation_set(from)) src[group(x.key)].push_back(x);
  for (const IndexedInterval& y : representation_set(to)) dst[group(y.key)].push_back(y);
  std::vector<SetMatching::Pair> pairs;
  for (auto& [g, xs] : src) {
    auto& ys = dst[g];
    std::stable_sort(xs.begin(), xs.end(), less);
    std::stable_sort(ys.begin(), ys.end(), less);
    const std::size_t count = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(xs[i], ys[i]);
  }
  return SetMatching(std::move(pairs));
}

}  // namespace

ImageFactorization image_module(const LadderMorphism& alpha) {
  require_valid(alpha);
  const Index n = alpha.length();
  const PrimeModulus p = alpha.modulus();
  const PersistenceModule& u = alpha.target();

  std::vector<Subspace> images;
  for (Index i = 1; i <= n; ++i) images.push_back(image(alpha.component(i)));

  std::vector<std::size_t> dims;
  std::vector<Matrix> maps, beta, gamma;
  for (Index i = 1; i <= n; ++i) {
    const Subspace& im = images[i - 1];
    dims.push_back(im.dim());
    beta.push_back(coordinates_of_columns(alpha.component(i), im));
    gamma.push_back(im.basis().transpose());
    if (i < n) maps.push_back(coordinates_of_columns(u.map(i) * im.basis().transpose(), images[i]));
  }
  PersistenceModule image_mod(std::move(dims), std::move(maps), p);
  ImageFactorization out{image_mod, LadderMorphism(alpha.source(), image_mod, std::move(beta)),
                         LadderMorphism(image_mod, u, std::move(gamma))};
  return out;
}

SetMatching match_injective(const LadderMorphism& gamma) {
  require_valid(gamma);
  if (!is_injective(gamma)) throw ValidationError("match_injective: morphism is not injective");
  return match_slices(
      barcode(gamma.source()), barcode(gamma.target()), [](IntervalKey k) { return k.b; },
      [](const IndexedInterval& x, const IndexedInterval& y) {
        return x.key.a != y.key.a ? x.key.a < y.key.a : x.copy < y.copy;
      });
}

SetMatching match_surjective(const LadderMorphism& beta) {
  require_valid(beta);
  if (!is_surjective(beta)) throw ValidationError("match_surjective: morphism is not surjective");
  return match_slices(
      barcode(beta.source()), barcode(beta.target()), [](IntervalKey k) { return k.a; },
      [](const IndexedInterval& x, const IndexedInterval& y) {
        return x.key.b != y.key.b ? x.key.b > y.key.b : x.copy < y.copy;
      });
}

BLMatching bl_matching(const LadderMorphism& alpha) {
  const ImageFactorization f = image_module(alpha);
  SetMatching sigma = compose(match_injective(f.gamma), match_surjective(f.beta));
  Matching counts = to_matching(sigma, alpha.length());
  return BLMatching{std::move(sigma), std::move(counts)};
}

}  // namespace pmatch
