#include <doctest.h>

#include "examples.hpp"
#include "random.hpp"

using namespace pmatch;
using namespace pmatch::testing;

namespace {

IndexedInterval ii(Index a, Index b, std::size_t copy = 1) { return {{a, b}, copy}; }

LadderMorphism interval_map(Index a, Index b, Index a2, Index b2, Index n) {
  const PersistenceModule v = interval_module(a, b, n), u = interval_module(a2, b2, n);
  std::vector<Matrix> comps;
  for (Index i = 1; i <= n; ++i) {
    Matrix m(u.dim(i), v.dim(i));
    if (m.rows() == 1 && m.cols() == 1) m.set(0, 0, 1);
    comps.push_back(m);
  }
  return LadderMorphism(v, u, comps);
}

}  // namespace

TEST_CASE("image factorization of the worked example") {
  const ImageFactorization f = image_module(example1_alpha());
  const Barcode im = barcode(f.image);
  CHECK(im == Barcode({{IntervalKey{2, 3}, 1}, {IntervalKey{2, 2}, 1}}));
  CHECK(compose(f.gamma, f.beta) == example1_alpha());
  CHECK(is_surjective(f.beta));
  CHECK(is_injective(f.gamma));

  const SetMatching lambda = match_surjective(f.beta);
  CHECK(lambda.image_of(ii(2, 3, 1)) == ii(2, 3));
  CHECK(lambda.image_of(ii(2, 3, 2)) == ii(2, 2));
  CHECK_FALSE(lambda.image_of(ii(2, 2)).has_value());

  const SetMatching iota = match_injective(f.gamma);
  CHECK(iota.image_of(ii(2, 2)) == ii(1, 2));
  CHECK(iota.image_of(ii(2, 3)) == ii(2, 3));
}

TEST_CASE("bl matching of the worked example and its modification") {
  for (const bool modified : {false, true}) {
    const BLMatching bl = bl_matching(example1_alpha(modified));
    CHECK(bl.sigma.image_of(ii(2, 3, 1)) == ii(2, 3));
    CHECK(bl.sigma.image_of(ii(2, 3, 2)) == ii(1, 2));
    CHECK_FALSE(bl.sigma.image_of(ii(2, 2)).has_value());
    CHECK(bl.sigma.size() == 2);
    Matching expected(3);
    expected.add({2, 3}, {2, 3}, 1);
    expected.add({2, 3}, {1, 2}, 1);
    CHECK(bl.matching == expected);
  }
  CHECK(bl_matching(example1_alpha(true)).matching != induced_matching(example1_alpha(true)));
  CHECK(bl_matching(example1_alpha()).matching == induced_matching(example1_alpha()));
}

TEST_CASE("interval morphism stages") {
  const Index n = 5;
  for (Index a2 = 1; a2 <= n; ++a2) {
    for (Index a = a2; a <= n; ++a) {
      for (Index b2 = a; b2 <= n; ++b2) {
        for (Index b = b2; b <= n; ++b) {
          const ImageFactorization f = image_module(interval_map(a, b, a2, b2, n));
          CHECK(barcode(f.image) == Barcode({{IntervalKey{a, b2}, 1}}));
          CHECK(match_surjective(f.beta).image_of(ii(a, b)) == ii(a, b2));
          CHECK(match_injective(f.gamma).image_of(ii(a, b2)) == ii(a2, b2));
          CHECK(bl_matching(interval_map(a, b, a2, b2, n)).sigma.image_of(ii(a, b)) == ii(a2, b2));
        }
      }
    }
  }
}

TEST_CASE("trivial morphisms") {
  const BLMatching z = bl_matching(zero_morphism(example1_v(), example1_u()));
  CHECK(z.sigma.size() == 0);
  CHECK(z.matching.total() == 0);
  CHECK(barcode(image_module(zero_morphism(example1_v(), example1_u())).image).empty());
  const LadderMorphism id = identity_morphism(example1_u());
  const auto reps = representation_set(barcode(example1_u()));
  for (const SetMatching& s : {match_injective(id), match_surjective(id), bl_matching(id).sigma}) {
    REQUIRE(s.size() == reps.size());
    for (const auto& x : reps) CHECK(s.image_of(x) == x);
  }
  CHECK_THROWS_AS(match_injective(zero_morphism(example1_v(), example1_u())), ValidationError);
  CHECK_THROWS_AS(match_surjective(zero_morphism(example1_v(), example1_u())), ValidationError);
}

TEST_CASE("random morphisms") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const LadderMorphism alpha = random_morphism(rng, uniform(rng, 1, 5), 4);
    const ImageFactorization f = image_module(alpha);
    CHECK(compose(f.gamma, f.beta) == alpha);
    CHECK_FALSE(validate(f.beta).has_value());
    CHECK_FALSE(validate(f.gamma).has_value());
    const auto image_reps = representation_set(barcode(f.image));
    CHECK(match_injective(f.gamma).size() == image_reps.size());
    CHECK(match_surjective(f.beta).size() <= image_reps.size());
    const BLMatching bl = bl_matching(alpha);
    CHECK(to_matching(bl.sigma, alpha.length()) == bl.matching);
    CHECK_FALSE(check_bounds(bl.matching, diagram(alpha.source()), diagram(alpha.target())).has_value());
  }
}

TEST_CASE("bl matching depends only on the image submodule") {
  Rng rng(42);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const LadderMorphism alpha = random_morphism(rng, uniform(rng, 1, 4), 3);
    // Precompose with an automorphism of the source: same image, different α.
    const PersistenceModule& v = alpha.source();
    const LadderMorphism other = random_morphism(rng, v, v);
    const LadderMorphism shifted = compose(alpha, other);
    bool same_image = true;
    for (Index i = 1; i <= alpha.length(); ++i) {
      same_image = same_image && image(alpha.component(i)) == image(shifted.component(i));
    }
    if (!same_image) continue;
    ++compared;
    CHECK(bl_matching(alpha).matching == bl_matching(shifted).matching);
  }
  CHECK(compared > 20);
}
