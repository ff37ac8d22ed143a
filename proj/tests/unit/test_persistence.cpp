#include <doctest.h>

#include "examples.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace pmatch;
using namespace pmatch::testing;

namespace {

PersistenceModule conjugate(Rng& rng, const PersistenceModule& v) {
  std::vector<Matrix> g, ginv;
  for (Index i = 1; i <= v.length(); ++i) {
    const Matrix m = random_invertible(rng, v.dim(i), v.modulus());
    g.push_back(m);
    // inverse by solving [m | I] to [I | m^-1]
    const auto e = rref(hstack(m, Matrix::identity(v.dim(i), v.modulus())));
    Matrix inv(v.dim(i), v.dim(i), v.modulus());
    for (std::size_t r = 0; r < v.dim(i); ++r) {
      for (std::size_t c = 0; c < v.dim(i); ++c) inv.set(r, c, e.reduced(r, v.dim(i) + c));
    }
    ginv.push_back(inv);
  }
  std::vector<Matrix> maps;
  for (Index i = 1; i < v.length(); ++i) maps.push_back(g[i] * v.maps()[i - 1] * ginv[i - 1]);
  return PersistenceModule(v.dims(), maps, v.modulus());
}

}  // namespace

TEST_CASE("example decompositions") {
  const PersistenceDiagram dv = diagram(example1_v());
  CHECK(dv(2, 2) == 1);
  CHECK(dv(2, 3) == 2);
  CHECK(dv.total() == 3);
  const PersistenceDiagram du = diagram(example1_u());
  CHECK(du(1, 2) == 2);
  CHECK(du(2, 3) == 1);
  CHECK(du.total() == 3);
}

TEST_CASE("interval modules and direct sums") {
  const PersistenceModule i = interval_module(2, 4, 5);
  CHECK(i.dims() == std::vector<std::size_t>{0, 1, 1, 1, 0});
  CHECK(barcode(i) == Barcode({{IntervalKey{2, 4}, 1}}));
  const PersistenceModule s = direct_sum(i, direct_sum(interval_module(1, 5, 5), i));
  const Barcode b = barcode(s);
  CHECK(b.multiplicity({2, 4}) == 2);
  CHECK(b.multiplicity({1, 5}) == 1);
  CHECK(b.cardinality() == 3);
  CHECK(barcode(PersistenceModule::zero(4)).empty());
  CHECK_THROWS_AS(interval_module(3, 2, 4), std::out_of_range);
}

TEST_CASE("constructor rejects bad shapes") {
  CHECK_THROWS_AS(PersistenceModule({1, 2}, {}), DimensionMismatch);
  CHECK_THROWS_AS(PersistenceModule({1, 2}, {Matrix(1, 2)}), DimensionMismatch);
  CHECK_THROWS_AS(PersistenceModule({1, 1}, {Matrix(1, 1, PrimeModulus(3))}), DimensionMismatch);
  CHECK_THROWS_AS(Barcode({{IntervalKey{1, 1}, 0}}), ValidationError);
  CHECK_THROWS_AS(Barcode({{IntervalKey{1, 1}, 1}, {IntervalKey{1, 1}, 2}}), ValidationError);
}

TEST_CASE("barcode order is a ascending then b descending") {
  const Barcode b({{IntervalKey{2, 2}, 1}, {IntervalKey{1, 2}, 1}, {IntervalKey{2, 3}, 2}});
  REQUIRE(b.bars().size() == 3);
  CHECK(b.bars()[0].key == IntervalKey{1, 2});
  CHECK(b.bars()[1].key == IntervalKey{2, 3});
  CHECK(b.bars()[2].key == IntervalKey{2, 2});
}

TEST_CASE("decomposition consistency and oracles on random modules") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Index n = uniform(rng, 1, 4);
    const PersistenceModule v = random_module(rng, n, 3);
    const PersistenceDiagram d = diagram(v);
    for (Index i = 1; i <= n; ++i) {
      std::size_t covered = 0;
      for (const auto& [k, m] : d.entries()) {
        if (k.a <= i && i <= k.b) covered += m;
      }
      CHECK(covered == v.dim(i));
    }
    CHECK(d == rank_inversion_diagram(v));
    const auto found = brute_force_diagrams(v);
    REQUIRE(found.size() == 1);
    CHECK(d == found.front());
    CHECK(d == diagram(PersistSubspaces(v)));
  }
}

TEST_CASE("diagram over other primes matches rank inversion") {
  Rng rng(22);
  for (const std::int64_t pv : {3, 5}) {
    for (int t = 0; t < 100; ++t) {
      const PersistenceModule v = random_module(rng, uniform(rng, 1, 5), 3, PrimeModulus(pv));
      CHECK(diagram(v) == rank_inversion_diagram(v));
    }
  }
}

TEST_CASE("kernel partition") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const Index n = uniform(rng, 1, 5);
    const PersistenceModule v = random_module(rng, n, 4);
    const Index b = uniform(rng, 1, n);
    const Subspace a = random_subspace(rng, v.dim(b));
    std::size_t total = 0;
    for (Index i = b; i <= n; ++i) {
      total += intersect(apply(composite(v, b, i), a), kernel(v.map(i))).dim();
    }
    CHECK(total == a.dim());
  }
}

TEST_CASE("isomorphism invariance") {
  Rng rng(24);
  for (int t = 0; t < 150; ++t) {
    const PrimeModulus p(t % 2 ? 3 : 2);
    const PersistenceModule v = random_module(rng, uniform(rng, 1, 5), 4, p);
    CHECK(diagram(conjugate(rng, v)) == diagram(v));
  }
}

TEST_CASE("set matchings") {
  const IndexedInterval x{{2, 3}, 1}, y{{2, 3}, 2}, z{{1, 2}, 1};
  CHECK_THROWS_AS(SetMatching({{x, z}, {y, z}}), ValidationError);
  const SetMatching s({{y, z}, {x, x}});
  CHECK(s.pairs().front().first == x);
  CHECK(s.image_of(y) == z);
  CHECK(s.preimage_of(z) == y);
  CHECK_FALSE(s.image_of(IndexedInterval{{2, 2}, 1}).has_value());
  const SetMatching t({{z, x}});
  const SetMatching ts = compose(t, s);
  REQUIRE(ts.size() == 1);
  CHECK(ts.pairs().front() == SetMatching::Pair{y, x});
  CHECK(to_string(y) == "[2,3]#2");
}

TEST_CASE("realize matching") {
  PersistenceDiagram dv(3), du(3);
  dv.add({2, 3}, 2);
  dv.add({2, 2}, 1);
  du.add({1, 2}, 2);
  du.add({2, 3}, 1);
  Matching m(3);
  m.add({2, 3}, {2, 3}, 1);
  m.add({2, 3}, {1, 2}, 1);
  const SetMatching s = realize_matching(m, dv, du);
  CHECK(to_matching(s, 3) == m);
  CHECK(s.image_of({{2, 3}, 1}) == IndexedInterval{{1, 2}, 1});
  CHECK(s.image_of({{2, 3}, 2}) == IndexedInterval{{2, 3}, 1});
  CHECK_FALSE(s.image_of({{2, 2}, 1}).has_value());
  CHECK(realize_matching(Matching(3), dv, du).size() == 0);

  Matching over(3);
  over.add({2, 2}, {1, 2}, 2);
  CHECK(check_bounds(over, dv, du).has_value());
  CHECK_THROWS_AS(realize_matching(over, dv, du), ValidationError);

  Matching forced(3);
  forced.add({2, 3}, {2, 3}, 1);
  PersistenceDiagram one(3);
  one.add({2, 3}, 1);
  const SetMatching f = realize_matching(forced, one, one);
  REQUIRE(f.size() == 1);
  CHECK(f.pairs().front() == SetMatching::Pair{{{2, 3}, 1}, {{2, 3}, 1}});
}
