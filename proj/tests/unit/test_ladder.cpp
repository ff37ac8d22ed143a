#include <doctest.h>

#include <array>

#include "examples.hpp"
#include "random.hpp"

using namespace pmatch;
using namespace pmatch::testing;

namespace {

/// I[a,b] -> I[a2,b2] by identities where both are nonzero.
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

std::int64_t raw_matching(const ChiTable& x, Index a, Index b, Index a2, Index b2) {
  static constexpr std::array<std::size_t, 2> axes{0, 2};
  return elder_at<4>([&](const IndexTuple<4>& t) { return x(t[0], t[1], t[2], t[3]); },
                     IndexTuple<4>{a, b, a2, b2}, axes);
}

}  // namespace

TEST_CASE("validation") {
  CHECK_FALSE(validate(example1_alpha()).has_value());
  CHECK_FALSE(validate(example1_alpha(true)).has_value());
  CHECK_FALSE(validate(identity_morphism(example1_u())).has_value());

  LadderMorphism flipped = example1_alpha();
  std::vector<Matrix> comps = flipped.components();
  comps[1].set(1, 1, 1);
  const auto bad = validate(LadderMorphism(example1_v(), example1_u(), comps));
  REQUIRE(bad.has_value());
  CHECK(bad->kind == MorphismViolation::Kind::Commutativity);
  CHECK(bad->index == 2);
  CHECK(bad->difference == Matrix::of({{0, 1, 0}}));
  CHECK_THROWS_AS(require_valid(LadderMorphism(example1_v(), example1_u(), comps)), ValidationError);

  comps = example1_alpha().components();
  comps[2] = Matrix(1, 3);
  const auto shape = validate(LadderMorphism(example1_v(), example1_u(), comps));
  REQUIRE(shape.has_value());
  CHECK(shape->kind == MorphismViolation::Kind::Shape);
  CHECK(shape->index == 3);

  comps.pop_back();
  CHECK(validate(LadderMorphism(example1_v(), example1_u(), comps))->kind == MorphismViolation::Kind::Length);
}

TEST_CASE("direct sum shapes") {
  const LadderMorphism s = direct_sum(interval_map(2, 3, 2, 3, 3), interval_map(2, 3, 1, 2, 3));
  CHECK_FALSE(validate(s).has_value());
  CHECK(s.source().dims() == std::vector<std::size_t>{0, 2, 2});
  CHECK(s.target().dims() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("ladder notation") {
  const LadderMorphism a = ladder_from_notation("1 2 1 / 0 1 1");
  CHECK(a.target().dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(a.source().dims() == std::vector<std::size_t>{0, 1, 1});
  const LadderMorphism b = ladder_from_notation("1 1 0 / 1 2 1");
  CHECK(b.source().dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(barcode(ladder_from_notation("1 1 1 / 0 1 1").target()) == Barcode({{IntervalKey{1, 3}, 1}}));
  CHECK_THROWS_AS(ladder_from_notation("1 1 / 1"), ParseError);
  CHECK_THROWS_AS(ladder_from_notation("1 x 1 / 0 1 1"), ParseError);
  CHECK_THROWS_AS(ladder_from_notation("0 1 / 1 1"), ValidationError);
}

TEST_CASE("chi examples") {
  CHECK(chi(example1_alpha(), 2, 3, 2, 3) == 1);
  for (Index z = 0; z <= 3; ++z) {
    CHECK(chi(example1_alpha(), 0, z, 2, 3) == 0);
    CHECK(chi(example1_alpha(), 2, 3, 0, z) == 0);
  }
  for (Index a = 1; a <= 4; ++a) {
    for (Index b = a; b <= 4; ++b) CHECK(chi(interval_map(a, b, a, b, 4), a, b, a, b) == 1);
  }
  const ChiTable table(example1_alpha());
  for (Index a = 0; a <= 4; ++a) {
    for (Index b = 0; b <= 4; ++b) {
      for (Index a2 = 0; a2 <= 4; ++a2) {
        for (Index b2 = 0; b2 <= 4; ++b2) CHECK(table(a, b, a2, b2) == chi(example1_alpha(), a, b, a2, b2));
      }
    }
  }
}

TEST_CASE("elder operator") {
  Rng rng(31);
  const std::array<std::size_t, 1> first{0};
  for (int t = 0; t < 50; ++t) {
    const PersistenceModule v = random_module(rng, uniform(rng, 1, 5), 3);
    const PersistSubspaces s(v);
    const PersistenceDiagram d = diagram(v);
    const auto f = [&](const IndexTuple<2>& x) { return s(x[0], x[1]).dim(); };
    for (Index a = 1; a <= v.length(); ++a) {
      for (Index b = a; b <= v.length(); ++b) {
        CHECK(elder_at<2>(f, {a, b}, first) == static_cast<std::int64_t>(d(a, b)));
        std::int64_t telescoped = 0;
        for (Index x = 1; x <= b; ++x) telescoped += elder_at<2>(f, {x, b}, first);
        CHECK(telescoped == static_cast<std::int64_t>(f({b, b})) - static_cast<std::int64_t>(f({0, b})));
      }
    }
  }
  const auto constant = [](const IndexTuple<3>&) { return 7; };
  const std::array<std::size_t, 2> two{1, 2};
  CHECK(elder_at<3>(constant, {2, 2, 2}, two) == 0);
  const auto g = [](const IndexTuple<2>& x) { return x[0] * x[0] * 3 + x[1] * x[0]; };
  const std::array<std::size_t, 2> ab{0, 1}, ba{1, 0};
  CHECK(elder_at<2>(g, {4, 3}, ab) == elder_at<2>(g, {4, 3}, ba));
  CHECK(elder<2>(g, {0, 1})({4, 3}) == 1);
}

TEST_CASE("induced matching examples") {
  Matching expected(3);
  expected.add({2, 3}, {2, 3}, 1);
  expected.add({2, 3}, {1, 2}, 1);
  CHECK(induced_matching(example1_alpha()) == expected);

  Matching modified(3);
  modified.add({2, 3}, {2, 3}, 1);
  modified.add({2, 2}, {1, 2}, 1);
  CHECK(induced_matching(example1_alpha(true)) == modified);

  CHECK(induced_matching(zero_morphism(example1_v(), example1_u())).total() == 0);
  CHECK_THROWS_AS(induced_matching(LadderMorphism(example1_v(), example1_u(), {Matrix(2, 0), Matrix(3, 3), Matrix(1, 1)})),
                  ValidationError);
}

TEST_CASE("interval morphisms in the valid orientation") {
  const Index n = 5;
  for (Index a2 = 1; a2 <= n; ++a2) {
    for (Index a = a2; a <= n; ++a) {
      for (Index b2 = a; b2 <= n; ++b2) {
        for (Index b = b2; b <= n; ++b) {
          const LadderMorphism m = interval_map(a, b, a2, b2, n);
          REQUIRE_FALSE(validate(m).has_value());
          Matching expected(n);
          expected.add({a, b}, {a2, b2}, 1);
          CHECK(induced_matching(m) == expected);
        }
      }
    }
  }
  // the opposite orientation only commutes when the intervals coincide
  CHECK(validate(interval_map(1, 3, 2, 4, 5)).has_value());
}

TEST_CASE("non-characterization ladders") {
  const LadderMorphism a = ladder_from_notation("1 2 1 / 0 1 1");
  const LadderMorphism b = direct_sum(ladder_from_notation("1 1 0 / 0 0 0"), ladder_from_notation("0 1 1 / 0 1 1"));
  CHECK(induced_matching(a) == induced_matching(b));
  CHECK(a.source().dims() == b.source().dims());
  CHECK(a.target().dims() == b.target().dims());

  // g on U_2 with identities elsewhere is an isomorphism of ladders a -> b
  const Matrix g = Matrix::of({{1, 1}, {0, 1}});  // [[1,-1],[0,1]] over F_2
  CHECK(rank(g) == 2);
  CHECK(g * a.target().maps()[0] == b.target().maps()[0]);
  CHECK(b.target().maps()[1] * g == a.target().maps()[1]);
  CHECK(g * a.component(2) == b.component(2));
  CHECK(a.component(3) == b.component(3));
  CHECK(a.source() == b.source());
  for (const std::int64_t pv : {3, 5}) {
    const PrimeModulus p(pv);
    const LadderMorphism ap = ladder_from_notation("1 2 1 / 0 1 1", p);
    const LadderMorphism bp = direct_sum(ladder_from_notation("1 1 0 / 0 0 0", p), ladder_from_notation("0 1 1 / 0 1 1", p));
    const Matrix gp = Matrix::of({{1, -1}, {0, 1}}, p);
    CHECK(gp * ap.target().maps()[0] == bp.target().maps()[0]);
    CHECK(bp.target().maps()[1] * gp == ap.target().maps()[1]);
    CHECK(gp * ap.component(2) == bp.component(2));
  }
}

TEST_CASE("random morphisms: bounds, support, chi identities") {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    const LadderMorphism alpha = random_morphism(rng, uniform(rng, 1, 5), 4);
    REQUIRE_FALSE(validate(alpha).has_value());
    const Index n = alpha.length();
    const ChiTable x(alpha);
    const Matching m = induced_matching(x);
    CHECK_FALSE(check_bounds(m, diagram(alpha.source()), diagram(alpha.target())).has_value());
    for (const auto& [keys, count] : m.entries()) {
      const auto [v, u] = keys;
      CHECK(u.a <= v.a);
      CHECK(v.a <= u.b);
      CHECK(u.b <= v.b);
    }
    for (Index a = 1; a <= n; ++a) {
      for (Index b = a; b <= n; ++b) {
        for (Index a2 = 1; a2 <= n; ++a2) {
          for (Index b2 = a2; b2 <= n; ++b2) {
            if (a <= a2) {
              for (Index c = a; c <= a2; ++c) CHECK(x(a, b, a2, b2) == x(a, b, c, b2));
            }
            if (b2 <= a) {
              for (Index c = b2; c <= a; ++c) CHECK(x(a, b, a2, b2) == x(c, b, a2, b2));
            }
          }
        }
      }
    }
    for (Index a = 1; a <= n; ++a) {
      for (Index b = a; b <= n; ++b) {
        for (Index b2 = 1; b2 <= n; ++b2) {
          std::int64_t rows = 0;
          for (Index a2 = 1; a2 <= b2; ++a2) rows += raw_matching(x, a, b, a2, b2);
          CHECK(rows == static_cast<std::int64_t>(x(a, b, b2, b2)) - static_cast<std::int64_t>(x(a - 1, b, b2, b2)));
        }
      }
    }
    for (Index b = 1; b <= n; ++b) {
      for (Index a2 = 1; a2 <= n; ++a2) {
        for (Index b2 = a2; b2 <= n; ++b2) {
          std::int64_t cols = 0;
          for (Index a = 1; a <= b; ++a) cols += raw_matching(x, a, b, a2, b2);
          CHECK(cols == static_cast<std::int64_t>(x(b, b, a2, b2)) - static_cast<std::int64_t>(x(b, b, a2 - 1, b2)));
        }
      }
    }
    for (Index a = 1; a <= n; ++a) {
      for (Index b = a; b <= n; ++b) {
        const Subspace s = random_subspace(rng, alpha.target().dim(a));
        const Subspace lhs = apply(composite(alpha.source(), a, b), preimage(alpha.component(a), s));
        const Subspace rhs = preimage(alpha.component(b), apply(composite(alpha.target(), a, b), s));
        CHECK(contains(rhs, lhs));
      }
    }
  }
}

TEST_CASE("linearity and composition helpers") {
  Rng rng(33);
  for (int t = 0; t < 80; ++t) {
    const Index n = uniform(rng, 1, 4);
    const LadderMorphism l1 = random_morphism(rng, n, 3), l2 = random_morphism(rng, n, 3);
    CHECK(induced_matching(direct_sum(l1, l2)) == induced_matching(l1) + induced_matching(l2));
    const LadderMorphism z = zero_morphism(PersistenceModule::zero(n), PersistenceModule::zero(n));
    CHECK(induced_matching(direct_sum(l1, z)) == induced_matching(l1));
    const LadderMorphism id = identity_morphism(l1.target());
    CHECK(compose(id, l1) == l1);
    CHECK(is_injective(id));
    CHECK(is_surjective(id));
    const LadderMorphism next = random_morphism(rng, l1.target(), random_module(rng, n, 3));
    CHECK_FALSE(validate(compose(next, l1)).has_value());
  }
}
