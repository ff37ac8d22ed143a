#include "pmatch/ladder.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "pmatch/elder.hpp"
#include "pmatch/error.hpp"

namespace pmatch {

Matrix LadderMorphism::component(Index i) const {
  if (i < 0 || i > length() + 1) {
    throw std::out_of_range("component index " + std::to_string(i) + " outside [0, n+1]");
  }
  if (i == 0 || i == length() + 1) return Matrix(0, 0, modulus());
  return components_[i - 1];
}

std::string MorphismViolation::describe() const {
  switch (kind) {
    case Kind::Length:
      return "source, target and component count disagree on the length";
    case Kind::Field:
      return "source, target and components are not over the same field";
    case Kind::Shape:
      return "alpha_" + std::to_string(index) + " has the wrong shape";
    case Kind::Commutativity:
      return "square " + std::to_string(index) + " does not commute: alpha_" +
             std::to_string(index + 1) + " f^V_" + std::to_string(index) + " - f^U_" +
             std::to_string(index) + " alpha_" + std::to_string(index) + " = " +
             difference.to_string();
  }
  return "unknown violation";
}

std::optional<MorphismViolation> validate(const LadderMorphism& alpha) {
  using Kind = MorphismViolation::Kind;
  const PersistenceModule& v = alpha.source();
  const PersistenceModule& u = alpha.target();
  const Index n = v.length();
  if (u.length() != n || alpha.components().size() != static_cast<std::size_t>(n)) {
    return MorphismViolation{Kind::Length, 0, {}};
  }
  if (u.modulus() != v.modulus()) return MorphismViolation{Kind::Field, 0, {}};
  for (Index i = 1; i <= n; ++i) {
    const Matrix& a = alpha.components()[i - 1];
    if (a.modulus() != v.modulus()) return MorphismViolation{Kind::Field, i, {}};
    if (a.rows() != u.dim(i) || a.cols() != v.dim(i)) return MorphismViolation{Kind::Shape, i, {}};
  }
  for (Index i = 1; i < n; ++i) {
    Matrix diff = alpha.component(i + 1) * v.map(i) - u.map(i) * alpha.component(i);
    if (!diff.is_zero()) return MorphismViolation{Kind::Commutativity, i, std::move(diff)};
  }
  return std::nullopt;
}

void require_valid(const LadderMorphism& alpha) {
  if (auto bad = validate(alpha)) throw ValidationError("invalid morphism: " + bad->describe());
}

LadderMorphism identity_morphism(const PersistenceModule& v) {
  std::vector<Matrix> comps;
  for (std::size_t d : v.dims()) comps.push_back(Matrix::identity(d, v.modulus()));
  return LadderMorphism(v, v, std::move(comps));
}

LadderMorphism zero_morphism(const PersistenceModule& v, const PersistenceModule& u) {
  if (v.length() != u.length() || v.modulus() != u.modulus()) {
    throw DimensionMismatch("zero morphism between modules of different length or field");
  }
  std::vector<Matrix> comps;
  for (Index i = 1; i <= v.length(); ++i) comps.emplace_back(u.dim(i), v.dim(i), v.modulus());
  return LadderMorphism(v, u, std::move(comps));
}

LadderMorphism compose(const LadderMorphism& beta, const LadderMorphism& alpha) {
  if (!(alpha.target() == beta.source())) {
    throw DimensionMismatch("compose: target of the first morphism is not the source of the second");
  }
  std::vector<Matrix> comps;
  for (Index i = 1; i <= alpha.length(); ++i) comps.push_back(beta.component(i) * alpha.component(i));
  return LadderMorphism(alpha.source(), beta.target(), std::move(comps));
}

LadderMorphism direct_sum(const LadderMorphism& l1, const LadderMorphism& l2) {
  if (l1.length() != l2.length() || l1.modulus() != l2.modulus()) {
    throw DimensionMismatch("direct sum of morphisms with different length or field");
  }
  std::vector<Matrix> comps;
  for (Index i = 1; i <= l1.length(); ++i) {
    comps.push_back(block_diagonal(l1.component(i), l2.component(i)));
  }
  return LadderMorphism(direct_sum(l1.source(), l2.source()), direct_sum(l1.target(), l2.target()),
                        std::move(comps));
}

bool is_injective(const LadderMorphism& alpha) {
  for (const Matrix& a : alpha.components()) {
    if (rank(a) != a.cols()) return false;
  }
  return true;
}

bool is_surjective(const LadderMorphism& alpha) {
  for (const Matrix& a : alpha.components()) {
    if (rank(a) != a.rows()) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> parse_dimension_row(std::string_view text, const std::string& which) {
  std::istringstream in{std::string(text)};
  std::vector<std::size_t> out;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(which, "expected non-negative integers, got '" + token + "'");
    }
    out.push_back(std::stoul(token));
  }
  return out;
}

/// The two indecomposables with a 2-dimensional space.
std::optional<LadderMorphism> special_indecomposable(const std::vector<std::size_t>& top,
                                                     const std::vector<std::size_t>& bottom,
                                                     PrimeModulus p) {
  using Dims = std::vector<std::size_t>;
  if (top == Dims{1, 2, 1} && bottom == Dims{0, 1, 1}) {
    PersistenceModule u({1, 2, 1}, {Matrix::of({{1}, {0}}, p), Matrix::of({{0, 1}}, p)}, p);
    PersistenceModule v({0, 1, 1}, {Matrix(1, 0, p), Matrix::of({{1}}, p)}, p);
    return LadderMorphism(v, u, {Matrix(1, 0, p), Matrix::of({{1}, {1}}, p), Matrix::of({{1}}, p)});
  }
  if (top == Dims{1, 1, 0} && bottom == Dims{1, 2, 1}) {
    PersistenceModule u({1, 1, 0}, {Matrix::of({{1}}, p), Matrix(0, 1, p)}, p);
    PersistenceModule v({1, 2, 1}, {Matrix::of({{1}, {0}}, p), Matrix::of({{0, 1}}, p)}, p);
    return LadderMorphism(v, u, {Matrix::of({{1}}, p), Matrix::of({{1, 1}}, p), Matrix(0, 1, p)});
  }
  return std::nullopt;
}

/// Identity between two 1-dimensional spaces, zero map otherwise.
Matrix thin_map(std::size_t to, std::size_t from, PrimeModulus p) {
  Matrix m(to, from, p);
  if (to == 1 && from == 1) m.set(0, 0, 1);
  return m;
}

PersistenceModule thin_module(const std::vector<std::size_t>& dims, PrimeModulus p) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) maps.push_back(thin_map(dims[i + 1], dims[i], p));
  return PersistenceModule(dims, std::move(maps), p);
}

}  // namespace

LadderMorphism ladder_from_notation(std::string_view notation, PrimeModulus p) {
  const auto slash = notation.find('/');
  if (slash == std::string_view::npos || notation.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("", "ladder notation needs exactly one '/' between the two rows");
  }
  const auto top = parse_dimension_row(notation.substr(0, slash), "top row");
  const auto bottom = parse_dimension_row(notation.substr(slash + 1), "bottom row");
  if (top.empty() || top.size() != bottom.size()) {
    throw ParseError("", "ladder rows must be nonempty and of equal length");
  }
  std::optional<LadderMorphism> out = special_indecomposable(top, bottom, p);
  if (!out) {
    for (std::size_t d : top) {
      if (d > 1) throw ParseError("top row", "only 0/1 rows and the two tabulated ladders are known");
    }
    for (std::size_t d : bottom) {
      if (d > 1) throw ParseError("bottom row", "only 0/1 rows and the two tabulated ladders are known");
    }
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < top.size(); ++i) comps.push_back(thin_map(top[i], bottom[i], p));
    out = LadderMorphism(thin_module(bottom, p), thin_module(top, p), std::move(comps));
  }
  require_valid(*out);
  return *std::move(out);
}

std::size_t chi(const LadderMorphism& alpha, Index a, Index b, Index a2, Index b2) {
  const Index n = alpha.length();
  for (Index i : {a, b, a2, b2}) {
    if (i < 1 || i > n) return 0;
  }
  if (b2 > b) return 0;
  const PersistenceModule& v = alpha.source();
  const Subspace s = persist_subspace(v, a, b);
  const Matrix f = composite(v, b2, b);
  const Matrix& ab2 = alpha.component(b2);
  const Subspace t = apply(f, preimage(ab2, persist_subspace(alpha.target(), a2, b2)));
  const Subspace t0 = apply(f, kernel(ab2));
  return intersect(s, t).dim() - intersect(s, t0).dim();
}

ChiTable::ChiTable(const LadderMorphism& alpha) : n_(alpha.length()) {
  require_valid(alpha);
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  values_.assign(side * side * side * side, 0);
  const PersistSubspaces sv(alpha.source());
  const PersistSubspaces su(alpha.target());
  const PersistenceModule& v = alpha.source();

  // With a' > b' the preimage is ker α_{b'} and both terms agree, so only
  // a' <= b' and a <= b are filled.
  for (Index b2 = 1; b2 <= n_; ++b2) {
    const Matrix& ab2 = alpha.component(b2);
    const Subspace ker = kernel(ab2);
    std::vector<Subspace> pre;
    for (Index a2 = 1; a2 <= b2; ++a2) pre.push_back(preimage(ab2, su(a2, b2)));
    for (Index b = b2; b <= n_; ++b) {
      const Matrix f = composite(v, b2, b);
      const Subspace t0 = apply(f, ker);
      for (Index a2 = 1; a2 <= b2; ++a2) {
        const Subspace t = apply(f, pre[a2 - 1]);
        for (Index a = 1; a <= b; ++a) {
          const Subspace& s = sv(a, b);
          if (s.is_zero()) continue;
          const std::size_t value = intersect(s, t).dim() - intersect(s, t0).dim();
          values_[((static_cast<std::size_t>(a) * side + b) * side + a2) * side + b2] = value;
        }
      }
    }
  }
}

std::size_t ChiTable::operator()(Index a, Index b, Index a2, Index b2) const {
  for (Index i : {a, b, a2, b2}) {
    if (i < 1 || i > n_) return 0;
  }
  const std::size_t side = static_cast<std::size_t>(n_) + 1;
  return values_[((static_cast<std::size_t>(a) * side + b) * side + a2) * side + b2];
}

Matching induced_matching(const ChiTable& chi) {
  const Index n = chi.length();
  static constexpr std::array<std::size_t, 2> axes{0, 2};
  const auto x = [&chi](const IndexTuple<4>& t) { return chi(t[0], t[1], t[2], t[3]); };
  Matching m(n);
  for (Index a = 1; a <= n; ++a) {
    for (Index b = a; b <= n; ++b) {
      for (Index a2 = 1; a2 <= n; ++a2) {
        for (Index b2 = a2; b2 <= n; ++b2) {
          const std::int64_t value = elder_at<4>(x, IndexTuple<4>{a, b, a2, b2}, axes);
          if (value < 0) {
            throw std::logic_error("negative induced multiplicity at " + to_string(IntervalKey{a, b}) +
                                   " -> " + to_string(IntervalKey{a2, b2}));
          }
          m.add(IntervalKey{a, b}, IntervalKey{a2, b2}, static_cast<std::size_t>(value));
        }
      }
    }
  }
  return m;
}

Matching induced_matching(const LadderMorphism& alpha) { return induced_matching(ChiTable(alpha)); }

}  // namespace pmatch
