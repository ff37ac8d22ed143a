#include "pmatch/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pmatch/error.hpp"

namespace pmatch {

namespace {

std::string vertex_list(const std::vector<Vertex>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

bool filtration_order(const Simplex& x, const Simplex& y) {
  if (x.time != y.time) return x.time < y.time;
  if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
  return x.vertices < y.vertices;
}

}  // namespace

std::string to_string(const Simplex& s) { return vertex_list(s.vertices) + "@" + std::to_string(s.time); }

SimplicialFiltration::SimplicialFiltration(Index n, std::vector<Simplex> simplices)
    : n_(n), simplices_(std::move(simplices)) {
  if (n_ < 1) throw ValidationError("filtration length must be at least 1");
  for (Simplex& s : simplices_) {
    if (s.vertices.empty()) throw ValidationError("simplex with no vertices");
    std::sort(s.vertices.begin(), s.vertices.end());
    if (s.vertices.front() < 0) throw ValidationError("negative vertex label in " + to_string(s));
    if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end()) {
      throw ValidationError("repeated vertex in " + to_string(s));
    }
    if (s.time < 1 || s.time > n_) {
      throw ValidationError("entry time of " + to_string(s) + " outside [1," +
                            std::to_string(n_) + "]");
    }
  }
  std::sort(simplices_.begin(), simplices_.end(), filtration_order);
  for (const Simplex& s : simplices_) {
    if (!times_.emplace(s.vertices, s.time).second) {
      throw ValidationError("simplex " + vertex_list(s.vertices) + " listed twice");
    }
  }
  for (const Simplex& s : simplices_) {
    if (s.vertices.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<Vertex> face = s.vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto it = times_.find(face);
      if (it == times_.end()) {
        throw ValidationError("face " + vertex_list(face) + " of " + to_string(s) + " is missing");
      }
      if (it->second > s.time) {
        throw ValidationError("face " + vertex_list(face) + " enters at " +
                              std::to_string(it->second) + ", after its coface " + to_string(s));
      }
    }
  }
}

std::optional<Index> SimplicialFiltration::entry_time(const std::vector<Vertex>& sorted_vertices) const {
  const auto it = times_.find(sorted_vertices);
  if (it == times_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SimplicialFiltration::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& s : simplices_) {
    if (s.vertices.size() == 1) out.push_back(s.vertices.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialFiltration::max_dimension() const noexcept {
  int d = -1;
  for (const Simplex& s : simplices_) d = std::max(d, s.dimension());
  return d;
}

PartialSimplicialMap::PartialSimplicialMap(std::vector<std::pair<Vertex, Vertex>> pairs) {
  std::set<Vertex> targets;
  for (const auto& [x, y] : pairs) {
    if (x < 0 || y < 0) throw ValidationError("negative vertex label in partial map");
    if (!map_.emplace(x, y).second) {
      throw ValidationError("vertex " + std::to_string(x) + " is mapped twice");
    }
    if (!targets.insert(y).second) {
      throw ValidationError("vertex " + std::to_string(y) + " is hit twice; the map must be injective");
    }
  }
}

void PartialSimplicialMap::check(const SimplicialFiltration& k, const SimplicialFiltration& l) const {
  for (const auto& [x, y] : map_) {
    if (!k.entry_time({x})) {
      throw ValidationError("partial map source vertex " + std::to_string(x) + " is not in K");
    }
    if (!l.entry_time({y})) {
      throw ValidationError("partial map target vertex " + std::to_string(y) + " is not in L");
    }
  }
}

namespace {

std::vector<std::vector<Vertex>> cells_of_dimension(const SimplicialFiltration& f, int dim) {
  std::vector<std::vector<Vertex>> out;
  for (const Simplex& s : f.simplices()) {
    if (s.dimension() == dim) out.push_back(s.vertices);
  }
  return out;
}

std::vector<std::size_t> prefix_counts(const SimplicialFiltration& f, int dim) {
  std::vector<std::size_t> out(f.length(), 0);
  for (const Simplex& s : f.simplices()) {
    if (s.dimension() != dim) continue;
    for (Index i = s.time; i <= f.length(); ++i) ++out[i - 1];
  }
  return out;
}

/// ∂ from dimension-`dim` cells to dimension-(dim-1) cells, with the
/// alternating signs of sorted-vertex orientation.
Matrix boundary_matrix(const std::vector<std::vector<Vertex>>& lower,
                       const std::vector<std::vector<Vertex>>& upper, PrimeModulus p) {
  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  Matrix d(lower.size(), upper.size(), p);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    if (upper[c].size() < 2) continue;
    for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
      std::vector<Vertex> face = upper[c];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      d.set(index.at(face), c, drop % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

Matrix submatrix(const Matrix& m, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols, m.modulus());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, m(r, c));
  }
  return out;
}

}  // namespace

FilteredHomology::FilteredHomology(const SimplicialFiltration& f, int degree, PrimeModulus p)
    : f_(f), k_(degree), p_(p) {
  if (degree < 0) throw std::invalid_argument("homology degree must be non-negative");
  const Index n = f.length();
  cells_ = cells_of_dimension(f, k_);
  counts_ = prefix_counts(f, k_);
  const auto lower = cells_of_dimension(f, k_ - 1);
  const auto upper = cells_of_dimension(f, k_ + 1);
  const auto upper_counts = prefix_counts(f, k_ + 1);
  const Matrix dk = boundary_matrix(lower, cells_, p);
  const Matrix dk1 = boundary_matrix(cells_, upper, p);

  for (Index i = 1; i <= n; ++i) {
    const std::size_t m = counts_[i - 1];
    const Subspace cycles = kernel(submatrix(dk, dk.rows(), m));
    const Subspace boundaries = image(submatrix(dk1, m, upper_counts[i - 1]));

    Subspace spanned = boundaries;
    std::vector<std::size_t> picked;
    for (std::size_t r = 0; r < cycles.dim(); ++r) {
      if (spanned.contains(cycles.basis().row(r))) continue;
      picked.push_back(r);
      Matrix row(1, m, p);
      for (std::size_t c = 0; c < m; ++c) row.set(0, c, cycles.basis()(r, c));
      spanned = sum(spanned, Subspace::span(row));
    }
    Step step;
    step.reps = Matrix(picked.size(), m, p);
    for (std::size_t j = 0; j < picked.size(); ++j) {
      for (std::size_t c = 0; c < m; ++c) step.reps.set(j, c, cycles.basis()(picked[j], c));
    }
    // Row-reduce [G | I] with G = [reps; boundaries] to record how the
    // echelon rows combine the generators.
    const Matrix g = vstack(step.reps, boundaries.basis());
    const std::size_t r = g.rows();
    const RowEchelon e = rref(hstack(g, Matrix::identity(r, p)));
    step.echelon = Matrix(r, m, p);
    step.transform = Matrix(r, r, p);
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t c = 0; c < m; ++c) step.echelon.set(row, c, e.reduced(row, c));
      for (std::size_t c = 0; c < r; ++c) step.transform.set(row, c, e.reduced(row, m + c));
    }
    step.pivots.assign(e.pivots.begin(), e.pivots.begin() + static_cast<std::ptrdiff_t>(r));
    steps_.push_back(std::move(step));
  }

  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  for (Index i = 1; i <= n; ++i) dims.push_back(steps_[i - 1].reps.rows());
  for (Index i = 1; i < n; ++i) {
    const Matrix& reps = steps_[i - 1].reps;
    Matrix fi(dims[i], dims[i - 1], p);
    for (std::size_t j = 0; j < reps.rows(); ++j) {
      std::vector<Residue> cycle(counts_[i], 0);
      std::copy(reps.row(j).begin(), reps.row(j).end(), cycle.begin());
      const auto x = coordinates(i + 1, cycle);
      for (std::size_t t = 0; t < x.size(); ++t) fi.set(t, j, x[t]);
    }
    maps.push_back(std::move(fi));
  }
  module_ = PersistenceModule(std::move(dims), std::move(maps), p);
}

std::size_t FilteredHomology::chain_dim(Index i) const { return counts_.at(i - 1); }

const Matrix& FilteredHomology::representatives(Index i) const { return steps_.at(i - 1).reps; }

std::vector<Residue> FilteredHomology::coordinates(Index i, const std::vector<Residue>& cycle) const {
  const Step& s = steps_.at(i - 1);
  if (cycle.size() != chain_dim(i)) {
    throw DimensionMismatch("chain of length " + std::to_string(cycle.size()) + " at step " +
                            std::to_string(i) + ", expected " + std::to_string(chain_dim(i)));
  }
  const std::size_t r = s.echelon.rows();
  std::vector<Residue> c(r);
  std::vector<Residue> rest = cycle;
  for (std::size_t row = 0; row < r; ++row) {
    c[row] = rest[s.pivots[row]];
    if (c[row] == 0) continue;
    for (std::size_t col = 0; col < rest.size(); ++col) {
      rest[col] = p_.sub(rest[col], p_.mul(c[row], s.echelon(row, col)));
    }
  }
  for (Residue x : rest) {
    if (x != 0) throw ValidationError("chain at step " + std::to_string(i) + " is not a cycle");
  }
  // cycle = c * echelon = (c * transform) * [reps; boundaries]
  const std::size_t h = s.reps.rows();
  std::vector<Residue> out(h, 0);
  for (std::size_t t = 0; t < h; ++t) {
    std::uint64_t acc = 0;
    for (std::size_t row = 0; row < r; ++row) acc = (acc + std::uint64_t{c[row]} * s.transform(row, t)) % p_.value();
    out[t] = static_cast<Residue>(acc);
  }
  return out;
}

PersistenceModule homology_module(const SimplicialFiltration& f, int degree, PrimeModulus p) {
  return FilteredHomology(f, degree, p).module();
}

namespace {

/// φ applied to a simplex: sorted image and orientation sign, or nothing if it collapses.
std::optional<std::pair<std::vector<Vertex>, int>> image_simplex(const std::vector<Vertex>& s,
                                                                 const VertexMap& phi) {
  std::vector<Vertex> img;
  for (Vertex v : s) img.push_back(phi.at(v));
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) return std::nullopt;
      if (img[i] > img[j]) sign = -sign;
    }
  }
  std::sort(img.begin(), img.end());
  return std::pair{std::move(img), sign};
}

void check_simplicial(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                      const VertexMap& phi) {
  for (Vertex v : fk.vertices()) {
    if (!phi.count(v)) throw ValidationError("vertex map is undefined on vertex " + std::to_string(v));
  }
  for (const Simplex& s : fk.simplices()) {
    std::vector<Vertex> img;
    for (Vertex v : s.vertices) img.push_back(phi.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    const auto t = fl.entry_time(img);
    if (!t) throw ValidationError("image of " + to_string(s) + " is not a simplex of the target");
    if (*t > s.time) {
      throw ValidationError("image of " + to_string(s) + " enters the target only at step " +
                            std::to_string(*t));
    }
  }
}

}  // namespace

LadderMorphism induced_morphism(const FilteredHomology& hk, const FilteredHomology& hl,
                                const VertexMap& phi) {
  const SimplicialFiltration& fk = hk.filtration();
  const SimplicialFiltration& fl = hl.filtration();
  if (fk.length() != fl.length() || hk.degree() != hl.degree() || hk.modulus() != hl.modulus()) {
    throw DimensionMismatch("induced morphism needs equal lengths, degrees and fields");
  }
  check_simplicial(fk, fl, phi);
  const PrimeModulus p = hk.modulus();

  std::map<std::vector<Vertex>, std::size_t> target_index;
  for (std::size_t i = 0; i < hl.chain_basis().size(); ++i) target_index.emplace(hl.chain_basis()[i], i);
  // Chain map on cells: target index and sign, or nothing for a collapse.
  std::vector<std::optional<std::pair<std::size_t, int>>> cell_image;
  for (const auto& cell : hk.chain_basis()) {
    if (auto img = image_simplex(cell, phi)) {
      cell_image.emplace_back(std::pair{target_index.at(img->first), img->second});
    } else {
      cell_image.emplace_back(std::nullopt);
    }
  }

  std::vector<Matrix> comps;
  for (Index i = 1; i <= fk.length(); ++i) {
    const Matrix& reps = hk.representatives(i);
    Matrix a(hl.module().dim(i), reps.rows(), p);
    for (std::size_t j = 0; j < reps.rows(); ++j) {
      std::vector<Residue> chain(hl.chain_dim(i), 0);
      for (std::size_t c = 0; c < reps.cols(); ++c) {
        if (reps(j, c) == 0 || !cell_image[c]) continue;
        const auto [idx, sign] = *cell_image[c];
        const Residue x = sign > 0 ? reps(j, c) : p.neg(reps(j, c));
        chain[idx] = p.add(chain[idx], x);
      }
      const auto x = hl.coordinates(i, chain);
      for (std::size_t t = 0; t < x.size(); ++t) a.set(t, j, x[t]);
    }
    comps.push_back(std::move(a));
  }
  LadderMorphism alpha(hk.module(), hl.module(), std::move(comps));
  require_valid(alpha);
  return alpha;
}

LadderMorphism induced_morphism(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                                const VertexMap& phi, int degree, PrimeModulus p) {
  return induced_morphism(FilteredHomology(fk, degree, p), FilteredHomology(fl, degree, p), phi);
}

UnionFiltration union_filtration(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                                 const PartialSimplicialMap& mu) {
  if (fk.length() != fl.length()) {
    throw DimensionMismatch("union of filtrations of different lengths");
  }
  mu.check(fk, fl);
  UnionFiltration out;
  const auto l_vertices = fl.vertices();
  Vertex next = l_vertices.empty() ? 0 : l_vertices.back() + 1;
  for (Vertex v : l_vertices) out.from_l.emplace(v, v);
  for (Vertex v : fk.vertices()) {
    const auto it = mu.map().find(v);
    out.from_k.emplace(v, it != mu.map().end() ? it->second : next++);
  }

  std::map<std::vector<Vertex>, Index> times;
  for (const Simplex& s : fl.simplices()) times.emplace(s.vertices, s.time);
  for (const Simplex& s : fk.simplices()) {
    std::vector<Vertex> img;
    for (Vertex v : s.vertices) img.push_back(out.from_k.at(v));
    std::sort(img.begin(), img.end());
    const auto [it, fresh] = times.emplace(img, s.time);
    if (!fresh) it->second = std::min(it->second, s.time);
  }
  std::vector<Simplex> simplices;
  for (const auto& [verts, t] : times) simplices.push_back(Simplex{verts, t});
  out.filtration = SimplicialFiltration(fk.length(), std::move(simplices));
  return out;
}

Span span_from_filtrations(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                           const PartialSimplicialMap& mu, int degree, PrimeModulus p) {
  const UnionFiltration u = union_filtration(fk, fl, mu);
  const FilteredHomology hw(u.filtration, degree, p);
  return Span(induced_morphism(FilteredHomology(fk, degree, p), hw, u.from_k),
              induced_morphism(FilteredHomology(fl, degree, p), hw, u.from_l));
}

}  // namespace pmatch
