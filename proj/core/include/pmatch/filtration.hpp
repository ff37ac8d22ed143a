#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmatch/enriched.hpp"
#include "pmatch/ladder.hpp"
#include "pmatch/matrix.hpp"
#include "pmatch/persistence_module.hpp"

namespace pmatch {

using Vertex = std::int64_t;

struct Simplex {
  std::vector<Vertex> vertices;  ///< sorted, distinct
  Index time = 1;                ///< entry step
  int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// "{0,1,2}@3".
std::string to_string(const Simplex& s);

/// K_1 ⊆ K_2 ⊆ ... ⊆ K_n. Simplices are kept sorted by (time, dimension,
/// vertex list), so the k-simplices of K_i form a prefix of the k-simplices of K_n.
class SimplicialFiltration {
 public:
  SimplicialFiltration() = default;
  /// Sorts each vertex list. Throws ValidationError for negative or repeated
  /// vertices, empty simplices, times outside [1, n], repeated simplices, or a
  /// face entering after its coface.
  SimplicialFiltration(Index n, std::vector<Simplex> simplices);

  Index length() const noexcept { return n_; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::optional<Index> entry_time(const std::vector<Vertex>& sorted_vertices) const;
  std::vector<Vertex> vertices() const;
  int max_dimension() const noexcept;

  friend bool operator==(const SimplicialFiltration&, const SimplicialFiltration&) = default;

 private:
  Index n_ = 0;
  std::vector<Simplex> simplices_;
  std::map<std::vector<Vertex>, Index> times_;
};

using VertexMap = std::map<Vertex, Vertex>;

/// One vertex map μ from part of K's vertex set into L's vertex set, used at
/// every step.
class PartialSimplicialMap {
 public:
  PartialSimplicialMap() = default;
  /// Throws ValidationError if a vertex occurs twice on either side or is negative.
  explicit PartialSimplicialMap(std::vector<std::pair<Vertex, Vertex>> pairs);

  const VertexMap& map() const noexcept { return map_; }
  /// Throws ValidationError unless every source vertex is in k and every
  /// target vertex is in l.
  void check(const SimplicialFiltration& k, const SimplicialFiltration& l) const;

 private:
  VertexMap map_;
};

/// Degree-k homology of each step with a fixed basis: cycles are reduced to
/// RREF and each cycle row not already spanned by boundaries and earlier
/// picks becomes a basis class.
class FilteredHomology {
 public:
  FilteredHomology(const SimplicialFiltration& f, int degree, PrimeModulus p = {});

  const SimplicialFiltration& filtration() const noexcept { return f_; }
  int degree() const noexcept { return k_; }
  PrimeModulus modulus() const noexcept { return p_; }
  const PersistenceModule& module() const noexcept { return module_; }

  /// The k-simplices of K_n in filtration order; chain vectors use this indexing.
  const std::vector<std::vector<Vertex>>& chain_basis() const noexcept { return cells_; }
  /// Number of k-simplices present at step i.
  std::size_t chain_dim(Index i) const;
  /// Cycle representatives of the basis classes at step i (rows, length chain_dim(i)).
  const Matrix& representatives(Index i) const;
  /// Coordinates of the class of a cycle of K_i (a vector of length chain_dim(i)).
  std::vector<Residue> coordinates(Index i, const std::vector<Residue>& cycle) const;

 private:
  struct Step {
    Matrix reps;         ///< h x m
    Matrix echelon;      ///< RREF of [reps; boundaries], r x m
    Matrix transform;    ///< echelon = transform * [reps; boundaries], r x r
    std::vector<std::size_t> pivots;
  };

  SimplicialFiltration f_;
  int k_ = 0;
  PrimeModulus p_{};
  std::vector<std::vector<Vertex>> cells_;
  std::vector<std::size_t> counts_;  ///< k-simplices present at step i, index i-1
  std::vector<Step> steps_;
  PersistenceModule module_;
};

PersistenceModule homology_module(const SimplicialFiltration& f, int degree, PrimeModulus p = {});

/// Morphism H_k(K) -> H_k(L) induced by a vertex map defined on every vertex
/// of K. Throws ValidationError if some simplex of K_i is not sent to a simplex of L_i.
LadderMorphism induced_morphism(const FilteredHomology& hk, const FilteredHomology& hl,
                                const VertexMap& phi);
LadderMorphism induced_morphism(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                                const VertexMap& phi, int degree, PrimeModulus p = {});

/// K ∪_μ L: L keeps its labels, each vertex x in the domain of μ becomes μ(x),
/// and the remaining vertices of K get fresh labels above L's largest, in
/// increasing order. A simplex present in both enters at the earlier time.
struct UnionFiltration {
  SimplicialFiltration filtration;
  VertexMap from_k;  ///< inclusion K -> union
  VertexMap from_l;  ///< inclusion L -> union
};
UnionFiltration union_filtration(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                                 const PartialSimplicialMap& mu);

/// H_k(K) -> H_k(K ∪_μ L) <- H_k(L).
Span span_from_filtrations(const SimplicialFiltration& fk, const SimplicialFiltration& fl,
                           const PartialSimplicialMap& mu, int degree, PrimeModulus p = {});

}  // namespace pmatch
