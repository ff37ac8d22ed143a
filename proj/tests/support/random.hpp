#pragma once

#include <cstddef>
#include <random>

#include "pmatch/pmatch.hpp"

namespace pmatch::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, PrimeModulus p = {});
/// Half the time a product through a random inner dimension, so ranks vary.
Matrix random_map(Rng& rng, std::size_t rows, std::size_t cols, PrimeModulus p = {});
Matrix random_invertible(Rng& rng, std::size_t n, PrimeModulus p = {});
Subspace random_subspace(Rng& rng, std::size_t ambient, PrimeModulus p = {});

PersistenceModule random_module(Rng& rng, Index n, std::size_t max_dim, PrimeModulus p = {});
/// A uniformly random element of Hom(V, U), drawn from a basis of the
/// solution space of the commutativity equations.
LadderMorphism random_morphism(Rng& rng, const PersistenceModule& v, const PersistenceModule& u);
/// Random V, U of length n and a random morphism between them.
LadderMorphism random_morphism(Rng& rng, Index n, std::size_t max_dim, PrimeModulus p = {});
Span random_span(Rng& rng, Index n, std::size_t max_dim, PrimeModulus p = {});

/// Closed filtration of length n with at most max_simplices simplices on
/// vertices drawn from [0, max_vertex].
SimplicialFiltration random_filtration(Rng& rng, Index n, std::size_t max_simplices, Vertex max_vertex);

}  // namespace pmatch::testing
