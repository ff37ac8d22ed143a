#pragma once

#include "pmatch/ladder.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/persistence_module.hpp"

namespace pmatch {

/// α = γ ∘ β with β : V -> im α surjective and γ : im α -> U injective.
/// im α_i is coordinatized by the canonical basis of the subspace α_i(V_i).
struct ImageFactorization {
  PersistenceModule image;
  LadderMorphism beta;
  LadderMorphism gamma;
};

/// Throws ValidationError for an invalid morphism.
ImageFactorization image_module(const LadderMorphism& alpha);

/// Matching induced by an injective morphism: for each right end b, the
/// i-th source interval [·,b] (left end ascending, then copy) goes to the
/// i-th target interval [·,b]. Throws ValidationError if not injective.
SetMatching match_injective(const LadderMorphism& gamma);

/// Matching induced by a surjective morphism: for each left end a, the i-th
/// source interval [a,·] (right end descending, then copy) goes to the i-th
/// target interval [a,·]. Throws ValidationError if not surjective.
SetMatching match_surjective(const LadderMorphism& beta);

struct BLMatching {
  SetMatching sigma;  ///< injective stage after surjective stage
  Matching matching;  ///< matched pairs counted per interval pair
};

BLMatching bl_matching(const LadderMorphism& alpha);

}  // namespace pmatch
