#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pmatch/enriched.hpp"
#include "pmatch/filtration.hpp"
#include "pmatch/ladder.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/persistence_module.hpp"

/// JSON file formats and the line-oriented text reports.
///
/// Parsing throws ParseError (syntax, missing fields, wrong JSON types; the
/// error names the field path), DimensionMismatch (matrix shapes against the
/// declared dimensions) or ValidationError (inconsistent values).
namespace pmatch::io {

using nlohmann::json;

/// Throws ParseError naming the path if the file is unreadable or not JSON.
json read_json_file(const std::string& path);

/// The document's "p" if present, otherwise `requested`, otherwise 2. A
/// `requested` value that contradicts the document is a ValidationError.
PrimeModulus resolve_modulus(const json& doc, std::optional<PrimeModulus> requested);

/// {"p": 2, "n": 3, "dims": [...], "maps": [f_1, ..., f_{n-1}]}; "p" and "n" optional.
PersistenceModule module_from_json(const json& j, PrimeModulus p, const std::string& path = "");
/// {"p": 2, "V": module, "U": module, "alpha": [A_1, ..., A_n]}; validated.
LadderMorphism morphism_from_json(const json& j, PrimeModulus p);
/// {"p": 2, "V": module, "W": module, "U": module, "alpha": [...], "beta": [...]}.
Span span_from_json(const json& j, PrimeModulus p);
/// {"n": 3, "simplices": [{"v": [0, 1], "t": 2}, ...]}.
SimplicialFiltration filtration_from_json(const json& j);
/// {"pairs": [[source, target], ...]}.
PartialSimplicialMap partial_map_from_json(const json& j);

json to_json(const Matrix& m);
json to_json(const PersistenceModule& v);
json to_json(const LadderMorphism& alpha);
json to_json(const SimplicialFiltration& f);
json to_json(const VertexMap& m);
/// [{"interval": [a, b], "multiplicity": m}, ...]
json to_json(const Barcode& b);
/// [{"from": [a, b], "to": [a', b'], "count": m}, ...]
json to_json(const Matching& m);
/// [{"from": [a, b, i], "to": [a', b', j]}, ...]
json to_json(const SetMatching& s);
/// [{"from": [a, b], "to": [a', b'], "barcode": [...]}, ...]
json to_json(const EnrichedMatching& g);

/// "[a,b] x m" per line.
std::string format_barcode(const Barcode& b);
/// "[a,b] -> [a',b'] x m" per line.
std::string format_matching(const Matching& m);
/// "[a,b]#i -> [a',b']#j" per line.
std::string format_set_matching(const SetMatching& s);
/// "[a,b] ~ [a',b'] : {[c,d] x e; ...}" per line.
std::string format_enriched(const EnrichedMatching& g);

}  // namespace pmatch::io
