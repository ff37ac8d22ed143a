#include "pmatch/io.hpp"

#include <fstream>
#include <sstream>

#include "pmatch/error.hpp"

namespace pmatch::io {

namespace {

std::string join(const std::string& path, const std::string& field) {
  return path.empty() ? field : path + "." + field;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(join(path, key), "missing field");
  return *it;
}

const json& array_field(const json& j, const std::string& key, const std::string& path) {
  const json& a = field(j, key, path);
  if (!a.is_array()) throw ParseError(join(path, key), "expected an array");
  return a;
}

std::int64_t integer(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(path, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw ParseError(path, "expected an integer");
}

std::int64_t non_negative(const json& j, const std::string& path) {
  const std::int64_t v = integer(j, path);
  if (v < 0) throw ParseError(path, "expected a non-negative integer");
  return v;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, PrimeModulus p,
                        const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected a matrix (array of rows)");
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  // A map into or out of the zero space may be written as [].
  if (j.empty() && (rows == 0 || cols == 0)) return Matrix(rows, cols, p);
  if (j.size() != rows) {
    throw DimensionMismatch(path + ": expected a " + shape + " matrix, got " +
                            std::to_string(j.size()) + " rows");
  }
  Matrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rpath = index_path(path, r);
    if (!row.is_array()) throw ParseError(rpath, "expected a matrix row (array)");
    if (row.size() != cols) {
      throw DimensionMismatch(rpath + ": expected " + std::to_string(cols) + " entries in a " +
                              shape + " matrix, got " + std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, integer(row[c], index_path(rpath, c)));
  }
  return m;
}

std::vector<Matrix> components_from_json(const json& j, const std::string& key,
                                         const PersistenceModule& from, const PersistenceModule& to,
                                         PrimeModulus p) {
  const json& a = array_field(j, key, "");
  const auto n = static_cast<std::size_t>(from.length());
  if (a.size() != n) {
    throw DimensionMismatch(key + ": expected " + std::to_string(n) + " components, got " +
                            std::to_string(a.size()));
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Index idx = static_cast<Index>(i) + 1;
    out.push_back(matrix_from_json(a[i], to.dim(idx), from.dim(idx), p, index_path(key, i)));
  }
  return out;
}

json interval(IntervalKey k) { return json::array({k.a, k.b}); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, std::string("malformed JSON: ") + e.what());
  }
}

PrimeModulus resolve_modulus(const json& doc, std::optional<PrimeModulus> requested) {
  if (doc.is_object() && doc.contains("p")) {
    const std::int64_t raw = integer(doc["p"], "p");
    PrimeModulus p;
    try {
      p = PrimeModulus(raw);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(std::string("p: ") + e.what());
    }
    if (requested && *requested != p) {
      throw ValidationError("p: file declares p = " + std::to_string(p.value()) +
                            " but p = " + std::to_string(requested->value()) + " was requested");
    }
    return p;
  }
  return requested.value_or(PrimeModulus{});
}

PersistenceModule module_from_json(const json& j, PrimeModulus p, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected a module object");
  if (j.contains("p") && integer(j["p"], join(path, "p")) != p.value()) {
    throw ValidationError(join(path, "p") + ": module is over a different field than its container");
  }
  const json& jd = array_field(j, "dims", path);
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    dims.push_back(static_cast<std::size_t>(non_negative(jd[i], index_path(join(path, "dims"), i))));
  }
  if (j.contains("n") && non_negative(j["n"], join(path, "n")) != static_cast<std::int64_t>(dims.size())) {
    throw ValidationError(join(path, "n") + ": does not match the number of dims");
  }
  const std::size_t expected = dims.empty() ? 0 : dims.size() - 1;
  const json empty = json::array();
  const json& jm = j.contains("maps") ? array_field(j, "maps", path) : empty;
  if (jm.size() != expected) {
    throw DimensionMismatch(join(path, "maps") + ": expected " + std::to_string(expected) +
                            " maps, got " + std::to_string(jm.size()));
  }
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < expected; ++i) {
    maps.push_back(matrix_from_json(jm[i], dims[i + 1], dims[i], p, index_path(join(path, "maps"), i)));
  }
  return PersistenceModule(std::move(dims), std::move(maps), p);
}

LadderMorphism morphism_from_json(const json& j, PrimeModulus p) {
  PersistenceModule v = module_from_json(field(j, "V", ""), p, "V");
  PersistenceModule u = module_from_json(field(j, "U", ""), p, "U");
  if (v.length() != u.length()) throw DimensionMismatch("V and U have different lengths");
  auto comps = components_from_json(j, "alpha", v, u, p);
  LadderMorphism alpha(std::move(v), std::move(u), std::move(comps));
  require_valid(alpha);
  return alpha;
}

Span span_from_json(const json& j, PrimeModulus p) {
  PersistenceModule v = module_from_json(field(j, "V", ""), p, "V");
  PersistenceModule w = module_from_json(field(j, "W", ""), p, "W");
  PersistenceModule u = module_from_json(field(j, "U", ""), p, "U");
  if (v.length() != w.length() || u.length() != w.length()) {
    throw DimensionMismatch("V, W and U have different lengths");
  }
  auto alpha = components_from_json(j, "alpha", v, w, p);
  auto beta = components_from_json(j, "beta", u, w, p);
  return Span(LadderMorphism(v, w, std::move(alpha)), LadderMorphism(u, w, std::move(beta)));
}

SimplicialFiltration filtration_from_json(const json& j) {
  const std::int64_t n = non_negative(field(j, "n", ""), "n");
  const json& js = array_field(j, "simplices", "");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string path = index_path("simplices", i);
    const json& jv = array_field(js[i], "v", path);
    Simplex s;
    for (std::size_t t = 0; t < jv.size(); ++t) {
      s.vertices.push_back(integer(jv[t], index_path(join(path, "v"), t)));
    }
    s.time = static_cast<Index>(integer(field(js[i], "t", path), join(path, "t")));
    simplices.push_back(std::move(s));
  }
  return SimplicialFiltration(static_cast<Index>(n), std::move(simplices));
}

PartialSimplicialMap partial_map_from_json(const json& j) {
  const json& jp = array_field(j, "pairs", "");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string path = index_path("pairs", i);
    if (!jp[i].is_array() || jp[i].size() != 2) throw ParseError(path, "expected [source, target]");
    pairs.emplace_back(integer(jp[i][0], index_path(path, 0)), integer(jp[i][1], index_path(path, 1)));
  }
  return PartialSimplicialMap(std::move(pairs));
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m.to_rows()) out.push_back(row);
  return out;
}

json to_json(const PersistenceModule& v) {
  json maps = json::array();
  for (const Matrix& f : v.maps()) maps.push_back(to_json(f));
  return json{{"p", v.modulus().value()}, {"n", v.length()}, {"dims", v.dims()}, {"maps", maps}};
}

json to_json(const LadderMorphism& alpha) {
  json comps = json::array();
  for (const Matrix& a : alpha.components()) comps.push_back(to_json(a));
  return json{{"p", alpha.modulus().value()},
              {"V", to_json(alpha.source())},
              {"U", to_json(alpha.target())},
              {"alpha", comps}};
}

json to_json(const SimplicialFiltration& f) {
  json simplices = json::array();
  for (const Simplex& s : f.simplices()) simplices.push_back(json{{"v", s.vertices}, {"t", s.time}});
  return json{{"n", f.length()}, {"simplices", simplices}};
}

json to_json(const VertexMap& m) {
  json out = json::array();
  for (const auto& [x, y] : m) out.push_back(json::array({x, y}));
  return out;
}

json to_json(const Barcode& b) {
  json out = json::array();
  for (const Bar& bar : b.bars()) {
    out.push_back(json{{"interval", interval(bar.key)}, {"multiplicity", bar.multiplicity}});
  }
  return out;
}

json to_json(const Matching& m) {
  json out = json::array();
  for (const auto& [k, c] : m.entries()) {
    out.push_back(json{{"from", interval(k.first)}, {"to", interval(k.second)}, {"count", c}});
  }
  return out;
}

json to_json(const SetMatching& s) {
  json out = json::array();
  for (const auto& [x, y] : s.pairs()) {
    out.push_back(json{{"from", json::array({x.key.a, x.key.b, x.copy})},
                       {"to", json::array({y.key.a, y.key.b, y.copy})}});
  }
  return out;
}

json to_json(const EnrichedMatching& g) {
  json out = json::array();
  for (const auto& [k, bars] : g.entries()) {
    out.push_back(json{{"from", interval(k.first)}, {"to", interval(k.second)}, {"barcode", to_json(bars)}});
  }
  return out;
}

std::string format_barcode(const Barcode& b) {
  std::ostringstream os;
  for (const Bar& bar : b.bars()) os << to_string(bar.key) << " x " << bar.multiplicity << '\n';
  return os.str();
}

std::string format_matching(const Matching& m) {
  std::ostringstream os;
  for (const auto& [k, c] : m.entries()) {
    os << to_string(k.first) << " -> " << to_string(k.second) << " x " << c << '\n';
  }
  return os.str();
}

std::string format_set_matching(const SetMatching& s) {
  std::ostringstream os;
  for (const auto& [x, y] : s.pairs()) os << to_string(x) << " -> " << to_string(y) << '\n';
  return os.str();
}

std::string format_enriched(const EnrichedMatching& g) {
  std::ostringstream os;
  for (const auto& [k, bars] : g.entries()) {
    os << to_string(k.first) << " ~ " << to_string(k.second) << " : {";
    for (std::size_t i = 0; i < bars.bars().size(); ++i) {
      const Bar& bar = bars.bars()[i];
      os << (i ? "; " : "") << to_string(bar.key) << " x " << bar.multiplicity;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace pmatch::io
