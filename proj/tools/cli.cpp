#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "pmatch/pmatch.hpp"

namespace pmatch::cli {

namespace {

using io::json;

struct Options {
  std::optional<std::int64_t> p;
  int k = 0;
  bool as_json = false;
  std::string output;
  std::vector<std::string> inputs;
};

std::optional<PrimeModulus> requested_modulus(const Options& o) {
  if (!o.p) return std::nullopt;
  return PrimeModulus(*o.p);
}

/// Text or JSON report produced by a verb.
struct Report {
  std::string text;
  json doc;
};

enum class FileKind { Module, Morphism, Span, Filtration, PartialMap };

FileKind detect_kind(const std::string& path, const json& doc) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".pmod") return FileKind::Module;
  if (ext == ".lmod") return FileKind::Morphism;
  if (ext == ".span") return FileKind::Span;
  if (ext == ".flt") return FileKind::Filtration;
  if (ext == ".pmap") return FileKind::PartialMap;
  if (doc.is_object()) {
    if (doc.contains("W")) return FileKind::Span;
    if (doc.contains("alpha")) return FileKind::Morphism;
    if (doc.contains("dims")) return FileKind::Module;
    if (doc.contains("simplices")) return FileKind::Filtration;
    if (doc.contains("pairs")) return FileKind::PartialMap;
  }
  throw ParseError(path, "cannot tell the file kind from its extension or fields");
}

const std::string& input(const Options& o, std::size_t i) { return o.inputs.at(i); }

LadderMorphism load_morphism(const Options& o) {
  const json doc = io::read_json_file(input(o, 0));
  return io::morphism_from_json(doc, io::resolve_modulus(doc, requested_modulus(o)));
}

Span load_span(const Options& o) {
  const json doc = io::read_json_file(input(o, 0));
  return io::span_from_json(doc, io::resolve_modulus(doc, requested_modulus(o)));
}

struct FiltrationTriple {
  SimplicialFiltration k, l;
  PartialSimplicialMap mu;
};

FiltrationTriple load_triple(const Options& o) {
  return FiltrationTriple{io::filtration_from_json(io::read_json_file(input(o, 0))),
                          io::filtration_from_json(io::read_json_file(input(o, 1))),
                          io::partial_map_from_json(io::read_json_file(input(o, 2)))};
}

Report sectioned_barcodes(const std::vector<std::pair<std::string, const PersistenceModule*>>& parts) {
  Report r;
  r.doc = json::object();
  for (const auto& [name, v] : parts) {
    const Barcode b = barcode(*v);
    r.text += "# " + name + "\n" + io::format_barcode(b);
    r.doc[name] = io::to_json(b);
  }
  return r;
}

Report cmd_validate(const Options& o) {
  const std::string& path = input(o, 0);
  const json doc = io::read_json_file(path);
  const auto p = [&] { return io::resolve_modulus(doc, requested_modulus(o)); };
  std::string kind;
  switch (detect_kind(path, doc)) {
    case FileKind::Module:
      io::module_from_json(doc, p());
      kind = "module";
      break;
    case FileKind::Morphism:
      io::morphism_from_json(doc, p());
      kind = "morphism";
      break;
    case FileKind::Span:
      io::span_from_json(doc, p());
      kind = "span";
      break;
    case FileKind::Filtration:
      io::filtration_from_json(doc);
      kind = "filtration";
      break;
    case FileKind::PartialMap:
      io::partial_map_from_json(doc);
      kind = "partial map";
      break;
  }
  return Report{"ok\n", json{{"valid", true}, {"kind", kind}}};
}

Report cmd_barcode(const Options& o) {
  const std::string& path = input(o, 0);
  const json doc = io::read_json_file(path);
  switch (detect_kind(path, doc)) {
    case FileKind::Module: {
      const Barcode b = barcode(io::module_from_json(doc, io::resolve_modulus(doc, requested_modulus(o))));
      return Report{io::format_barcode(b), io::to_json(b)};
    }
    case FileKind::Morphism: {
      const LadderMorphism a = io::morphism_from_json(doc, io::resolve_modulus(doc, requested_modulus(o)));
      return sectioned_barcodes({{"V", &a.source()}, {"U", &a.target()}});
    }
    case FileKind::Span: {
      const Span s = io::span_from_json(doc, io::resolve_modulus(doc, requested_modulus(o)));
      return sectioned_barcodes({{"V", &s.v()}, {"W", &s.w()}, {"U", &s.u()}});
    }
    default:
      throw ParseError(path, "barcode expects a module, morphism or span file");
  }
}

Report cmd_match(const Options& o) {
  const Matching m = induced_matching(load_morphism(o));
  return Report{io::format_matching(m), io::to_json(m)};
}

Report cmd_bl_match(const Options& o) {
  const BLMatching bl = bl_matching(load_morphism(o));
  return Report{io::format_set_matching(bl.sigma) + "\n" + io::format_matching(bl.matching),
                json{{"sigma", io::to_json(bl.sigma)}, {"matching", io::to_json(bl.matching)}}};
}

Report enriched_report(const Span& s) {
  const EnrichedMatching g = enriched_matching(s);
  return Report{io::format_enriched(g), io::to_json(g)};
}

Report cmd_enriched(const Options& o) { return enriched_report(load_span(o)); }

Report cmd_kmodule(const Options& o) {
  const KModule k = k_module(load_span(o));
  const Barcode b = barcode(k.module);
  return Report{io::format_barcode(b), json{{"module", io::to_json(k.module)}, {"barcode", io::to_json(b)}}};
}

Report cmd_homology(const Options& o) {
  const SimplicialFiltration f = io::filtration_from_json(io::read_json_file(input(o, 0)));
  const PersistenceModule h = homology_module(f, o.k, requested_modulus(o).value_or(PrimeModulus{}));
  const Barcode b = barcode(h);
  return Report{io::format_barcode(b), json{{"module", io::to_json(h)}, {"barcode", io::to_json(b)}}};
}

Report cmd_union(const Options& o) {
  const FiltrationTriple t = load_triple(o);
  const UnionFiltration u = union_filtration(t.k, t.l, t.mu);
  const json flt = io::to_json(u.filtration);
  return Report{flt.dump() + "\n",
                json{{"filtration", flt}, {"k_map", io::to_json(u.from_k)}, {"l_map", io::to_json(u.from_l)}}};
}

Report cmd_span_match(const Options& o) {
  const FiltrationTriple t = load_triple(o);
  return enriched_report(
      span_from_filtrations(t.k, t.l, t.mu, o.k, requested_modulus(o).value_or(PrimeModulus{})));
}

struct Verb {
  const char* name;
  const char* help;
  std::vector<const char*> inputs;
  std::function<Report(const Options&)> run;
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"validate", "Check that an input file parses and satisfies its invariants", {"file"}, cmd_validate},
      {"barcode", "Barcodes of a module (.pmod), morphism (.lmod) or span (.span)", {"file"}, cmd_barcode},
      {"match", "Basis-independent matching induced by a morphism", {"morphism"}, cmd_match},
      {"bl-match", "Bauer-Lesnick matching of a morphism and its interval counts", {"morphism"}, cmd_bl_match},
      {"enriched", "Enriched matching induced by a span", {"span"}, cmd_enriched},
      {"kmodule", "Barcode of the common submodule K of a span", {"span"}, cmd_kmodule},
      {"homology", "Barcode of degree-k homology of a filtration", {"filtration"}, cmd_homology},
      {"union", "Union filtration K glued to L along a partial map", {"K", "L", "map"}, cmd_union},
      {"span-match", "Enriched matching of the homology span of K, K glued to L, and L",
       {"K", "L", "map"}, cmd_span_match},
  };
  return table;
}

int write_report(const Report& r, const Options& o, std::ostream& out, std::ostream& err) {
  const std::string body = o.as_json ? r.doc.dump(2) + "\n" : r.text;
  if (o.output.empty() || o.output == "-") {
    out << body;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << o.output << "\n";
    return kExitParse;
  }
  file << body;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barcodes and induced matchings of persistence modules over F_p", "pmatch"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("-p", opts.p, "prime modulus (default 2; a file's own \"p\" takes precedence)");
  app.add_option("-k", opts.k, "homology degree (default 0)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", opts.as_json, "emit one JSON document instead of text");
  app.add_option("-o", opts.output, "write the report to this path instead of stdout");

  const Verb* chosen = nullptr;
  for (const Verb& v : verbs()) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->fallthrough();
    sub->add_option("inputs", opts.inputs, "input files")
        ->required()
        ->expected(static_cast<int>(v.inputs.size()));
    sub->callback([&chosen, &v] { chosen = &v; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    return write_report(chosen->run(opts), opts, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace pmatch::cli
