// Command-line front end. Exit codes: 0 success, 2 parse error, 3 invalid
// presentation, 4 violated precondition, 5 undetermined or incomplete.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "dgahom/classify.hpp"
#include "dgahom/parser.hpp"
#include "dgahom/report.hpp"
#include "dgahom/universality.hpp"

using namespace dgahom;

namespace {

constexpr int kParse = 2;
constexpr int kValidation = 3;
constexpr int kPrecondition = 4;
constexpr int kUndetermined = 5;

struct Exit {
  int code;
};

bool json_output = false;

void emit(const Json& j, const std::string& text) {
  if (json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

PresentationPtr load_checked(const std::string& path, bool validate = true) {
  PresentationPtr a;
  try {
    a = load_presentation(path);
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << format_diagnostic(d, path) << "\n";
    throw Exit{kParse};
  }
  if (validate) {
    auto issues = validate_presentation(*a);
    if (!issues.empty()) {
      for (const auto& i : issues)
        std::cerr << path << ": " << issue_kind_name(i.kind) << " at " << i.generator << ": " << i.detail << "\n";
      throw Exit{kValidation};
    }
  }
  return a;
}

Morphism load_map(const std::string& path, const PresentationPtr& src, const PresentationPtr& tgt) {
  try {
    Morphism f = to_morphism(load_morphism(path, src, tgt));
    if (!f.is_chain_map()) {
      std::cerr << path << ": not a chain map\n";
      for (const auto& defect : check_chain_map(f))
        std::cerr << "  " << src->ring()->name(defect.generator) << ": f(dv) - d f(v) = " << to_string(defect.residual)
                  << "\n";
      throw Exit{kPrecondition};
    }
    return f;
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << format_diagnostic(d, path) << "\n";
    throw Exit{kParse};
  }
}

std::string images_text(const Morphism& f, const std::string& indent = "  ") {
  std::ostringstream os;
  const Ring& ring = *f.source()->ring();
  for (std::size_t v = 0; v < ring.size(); ++v)
    os << indent << ring.name(v) << " -> " << to_string(f.image(v)) << "\n";
  return os.str();
}

std::string homotopy_text(const Homotopy& h) {
  std::ostringstream os;
  const Ring& ring = *h.start().source()->ring();
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (h.in_domain(v)) os << "  bar " << ring.name(v) << " = " << to_string(h.bar(v)) << "\n";
  return os.str();
}

std::string obstruction_text(const ObstructionValue& o, const Presentation& src) {
  std::ostringstream os;
  for (const auto& e : o.entries) {
    os << "  " << src.ring()->name(e.generator) << " (degree " << e.value.degree << "): "
       << (e.vanishes ? "vanishes" : "nonzero") << ", representative " << to_string(e.value.representative) << "\n";
    if (e.witness) os << "    primitive " << to_string(*e.witness) << "\n";
  }
  return os.str();
}

int run_check(const std::string& file) {
  PresentationPtr a = load_checked(file, false);
  auto issues = validate_presentation(*a);
  std::ostringstream os;
  os << a->name() << ": " << a->size() << " generators, top degree " << a->top_degree() << "\n";
  if (issues.empty()) os << "ok: d^2 = 0, minimal\n";
  for (const auto& i : issues) os << issue_kind_name(i.kind) << " at " << i.generator << ": " << i.detail << "\n";
  emit(validation_json(*a, issues), os.str());
  return issues.empty() ? 0 : kValidation;
}

int run_cohomology(const std::string& file, long max_degree, bool weights) {
  PresentationPtr a = load_checked(file);
  ComplexPtr complex = shared_complex(a);
  Json degrees = Json::array();
  std::ostringstream os;
  for (long n = 0; n <= max_degree; ++n) {
    CohomologyGroup g = cohomology_at_degree(*complex, n);
    Json j = cohomology_json(g);
    if (g.dimension > 0) {
      os << "H^" << n << ": dimension " << g.dimension << "\n";
      for (const auto& r : g.representatives) os << "  " << to_string(r) << "\n";
    }
    if (weights) {
      auto split = weight_split_cohomology(*complex, n);
      j["weights"] = weight_split_json(split);
      for (const auto& [i, reps] : split)
        if (!reps.empty()) os << "  H^" << n << "_" << i << ": dimension " << reps.size() << "\n";
    }
    degrees.push_back(j);
  }
  emit(Json{{"algebra", a->name()}, {"degrees", degrees}}, os.str());
  return 0;
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << c.families.size() << " solution families, " << c.classes.size() << " homotopy classes"
     << (c.complete ? "" : " (incomplete)") << "\n";
  for (std::size_t i = 0; i < c.families.size(); ++i) {
    const auto& f = c.families[i];
    os << "family " << i << " (" << (c.connectivity[i].connected ? "connected" : "not certified connected") << ")";
    if (!f.parameters.empty()) {
      os << ", parameters";
      for (const auto& p : f.parameters) os << " " << p.name << (p.multiplicative ? "!=0" : "");
    }
    os << "\n";
    std::vector<std::string> names = f.parameter_names();
    for (std::size_t p = 0; p < names.size(); ++p)
      if (!f.parameters[p].multiplicative) names[p] = "[" + names[p] + "]";
    const Ring& ring = *f.source->ring();
    for (std::size_t v = 0; v < ring.size(); ++v)
      os << "  " << ring.name(v) << " -> " << to_string(f.images[v], names) << "\n";
  }
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    os << "class " << k << ": families";
    for (auto i : c.classes[k].families) os << " " << i;
    os << "\n" << images_text(c.classes[k].representative);
  }
  for (const auto& n : c.notes) os << "note: " << n << "\n";
  return os.str();
}

int run_selfmaps(const std::string& file, bool detail) {
  PresentationPtr a = load_checked(file);
  Classification c = classify_homotopy_set(a, a);
  std::string text = classification_text(c);
  if (!c.complete) {
    Json j{{"classes", c.classes.size()}, {"complete", false}};
    if (detail) j["classification"] = classification_json(c);
    emit(j, text + "self-equivalence group undetermined\n");
    return kUndetermined;
  }
  SelfEquivalenceGroup g = self_equivalence_group(c);
  Json j{{"classes", c.classes.size()}, {"group", g.name}};
  if (detail) {
    j["classification"] = classification_json(c);
    j["self_equivalences"] = group_json(g);
  }
  emit(j, text + "self-equivalence group: " + g.name + " (order " + std::to_string(g.elements.size()) + ")\n");
  return 0;
}

int run_classify(const std::string& src_file, const std::string& tgt_file) {
  PresentationPtr src = load_checked(src_file);
  PresentationPtr tgt = load_checked(tgt_file);
  Classification c = classify_homotopy_set(src, tgt);
  emit(classification_json(c), classification_text(c));
  return c.complete ? 0 : kUndetermined;
}

int run_nullhomotopic(const std::string& src_file, const std::string& tgt_file, const std::string& map_file,
                      const std::string& filtration) {
  PresentationPtr src = load_checked(src_file);
  PresentationPtr tgt = load_checked(tgt_file);
  Morphism f = load_map(map_file, src, tgt);
  Filtration filt = filtration == "stages" ? Filtration::from_annotations(src) : Filtration::by_degree(src);
  NullhomotopyResult r = decide_nullhomotopic(f, filt);
  std::ostringstream os;
  if (r.nullhomotopic) {
    os << "nullhomotopic\n";
    if (r.homotopy) os << homotopy_text(*r.homotopy);
  } else {
    os << "not nullhomotopic: obstruction at stage " << r.stage << "\n";
    if (r.modified) os << "homotopic map vanishing below the stage:\n" << images_text(*r.modified);
    if (r.obstruction) os << obstruction_text(*r.obstruction, *src);
  }
  emit(nullhomotopy_json(r), os.str());
  return 0;
}

int run_homotopic(const std::string& src_file, const std::string& tgt_file, const std::string& f_file,
                  const std::string& g_file) {
  PresentationPtr src = load_checked(src_file);
  PresentationPtr tgt = load_checked(tgt_file);
  Morphism f = load_map(f_file, src, tgt);
  Morphism g = load_map(g_file, src, tgt);
  HomotopyDecision d = decide_homotopic(f, g);
  std::ostringstream os;
  os << verdict_name(d.verdict) << " (" << d.method << ")\n";
  if (d.homotopy) os << homotopy_text(*d.homotopy);
  if (d.induced) {
    const auto& c = *d.induced;
    os << "induced maps differ on H^" << c.degree << "\n";
    for (const auto* m : {&c.f_matrix, &c.g_matrix}) {
      os << (m == &c.f_matrix ? "  f*:" : "  g*:");
      for (std::size_t r = 0; r < m->rows(); ++r) {
        os << " [";
        for (std::size_t k = 0; k < m->cols(); ++k) os << (k ? " " : "") << m->get(r, k).get_str();
        os << "]";
      }
      os << "\n";
    }
  }
  if (d.obstruction) os << obstruction_text(*d.obstruction, *src);
  if (!d.residual_shape.empty()) os << "residual: " << d.residual_shape << "\n";
  emit(decision_json(d), os.str());
  return d.verdict == Verdict::Undetermined ? kUndetermined : 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_obstruction(const std::string& src_file, const std::string& tgt_file, const std::string& f_file,
                    const std::string& g_file, const std::string& v0_list) {
  PresentationPtr src = load_checked(src_file);
  PresentationPtr tgt = load_checked(tgt_file);
  Morphism f = load_map(f_file, src, tgt);
  Morphism g = load_map(g_file, src, tgt);
  const Ring& ring = *src->ring();
  std::vector<bool> v0(ring.size(), false);
  for (const auto& name : split_list(v0_list)) v0[ring.index_of(name)] = true;
  // V1 is every other generator whose differential stays in Lambda V0.
  std::vector<GeneratorRole> roles(ring.size(), GeneratorRole::Outside);
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (v0[v]) {
      roles[v] = GeneratorRole::V0;
      continue;
    }
    bool inside = true;
    for (const auto& [m, c] : src->d_generator(v).terms())
      for (const Factor& fac : m.factors()) inside = inside && v0[fac.gen];
    if (inside) roles[v] = GeneratorRole::V1;
  }
  ObstructionDecomposition dec(src, roles);
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (v0[v] && f.image(v) != g.image(v))
      throw Error(ErrorKind::PreconditionViolated, "the maps differ on V0 generator " + ring.name(v));
  Homotopy h = Homotopy::constant(shared_cylinder(src), f, v0);
  ObstructionValue o = compute_obstruction(f, g, h, dec);
  emit(obstruction_json(o, *src), std::string(o.is_zero() ? "obstruction vanishes\n" : "obstruction nonzero\n") +
                                      obstruction_text(o, *src));
  return 0;
}

int run_family(const std::string& src_file, const std::string& tgt_file, const std::string& f_file,
               const std::string& lambda, long count, const std::string& side) {
  PresentationPtr src = load_checked(src_file);
  PresentationPtr tgt = load_checked(tgt_file);
  Morphism f = load_map(f_file, src, tgt);
  Rational q;
  try {
    q = parse_rational(lambda);
  } catch (const std::exception&) {
    std::cerr << "invalid lambda '" << lambda << "'\n";
    throw Exit{kParse};
  }
  FamilyReport r = verify_infinite_family(f, side == "src" ? UniversalSide::Source : UniversalSide::Target, q, count);
  std::ostringstream os;
  os << "obstruction in degree " << r.stage << ": " << to_string(r.obstruction) << "\n";
  for (const auto& p : r.pairs) {
    os << "  (" << p.i << ", " << p.j << "): " << (p.distinct ? "distinct" : "not distinct");
    for (const auto& [w, c] : p.factors) os << ", weight " << w << " factor " << c.get_str();
    os << (p.closed_form ? "" : ", closed form mismatch") << "\n";
  }
  os << (r.all_distinct ? "all pairs distinct\n" : "some pair not distinct\n");
  emit(family_report_json(r), os.str());
  return r.all_distinct ? 0 : kUndetermined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy computations for minimal differential graded algebras over Q"};
  app.require_subcommand(1);
  app.add_flag("--json", json_output, "Machine-readable output");

  std::string file, src, tgt, map_f, map_g;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_output, "Machine-readable output"); };

  auto* check = app.add_subcommand("check", "Validate a presentation");
  check->add_option("file", file)->required();
  add_json(check);

  long max_degree = 0;
  bool weights = false;
  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions and representatives");
  coh->add_option("file", file)->required();
  coh->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  coh->add_flag("--weights", weights, "Split by weight");
  add_json(coh);

  bool detail = false;
  auto* self = app.add_subcommand("selfmaps", "Self-maps up to homotopy and the self-equivalence group");
  self->add_option("file", file)->required();
  self->add_flag("--detail", detail, "Include families and the group table in JSON output");
  add_json(self);

  auto* cls = app.add_subcommand("classify", "Homotopy classes of maps SRC -> TGT");
  cls->add_option("src", src)->required();
  cls->add_option("tgt", tgt)->required();
  add_json(cls);

  std::string filtration = "degree";
  auto* null = app.add_subcommand("nullhomotopic", "Decide whether a map is nullhomotopic");
  null->add_option("src", src)->required();
  null->add_option("tgt", tgt)->required();
  null->add_option("map", map_f)->required();
  null->add_option("--filtration", filtration)->check(CLI::IsMember({"degree", "stages"}));
  add_json(null);

  auto* hom = app.add_subcommand("homotopic", "Decide whether two maps are homotopic");
  hom->add_option("src", src)->required();
  hom->add_option("tgt", tgt)->required();
  hom->add_option("f", map_f)->required();
  hom->add_option("g", map_g)->required();
  add_json(hom);

  std::string v0;
  auto* obs = app.add_subcommand("obstruction", "Obstruction classes for two maps agreeing on V0");
  obs->add_option("src", src)->required();
  obs->add_option("tgt", tgt)->required();
  obs->add_option("f", map_f)->required();
  obs->add_option("g", map_g)->required();
  obs->add_option("--v0", v0, "Comma-separated V0 generators")->required();
  add_json(obs);

  std::string lambda = "2", side = "tgt";
  long count = 3;
  auto* fam = app.add_subcommand("family", "Distinctness of the twisted family of a map");
  fam->add_option("src", src)->required();
  fam->add_option("tgt", tgt)->required();
  fam->add_option("f", map_f)->required();
  fam->add_option("--lambda", lambda);
  fam->add_option("--count", count)->check(CLI::PositiveNumber);
  fam->add_option("--weights-side", side)->check(CLI::IsMember({"src", "tgt"}));
  add_json(fam);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParse;
  }

  try {
    if (*check) return run_check(file);
    if (*coh) return run_cohomology(file, max_degree, weights);
    if (*self) return run_selfmaps(file, detail);
    if (*cls) return run_classify(src, tgt);
    if (*null) return run_nullhomotopic(src, tgt, map_f, filtration);
    if (*hom) return run_homotopic(src, tgt, map_f, map_g);
    if (*obs) return run_obstruction(src, tgt, map_f, map_g, v0);
    if (*fam) return run_family(src, tgt, map_f, lambda, count, side);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
        return kParse;
      case ErrorKind::UnsupportedShape:
      case ErrorKind::ClassificationIncomplete:
        return kUndetermined;
      default:
        return kPrecondition;
    }
  }
  return 0;
}
