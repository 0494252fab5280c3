#include "dgahom/report.hpp"

namespace dgahom {

namespace {

Json monomial_json(const Ring& ring, const Monomial& m) {
  Json factors = Json::array();
  for (const Factor& f : m.factors()) factors.push_back(Json::array({ring.name(f.gen), f.exp}));
  return factors;
}

Json elements_json(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(element_json(x));
  return out;
}

}  // namespace

Json element_json(const Element& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) out.push_back(Json::array({c.get_str(), monomial_json(*x.ring(), m)}));
  return out;
}

Json param_element_json(const ParamElement& x, const std::vector<std::string>& parameters) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back(Json::array({c.to_string(parameters), monomial_json(*x.ring(), m)}));
  return out;
}

Json matrix_json(const RationalMatrix& m, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(m.get(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

Json validation_json(const Presentation& a, const std::vector<ValidationIssue>& issues) {
  Json out;
  out["algebra"] = a.name();
  out["generators"] = a.size();
  out["valid"] = issues.empty();
  Json list = Json::array();
  for (const auto& i : issues)
    list.push_back(Json{{"kind", issue_kind_name(i.kind)}, {"generator", i.generator}, {"detail", i.detail}});
  out["issues"] = list;
  return out;
}

Json cohomology_json(const CohomologyGroup& g) {
  Json out;
  out["degree"] = g.degree;
  out["dimension"] = g.dimension;
  out["cocycles"] = g.cocycle_dimension;
  out["coboundaries"] = g.coboundary_dimension;
  out["representatives"] = elements_json(g.representatives);
  return out;
}

Json weight_split_json(const std::map<long, std::vector<Element>>& split) {
  Json out = Json::array();
  for (const auto& [i, reps] : split)
    out.push_back(Json{{"lower_degree", i}, {"dimension", reps.size()}, {"representatives", elements_json(reps)}});
  return out;
}

Json morphism_json(const Morphism& f) {
  Json out;
  out["source"] = f.source()->name();
  out["target"] = f.target()->name();
  Json images = Json::object();
  const Ring& ring = *f.source()->ring();
  for (std::size_t v = 0; v < ring.size(); ++v) images[ring.name(v)] = element_json(f.image(v));
  out["images"] = images;
  return out;
}

Json homotopy_json(const Homotopy& h) {
  const Ring& ring = *h.start().source()->ring();
  Json bars = Json::object();
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (h.in_domain(v)) bars[ring.name(v)] = element_json(h.bar(v));
  return Json{{"bars", bars}};
}

Json obstruction_json(const ObstructionValue& o, const Presentation& source) {
  Json out;
  out["zero"] = o.is_zero();
  Json entries = Json::array();
  for (const auto& e : o.entries) {
    Json j;
    j["generator"] = source.ring()->name(e.generator);
    j["degree"] = e.value.degree;
    j["vanishes"] = e.vanishes;
    j["representative"] = element_json(e.value.representative);
    if (e.witness) j["witness"] = element_json(*e.witness);
    entries.push_back(j);
  }
  out["entries"] = entries;
  return out;
}

Json family_json(const SolutionFamily& f) {
  Json out;
  Json params = Json::array();
  for (const auto& p : f.parameters)
    params.push_back(Json{{"name", p.name}, {"kind", p.multiplicative ? "nonzero" : "affine"}});
  out["parameters"] = params;
  const std::vector<std::string> names = f.parameter_names();
  Json images = Json::object();
  const Ring& ring = *f.source->ring();
  for (std::size_t v = 0; v < ring.size(); ++v) images[ring.name(v)] = param_element_json(f.images[v], names);
  out["images"] = images;
  return out;
}

Json classification_json(const Classification& c) {
  Json out;
  out["classes"] = c.classes.size();
  out["complete"] = c.complete;
  Json fams = Json::array();
  for (std::size_t i = 0; i < c.families.size(); ++i) {
    Json j = family_json(c.families[i]);
    j["connected"] = c.connectivity[i].connected;
    if (!c.connectivity[i].reason.empty()) j["reason"] = c.connectivity[i].reason;
    fams.push_back(j);
  }
  out["families"] = fams;
  Json classes = Json::array();
  for (const auto& k : c.classes)
    classes.push_back(Json{{"representative", morphism_json(k.representative)["images"]}, {"families", k.families}});
  out["homotopy_classes"] = classes;
  Json unresolved = Json::array();
  for (const auto& [a, b] : c.unresolved) unresolved.push_back(Json::array({a, b}));
  out["unresolved"] = unresolved;
  out["notes"] = c.notes;
  return out;
}

Json group_json(const SelfEquivalenceGroup& g) {
  Json out;
  out["name"] = g.name;
  out["order"] = g.elements.size();
  out["elements"] = g.elements;
  out["identity"] = g.identity;
  out["table"] = g.table;
  return out;
}

Json nullhomotopy_json(const NullhomotopyResult& r) {
  Json out;
  out["nullhomotopic"] = r.nullhomotopic;
  if (r.homotopy) out["homotopy"] = homotopy_json(*r.homotopy);
  if (!r.nullhomotopic) {
    out["stage"] = r.stage;
    if (r.modified) out["modified"] = morphism_json(*r.modified)["images"];
    if (r.obstruction && r.modified) out["obstruction"] = obstruction_json(*r.obstruction, *r.modified->source());
  }
  return out;
}

Json decision_json(const HomotopyDecision& d) {
  Json out;
  out["verdict"] = verdict_name(d.verdict);
  out["method"] = d.method;
  if (d.homotopy) out["homotopy"] = homotopy_json(*d.homotopy);
  if (d.induced) {
    const auto& c = *d.induced;
    out["induced"] = Json{{"degree", c.degree},
                          {"f", matrix_json(c.f_matrix, c.f_matrix.rows(), c.f_matrix.cols())},
                          {"g", matrix_json(c.g_matrix, c.g_matrix.rows(), c.g_matrix.cols())}};
  }
  if (d.obstruction && d.homotopy) out["obstruction"] = obstruction_json(*d.obstruction, *d.homotopy->start().source());
  out["stage_reached"] = d.stage_reached;
  if (!d.residual_shape.empty()) out["residual"] = d.residual_shape;
  return out;
}

Json family_report_json(const FamilyReport& r) {
  Json out;
  out["side"] = r.side == UniversalSide::Target ? "target" : "source";
  out["stage"] = r.stage;
  out["obstruction"] = element_json(r.obstruction);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json factors = Json::array();
    for (const auto& [w, q] : p.factors) factors.push_back(Json::array({w, q.get_str()}));
    pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"distinct", p.distinct}, {"factors", factors},
                         {"closed_form", p.closed_form}});
  }
  out["pairs"] = pairs;
  out["all_distinct"] = r.all_distinct;
  out["closed_form"] = r.closed_form;
  out["cross_check"] = r.cross_check;
  return out;
}

}  // namespace dgahom
