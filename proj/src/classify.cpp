#include "dgahom/classify.hpp"

#include <numeric>
#include <set>

#include "dgahom/error.hpp"

namespace dgahom {

namespace {

std::vector<bool> differential_support_mask(const Presentation& a) {
  std::vector<bool> mask(a.size(), false);
  for (std::size_t v = 0; v < a.size(); ++v)
    for (const auto& [m, c] : a.d_generator(v).terms())
      for (const Factor& f : m.factors()) mask[f.gen] = true;
  return mask;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

FamilyConnectivity check_family_connected(const SolutionFamily& family) {
  FamilyConnectivity out;
  if (family.parameters.empty()) {
    out.connected = true;
    out.reason = "no parameters";
    return out;
  }
  const Presentation& src = *family.source;
  const Ring& ring = *src.ring();
  const std::vector<bool> v0 = differential_support_mask(src);
  const std::vector<std::string> names = family.parameter_names();
  ComplexPtr complex = shared_complex(family.target);
  for (std::size_t v = 0; v < src.size(); ++v) {
    for (const auto& [m, c] : family.images[v].terms()) {
      if (v0[v] && !c.is_constant()) {
        out.reason = "the image of " + ring.name(v) + " depends on the parameters";
        return out;
      }
      if (!v0[v] && (c.total_degree() > 1 || c.has_negative_exponent())) {
        out.reason = "the image of " + ring.name(v) + " is not affine in the parameters";
        return out;
      }
    }
  }
  for (std::size_t p = 0; p < family.parameters.size(); ++p) {
    for (std::size_t w = 0; w < src.size(); ++w) {
      if (v0[w]) continue;
      Element delta = Element::zero(family.target->ring());
      for (const auto& [m, c] : family.images[w].terms()) delta.add_term(m, c.linear_coefficient(static_cast<std::uint32_t>(p)));
      if (delta.is_zero()) continue;
      if (!family.target->d(delta).is_zero() || !is_coboundary(*complex, delta)) {
        out.reason = "moving " + names[p] + " changes the class of the image of " + ring.name(w);
        return out;
      }
    }
  }
  out.connected = true;
  out.reason = "parameters move only generators outside differentials, by coboundaries";
  return out;
}

Classification classify_families(std::vector<SolutionFamily> families, const DecideOptions& options) {
  Classification out;
  out.families = std::move(families);
  const std::size_t n = out.families.size();
  std::vector<Morphism> reps;
  for (std::size_t i = 0; i < n; ++i) {
    out.connectivity.push_back(check_family_connected(out.families[i]));
    if (!out.connectivity.back().connected) {
      out.complete = false;
      out.notes.push_back("family " + std::to_string(i) + ": " + out.connectivity.back().reason);
    }
    reps.push_back(out.families[i].representative());
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::set<std::pair<std::size_t, std::size_t>> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
      if (ri == rj) continue;
      if (distinct.count({std::min(ri, rj), std::max(ri, rj)})) continue;
      HomotopyDecision d = decide_homotopic(reps[ri], reps[rj], options);
      if (d.verdict == Verdict::Yes) {
        parent[std::max(ri, rj)] = std::min(ri, rj);
      } else if (d.verdict == Verdict::No) {
        distinct.insert({std::min(ri, rj), std::max(ri, rj)});
      } else {
        out.complete = false;
        out.unresolved.emplace_back(i, j);
        out.notes.push_back("families " + std::to_string(i) + " and " + std::to_string(j) +
                            " undetermined: " + d.residual_shape);
      }
    }
  }
  std::vector<long> class_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<long>(out.classes.size());
      out.classes.push_back(HomotopyClassInfo{reps[r], {}});
    }
    out.classes[class_of[r]].families.push_back(i);
  }
  return out;
}

Classification classify_homotopy_set(const PresentationPtr& source, const PresentationPtr& target,
                                     const DecideOptions& options) {
  CylinderPtr keep_cylinder = shared_cylinder(source);
  ComplexPtr keep_source = shared_complex(source), keep_target = shared_complex(target);
  return classify_families(enumerate_morphisms(source, target), options);
}

bool induces_isomorphism(const Morphism& f, long bound) {
  ComplexPtr src = shared_complex(f.source()), tgt = shared_complex(f.target());
  for (long n = 0; n <= bound; ++n) {
    RationalMatrix m = induced_map(f, n, *src, *tgt);
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  }
  return true;
}

SelfEquivalenceGroup self_equivalence_group(const Classification& c, const DecideOptions& options) {
  if (!c.complete) throw Error(ErrorKind::ClassificationIncomplete, "homotopy classification is incomplete");
  if (c.classes.empty()) throw Error(ErrorKind::PreconditionViolated, "no homotopy classes");
  const Morphism& any = c.classes.front().representative;
  if (!same_ring(any.source()->ring(), any.target()->ring()))
    throw Error(ErrorKind::PreconditionViolated, "self-equivalences need equal source and target");
  const long bound = any.source()->top_degree();
  SelfEquivalenceGroup g;
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    if (induces_isomorphism(c.classes[k].representative, bound)) g.elements.push_back(k);

  auto locate = [&](const Morphism& m) -> std::size_t {
    for (std::size_t p = 0; p < g.elements.size(); ++p) {
      HomotopyDecision d = decide_homotopic(m, c.classes[g.elements[p]].representative, options);
      if (d.verdict == Verdict::Yes) return p;
      if (d.verdict == Verdict::Undetermined)
        throw Error(ErrorKind::ClassificationIncomplete, "could not locate a composite among the classes");
    }
    throw Error(ErrorKind::ClassificationIncomplete, "a composite lies in no listed class");
  };
  g.identity = locate(Morphism::identity(any.source()));
  const std::size_t n = g.elements.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table[a][b] = locate(compose(c.classes[g.elements[a]].representative, c.classes[g.elements[b]].representative));

  std::size_t max_order = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t order = 1, x = a;
    while (x != g.identity && order <= n) {
      x = g.table[a][x];
      ++order;
    }
    max_order = std::max(max_order, order);
  }
  if (n == 1)
    g.name = "trivial";
  else if (max_order == n)
    g.name = "Z" + std::to_string(n);
  else
    g.name = "order " + std::to_string(n);
  return g;
}

}  // namespace dgahom
