#include "properties.hpp"

#include "dgahom/cylinder.hpp"
#include "dgahom/obstruction.hpp"

#include <set>

namespace dgahom::testing {

namespace {

using Result = std::optional<std::string>;

AlgebraShape small_shape() { return AlgebraShape{1, 4, 2, 9, 2, 0.3, {}}; }

long random_degree(Rng& rng, const Presentation& a, long lo = 0) {
  return uniform(rng, lo, std::max<long>(lo, a.top_degree() + 3));
}

int sign_of(long p, long q) { return (p * q) % 2 == 0 ? 1 : -1; }

Result koszul_laws(Rng& rng) {
  PresentationPtr a = random_minimal_algebra(rng, small_shape());
  const long p = random_degree(rng, *a, 1), q = random_degree(rng, *a, 1), r = random_degree(rng, *a, 1);
  Element x = random_element(rng, *a, p, 3), y = random_element(rng, *a, q, 3), z = random_element(rng, *a, r, 3);
  if (mul(x, y) != mul(y, x).scaled(Rational(sign_of(p, q)))) return "graded commutativity fails";
  if (mul(mul(x, y), z) != mul(x, mul(y, z))) return "associativity fails";
  if (mul(Element::one(a->ring()), x) != x) return "unit law fails";
  if (p % 2 != 0 && !mul(x, x).is_zero()) return "odd square is nonzero";
  // Normalizing an already canonical product changes nothing.
  const Element product = mul(x, y);
  for (const auto& [m, c] : product.terms()) {
    std::vector<std::pair<std::size_t, std::uint32_t>> raw;
    for (const Factor& f : m.factors()) raw.emplace_back(f.gen, f.exp);
    SignedMonomial n = normalize_monomial(*a->ring(), raw);
    if (n.sign != 1 || n.monomial != m) return "normalization is not idempotent";
  }
  return std::nullopt;
}

Result leibniz(Rng& rng) {
  PresentationPtr a = random_minimal_algebra(rng, small_shape());
  const long p = random_degree(rng, *a, 1), q = random_degree(rng, *a, 1);
  Element x = random_element(rng, *a, p, 3), y = random_element(rng, *a, q, 3);
  Element lhs = a->d(mul(x, y));
  Element rhs = mul(a->d(x), y) + mul(x, a->d(y)).scaled(Rational(p % 2 == 0 ? 1 : -1));
  if (lhs != rhs) return "d(xy) != dx y + (-1)^|x| x dy";
  // A random derivation of degree k against the two-term expansion.
  const int k = static_cast<int>(uniform(rng, -2, 3));
  std::vector<Element> theta;
  for (std::size_t v = 0; v < a->size(); ++v)
    theta.push_back(a->ring()->degree(v) + k >= 0 ? random_element(rng, *a, a->ring()->degree(v) + k, 2, 2)
                                                  : Element::zero(a->ring()));
  Element t_lhs = apply_derivation(theta, k, mul(x, y));
  Element t_rhs = mul(apply_derivation(theta, k, x), y) +
                  mul(x, apply_derivation(theta, k, y)).scaled(Rational(sign_of(k, p)));
  if (t_lhs != t_rhs) return "derivation sign rule fails for degree " + std::to_string(k);
  if (!apply_derivation(theta, k, Element::one(a->ring())).is_zero()) return "derivation does not kill 1";
  return std::nullopt;
}

Result d_squared(Rng& rng) {
  PresentationPtr a = random_minimal_algebra(rng, small_shape());
  if (!validate_presentation(*a).empty()) return "random presentation is invalid";
  Element x = random_element(rng, *a, random_degree(rng, *a), 3, 5);
  if (!a->d(a->d(x)).is_zero()) return "d^2 != 0";
  return std::nullopt;
}

Result morphism_laws(Rng& rng) {
  MapSetting s = random_map_setting(rng, small_shape());
  const PresentationPtr &m = s.source, &n = s.target;
  const Morphism& f = *s.map;
  if (!check_chain_map(f).empty()) return "random chain map has defects";
  Element x = random_element(rng, *m, random_degree(rng, *m, 1), 2);
  Element y = random_element(rng, *m, random_degree(rng, *m, 1), 2);
  if (f.apply(mul(x, y)) != mul(f.apply(x), f.apply(y))) return "f(xy) != f(x)f(y)";
  if (f.apply(m->d(x)) != n->d(f.apply(x))) return "fd != df";
  return std::nullopt;
}

Result basis_spans(Rng& rng) {
  PresentationPtr a = random_minimal_algebra(rng, small_shape());
  // A random product of generators lands in the basis of its degree.
  Element x = Element::one(a->ring());
  long deg = 0;
  for (long k = uniform(rng, 0, 4); k > 0; --k) {
    const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a->size()) - 1));
    x = mul(x, a->generator(v));
    deg += a->ring()->degree(v);
  }
  auto basis = monomial_basis(*a, deg);
  std::set<Monomial> unique(basis.begin(), basis.end());
  if (unique.size() != basis.size()) return "duplicate basis monomials";
  for (const auto& m : basis)
    if (m.degree(*a->ring()) != deg) return "basis monomial of the wrong degree";
  for (const auto& [m, c] : x.terms())
    if (!unique.count(m)) return "product term outside the basis";
  return std::nullopt;
}

PresentationPtr cylinder_base(Rng& rng) { return random_minimal_algebra(rng, AlgebraShape{1, 3, 2, 6, 2, 0.3, {}}); }

Element random_cylinder_element(Rng& rng, const CylinderAlgebra& c, long degree) {
  return random_element(rng, *c.presentation(), degree, 2, 3);
}

Result cylinder_laws(Rng& rng) {
  PresentationPtr base = cylinder_base(rng);
  CylinderPtr c = build_cylinder(base);
  const long deg = uniform(rng, 1, base->top_degree() + 2);
  Element x = random_cylinder_element(rng, *c, deg);
  if (!c->i(c->i(x)).is_zero()) return "i^2 != 0";
  if (c->gamma(x) != c->d(c->i(x)) + c->i(c->d(x))) return "gamma != di + id";
  if (c->d(c->gamma(x)) != c->gamma(c->d(x))) return "d gamma != gamma d";
  if (!c->d(c->d(x)).is_zero()) return "d^2 != 0 on the cylinder";
  return std::nullopt;
}

Result alpha_laws(Rng& rng) {
  PresentationPtr base = cylinder_base(rng);
  CylinderPtr c = shared_cylinder(base);
  const long p = uniform(rng, 1, base->top_degree() + 1), q = uniform(rng, 1, base->top_degree() + 1);
  Element x = random_cylinder_element(rng, *c, p), y = random_cylinder_element(rng, *c, q);
  if (c->alpha(mul(x, y)) != mul(c->alpha(x), c->alpha(y))) return "alpha(xy) != alpha(x)alpha(y)";
  if (c->d(c->alpha(x)) != c->alpha(c->d(x))) return "d alpha != alpha d";
  for (std::size_t v = 0; v < base->size(); ++v)
    if (base->d_generator(v).is_zero() &&
        c->alpha_generator(v) != c->plain_generator(v) + c->hat_generator(v))
      return "alpha(x) != x + xhat on a cocycle generator";
  return std::nullopt;
}

Result gamma_nilpotence(Rng& rng) {
  PresentationPtr base = cylinder_base(rng);
  CylinderPtr c = shared_cylinder(base);
  const long deg = uniform(rng, 1, base->top_degree() + 3);
  auto basis = monomial_basis(*c->presentation(), deg);
  if (basis.empty()) return std::nullopt;
  const Monomial& m = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(basis.size()) - 1))];
  long plain_degree = 0;
  for (const Factor& f : m.factors())
    if (c->role(f.gen) == CylinderAlgebra::Role::Plain) plain_degree += static_cast<long>(f.exp) * c->ring()->degree(f.gen);
  Element x = Element::monomial(c->ring(), m, Rational(1));
  for (long k = 0; k <= plain_degree; ++k) x = c->gamma(x);
  if (!x.is_zero()) return "gamma^(P+1) != 0 on " + to_string(*c->ring(), m);
  return std::nullopt;
}

AlgebraShape oracle_shape() { return AlgebraShape{1, 3, 2, 8, 2, 0.2, {}}; }

ObstructionDecomposition random_degree_decomposition(Rng& rng, const PresentationPtr& a) {
  std::vector<long> degrees;
  for (const auto& g : a->ring()->generators()) degrees.push_back(g.degree);
  return degree_decomposition(a, degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(degrees.size()) - 1))]);
}

Result xi_ideals(Rng& rng) {
  PresentationPtr base = cylinder_base(rng);
  CylinderPtr c = shared_cylinder(base);
  ObstructionDecomposition d = random_degree_decomposition(rng, base);
  std::vector<bool> v0 = d.v0_mask();
  for (std::size_t w : d.v1()) {
    XiStructure s = inspect_xi(*c, w, v0);
    if (!s.decomposable || !s.in_sub_cylinder || !s.in_bar_ideal || !s.in_plain_hat_ideal)
      return "xi(" + base->ring()->name(w) + ") violates the ideal conditions";
  }
  return std::nullopt;
}

// f vanishing on V0 with random cocycle images on V1.
Morphism vanishing_map(Rng& rng, const ObstructionDecomposition& d, const PresentationPtr& target) {
  const PresentationPtr& src = d.algebra();
  CochainComplex tc(target);
  std::vector<Element> images(src->size(), Element::zero(target->ring()));
  for (std::size_t w : d.v1()) {
    const long n = src->ring()->degree(w);
    std::vector<Vector> ker = kernel_basis(tc.d_matrix(n));
    Vector x(tc.basis(n).size(), Rational(0));
    for (const auto& k : ker) {
      Rational s = random_coefficient(rng, 2);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * k[i];
    }
    images[w] = tc.element(x, n);
  }
  return Morphism(src, target, images);
}

Vector obstruction_coordinates(const ObstructionValue& o, const CochainComplex& tc) {
  Vector out;
  for (const auto& e : o.entries) {
    Vector c = class_coordinates(tc, e.value.degree, e.value.representative);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

struct PairSetup {
  PresentationPtr source, target;
  std::optional<ObstructionDecomposition> d;
};

PairSetup pair_setup(Rng& rng) {
  PairSetup s;
  s.source = random_minimal_algebra(rng, AlgebraShape{1, 3, 2, 7, 2, 0.3, {}}, "m");
  s.target = random_minimal_algebra(rng, AlgebraShape{1, 3, 2, 7, 2, 0.3, {}}, "n");
  s.d.emplace(random_degree_decomposition(rng, s.source));
  return s;
}

Result obstruction_independence(Rng& rng) {
  PairSetup s = pair_setup(rng);
  const ObstructionDecomposition& d = *s.d;
  Morphism f = vanishing_map(rng, d, s.target), g = vanishing_map(rng, d, s.target);
  CylinderPtr c = shared_cylinder(s.source);
  CochainComplex tc(s.target);
  std::vector<bool> v0 = d.v0_mask();
  Homotopy zero = Homotopy::constant(c, f, v0);
  Vector reference = obstruction_coordinates(compute_obstruction(f, g, zero, d), tc);
  // Cocycle bars give homotopies from 0 to 0 on Lambda V0.
  std::vector<Element> bars(s.source->size(), Element::zero(s.target->ring()));
  for (std::size_t v = 0; v < s.source->size(); ++v) {
    if (!v0[v]) continue;
    const long n = s.source->ring()->degree(v) - 1;
    std::vector<Vector> ker = kernel_basis(tc.d_matrix(n));
    Vector x(tc.basis(n).size(), Rational(0));
    for (const auto& k : ker) {
      Rational q = random_coefficient(rng, 2);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += q * k[i];
    }
    bars[v] = tc.element(x, n);
  }
  Homotopy h(c, f, v0, bars);
  Vector other = obstruction_coordinates(compute_obstruction(f, g, h, d), tc);
  if (other != reference) return "obstruction depends on the homotopy";
  for (const auto& e : compute_obstruction(f, g, zero, d).entries) {
    Element diff = f.image(e.generator) - g.image(e.generator);
    if (class_coordinates(tc, e.value.degree, diff) != class_coordinates(tc, e.value.degree, e.value.representative))
      return "obstruction is not [f(w) - g(w)]";
  }
  return std::nullopt;
}

Result obstruction_additivity(Rng& rng) {
  PairSetup s = pair_setup(rng);
  const ObstructionDecomposition& d = *s.d;
  Morphism f = vanishing_map(rng, d, s.target), g = vanishing_map(rng, d, s.target);
  Morphism z = Morphism::zero(s.source, s.target);
  CylinderPtr c = shared_cylinder(s.source);
  CochainComplex tc(s.target);
  std::vector<bool> v0 = d.v0_mask();
  Vector fg = obstruction_coordinates(compute_obstruction(f, g, Homotopy::constant(c, f, v0), d), tc);
  Vector f0 = obstruction_coordinates(compute_obstruction(f, z, Homotopy::constant(c, f, v0), d), tc);
  Vector g0 = obstruction_coordinates(compute_obstruction(g, z, Homotopy::constant(c, g, v0), d), tc);
  for (std::size_t i = 0; i < fg.size(); ++i)
    if (fg[i] != f0[i] - g0[i]) return "O(f,g) != O(f,0) - O(g,0)";
  return std::nullopt;
}

Result extension_roundtrip(Rng& rng) {
  PresentationPtr m = random_minimal_algebra(rng, AlgebraShape{1, 3, 2, 7, 2, 0.3, {}}, "m");
  PresentationPtr n = random_minimal_algebra(rng, AlgebraShape{1, 3, 2, 7, 2, 0.3, {}}, "n");
  ObstructionDecomposition d = degree_decomposition(m, m->top_degree());
  Morphism f = random_chain_map(rng, m, n, 2);
  CochainComplex tc(n);
  std::vector<Element> images = f.images();
  // g agrees with f on V0; on V1 it differs by a cocycle, sometimes a coboundary.
  for (std::size_t w : d.v1()) {
    const long deg = m->ring()->degree(w);
    if (uniform(rng, 0, 1) == 0)
      images[w] += n->d(random_homogeneous(rng, tc, deg - 1, 2));
    else {
      std::vector<Vector> ker = kernel_basis(tc.d_matrix(deg));
      Vector x(tc.basis(deg).size(), Rational(0));
      for (const auto& k : ker) {
        Rational q = random_coefficient(rng, 1);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += q * k[i];
      }
      images[w] += tc.element(x, deg);
    }
  }
  Morphism g(m, n, images);
  Homotopy h = Homotopy::constant(shared_cylinder(m), f, d.v0_mask());
  ExtensionResult ext = extend_to_homotopy(f, g, h, d);
  if (ext.extended()) {
    std::vector<bool> domain = ext.homotopy->domain();
    for (std::size_t v = 0; v < m->size(); ++v)
      if (domain[v] && ext.homotopy->end_image(v) != g.image(v)) return "extended homotopy does not end at g";
  } else if (!ext.obstruction || ext.obstruction->is_zero()) {
    return "extension failed without a nonzero obstruction";
  }
  return std::nullopt;
}

Filtration alternative_filtration(Rng& rng, const PresentationPtr& a) {
  // Each generator strictly after everything its differential uses, with random gaps.
  std::vector<long> stages(a->size(), 0);
  for (std::size_t v = 0; v < a->size(); ++v) {
    long s = 0;
    for (const auto& [m, c] : a->d_generator(v).terms())
      for (const Factor& f : m.factors()) s = std::max(s, stages[f.gen] + 1);
    stages[v] = s + uniform(rng, 0, 2);
  }
  return Filtration(a, stages);
}

Result filtration_independence(Rng& rng) {
  MapSetting s = random_map_setting(rng, oracle_shape());
  const PresentationPtr& m = s.source;
  const Morphism& f = *s.map;
  bool by_degree = decide_nullhomotopic(f, Filtration::by_degree(m)).nullhomotopic;
  bool other = decide_nullhomotopic(f, alternative_filtration(rng, m)).nullhomotopic;
  if (by_degree != other) return "verdict depends on the filtration";
  return std::nullopt;
}

Result homotopy_invariance(Rng& rng) {
  MapSetting s = random_map_setting(rng, oracle_shape());
  const Morphism& f = *s.map;
  CochainComplex tc(s.target);
  std::vector<Element> bars;
  for (std::size_t v = 0; v < s.source->size(); ++v)
    bars.push_back(random_homogeneous(rng, tc, s.source->ring()->degree(v) - 1, 1));
  Homotopy h(shared_cylinder(s.source), f, std::vector<bool>(s.source->size(), true), bars);
  Morphism g = h.end_map();
  if (!g.is_chain_map()) return "end of a homotopy is not a chain map";
  bool f_null = decide_nullhomotopic(f).nullhomotopic;
  bool g_null = decide_nullhomotopic(g).nullhomotopic;
  if (f_null != g_null) return "homotopic maps get different nullhomotopy verdicts";
  if (decide_homotopic(f, g).verdict == Verdict::No) return "a homotopy's ends are declared non-homotopic";
  if (path_nullhomotopy_oracle(g) != g_null) return "path-object oracle disagrees on the end map";
  return std::nullopt;
}

Result oracle_agreement(Rng& rng) {
  MapSetting s = random_map_setting(rng, oracle_shape());
  const PresentationPtr& m = s.source;
  const Morphism& f = *s.map;
  NullhomotopyResult r = decide_nullhomotopic(f);
  if (r.nullhomotopic) {
    if (!r.homotopy || !r.homotopy->end_map().is_zero()) return "nullhomotopy witness does not end at 0";
  }
  bool oracle = path_nullhomotopy_oracle(f);
  if (oracle != r.nullhomotopic)
    return std::string("decider says ") + (r.nullhomotopic ? "yes" : "no") + ", path-object oracle says " +
           (oracle ? "yes" : "no");
  return std::nullopt;
}

}  // namespace

std::vector<Property> algebraic_properties() {
  return {
      {"koszul sign laws", koszul_laws},
      {"Leibniz rule", leibniz},
      {"d squared vanishes", d_squared},
      {"chain maps respect products and d", morphism_laws},
      {"monomial bases", basis_spans},
      {"cylinder identities", cylinder_laws},
      {"alpha is a DGA map", alpha_laws},
      {"gamma local nilpotence", gamma_nilpotence},
      {"xi ideal membership", xi_ideals},
      {"obstruction homotopy independence", obstruction_independence},
      {"obstruction additivity", obstruction_additivity},
      {"extension roundtrip", extension_roundtrip},
      {"filtration independence", filtration_independence},
      {"nullhomotopy oracle agreement", oracle_agreement},
      {"homotopy invariance of the deciders", homotopy_invariance},
  };
}

PropertyTally run_property(const Property& p, std::size_t cases, std::uint64_t seed) {
  PropertyTally t;
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++t.cases;
    std::optional<std::string> failure;
    try {
      failure = p.run(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++t.failures;
      if (t.messages.size() < 3) t.messages.push_back("case " + std::to_string(i) + ": " + *failure);
    }
  }
  return t;
}

}  // namespace dgahom::testing
