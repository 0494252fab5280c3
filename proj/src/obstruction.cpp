#include "dgahom/obstruction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dgahom/error.hpp"

namespace dgahom {

ObstructionDecomposition::ObstructionDecomposition(PresentationPtr algebra, std::vector<GeneratorRole> roles)
    : algebra_(std::move(algebra)), roles_(std::move(roles)) {
  const Ring& ring = *algebra_->ring();
  if (roles_.size() != ring.size()) throw Error(ErrorKind::DimensionMismatch, "one role per generator required");
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (roles_[v] == GeneratorRole::Outside) continue;
    for (const auto& [m, c] : algebra_->d_generator(v).terms())
      for (const Factor& f : m.factors())
        if (roles_[f.gen] != GeneratorRole::V0)
          throw Error(ErrorKind::InvalidDecomposition,
                      "d(" + ring.name(v) + ") has the monomial " + to_string(ring, m) + " using " +
                          ring.name(f.gen) + ", which is not in V0");
  }
}

std::vector<bool> ObstructionDecomposition::v0_mask() const {
  std::vector<bool> mask(roles_.size());
  for (std::size_t v = 0; v < roles_.size(); ++v) mask[v] = roles_[v] == GeneratorRole::V0;
  return mask;
}

std::vector<std::size_t> ObstructionDecomposition::v1() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < roles_.size(); ++v)
    if (roles_[v] == GeneratorRole::V1) out.push_back(v);
  return out;
}

ObstructionDecomposition degree_decomposition(const PresentationPtr& a, int n) {
  std::vector<GeneratorRole> roles;
  for (const auto& g : a->ring()->generators())
    roles.push_back(g.degree < n ? GeneratorRole::V0 : g.degree == n ? GeneratorRole::V1 : GeneratorRole::Outside);
  return ObstructionDecomposition(a, std::move(roles));
}

ObstructionDecomposition tagged_decomposition(const PresentationPtr& a, const std::vector<std::string>& v1_names) {
  std::vector<GeneratorRole> roles(a->size(), GeneratorRole::V0);
  for (const auto& name : v1_names) roles[a->ring()->index_of(name)] = GeneratorRole::V1;
  return ObstructionDecomposition(a, std::move(roles));
}

Filtration::Filtration(PresentationPtr algebra, std::vector<long> stages)
    : algebra_(std::move(algebra)), stages_(std::move(stages)) {
  const Ring& ring = *algebra_->ring();
  if (stages_.size() != ring.size()) throw Error(ErrorKind::InvalidFiltration, "one stage per generator required");
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (stages_[v] < 0) throw Error(ErrorKind::InvalidFiltration, "negative stage on " + ring.name(v));
    for (const auto& [m, c] : algebra_->d_generator(v).terms())
      for (const Factor& f : m.factors())
        if (stages_[f.gen] >= stages_[v])
          throw Error(ErrorKind::InvalidFiltration, "d(" + ring.name(v) + ") uses " + ring.name(f.gen) +
                                                        ", which is not in an earlier stage");
  }
  values_ = stages_;
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Filtration Filtration::by_degree(const PresentationPtr& a) {
  std::vector<long> stages;
  for (const auto& g : a->ring()->generators()) stages.push_back(g.degree);
  return Filtration(a, std::move(stages));
}

Filtration Filtration::from_annotations(const PresentationPtr& a) {
  std::vector<long> stages;
  for (const auto& g : a->ring()->generators()) {
    if (!g.stage) throw Error(ErrorKind::InvalidFiltration, "generator " + g.name + " has no stage");
    stages.push_back(*g.stage);
  }
  return Filtration(a, std::move(stages));
}

ObstructionDecomposition Filtration::decomposition_at(long s) const {
  std::vector<GeneratorRole> roles;
  for (long st : stages_)
    roles.push_back(st < s ? GeneratorRole::V0 : st == s ? GeneratorRole::V1 : GeneratorRole::Outside);
  return ObstructionDecomposition(algebra_, std::move(roles));
}

std::vector<bool> Filtration::below(long s) const {
  std::vector<bool> mask;
  for (long st : stages_) mask.push_back(st < s);
  return mask;
}

bool ObstructionValue::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const ObstructionEntry& e) { return e.vanishes; });
}

const ObstructionEntry* ObstructionValue::entry(std::size_t generator) const {
  for (const auto& e : entries)
    if (e.generator == generator) return &e;
  return nullptr;
}

XiStructure inspect_xi(const CylinderAlgebra& cylinder, std::size_t w, const std::vector<bool>& v0) {
  XiStructure s{true, true, true, true};
  using Role = CylinderAlgebra::Role;
  const Element xi = cylinder.xi(w);
  for (const auto& [m, c] : xi.terms()) {
    if (m.length() < 2) s.decomposable = false;
    bool bar = false, plain_hat = false;
    for (const Factor& f : m.factors()) {
      const std::size_t b = cylinder.base_generator(f.gen);
      if (!v0[b]) {
        s.in_sub_cylinder = false;
        continue;
      }
      if (cylinder.role(f.gen) == Role::Bar)
        bar = true;
      else
        plain_hat = true;
    }
    if (!bar) s.in_bar_ideal = false;
    if (!plain_hat) s.in_plain_hat_ideal = false;
  }
  return s;
}

namespace {

void check_same_ends(const Morphism& f, const Morphism& g) {
  if (!same_ring(f.source()->ring(), g.source()->ring()) || !same_ring(f.target()->ring(), g.target()->ring()))
    throw Error(ErrorKind::PresentationMismatch, "maps have different sources or targets");
}

void check_homotopy_on_v0(const Morphism& f, const Morphism& g, const Homotopy& h, const std::vector<bool>& v0) {
  const Ring& ring = *f.source()->ring();
  for (std::size_t v = 0; v < v0.size(); ++v) {
    if (!v0[v]) continue;
    if (!h.in_domain(v))
      throw Error(ErrorKind::HomotopyEndpointMismatch, "homotopy is not defined on " + ring.name(v));
    if (!(h.start().image(v) == f.image(v)))
      throw Error(ErrorKind::HomotopyEndpointMismatch, "homotopy does not start at f on " + ring.name(v));
    if (!(h.end_image(v) == g.image(v)))
      throw Error(ErrorKind::HomotopyEndpointMismatch, "homotopy does not end at g on " + ring.name(v));
  }
}

}  // namespace

ObstructionValue compute_obstruction(const Morphism& f, const Morphism& g, const Homotopy& h,
                                     const ObstructionDecomposition& d) {
  check_same_ends(f, g);
  if (!same_ring(d.algebra()->ring(), f.source()->ring()))
    throw Error(ErrorKind::PresentationMismatch, "decomposition is over a different algebra");
  const std::vector<bool> v0 = d.v0_mask();
  check_homotopy_on_v0(f, g, h, v0);
  const CylinderAlgebra& cyl = *h.cylinder();
  ComplexPtr complex = shared_complex(f.target());
  const Presentation& tgt = *f.target();

  ObstructionValue out;
  out.roles = d.roles();
  for (std::size_t w : d.v1()) {
    if (!inspect_xi(cyl, w, v0).in_sub_cylinder)
      throw Error(ErrorKind::LemmaViolation,
                  "alpha(" + f.source()->ring()->name(w) + ") - w - what leaves the sub-cylinder on V0");
    Element rep = f.image(w) + h.apply(cyl.xi(w)) - g.image(w);
    if (!tgt.d(rep).is_zero()) throw std::logic_error("obstruction representative is not a cocycle");
    ObstructionEntry e;
    e.generator = w;
    e.value = CohomologyClass{f.target(), f.source()->ring()->degree(w), rep, std::nullopt};
    e.witness = is_coboundary(*complex, rep);
    e.vanishes = e.witness.has_value();
    out.entries.push_back(std::move(e));
  }
  return out;
}

ExtensionResult extend_to_homotopy(const Morphism& f, const Morphism& g, const Homotopy& h,
                                   const ObstructionDecomposition& d) {
  ExtensionResult result;
  ObstructionValue o = compute_obstruction(f, g, h, d);
  if (!o.is_zero()) {
    result.obstruction = std::move(o);
    return result;
  }
  const std::size_t n = f.source()->size();
  std::vector<bool> domain(n, false);
  std::vector<Element> bars(n, Element::zero(f.target()->ring()));
  for (std::size_t v = 0; v < n; ++v) {
    if (d.role(v) == GeneratorRole::V0) {
      domain[v] = true;
      bars[v] = h.bar(v);
    }
  }
  for (const auto& e : o.entries) {
    domain[e.generator] = true;
    bars[e.generator] = -*e.witness;
  }
  Homotopy k(h.cylinder(), f, std::move(domain), std::move(bars));
  for (const auto& e : o.entries)
    if (!(k.end_image(e.generator) == g.image(e.generator)))
      throw std::logic_error("extended homotopy misses the end map");
  result.homotopy = std::move(k);
  result.obstruction = std::move(o);
  return result;
}

ExtensionResult decide_homotopic_zero_restriction(const Morphism& f, const Morphism& g,
                                                  const ObstructionDecomposition& d) {
  check_same_ends(f, g);
  const std::vector<bool> v0 = d.v0_mask();
  for (std::size_t v = 0; v < v0.size(); ++v)
    if (v0[v] && (!f.image(v).is_zero() || !g.image(v).is_zero()))
      throw Error(ErrorKind::PreconditionViolated,
                  "maps must vanish on V0, but not on " + f.source()->ring()->name(v));
  Homotopy h = Homotopy::constant(shared_cylinder(f.source()), f, v0);
  return extend_to_homotopy(f, g, h, d);
}

NullhomotopyResult decide_nullhomotopic(const Morphism& f, const Filtration& filtration) {
  if (!same_ring(filtration.algebra()->ring(), f.source()->ring()))
    throw Error(ErrorKind::InvalidFiltration, "filtration is over a different algebra");
  const std::size_t n = f.source()->size();
  CylinderPtr cyl = shared_cylinder(f.source());
  const Morphism zero = Morphism::zero(f.source(), f.target());
  Homotopy h = Homotopy::constant(cyl, f, std::vector<bool>(n, false));
  NullhomotopyResult out;
  for (long s : filtration.stage_values()) {
    ObstructionDecomposition d = filtration.decomposition_at(s);
    ExtensionResult ext = extend_to_homotopy(f, zero, h, d);
    if (ext.extended()) {
      h = std::move(*ext.homotopy);
      continue;
    }
    // Push f along the partial homotopy: the end map vanishes below stage s.
    const std::vector<bool> below = filtration.below(s);
    Homotopy full = extend_homotopy_cofibration(below, f, h.restricted(below));
    Morphism shifted = full.end_map();
    ExtensionResult witness = decide_homotopic_zero_restriction(shifted, zero, d);
    if (witness.extended()) throw std::logic_error("shifted map lost its obstruction");
    out.stage = s;
    out.modified = std::move(shifted);
    out.obstruction = std::move(witness.obstruction);
    return out;
  }
  out.nullhomotopic = true;
  out.homotopy = std::move(h);
  return out;
}

NullhomotopyResult decide_nullhomotopic(const Morphism& f) {
  return decide_nullhomotopic(f, Filtration::by_degree(f.source()));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::optional<InducedMapCertificate> induced_map_difference(const Morphism& f, const Morphism& g, long bound) {
  check_same_ends(f, g);
  ComplexPtr src = shared_complex(f.source());
  ComplexPtr tgt = shared_complex(f.target());
  for (long n = 2; n <= bound; ++n) {
    RationalMatrix mf = induced_map(f, n, *src, *tgt);
    RationalMatrix mg = induced_map(g, n, *src, *tgt);
    if (!(mf == mg)) return InducedMapCertificate{n, std::move(mf), std::move(mg)};
  }
  return std::nullopt;
}

namespace {

// Representatives f(w) + H(xi_w) - g(w) for the V1 generators.
std::vector<Element> obstruction_representatives(const Morphism& f, const Morphism& g, const Homotopy& h,
                                                 const std::vector<std::size_t>& v1) {
  std::vector<Element> reps;
  for (std::size_t w : v1) reps.push_back(f.image(w) + h.apply(h.cylinder()->xi(w)) - g.image(w));
  return reps;
}

struct Perturbation {
  std::size_t generator;
  Element cocycle;
};

Homotopy perturbed(const Homotopy& h, const std::vector<Perturbation>& dirs, const std::vector<Rational>& t) {
  std::vector<Element> bars = h.bars();
  for (std::size_t j = 0; j < dirs.size(); ++j)
    if (!is_zero(t[j])) bars[dirs[j].generator] += dirs[j].cocycle.scaled(t[j]);
  return Homotopy(h.cylinder(), h.start(), h.domain(), std::move(bars));
}

// Re-chooses the bars of the previous stage up to cocycles so that the
// obstruction at the current stage vanishes. Soundness only rests on the
// final exact extension; the affine model and the grid are search devices.
std::optional<Homotopy> search_corrections(const Morphism& f, const Morphism& g, const Homotopy& h,
                                           const ObstructionDecomposition& d,
                                           const std::vector<std::size_t>& previous, const DecideOptions& options,
                                           std::string& shape) {
  const Presentation& tgt = *f.target();
  ComplexPtr complex = shared_complex(f.target());
  std::vector<Perturbation> dirs;
  for (std::size_t p : previous) {
    const long deg = f.source()->ring()->degree(p) - 1;
    for (const auto& z : kernel_basis(complex->d_matrix(deg))) dirs.push_back({p, complex->element(z, deg)});
  }
  const std::vector<std::size_t> v1 = d.v1();
  std::ostringstream os;
  os << dirs.size() << " cocycle corrections on the previous stage against " << v1.size()
     << " obstruction classes";
  if (dirs.empty()) {
    shape = os.str() + "; no corrections available";
    return std::nullopt;
  }

  auto attempt = [&](const std::vector<Rational>& t) -> std::optional<Homotopy> {
    ExtensionResult ext = extend_to_homotopy(f, g, perturbed(h, dirs, t), d);
    if (ext.extended()) return std::move(ext.homotopy);
    return std::nullopt;
  };

  const std::size_t J = dirs.size();
  std::vector<Rational> zero(J);
  std::vector<Element> r0 = obstruction_representatives(f, g, h, v1);
  std::vector<std::vector<Element>> slopes;
  for (std::size_t j = 0; j < J; ++j) {
    std::vector<Rational> e(J);
    e[j] = 1;
    std::vector<Element> rj = obstruction_representatives(f, g, perturbed(h, dirs, e), v1);
    for (std::size_t k = 0; k < rj.size(); ++k) rj[k] -= r0[k];
    slopes.push_back(std::move(rj));
  }
  // Unknowns: t (J entries), then a primitive for each V1 class.
  std::size_t rows = 0, cols = J;
  std::vector<std::size_t> row_offset, col_offset;
  for (std::size_t w : v1) {
    const long deg = f.source()->ring()->degree(w);
    row_offset.push_back(rows);
    col_offset.push_back(cols);
    rows += complex->basis(deg).size();
    cols += complex->basis(deg - 1).size();
  }
  RationalMatrix a(rows, cols);
  Vector b(rows);
  for (std::size_t k = 0; k < v1.size(); ++k) {
    const long deg = f.source()->ring()->degree(v1[k]);
    for (std::size_t j = 0; j < J; ++j) {
      Vector s = complex->coordinates(slopes[j][k], deg);
      for (std::size_t r = 0; r < s.size(); ++r) a.set(row_offset[k] + r, j, s[r]);
    }
    const RationalMatrix& dm = complex->d_matrix(deg - 1);
    for (std::size_t r = 0; r < dm.rows(); ++r)
      for (const auto& [c, v] : dm.row(r)) a.set(row_offset[k] + r, col_offset[k] + c, -v);
    Vector c0 = complex->coordinates(r0[k], deg);
    for (std::size_t r = 0; r < c0.size(); ++r) b[row_offset[k] + r] = -c0[r];
  }
  LinearSolution sol = rref_solve(a, b);
  if (sol.solvable()) {
    std::vector<Rational> t(sol.particular->begin(), sol.particular->begin() + static_cast<long>(J));
    if (auto k = attempt(t)) return k;
  }
  if (J <= options.max_grid_parameters) {
    std::vector<int> idx(J, -options.grid);
    for (;;) {
      std::vector<Rational> t(J);
      for (std::size_t j = 0; j < J; ++j) t[j] = idx[j];
      if (auto k = attempt(t)) return k;
      std::size_t j = 0;
      while (j < J && ++idx[j] > options.grid) idx[j++] = -options.grid;
      if (j == J) break;
    }
    os << "; affine model " << (sol.solvable() ? "solvable but not exact" : "inconsistent")
       << "; grid [" << -options.grid << ", " << options.grid << "]^" << J << " exhausted";
  } else {
    os << "; affine model " << (sol.solvable() ? "solvable but not exact" : "inconsistent")
       << "; too many parameters for a grid search";
  }
  (void)tgt;
  shape = os.str();
  return std::nullopt;
}

std::vector<std::size_t> differential_support(const Presentation& a) {
  std::set<std::size_t> s;
  for (std::size_t v = 0; v < a.size(); ++v)
    for (const auto& [m, c] : a.d_generator(v).terms())
      for (const Factor& f : m.factors()) s.insert(f.gen);
  return {s.begin(), s.end()};
}

}  // namespace

HomotopyDecision decide_homotopic(const Morphism& f, const Morphism& g, const Filtration& filtration,
                                  const DecideOptions& options) {
  check_same_ends(f, g);
  if (!f.is_chain_map() || !g.is_chain_map())
    throw Error(ErrorKind::PreconditionViolated, "homotopy is only decided between chain maps");
  const std::size_t n = f.source()->size();
  CylinderPtr cyl = shared_cylinder(f.source());
  HomotopyDecision out;

  if (f == g) {
    out.verdict = Verdict::Yes;
    out.method = "equal";
    out.homotopy = Homotopy::constant(cyl, f, std::vector<bool>(n, true));
    return out;
  }
  if (f.is_zero() || g.is_zero()) {
    const Morphism& other = f.is_zero() ? g : f;
    NullhomotopyResult r = decide_nullhomotopic(other, filtration);
    out.method = "nullhomotopy";
    out.stage_reached = r.stage;
    if (r.nullhomotopic) {
      out.verdict = Verdict::Yes;
      if (g.is_zero()) out.homotopy = std::move(r.homotopy);
    } else {
      out.verdict = Verdict::No;
      out.obstruction = std::move(r.obstruction);
    }
    return out;
  }

  const long bound = options.degree_bound >= 0 ? options.degree_bound : f.source()->top_degree();
  if (auto cert = induced_map_difference(f, g, bound)) {
    out.verdict = Verdict::No;
    out.method = "induced-map";
    out.induced = std::move(cert);
    return out;
  }

  {
    std::vector<GeneratorRole> roles(n, GeneratorRole::V1);
    bool vanish = true;
    for (std::size_t v : differential_support(*f.source())) {
      roles[v] = GeneratorRole::V0;
      if (!f.image(v).is_zero() || !g.image(v).is_zero()) vanish = false;
    }
    if (vanish) {
      ObstructionDecomposition d(f.source(), roles);
      ExtensionResult r = decide_homotopic_zero_restriction(f, g, d);
      out.method = "zero-restriction";
      out.verdict = r.extended() ? Verdict::Yes : Verdict::No;
      out.homotopy = std::move(r.homotopy);
      out.obstruction = std::move(r.obstruction);
      return out;
    }
  }

  Homotopy h = Homotopy::constant(cyl, f, std::vector<bool>(n, false));
  std::vector<std::size_t> previous;
  out.method = "stagewise";
  const auto& stages = filtration.stage_values();
  for (std::size_t idx = 0; idx < stages.size(); ++idx) {
    const long s = stages[idx];
    out.stage_reached = s;
    ObstructionDecomposition d = filtration.decomposition_at(s);
    ExtensionResult ext = extend_to_homotopy(f, g, h, d);
    if (!ext.extended()) {
      if (idx == 0) {
        // Nothing below the first stage, so the obstruction is the
        // difference class itself and is independent of choices.
        out.verdict = Verdict::No;
        out.obstruction = std::move(ext.obstruction);
        return out;
      }
      std::string shape;
      auto fixed = search_corrections(f, g, h, d, previous, options, shape);
      if (!fixed) {
        out.verdict = Verdict::Undetermined;
        out.obstruction = std::move(ext.obstruction);
        out.residual_shape = shape;
        return out;
      }
      h = std::move(*fixed);
    } else {
      h = std::move(*ext.homotopy);
    }
    previous = d.v1();
  }
  out.verdict = Verdict::Yes;
  out.homotopy = std::move(h);
  return out;
}

HomotopyDecision decide_homotopic(const Morphism& f, const Morphism& g, const DecideOptions& options) {
  return decide_homotopic(f, g, Filtration::by_degree(f.source()), options);
}

}  // namespace dgahom
