#include "dgahom/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "dgahom/error.hpp"
#include "dgahom/linalg.hpp"

namespace dgahom {

UnknownMorphism generic_ansatz(const PresentationPtr& source, const PresentationPtr& target) {
  UnknownMorphism u;
  u.source = source;
  u.target = target;
  const Ring& src = *source->ring();
  const Ring& tgt = *target->ring();
  for (std::size_t v = 0; v < src.size(); ++v) {
    ParamElement image = ParamElement::zero(target->ring());
    for (const Monomial& m : monomial_basis(tgt, src.degree(v))) {
      const auto k = static_cast<std::uint32_t>(u.unknowns.size());
      u.unknowns.push_back(src.name(v) + ":" + to_string(tgt, m));
      u.unknown_generator.push_back(v);
      image.add_term(m, ParamPoly::variable(k));
    }
    u.images.push_back(std::move(image));
  }
  return u;
}

ConstraintSystem constraint_system(const UnknownMorphism& u) {
  ConstraintSystem s;
  s.unknowns = u.unknowns;
  const Presentation& src = *u.source;
  const Presentation& tgt = *u.target;
  for (std::size_t v = 0; v < src.size(); ++v) {
    ParamElement fdv = substitute(u.images, tgt.ring(), promote(src.d_generator(v)));
    ParamElement residual = fdv - tgt.d(u.images[v]);
    for (const auto& [m, poly] : residual.terms()) s.equations.push_back(Constraint{v, m, poly});
  }
  return s;
}

Morphism SolutionFamily::instantiate(std::span<const Rational> params) const {
  if (params.size() != parameters.size()) throw Error(ErrorKind::DimensionMismatch, "parameter count");
  for (std::size_t p = 0; p < params.size(); ++p)
    if (parameters[p].multiplicative && is_zero(params[p]))
      throw Error(ErrorKind::PreconditionViolated, "parameter " + parameters[p].name + " must be nonzero");
  std::vector<Element> out;
  for (const auto& img : images) out.push_back(evaluate(img, params));
  return Morphism(source, target, std::move(out));
}

std::vector<Rational> SolutionFamily::representative_parameters() const {
  std::vector<Rational> p;
  for (const auto& fp : parameters) p.emplace_back(fp.multiplicative ? 1 : 0);
  return p;
}

std::vector<std::string> SolutionFamily::parameter_names() const {
  std::vector<std::string> names;
  for (const auto& p : parameters) names.push_back(p.name);
  return names;
}

namespace {

struct Term {
  ParamPoly::Mono mono;
  Rational coef;
};

struct Equation {
  std::size_t index = 0;
  std::vector<Term> nonlinear_part;  // all unknowns in the monomial layer, or constant
  std::vector<std::pair<std::uint32_t, Rational>> linear_part;
};

// c * prod t^e as a Laurent monomial in the family's parameters.
struct LaurentMonomial {
  Rational coef;
  std::vector<long> exps;

  ParamPoly poly() const {
    ParamPoly::Mono m;
    for (std::size_t l = 0; l < exps.size(); ++l)
      if (exps[l] != 0) m.emplace_back(static_cast<std::uint32_t>(l), static_cast<std::int32_t>(exps[l]));
    return ParamPoly::monomial(m, coef);
  }
};

class StructuredSolver {
 public:
  StructuredSolver(const UnknownMorphism& u, const ConstraintSystem& s) : u_(u), s_(s) {
    const std::size_t n = s.unknowns.size();
    monomial_layer_.assign(n, false);
    for (const auto& c : s.equations) {
      if (c.equation.has_negative_exponent()) unsupported(c, "negative exponent");
      for (const auto& [m, q] : c.equation.terms()) {
        long deg = 0;
        for (const auto& [v, e] : m) deg += e;
        if (deg >= 2)
          for (const auto& [v, e] : m) monomial_layer_[v] = true;
      }
    }
    for (std::size_t i = 0; i < s.equations.size(); ++i) {
      Equation eq;
      eq.index = i;
      for (const auto& [m, q] : s.equations[i].equation.terms()) {
        if (m.size() == 1 && m[0].second == 1 && !monomial_layer_[m[0].first])
          eq.linear_part.emplace_back(m[0].first, q);
        else
          eq.nonlinear_part.push_back(Term{m, q});
      }
      equations_.push_back(std::move(eq));
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!monomial_layer_[v]) linear_layer_.push_back(v);
    add_consistency_equations();
  }

  std::vector<SolutionFamily> run() {
    std::vector<int> status(s_.unknowns.size(), -1);
    dfs(status);
    return std::move(families_);
  }

 private:
  [[noreturn]] void unsupported(const Constraint& c, const std::string& why) const {
    throw Error(ErrorKind::UnsupportedShape,
                why + " in the equation " + c.equation.to_string(s_.unknowns) + " = 0 (generator " +
                    u_.source->ring()->name(c.generator) + ", monomial " + to_string(*u_.target->ring(), c.monomial) +
                    ")");
  }

  // Combinations of equations in which the linear unknowns cancel are
  // equations in the monomial layer alone.
  void add_consistency_equations() {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < equations_.size(); ++i)
      if (!equations_[i].linear_part.empty()) rows.push_back(i);
    if (rows.empty()) return;
    std::vector<std::size_t> col(s_.unknowns.size(), 0);
    for (std::size_t j = 0; j < linear_layer_.size(); ++j) col[linear_layer_[j]] = j;
    RationalMatrix transposed(linear_layer_.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [v, q] : equations_[rows[r]].linear_part) transposed.add(col[v], r, q);
    for (const Vector& y : kernel_basis(transposed)) {
      ParamPoly combined;
      std::size_t origin = equations_.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (is_zero(y[r])) continue;
        if (origin == equations_.size()) origin = equations_[rows[r]].index;
        for (const auto& t : equations_[rows[r]].nonlinear_part) combined += ParamPoly::monomial(t.mono, t.coef * y[r]);
      }
      if (combined.is_zero()) continue;
      Equation eq;
      eq.index = origin;
      for (const auto& [m, q] : combined.terms()) eq.nonlinear_part.push_back(Term{m, q});
      equations_.push_back(std::move(eq));
    }
  }

  static bool term_vanishes(const Term& t, const std::vector<int>& status) {
    return std::any_of(t.mono.begin(), t.mono.end(), [&](const auto& ve) { return status[ve.first] == 0; });
  }

  // Single surviving terms force a zero; returns false on contradiction.
  bool propagate(std::vector<int>& status) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& eq : equations_) {
        if (!eq.linear_part.empty()) continue;
        const Term* only = nullptr;
        std::size_t alive = 0;
        for (const auto& t : eq.nonlinear_part)
          if (!term_vanishes(t, status)) {
            ++alive;
            only = &t;
          }
        if (alive != 1) continue;
        std::vector<std::uint32_t> undecided;
        for (const auto& [v, e] : only->mono)
          if (status[v] == -1) undecided.push_back(v);
        if (undecided.empty()) return false;
        if (undecided.size() == 1) {
          status[undecided[0]] = 0;
          changed = true;
        }
      }
    }
    return true;
  }

  void dfs(std::vector<int> status) {
    if (!propagate(status)) return;
    for (std::size_t v = 0; v < status.size(); ++v) {
      if (!monomial_layer_[v] || status[v] != -1) continue;
      std::vector<int> zero = status;
      zero[v] = 0;
      dfs(std::move(zero));
      status[v] = 1;
      dfs(std::move(status));
      return;
    }
    leaf(status);
  }

  void leaf(const std::vector<int>& status) {
    BranchReport report;
    std::vector<long> position(status.size(), -1);
    for (std::size_t v = 0; v < status.size(); ++v) {
      if (!monomial_layer_[v]) continue;
      if (status[v] == 0) {
        report.zero_unknowns.push_back(v);
      } else {
        position[v] = static_cast<long>(report.nonzero_unknowns.size());
        report.nonzero_unknowns.push_back(v);
        report.system.unknowns.push_back(s_.unknowns[v]);
      }
    }
    const std::size_t k = report.nonzero_unknowns.size();
    for (const auto& eq : equations_) {
      if (!eq.linear_part.empty()) continue;
      std::vector<const Term*> alive;
      for (const auto& t : eq.nonlinear_part)
        if (!term_vanishes(t, status)) alive.push_back(&t);
      if (alive.empty()) continue;
      if (alive.size() == 1) return;
      if (alive.size() > 2)
        unsupported(s_.equations[eq.index], "more than two nonvanishing terms in a nonlinear equation");
      // c1 m1 + c2 m2 = 0  <=>  m1 / m2 = -c2 / c1.
      MultiplicativeEquation me;
      me.exponents.assign(k, 0);
      for (const auto& [v, e] : alive[0]->mono) me.exponents[position[v]] += e;
      for (const auto& [v, e] : alive[1]->mono) me.exponents[position[v]] -= e;
      me.constant = -alive[1]->coef / alive[0]->coef;
      if (std::all_of(me.exponents.begin(), me.exponents.end(), [](long e) { return e == 0; })) {
        if (me.constant != 1) return;
        continue;
      }
      report.system.equations.push_back(std::move(me));
    }

    std::vector<std::size_t> candidates;
    for (std::size_t p = k; p-- > 0;) {
      const std::size_t gen = u_.unknown_generator[report.nonzero_unknowns[p]];
      if (!u_.source->d_generator(gen).is_zero()) candidates.push_back(p);
    }
    report.elimination = eliminate_defined_unknowns(report.system, candidates);
    MultiplicativeSolution sol = solve_multiplicative_system(report.elimination.reduced);
    if (sol.status != MultiplicativeSolution::Status::Solved) return;

    const std::size_t free_count = sol.free_directions.size();
    for (const auto& point : sol.points) {
      std::vector<LaurentMonomial> nz(k, LaurentMonomial{Rational(1), std::vector<long>(free_count, 0)});
      const auto& kept = report.elimination.kept;
      for (std::size_t r = 0; r < kept.size(); ++r) {
        nz[kept[r]].coef = point[r];
        for (std::size_t l = 0; l < free_count; ++l) nz[kept[r]].exps[l] = sol.free_directions[l][r];
      }
      for (std::size_t d = 0; d < report.elimination.eliminated.size(); ++d) {
        const auto& def = report.elimination.definitions[d];
        LaurentMonomial val{def.constant, std::vector<long>(free_count, 0)};
        for (std::size_t j = 0; j < k; ++j) {
          if (def.exponents[j] == 0) continue;
          val.coef *= rational_pow(nz[j].coef, def.exponents[j]);
          for (std::size_t l = 0; l < free_count; ++l) val.exps[l] += def.exponents[j] * nz[j].exps[l];
        }
        nz[report.elimination.eliminated[d]] = val;
      }
      build_family(status, report, nz, free_count);
    }
  }

  void build_family(const std::vector<int>& status, const BranchReport& report,
                    const std::vector<LaurentMonomial>& nz, std::size_t free_count) {
    const std::size_t n = s_.unknowns.size();
    SolutionFamily fam;
    fam.source = u_.source;
    fam.target = u_.target;
    fam.branch = report;
    for (std::size_t l = 0; l < free_count; ++l) fam.parameters.push_back({"t" + std::to_string(l + 1), true});
    std::vector<ParamPoly> values(n);
    for (std::size_t p = 0; p < report.nonzero_unknowns.size(); ++p) values[report.nonzero_unknowns[p]] = nz[p].poly();
    (void)status;

    // Linear layer: A * lin = -(nonlinear part under the values found so far).
    std::vector<std::size_t> col(n, 0);
    for (std::size_t j = 0; j < linear_layer_.size(); ++j) col[linear_layer_[j]] = j;
    std::vector<const Equation*> rows;
    for (const auto& eq : equations_)
      if (!eq.linear_part.empty()) rows.push_back(&eq);
    RationalMatrix a(rows.size(), linear_layer_.size());
    std::map<ParamPoly::Mono, Vector> rhs;
    rhs[{}] = Vector(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [v, q] : rows[r]->linear_part) a.add(r, col[v], q);
      ParamPoly rest;
      for (const auto& t : rows[r]->nonlinear_part) rest += ParamPoly::monomial(t.mono, t.coef);
      ParamPoly value = rest.substitute(values);
      for (const auto& [m, q] : value.terms()) {
        auto& b = rhs[m];
        if (b.empty()) b.assign(rows.size(), Rational(0));
        b[r] -= q;
      }
    }
    std::map<ParamPoly::Mono, Vector> particular;
    LinearSolution base;
    for (const auto& [m, b] : rhs) {
      LinearSolution sol = rref_solve(a, b);
      if (!sol.solvable()) {
        if (rhs.size() == 1) return;  // inconsistent for every parameter value
        throw Error(ErrorKind::UnsupportedShape,
                    "linear unknowns are solvable only for special values of the branch parameters");
      }
      particular.emplace(m, *sol.particular);
      if (m.empty()) base = std::move(sol);
    }
    std::vector<std::size_t> free_cols;
    {
      std::vector<bool> pivot(linear_layer_.size(), false);
      for (std::size_t pc : base.pivots) pivot[pc] = true;
      for (std::size_t j = 0; j < linear_layer_.size(); ++j)
        if (!pivot[j]) free_cols.push_back(j);
    }
    for (std::size_t fc : free_cols) fam.parameters.push_back({s_.unknowns[linear_layer_[fc]], false});
    for (std::size_t j = 0; j < linear_layer_.size(); ++j) {
      ParamPoly val;
      for (const auto& [m, x] : particular) val += ParamPoly::monomial(m, x[j]);
      for (std::size_t i = 0; i < base.kernel.size(); ++i)
        if (!is_zero(base.kernel[i][j]))
          val += ParamPoly::monomial({{static_cast<std::uint32_t>(free_count + i), 1}}, base.kernel[i][j]);
      values[linear_layer_[j]] = std::move(val);
    }

    for (const auto& c : s_.equations)
      if (!c.equation.substitute(values).is_zero()) unsupported(c, "solution family failed re-verification");
    fam.values = values;
    for (const auto& img : u_.images) {
      ParamElement out = ParamElement::zero(u_.target->ring());
      for (const auto& [m, q] : img.terms()) out.add_term(m, q.substitute(values));
      fam.images.push_back(std::move(out));
    }
    std::vector<Rational> sample;
    for (std::size_t p = 0; p < fam.parameters.size(); ++p)
      sample.push_back(fam.parameters[p].multiplicative ? Rational(static_cast<long>(p) + 2) : Rational(1, static_cast<long>(p) + 2));
    if (!fam.instantiate(sample).is_chain_map()) throw std::logic_error("family member is not a chain map");
    families_.push_back(std::move(fam));
  }

  const UnknownMorphism& u_;
  const ConstraintSystem& s_;
  std::vector<bool> monomial_layer_;
  std::vector<std::size_t> linear_layer_;
  std::vector<Equation> equations_;
  std::vector<SolutionFamily> families_;
};

}  // namespace

std::vector<SolutionFamily> solve_structured(const UnknownMorphism& u, const ConstraintSystem& system) {
  return StructuredSolver(u, system).run();
}

std::vector<SolutionFamily> enumerate_morphisms(const PresentationPtr& source, const PresentationPtr& target) {
  UnknownMorphism u = generic_ansatz(source, target);
  return solve_structured(u, constraint_system(u));
}

}  // namespace dgahom
