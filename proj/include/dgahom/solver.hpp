#pragma once

#include <span>
#include <string>
#include <vector>

#include "dgahom/morphism.hpp"
#include "dgahom/multiplicative.hpp"
#include "dgahom/param_poly.hpp"

namespace dgahom {

// A morphism whose generator images carry scalar unknowns (ParamPoly
// variable k is unknowns[k]).
struct UnknownMorphism {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<std::string> unknowns;
  std::vector<std::size_t> unknown_generator;  // source generator carrying each unknown
  std::vector<ParamElement> images;
};

// One unknown per (generator, target basis monomial of the same degree),
// named "<generator>:<monomial>".
UnknownMorphism generic_ansatz(const PresentationPtr& source, const PresentationPtr& target);

struct Constraint {
  std::size_t generator = 0;  // where f(d v) - d f(v) was expanded
  Monomial monomial;          // target monomial whose coefficient this is
  ParamPoly equation;         // = 0
};

struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<Constraint> equations;
};

ConstraintSystem constraint_system(const UnknownMorphism& u);

struct FamilyParameter {
  std::string name;
  bool multiplicative = false;  // ranges over nonzero rationals
};

// How the branch of the case split producing a family was solved.
struct BranchReport {
  std::vector<std::size_t> zero_unknowns;
  std::vector<std::size_t> nonzero_unknowns;
  MultiplicativeSystem system;  // over nonzero_unknowns
  EliminationResult elimination;
};

struct SolutionFamily {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<FamilyParameter> parameters;
  std::vector<ParamPoly> values;      // per unknown, polynomial in the parameters
  std::vector<ParamElement> images;   // per source generator
  BranchReport branch;

  Morphism instantiate(std::span<const Rational> params) const;
  // Affine parameters 0, multiplicative parameters 1.
  std::vector<Rational> representative_parameters() const;
  Morphism representative() const { return instantiate(representative_parameters()); }
  std::vector<std::string> parameter_names() const;
};

// Zero/nonzero case split over the unknowns of nonlinear equations, torus
// solving of the binomial equations of each branch, then exact linear solving
// for the remaining unknowns. Throws UnsupportedShape with the offending
// equation when a branch does not reduce to that shape.
std::vector<SolutionFamily> solve_structured(const UnknownMorphism& u, const ConstraintSystem& system);

std::vector<SolutionFamily> enumerate_morphisms(const PresentationPtr& source, const PresentationPtr& target);

}  // namespace dgahom
