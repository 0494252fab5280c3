#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgahom/linalg.hpp"
#include "dgahom/morphism.hpp"
#include "dgahom/obstruction.hpp"

namespace dgahom {

struct WeightIssue {
  std::size_t generator = 0;
  std::string detail;
};

// Empty iff every generator has a positive weight and every differential
// image is weight-homogeneous of its generator's weight.
std::vector<WeightIssue> validate_weights(const Presentation& a);
inline bool is_universal_certificate(const Presentation& a) { return validate_weights(a).empty(); }

struct WeightSearch {
  std::vector<Vector> kernel;                     // all d-compatible weightings
  std::optional<std::vector<long>> positive;      // a positive integral one, if any
};

// Solves the linear homogeneity conditions on weights and looks for a
// positive point in the solution space.
WeightSearch search_positive_weights(const Presentation& a);

// Copy of the presentation with the given weights.
PresentationPtr with_weights(const Presentation& a, const std::vector<long>& weights);

// v -> lambda^weight(v) v. Throws WeightsMissing, ZeroLambda,
// PreconditionViolated (invalid weights).
Morphism phi_lambda(const PresentationPtr& a, const Rational& lambda);

enum class UniversalSide { Target, Source };

struct FamilyPair {
  long i = 0, j = 0;
  bool distinct = false;
  // Per weight component of the obstruction: (weight, lambda^{i w} - lambda^{j w}).
  std::vector<std::pair<long, Rational>> factors;
  bool closed_form = false;  // the difference is the predicted scalar multiple, component by component
};

struct FamilyReport {
  UniversalSide side = UniversalSide::Target;
  long stage = 0;               // degree of the obstructed generator
  std::size_t generator = 0;
  Element obstruction;          // representative for the normalized map
  std::vector<FamilyPair> pairs;
  bool all_distinct = false;
  bool closed_form = false;
  bool cross_check = false;     // decide_homotopic says No on the first pair
};

// Pairwise distinctness of phi^i f (target side) or f phi^i (source side),
// 0 <= i < j <= k. Throws PreconditionViolated (f nullhomotopic, lambda in
// {0, 1, -1}), WeightsMissing.
FamilyReport verify_infinite_family(const Morphism& f, UniversalSide side, const Rational& lambda, long k);

}  // namespace dgahom
