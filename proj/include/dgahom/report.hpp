#pragma once

#include <json.hpp>

#include "dgahom/classify.hpp"
#include "dgahom/cohomology.hpp"
#include "dgahom/obstruction.hpp"
#include "dgahom/presentation.hpp"
#include "dgahom/universality.hpp"

namespace dgahom {

// Key order is insertion order; every array is emitted in a canonical order,
// so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

// [[coefficient, [[generator, exponent], ...]], ...] in monomial order.
Json element_json(const Element& x);
Json param_element_json(const ParamElement& x, const std::vector<std::string>& parameters);
Json matrix_json(const RationalMatrix& m, std::size_t rows, std::size_t cols);

Json validation_json(const Presentation& a, const std::vector<ValidationIssue>& issues);
Json cohomology_json(const CohomologyGroup& g);
Json weight_split_json(const std::map<long, std::vector<Element>>& split);
Json morphism_json(const Morphism& f);
Json homotopy_json(const Homotopy& h);
Json obstruction_json(const ObstructionValue& o, const Presentation& source);
Json family_json(const SolutionFamily& f);
Json classification_json(const Classification& c);
Json group_json(const SelfEquivalenceGroup& g);
Json nullhomotopy_json(const NullhomotopyResult& r);
Json decision_json(const HomotopyDecision& d);
Json family_report_json(const FamilyReport& r);

}  // namespace dgahom
