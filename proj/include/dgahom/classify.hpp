#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgahom/obstruction.hpp"
#include "dgahom/solver.hpp"

namespace dgahom {

// Whether every member of a family is homotopic to its representative: the
// members agree with it on the generators that occur in differentials, are
// affine in the parameters on the rest, and each parameter moves them by
// coboundaries.
struct FamilyConnectivity {
  bool connected = false;
  std::string reason;
};

FamilyConnectivity check_family_connected(const SolutionFamily& family);

struct HomotopyClassInfo {
  Morphism representative;
  std::vector<std::size_t> families;
};

struct Classification {
  std::vector<SolutionFamily> families;
  std::vector<FamilyConnectivity> connectivity;
  std::vector<HomotopyClassInfo> classes;
  bool complete = true;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // family pairs
  std::vector<std::string> notes;
};

Classification classify_families(std::vector<SolutionFamily> families, const DecideOptions& options = {});
Classification classify_homotopy_set(const PresentationPtr& source, const PresentationPtr& target,
                                     const DecideOptions& options = {});

struct SelfEquivalenceGroup {
  std::vector<std::size_t> elements;           // indices into Classification::classes
  std::vector<std::vector<std::size_t>> table; // positions in `elements`
  std::size_t identity = 0;                    // position in `elements`
  std::string name;                            // "trivial", "Z2", "Z<n>" or "order <n>"
};

// Throws ClassificationIncomplete.
SelfEquivalenceGroup self_equivalence_group(const Classification& c, const DecideOptions& options = {});

// Does f induce isomorphisms on cohomology in degrees 0..bound?
bool induces_isomorphism(const Morphism& f, long bound);

}  // namespace dgahom
