#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "random_dga.hpp"

namespace dgahom::testing {

// One randomized case: nullopt on success, otherwise what went wrong.
using PropertyCase = std::function<std::optional<std::string>(Rng&)>;

struct Property {
  std::string name;
  PropertyCase run;
};

std::vector<Property> algebraic_properties();

struct PropertyTally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
};

PropertyTally run_property(const Property& p, std::size_t cases, std::uint64_t seed);

}  // namespace dgahom::testing
