#include "dgahom/ring.hpp"

#include <algorithm>
#include <set>

#include "dgahom/error.hpp"

namespace dgahom {

Ring::Ring(std::vector<Generator> generators) : generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
  });
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.degree < 1)
      throw Error(ErrorKind::DegreeMismatch, "generator " + g.name + " must have positive degree");
    if (!seen.insert(g.name).second)
      throw Error(ErrorKind::UnknownGenerator, "duplicate generator name " + g.name);
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownGenerator, "no generator named " + std::string(name));
}

bool Ring::same_as(const Ring& other) const {
  if (generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name != other.generators_[i].name) return false;
    if (generators_[i].degree != other.generators_[i].degree) return false;
  }
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace dgahom
