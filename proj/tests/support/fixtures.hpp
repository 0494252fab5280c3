#pragma once

#include <string>

#include "dgahom/parser.hpp"

namespace dgahom::testing {

inline std::string corpus_path(const std::string& file) { return std::string(DGAHOM_CORPUS_DIR) + "/" + file; }

inline PresentationPtr corpus(const std::string& name) { return load_presentation(corpus_path(name + ".dga")); }

inline PresentationPtr algebra(const std::string& text) { return parse_presentation(text); }

inline Element el(const PresentationPtr& a, const std::string& expr) { return parse_element(expr, a); }

inline Morphism map_of(const PresentationPtr& src, const PresentationPtr& tgt, const std::string& body) {
  return to_morphism(parse_morphism("morphism m : " + src->name() + " -> " + tgt->name() + "\n" + body, src, tgt));
}

}  // namespace dgahom::testing
