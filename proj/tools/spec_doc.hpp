#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordantype/algebra.hpp"
#include "jordantype/duality.hpp"
#include "jordantype/parser.hpp"

namespace jt::cli {

// One algebra per document:
//
//   field = "Q"                      # or "Fp:<prime>"
//   variables = ["y", "z"]
//   weights = [1, 2]                 # optional, default all 1
//   mode = "graded"                  # or "local"
//   generators = ["y*z", "y^7", "z^3"]
//   # dual_generator = "X*Y"         # instead of generators
//
//   [parameters]                     # named rational constants
//   t = "1/2"
//
//   [elements]                       # named elements for --element
//   l = "y+z"
struct AlgebraSpecDoc {
  RingSpec ring;
  std::vector<std::string> generators;
  std::optional<std::string> dual_generator;
  std::map<std::string, mpq_class> parameters;
  std::map<std::string, std::string> elements;

  // Expression for a named element, or the text itself.
  const std::string& element_source(const std::string& name_or_expr) const {
    auto it = elements.find(name_or_expr);
    return it == elements.end() ? name_or_expr : it->second;
  }
};

AlgebraSpecDoc parse_spec_doc(std::string_view text, const std::string& source = "<spec>");
AlgebraSpecDoc load_spec_doc(const std::string& path);

template <class K>
DividedPowerPoly<K> doc_dual_generator(const AlgebraSpecDoc& doc, const Field<K>& f) {
  if (!doc.dual_generator) throw Error(ErrorCode::InvalidSpec, "the spec has no dual_generator");
  return parse_dual(*doc.dual_generator, doc.ring, f, doc.parameters);
}

template <class K>
ArtinAlgebra<K> build_from_doc(const AlgebraSpecDoc& doc, const Field<K>& f) {
  if (doc.dual_generator) return algebra_from_dual(doc.ring, doc_dual_generator(doc, f), f);
  std::vector<Poly<K>> gens;
  for (const auto& g : doc.generators) gens.push_back(parse_poly(g, doc.ring, f, doc.parameters));
  return build_algebra(doc.ring, gens, f);
}

template <class K>
Poly<K> doc_poly(const AlgebraSpecDoc& doc, const std::string& name_or_expr, const Field<K>& f) {
  return parse_poly(doc.element_source(name_or_expr), doc.ring, f, doc.parameters);
}

}  // namespace jt::cli
