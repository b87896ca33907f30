#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "jordantype/field.hpp"
#include "jordantype/poly.hpp"

namespace jt {

// Expression grammar (whitespace is ignored):
//
//   expr    = [sign] term { sign term }
//   term    = factor { ["*" | "/"] factor }      juxtaposition multiplies
//   factor  = "-" factor | power
//   power   = atom [ "^" ( integer | "[" integer "]" ) ]
//   atom    = integer | identifier | "(" expr ")"
//
// An identifier is a named constant, a variable, or (when every letter is
// a one-letter variable) a product such as "yz". Division is only by
// nonzero constants. In dual mode an identifier may also be the upper-case
// form of a variable, exponents are divided-power exponents (X^4 and X^[4]
// both mean X^[4]), products of basis monomials add exponents, and only
// single terms may be raised to a power.
struct ParseOptions {
  bool dual = false;
  std::map<std::string, mpq_class> constants;
};

using RawPoly = std::map<Monomial, mpq_class>;

RawPoly parse_raw(std::string_view src, const RingSpec& ring, const ParseOptions& options);

template <class K, class Tag>
BasicPoly<K, Tag> from_raw(const RawPoly& raw, const Field<K>& field) {
  BasicPoly<K, Tag> out;
  for (const auto& [m, c] : raw) out.add_term(m, field.from_rational(c));
  return out;
}

template <class K>
Poly<K> parse_poly(std::string_view src, const RingSpec& ring, const Field<K>& field,
                   std::map<std::string, mpq_class> constants = {}) {
  ParseOptions options{false, std::move(constants)};
  return from_raw<K, OrdinaryTag>(parse_raw(src, ring, options), field);
}

template <class K>
DividedPowerPoly<K> parse_dual(std::string_view src, const RingSpec& ring, const Field<K>& field,
                               std::map<std::string, mpq_class> constants = {}) {
  ParseOptions options{true, std::move(constants)};
  return from_raw<K, DividedTag>(parse_raw(src, ring, options), field);
}

// Parses "3", "-2/5" and similar rational literals.
mpq_class parse_rational(std::string_view text);

}  // namespace jt
