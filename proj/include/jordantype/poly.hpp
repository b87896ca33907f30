#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "jordantype/error.hpp"
#include "jordantype/field.hpp"

namespace jt {

enum class RingMode { Graded, Local };

using Monomial = std::vector<int>;

struct RingSpec {
  std::vector<std::string> variables;
  std::vector<int> weights;  // empty means all 1
  FieldSpec field;
  RingMode mode = RingMode::Graded;

  std::size_t nvars() const { return variables.size(); }
  int weight(std::size_t i) const { return weights.empty() ? 1 : weights[i]; }
  int max_weight() const;
  bool standard_weights() const;
  // Throws InvalidSpec on duplicate names, bad weights or a malformed name.
  void validate() const;
  int index_of(const std::string& name) const;  // -1 if absent
};

int weighted_degree(const Monomial& m, const RingSpec& ring);
int total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial unit_monomial(std::size_t nvars, std::size_t var);

// Graded reverse lexicographic comparison with the ring's weights:
// true when a is greater than b.
bool grevlex_greater(const Monomial& a, const Monomial& b, const RingSpec& ring);

// Monomials of the given weighted degree, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree);
// Monomials of standard total degree <= bound, by increasing degree and
// decreasing grevlex within a degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int bound);
// All monomials dividing m.
std::vector<Monomial> divisors(const Monomial& m);

struct OrdinaryTag {};
struct DividedTag {};

// Sparse polynomial: monomial -> nonzero coefficient. The map order is only
// a storage order; rendering uses grevlex.
template <class K, class Tag>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, K>;

  BasicPoly() = default;

  static BasicPoly monomial(const Monomial& m, const K& c) {
    BasicPoly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  K coefficient(const Monomial& m, const K& zero) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(const BasicPoly& a) {
    BasicPoly out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }

  BasicPoly scaled(const K& s) const {
    BasicPoly out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b)
    requires std::is_same_v<Tag, OrdinaryTag>
  {
    BasicPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }

  BasicPoly pow(int k, const K& one, std::size_t nvars) const
    requires std::is_same_v<Tag, OrdinaryTag>
  {
    BasicPoly out = monomial(Monomial(nvars, 0), one);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  // Minimum and maximum weighted degree of the terms.
  int order(const RingSpec& ring) const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
      int d = weighted_degree(m, ring);
      if (best < 0 || d < best) best = d;
    }
    return best;
  }
  int degree(const RingSpec& ring) const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, weighted_degree(m, ring));
    return best;
  }
  bool is_homogeneous(const RingSpec& ring) const { return order(ring) == degree(ring); }

  // Part of weighted degree exactly d.
  BasicPoly homogeneous_part(const RingSpec& ring, int d) const {
    BasicPoly out;
    for (const auto& [m, c] : terms_)
      if (weighted_degree(m, ring) == d) out.terms_.emplace(m, c);
    return out;
  }

  // Terms sorted by decreasing grevlex.
  std::vector<std::pair<Monomial, K>> sorted_terms(const RingSpec& ring) const {
    std::vector<std::pair<Monomial, K>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first, ring); });
    return out;
  }

  bool operator==(const BasicPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

template <class K>
using Poly = BasicPoly<K, OrdinaryTag>;
template <class K>
using DividedPowerPoly = BasicPoly<K, DividedTag>;

// Contraction action: x^a o X^[b] = X^[b-a] when a | b, else 0.
template <class K>
DividedPowerPoly<K> contract(const Poly<K>& g, const DividedPowerPoly<K>& f) {
  DividedPowerPoly<K> out;
  for (const auto& [mg, cg] : g.terms())
    for (const auto& [mf, cf] : f.terms())
      if (mono_divides(mg, mf)) out.add_term(mono_div(mf, mg), cg * cf);
  return out;
}

template <class K>
DividedPowerPoly<K> contract_monomial(const Monomial& a, const DividedPowerPoly<K>& f) {
  DividedPowerPoly<K> out;
  for (const auto& [mf, cf] : f.terms())
    if (mono_divides(a, mf)) out.add_term(mono_div(mf, a), cf);
  return out;
}

std::string render_monomial(const Monomial& m, const RingSpec& ring, bool dual);

template <class K>
std::string render_coefficient(const K& c) {
  return c.str();
}

// Text form that the parser reads back.
template <class K, class Tag>
std::string render(const BasicPoly<K, Tag>& p, const RingSpec& ring) {
  constexpr bool dual = std::is_same_v<Tag, DividedTag>;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ring)) {
    std::string coef = render_coefficient(c);
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    std::string mono = render_monomial(m, ring, dual);
    if (constant) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

}  // namespace jt
