#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "jordantype/algebra.hpp"
#include "jordantype/duality.hpp"
#include "jordantype/parser.hpp"
#include "jordantype/random.hpp"

namespace jt {

// Readable gtest failure messages.
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.str(true); }
inline void PrintTo(const JordanDegreeType& d, std::ostream* os) { *os << d.str(); }

}  // namespace jt

namespace jt::testing {

// Code of the jt::Error thrown by f; InternalInconsistency when f returns
// normally, so that a missing throw fails the comparison.
template <class F>
ErrorCode expect_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

inline RingSpec make_ring(std::vector<std::string> vars, std::vector<int> weights = {},
                          RingMode mode = RingMode::Graded) {
  RingSpec r;
  r.variables = std::move(vars);
  r.weights = std::move(weights);
  r.mode = mode;
  return r;
}

inline RingSpec local_ring(std::vector<std::string> vars) { return make_ring(std::move(vars), {}, RingMode::Local); }

template <class K>
std::vector<Poly<K>> polys(const std::vector<std::string>& src, const RingSpec& ring, const Field<K>& field,
                           const std::map<std::string, mpq_class>& constants = {}) {
  std::vector<Poly<K>> out;
  for (const auto& s : src) out.push_back(parse_poly(s, ring, field, constants));
  return out;
}

template <class K>
ArtinAlgebra<K> algebra(const RingSpec& ring, const std::vector<std::string>& gens, const Field<K>& field,
                        const std::map<std::string, mpq_class>& constants = {}) {
  return build_algebra(ring, polys(gens, ring, field, constants), field);
}

template <class K>
Vec<K> element(const ArtinAlgebra<K>& a, const std::string& src) {
  return a.normal_form(parse_poly(src, a.ring(), a.field()));
}

// Idealization of k[x,y,z]/m^4: F = sum of U_i times the divided-power
// cubic monomials in X, Y, Z.
inline RingSpec stanley_ring() {
  std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 1; i <= 10; ++i) vars.push_back("u" + std::to_string(i));
  return make_ring(vars);
}

inline std::string stanley_dual() {
  const char* cubics[] = {"X^[3]", "X^[2]*Y", "X^[2]*Z", "X*Y^[2]", "X*Y*Z",
                          "X*Z^[2]", "Y^[3]", "Y^[2]*Z", "Y*Z^[2]", "Z^[3]"};
  std::string f;
  for (int i = 0; i < 10; ++i) {
    if (i > 0) f += " + ";
    f += "U" + std::to_string(i + 1) + "*" + cubics[i];
  }
  return f;
}

inline const char* stanley_ell() { return "x+y+z+u1+u2+u3+u4+u5+u6+u7+u8+u9+u10"; }

inline RingSpec gondim1_ring() { return make_ring({"x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4"}); }
inline const char* gondim1_dual() { return "X1*U1*U2 + X2*U2*U3 + X3*U3*U4 + X4*U4*U1"; }

inline RingSpec gondim2_ring() { return make_ring({"u", "v", "x", "y", "z"}); }
inline const char* gondim2_dual() { return "X*U^[3] + Y*U*V^[2] + Z*U^[2]*V"; }

// Weighted graded algebra k[y,z]/(yz, y^7, z^3) with deg z = 2, and a
// local algebra with the same underlying vector space dimension.
template <class K>
ArtinAlgebra<K> weighted_example(const Field<K>& f) {
  return algebra(make_ring({"y", "z"}, {1, 2}), {"y*z", "y^7", "z^3"}, f);
}
template <class K>
ArtinAlgebra<K> weighted_example_local(const Field<K>& f) {
  return algebra(local_ring({"y", "z"}), {"y*z", "z^3 + y^6"}, f);
}

// Three one-parameter families. Members at t != 0 are isomorphic to each
// other; t = 0 gives the flat limit.
template <class K>
ArtinAlgebra<K> family_one(const mpq_class& t, const Field<K>& f) {
  return algebra(local_ring({"x", "y"}), {"t*x - y^2", "x*y", "x^2", "y^3"}, f, {{"t", t}});
}
template <class K>
ArtinAlgebra<K> family_two(const mpq_class& t, const Field<K>& f) {
  auto r = local_ring({"x", "y"});
  return algebra_from_dual(r, parse_dual("t*X^[5] + X^[2]*Y", r, f, {{"t", t}}), f);
}
template <class K>
ArtinAlgebra<K> family_three(const mpq_class& t, const Field<K>& f) {
  auto r = local_ring({"x", "y", "z"});
  if (t == 0) return algebra(r, {"y^2", "z^2", "x^3"}, f);
  return algebra_from_dual(r, parse_dual("t^2*X^[3]*Y^[2] + t*X^[2]*Y*Z + X*Z^[2]", r, f, {{"t", t}}), f);
}

// Random m-primary ideal in at most three variables: pure powers keep the
// quotient small, plus a few random relations.
template <class K>
struct RandomInstance {
  RingSpec ring;
  std::vector<Poly<K>> gens;
};

template <class K>
Poly<K> random_form(const RingSpec& ring, int degree, const Field<K>& field, Rng& rng, int terms) {
  auto monos = monomials_of_degree(ring, degree);
  Poly<K> p;
  if (monos.empty()) return p;
  for (int t = 0; t < terms; ++t)
    p.add_term(monos[rng.uniform_int(0, static_cast<long>(monos.size()) - 1)], field.random(rng, 5));
  return p;
}

template <class K>
RandomInstance<K> random_instance(Rng& rng, const Field<K>& field, bool local, std::size_t max_dim = 60,
                                  bool allow_weights = true) {
  RandomInstance<K> out;
  const int r = static_cast<int>(rng.uniform_int(1, 3));
  const char* names[] = {"x", "y", "z"};
  for (int k = 0; k < r; ++k) out.ring.variables.push_back(names[k]);
  out.ring.mode = local ? RingMode::Local : RingMode::Graded;
  if (!local && allow_weights && rng.uniform_int(0, 3) == 0) {
    for (int k = 0; k < r; ++k) out.ring.weights.push_back(static_cast<int>(rng.uniform_int(1, 2)));
  }
  // Pure powers with product at most max_dim.
  std::size_t product = 1;
  std::vector<int> powers(r);
  for (int k = 0; k < r; ++k) {
    long room = static_cast<long>(max_dim / product) / (r - k == 1 ? 1 : 2);
    int a = static_cast<int>(rng.uniform_int(1, std::max(1L, std::min(room, 8L))));
    powers[k] = a;
    product *= a;
  }
  for (int k = 0; k < r; ++k) {
    Monomial m(r, 0);
    m[k] = powers[k];
    out.gens.push_back(Poly<K>::monomial(m, field.one()));
  }
  int extra = static_cast<int>(rng.uniform_int(0, 3));
  for (int e = 0; e < extra; ++e) {
    int d = static_cast<int>(rng.uniform_int(1, 5));
    Poly<K> g = random_form(out.ring, d, field, rng, static_cast<int>(rng.uniform_int(1, 3)));
    if (local)
      for (int t = 0; t < 2; ++t) g += random_form(out.ring, d + static_cast<int>(rng.uniform_int(1, 3)), field, rng, 1);
    if (!g.is_zero()) out.gens.push_back(std::move(g));
  }
  return out;
}

// Random element of the maximal ideal: a random combination of the basis
// elements of positive degree, sometimes restricted to the linear forms.
template <class K>
Vec<K> random_element(const ArtinAlgebra<K>& a, Rng& rng, bool linear) {
  const auto& f = a.field();
  if (linear) {
    std::vector<K> c;
    for (std::size_t k = 0; k < a.nvars(); ++k) c.push_back(f.random(rng, 5));
    return a.linear_form(c);
  }
  Vec<K> v = a.zero_vector();
  for (std::size_t i = 1; i < a.dim(); ++i) v[i] = f.random(rng, 5);
  return v;
}

// Random divided-power polynomial in r variables of degree <= top.
template <class K>
DividedPowerPoly<K> random_dual(const RingSpec& ring, int top, const Field<K>& field, Rng& rng, bool homogeneous) {
  DividedPowerPoly<K> f;
  int terms = static_cast<int>(rng.uniform_int(1, 4));
  for (int t = 0; t < terms; ++t) {
    int d = homogeneous ? top : static_cast<int>(rng.uniform_int(1, top));
    auto monos = monomials_of_degree(ring, d);
    f.add_term(monos[rng.uniform_int(0, static_cast<long>(monos.size()) - 1)], field.random(rng, 4));
  }
  if (f.is_zero()) {
    Monomial m(ring.nvars(), 0);
    m[0] = top;
    f.add_term(m, field.one());
  }
  return f;
}

}  // namespace jt::testing
