#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "jordantype/algebra.hpp"
#include "jordantype/linalg.hpp"
#include "jordantype/partition.hpp"
#include "jordantype/poly.hpp"

namespace jt {

namespace detail {

// Monomials dividing some term of f.
template <class K>
std::vector<Monomial> contraction_candidates(const DividedPowerPoly<K>& f) {
  std::set<Monomial> all;
  for (const auto& [m, c] : f.terms())
    for (auto& d : divisors(m)) all.insert(std::move(d));
  return {all.begin(), all.end()};
}

template <class K>
Vec<K> dual_vector(const DividedPowerPoly<K>& g, const std::map<Monomial, std::size_t>& column,
                   std::size_t width, const Field<K>& field) {
  Vec<K> v(width, field.zero());
  for (const auto& [m, c] : g.terms()) v[column.at(m)] = c;
  return v;
}

template <class K>
std::size_t span_rank(const std::vector<DividedPowerPoly<K>>& polys, const Field<K>& field) {
  std::map<Monomial, std::size_t> column;
  for (const auto& g : polys)
    for (const auto& [m, c] : g.terms()) column.emplace(m, column.size());
  Echelon<K> e(field, column.size());
  for (const auto& g : polys) {
    if (e.rank() == column.size()) break;
    e.insert(dual_vector(g, column, column.size(), field));
  }
  return e.rank();
}

}  // namespace detail

// dim R o f, the length of R / Ann f.
template <class K>
std::size_t inverse_system_dim(const DividedPowerPoly<K>& f, const RingSpec& ring, const Field<K>& field) {
  if (f.is_zero()) return 0;
  auto candidates = detail::contraction_candidates(f);
  if (f.is_homogeneous(ring)) {
    // Contractions by monomials of different degrees land in different degrees.
    std::map<int, std::vector<DividedPowerPoly<K>>> by_degree;
    for (const auto& m : candidates) by_degree[weighted_degree(m, ring)].push_back(contract_monomial(m, f));
    std::size_t total = 0;
    for (const auto& [d, polys] : by_degree) total += detail::span_rank(polys, field);
    return total;
  }
  std::vector<DividedPowerPoly<K>> polys;
  for (const auto& m : candidates) polys.push_back(contract_monomial(m, f));
  return detail::span_rank(polys, field);
}

// R / Ann f, realized on R o f. Graded rings need f homogeneous. The basis
// consists of the monomials m whose m o f is independent of the
// contractions by monomials later in the column order of build_graded or
// build_local, so both routes produce the same basis.
template <class K>
ArtinAlgebra<K> algebra_from_dual(RingSpec ring, const DividedPowerPoly<K>& f, const Field<K>& field) {
  ring.validate();
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgs, "the dual generator must be nonzero");
  const bool graded = ring.mode == RingMode::Graded;
  if (graded && !f.is_homogeneous(ring))
    throw Error(ErrorCode::NotHomogeneous, "a graded dual generator must be homogeneous; use local mode");
  auto candidates = detail::contraction_candidates(f);
  auto deg = [&](const Monomial& m) { return weighted_degree(m, ring); };
  // Selection order: graded ascending degree, local descending degree;
  // increasing grevlex inside a degree.
  std::sort(candidates.begin(), candidates.end(), [&](const Monomial& a, const Monomial& b) {
    int da = deg(a), db = deg(b);
    if (da != db) return graded ? da < db : da > db;
    return grevlex_greater(b, a, ring);
  });
  std::map<Monomial, std::size_t> column;
  for (const auto& m : candidates) column.emplace(m, column.size());
  const std::size_t width = column.size();
  Echelon<K> e(field, width, true);
  std::vector<Monomial> picked;
  for (const auto& m : candidates)
    if (e.insert(detail::dual_vector(contract_monomial(m, f), column, width, field))) picked.push_back(m);

  std::vector<std::size_t> order(picked.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = deg(picked[a]), db = deg(picked[b]);
    if (da != db) return da < db;
    return grevlex_greater(picked[a], picked[b], ring);
  });
  // position[i] = storage index of the i-th picked monomial
  std::vector<std::size_t> position(picked.size());
  std::vector<Monomial> basis;
  std::vector<int> degrees;
  for (std::size_t s = 0; s < order.size(); ++s) {
    position[order[s]] = s;
    basis.push_back(picked[order[s]]);
    degrees.push_back(deg(picked[order[s]]));
  }
  const std::size_t dim = basis.size();
  std::vector<Matrix<K>> vars;
  for (std::size_t k = 0; k < ring.nvars(); ++k) {
    Matrix<K> mat(field, dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      Monomial xb = basis[c];
      ++xb[k];
      auto g = contract_monomial(xb, f);
      if (g.is_zero()) continue;
      auto coords = e.coordinates(detail::dual_vector(g, column, width, field));
      if (!coords) throw Error(ErrorCode::InternalInconsistency, "contraction left the inverse system");
      for (std::size_t i = 0; i < coords->size(); ++i) mat(position[i], c) = (*coords)[i];
    }
    vars.push_back(std::move(mat));
  }
  return ArtinAlgebra<K>(std::move(ring), field, std::move(basis), std::move(degrees), std::move(vars), {}, f);
}

// Generators of Ann f: kernels of the catalecticant maps in each degree up
// to deg f (homogeneous f), or of the full contraction map on R_{<= deg f}
// (otherwise), together with every monomial just above deg f. Not minimal.
template <class K>
std::vector<Poly<K>> annihilator_generators(const RingSpec& ring, const DividedPowerPoly<K>& f,
                                            const Field<K>& field) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgs, "the dual generator must be nonzero");
  std::vector<Poly<K>> gens;
  auto kernel_of = [&](const std::vector<Monomial>& monos) {
    std::vector<DividedPowerPoly<K>> images;
    std::map<Monomial, std::size_t> column;
    for (const auto& m : monos) {
      images.push_back(contract_monomial(m, f));
      for (const auto& [t, c] : images.back().terms()) column.emplace(t, column.size());
    }
    Matrix<K> mat(field, column.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j)
      for (const auto& [t, c] : images[j].terms()) mat(column.at(t), j) = c;
    for (const auto& v : kernel_basis(mat)) {
      Poly<K> g;
      for (std::size_t j = 0; j < monos.size(); ++j) g.add_term(monos[j], v[j]);
      gens.push_back(std::move(g));
    }
  };
  if (ring.mode == RingMode::Graded) {
    if (!f.is_homogeneous(ring))
      throw Error(ErrorCode::NotHomogeneous, "a graded dual generator must be homogeneous");
    const int top = f.degree(ring);
    for (int d = 1; d <= top + ring.max_weight(); ++d) kernel_of(monomials_of_degree(ring, d));
  } else {
    const int top = f.degree(ring);
    auto monos = monomials_up_to(ring.nvars(), top + 1);
    monos.erase(monos.begin());
    kernel_of(monos);
  }
  return gens;
}

// Jordan type of l on R / Ann f from the lengths of R o (l^i o f).
template <class K>
Partition jordan_type_via_dual(const RingSpec& ring, const DividedPowerPoly<K>& f, const Poly<K>& ell,
                               const Field<K>& field) {
  if (!ell.coefficient(Monomial(ring.nvars(), 0), field.zero()).is_zero())
    throw Error(ErrorCode::NotInMaximalIdeal, "element has a nonzero constant term");
  std::vector<std::size_t> dims;
  DividedPowerPoly<K> g = f;
  while (!g.is_zero()) {
    dims.push_back(inverse_system_dim(g, ring, field));
    g = contract(ell, g);
  }
  dims.push_back(0);
  return partition_from_ranks(dims);
}

// Hilbert functions of R / Ann(l^i o f) for i = 0, 1, ..., ending with the
// empty function of the first zero contraction.
template <class K>
std::vector<HilbertFunction> intermediate_hilberts(const RingSpec& ring, const DividedPowerPoly<K>& f,
                                                   const Poly<K>& ell, const Field<K>& field) {
  if (!ell.coefficient(Monomial(ring.nvars(), 0), field.zero()).is_zero())
    throw Error(ErrorCode::NotInMaximalIdeal, "element has a nonzero constant term");
  std::vector<HilbertFunction> out;
  DividedPowerPoly<K> g = f;
  while (!g.is_zero()) {
    RingSpec r = ring;
    if (!g.is_homogeneous(ring)) r.mode = RingMode::Local;
    out.push_back(algebra_from_dual(r, g, field).hilbert());
    g = contract(ell, g);
  }
  out.push_back({});
  return out;
}

}  // namespace jt
