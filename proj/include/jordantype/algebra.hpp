#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordantype/error.hpp"
#include "jordantype/field.hpp"
#include "jordantype/linalg.hpp"
#include "jordantype/partition.hpp"
#include "jordantype/poly.hpp"

namespace jt {

struct BuildOptions {
  std::size_t max_dim = 10000;
  // Local mode: smallest truncation order to try.
  int min_truncation = 1;
  // Local mode: give up when the truncated ring has more monomials.
  std::size_t max_truncation_monomials = 200000;
};

// A finite-dimensional quotient of a polynomial ring (graded) or power
// series ring (local), stored as a monomial basis and one multiplication
// matrix per variable. Basis element 0 is 1. In graded mode `degrees` are
// weighted degrees; in local mode they are orders, and the basis elements
// of order >= i span m^i.
template <class K>
class ArtinAlgebra {
 public:
  ArtinAlgebra(RingSpec ring, Field<K> field, std::vector<Monomial> basis, std::vector<int> degrees,
               std::vector<Matrix<K>> variables, std::vector<Poly<K>> presentation = {},
               std::optional<DividedPowerPoly<K>> dual = std::nullopt)
      : ring_(std::move(ring)),
        field_(field),
        basis_(std::move(basis)),
        degrees_(std::move(degrees)),
        variables_(std::move(variables)),
        presentation_(std::move(presentation)),
        dual_(std::move(dual)) {
    if (basis_.empty() || degrees_[0] != 0 ||
        std::any_of(basis_[0].begin(), basis_[0].end(), [](int e) { return e != 0; }))
      throw Error(ErrorCode::A0NotField, "the quotient must contain the constants as basis element 0");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      if (degrees_[i] < degrees_[i - 1] || degrees_[i] <= 0)
        throw Error(ErrorCode::InternalInconsistency, "basis is not sorted by degree");
    for (int d : degrees_) {
      if (d >= static_cast<int>(hilbert_.size())) hilbert_.resize(d + 1, 0);
      ++hilbert_[d];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    compute_parents();
    compute_m_adic();
  }

  const RingSpec& ring() const { return ring_; }
  const Field<K>& field() const { return field_; }
  bool is_graded() const { return ring_.mode == RingMode::Graded; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t nvars() const { return ring_.nvars(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const Matrix<K>& variable_matrix(std::size_t k) const { return variables_[k]; }
  const std::vector<Poly<K>>& presentation() const { return presentation_; }
  const std::optional<DividedPowerPoly<K>>& dual_generator() const { return dual_; }

  // Weighted Hilbert function (graded) or m-adic Hilbert function (local).
  const HilbertFunction& hilbert() const { return hilbert_; }
  int socle_degree() const { return static_cast<int>(hilbert_.size()) - 1; }
  const HilbertFunction& m_adic_hilbert() const { return m_adic_hilbert_; }
  // Largest j with m^j != 0.
  int m_adic_top() const { return static_cast<int>(m_adic_hilbert_.size()) - 1; }
  int sperner() const { return *std::max_element(hilbert_.begin(), hilbert_.end()); }

  // Indices [begin, end) of the basis elements of degree d.
  std::pair<std::size_t, std::size_t> degree_range(int d) const {
    auto lo = std::lower_bound(degrees_.begin(), degrees_.end(), d);
    auto hi = std::upper_bound(degrees_.begin(), degrees_.end(), d);
    return {static_cast<std::size_t>(lo - degrees_.begin()), static_cast<std::size_t>(hi - degrees_.begin())};
  }

  Vec<K> zero_vector() const { return Vec<K>(dim(), field_.zero()); }
  Vec<K> unit_vector(std::size_t i) const {
    Vec<K> v = zero_vector();
    v[i] = field_.one();
    return v;
  }

  // Coordinates of the class of x^m.
  Vec<K> monomial_class(const Monomial& m) const {
    if (auto it = index_.find(m); it != index_.end()) return unit_vector(it->second);
    Vec<K> v = unit_vector(0);
    for (std::size_t k = 0; k < nvars(); ++k)
      for (int e = 0; e < m[k]; ++e) {
        v = variables_[k].apply(v);
        if (is_zero_vector(v)) return v;
      }
    return v;
  }

  Vec<K> normal_form(const Poly<K>& p) const {
    Vec<K> v = zero_vector();
    for (const auto& [m, c] : p.terms()) {
      Vec<K> mv = monomial_class(m);
      for (std::size_t i = 0; i < dim(); ++i)
        if (!mv[i].is_zero()) v[i] += c * mv[i];
    }
    return v;
  }

  // The polynomial sum of coordinates times basis monomials.
  Poly<K> representative(const Vec<K>& v) const {
    Poly<K> p;
    for (std::size_t i = 0; i < dim(); ++i) p.add_term(basis_[i], v[i]);
    return p;
  }

  std::string render_element(const Vec<K>& v) const { return render(representative(v), ring_); }

  // Linear combination of the variables.
  Vec<K> linear_form(const std::vector<K>& coeffs) const {
    Vec<K> v = zero_vector();
    for (std::size_t k = 0; k < nvars(); ++k) {
      const Vec<K> xk = variables_[k].column(0);
      for (std::size_t i = 0; i < dim(); ++i)
        if (!xk[i].is_zero()) v[i] += coeffs[k] * xk[i];
    }
    return v;
  }

  bool in_maximal_ideal(const Vec<K>& v) const { return v[0].is_zero(); }

  // Product of two elements.
  Vec<K> multiply(const Vec<K>& a, const Vec<K>& b) const {
    Vec<K> out = zero_vector();
    for (std::size_t c = 0; c < dim(); ++c) {
      if (b[c].is_zero()) continue;
      Vec<K> col = times_basis(a, c);
      for (std::size_t i = 0; i < dim(); ++i)
        if (!col[i].is_zero()) out[i] += b[c] * col[i];
    }
    return out;
  }

  // Matrix of multiplication by an element of the maximal ideal.
  Matrix<K> mult_matrix(const Vec<K>& v) const {
    if (!in_maximal_ideal(v))
      throw Error(ErrorCode::NotInMaximalIdeal, "element has a nonzero constant term");
    Matrix<K> m(field_, dim(), dim());
    if (auto coeffs = linear_coefficients(v)) {
      for (std::size_t k = 0; k < nvars(); ++k) m.add_scaled((*coeffs)[k], variables_[k]);
      return m;
    }
    std::vector<Vec<K>> cols(dim());
    for (std::size_t c = 0; c < dim(); ++c) {
      if (parent_[c].first >= 0)
        cols[c] = variables_[parent_[c].second].apply(cols[parent_[c].first]);
      else
        cols[c] = times_basis(v, c);
      m.set_column(c, cols[c]);
    }
    return m;
  }

  Matrix<K> mult_matrix(const Poly<K>& p) const { return mult_matrix(normal_form(p)); }

  // When v is the class of a linear form, its coefficients.
  std::optional<std::vector<K>> linear_coefficients(const Vec<K>& v) const {
    std::vector<K> coeffs(nvars(), field_.zero());
    Vec<K> rest = v;
    for (std::size_t k = 0; k < nvars(); ++k) {
      Monomial xk = unit_monomial(nvars(), k);
      auto it = index_.find(xk);
      if (it == index_.end()) continue;
      coeffs[k] = v[it->second];
      const Vec<K> col = variables_[k].column(0);
      for (std::size_t i = 0; i < dim(); ++i)
        if (!col[i].is_zero()) rest[i] -= coeffs[k] * col[i];
    }
    if (!is_zero_vector(rest)) return std::nullopt;
    return coeffs;
  }

  // Degree of a nonzero element whose coordinates live in one degree.
  std::optional<int> homogeneous_degree(const Vec<K>& v) const {
    std::optional<int> d;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      if (d && *d != degrees_[i]) return std::nullopt;
      d = degrees_[i];
    }
    return d;
  }

  // Smallest degree (or order) among the nonzero coordinates, -1 for zero.
  int order(const Vec<K>& v) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!v[i].is_zero()) return degrees_[i];
    return -1;
  }

  // Largest i with v in m^i; -1 for zero.
  int m_adic_order(const Vec<K>& v) const {
    if (is_zero_vector(v)) return -1;
    if (!is_graded()) return order(v);
    int i = 0;
    while (i < static_cast<int>(m_powers_.size()) && m_powers_[i].contains(v)) ++i;
    return i;
  }

  // dim (0 : m).
  std::size_t socle_dimension() const {
    Matrix<K> stacked(field_, dim() * nvars(), dim());
    for (std::size_t k = 0; k < nvars(); ++k)
      for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) stacked(k * dim() + r, c) = variables_[k](r, c);
    return dim() - rank(stacked);
  }

 private:
  // v times basis monomial c.
  Vec<K> times_basis(const Vec<K>& v, std::size_t c) const {
    Vec<K> out = v;
    const Monomial& m = basis_[c];
    for (std::size_t k = 0; k < nvars(); ++k)
      for (int e = 0; e < m[k]; ++e) out = variables_[k].apply(out);
    return out;
  }

  // parent_[c] = (c', k) when basis_[c] = x_k * basis_[c'].
  void compute_parents() {
    parent_.assign(dim(), {-1, 0});
    for (std::size_t c = 1; c < dim(); ++c) {
      for (std::size_t k = 0; k < nvars(); ++k) {
        if (basis_[c][k] == 0) continue;
        Monomial m = basis_[c];
        --m[k];
        auto it = index_.find(m);
        if (it != index_.end() && it->second < c) {
          parent_[c] = {static_cast<long>(it->second), k};
          break;
        }
      }
    }
  }

  void compute_m_adic() {
    if (!is_graded()) {
      m_adic_hilbert_ = hilbert_;
      return;
    }
    // m^0 = A; m^{i+1} is spanned by x_k m^i. m_powers_[i] spans m^{i+1}.
    std::vector<Vec<K>> power;
    for (std::size_t i = 0; i < dim(); ++i) power.push_back(unit_vector(i));
    std::vector<std::size_t> dims{dim()};
    while (dims.back() > 0) {
      Echelon<K> e(field_, dim());
      std::vector<Vec<K>> next;
      for (const auto& v : power)
        for (std::size_t k = 0; k < nvars(); ++k) {
          Vec<K> w = variables_[k].apply(v);
          if (e.insert(w)) next.push_back(std::move(w));
        }
      if (next.size() == dims.back())
        throw Error(ErrorCode::InternalInconsistency, "maximal ideal is not nilpotent");
      dims.push_back(next.size());
      power = std::move(next);
      if (!power.empty()) m_powers_.push_back(std::move(e));
    }
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
      m_adic_hilbert_.push_back(static_cast<int>(dims[i] - dims[i + 1]));
  }

  RingSpec ring_;
  Field<K> field_;
  std::vector<Monomial> basis_;
  std::vector<int> degrees_;
  std::vector<Matrix<K>> variables_;
  std::vector<Poly<K>> presentation_;
  std::optional<DividedPowerPoly<K>> dual_;
  HilbertFunction hilbert_;
  HilbertFunction m_adic_hilbert_;
  std::vector<Echelon<K>> m_powers_;
  std::map<Monomial, std::size_t> index_;
  std::vector<std::pair<long, std::size_t>> parent_;
};

namespace detail {

// Reduced echelon data of the ideal inside a finite set of monomials.
template <class K>
struct Reduction {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> column;
  std::vector<Vec<K>> rows;          // reduced, one per pivot
  std::vector<std::size_t> pivots;
  std::vector<long> pivot_row;       // column -> row, or -1
  std::vector<long> basis_index;     // column -> basis index, or -1
};

template <class K>
Vec<K> to_columns(const Poly<K>& p, const std::map<Monomial, std::size_t>& column, std::size_t width,
                  const Field<K>& field) {
  Vec<K> v(width, field.zero());
  for (const auto& [m, c] : p.terms()) {
    auto it = column.find(m);
    if (it != column.end()) v[it->second] += c;
  }
  return v;
}

template <class K>
Reduction<K> reduce_span(std::vector<Monomial> monomials, const std::vector<Vec<K>>& spanning,
                         const Field<K>& field) {
  Reduction<K> r;
  r.monomials = std::move(monomials);
  for (std::size_t i = 0; i < r.monomials.size(); ++i) r.column[r.monomials[i]] = i;
  Echelon<K> e(field, r.monomials.size());
  for (const auto& v : spanning) {
    if (e.rank() == r.monomials.size()) break;
    e.insert(v);
  }
  e.make_reduced();
  r.rows = e.rows();
  r.pivots = e.pivots();
  r.pivot_row.assign(r.monomials.size(), -1);
  r.basis_index.assign(r.monomials.size(), -1);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) r.pivot_row[r.pivots[i]] = static_cast<long>(i);
  return r;
}

// Class of monomial m given its reduction data; `basis_index` must be set.
template <class K>
Vec<K> reduced_class(const Reduction<K>& r, const Monomial& m, std::size_t dim, const Field<K>& field) {
  Vec<K> v(dim, field.zero());
  auto it = r.column.find(m);
  if (it == r.column.end()) return v;
  std::size_t c = it->second;
  if (r.basis_index[c] >= 0) {
    v[r.basis_index[c]] = field.one();
    return v;
  }
  const Vec<K>& row = r.rows[r.pivot_row[c]];
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero() && r.basis_index[j] >= 0) v[r.basis_index[j]] = -row[j];
  return v;
}

}  // namespace detail

// Graded quotient R/I for homogeneous generators, degree by degree:
// I_d is spanned by the generators of degree d and x_k * I_{d - w_k}.
template <class K>
ArtinAlgebra<K> build_graded(RingSpec ring, const std::vector<Poly<K>>& gens, const Field<K>& field,
                             const BuildOptions& options = {}) {
  ring.mode = RingMode::Graded;
  ring.validate();
  const std::size_t n = ring.nvars();
  std::map<int, std::vector<Poly<K>>> by_degree;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(ring))
      throw Error(ErrorCode::NotHomogeneous, "generator " + render(g, ring) + " is not homogeneous");
    if (g.degree(ring) == 0)
      throw Error(ErrorCode::NonUnitConstants, "generator " + render(g, ring) + " is a constant");
    by_degree[g.degree(ring)].push_back(g);
  }
  const int wmax = ring.max_weight();
  std::vector<detail::Reduction<K>> levels;
  std::vector<Monomial> basis;
  std::vector<int> degrees;
  int zero_run = 0;
  for (int d = 0; zero_run < wmax; ++d) {
    auto monos = monomials_of_degree(ring, d);
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;
    std::vector<Vec<K>> spanning;
    if (auto it = by_degree.find(d); it != by_degree.end())
      for (const auto& g : it->second) spanning.push_back(detail::to_columns(g, column, monos.size(), field));
    for (std::size_t k = 0; k < n; ++k) {
      int prev = d - ring.weight(k);
      if (prev < 0) continue;
      const auto& lower = levels[prev];
      for (const auto& row : lower.rows) {
        Vec<K> v(monos.size(), field.zero());
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j].is_zero()) continue;
          Monomial m = lower.monomials[j];
          ++m[k];
          v[column.at(m)] = row[j];
        }
        spanning.push_back(std::move(v));
      }
    }
    auto level = detail::reduce_span(std::move(monos), spanning, field);
    std::size_t fresh = 0;
    for (std::size_t c = 0; c < level.monomials.size(); ++c) {
      if (level.pivot_row[c] >= 0) continue;
      level.basis_index[c] = static_cast<long>(basis.size());
      basis.push_back(level.monomials[c]);
      degrees.push_back(d);
      ++fresh;
    }
    if (basis.size() > options.max_dim)
      throw Error(ErrorCode::NotArtinian,
                  "quotient dimension exceeds " + std::to_string(options.max_dim) + "; is the ideal m-primary?");
    zero_run = fresh == 0 ? zero_run + 1 : 0;
    levels.push_back(std::move(level));
  }
  const std::size_t dim = basis.size();
  std::vector<Matrix<K>> vars;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<K> m(field, dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      int target = degrees[c] + ring.weight(k);
      if (target >= static_cast<int>(levels.size())) continue;
      Monomial xb = basis[c];
      ++xb[k];
      m.set_column(c, detail::reduced_class(levels[target], xb, dim, field));
    }
    vars.push_back(std::move(m));
  }
  std::vector<Poly<K>> presentation;
  for (const auto& g : gens)
    if (!g.is_zero()) presentation.push_back(g);
  return ArtinAlgebra<K>(std::move(ring), field, std::move(basis), std::move(degrees), std::move(vars),
                         std::move(presentation));
}

namespace detail {

// Quotient of R_{<=N} by the span of the truncated products g*m. Columns
// are ordered by degree, then decreasing grevlex, so pivots are the
// lowest-order terms.
template <class K>
Reduction<K> local_truncation(const RingSpec& ring, const std::vector<Poly<K>>& gens, int N,
                              const Field<K>& field) {
  auto monos = monomials_up_to(ring.nvars(), N);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;
  std::vector<Vec<K>> spanning;
  for (const auto& g : gens) {
    int ord = g.order(ring);
    if (ord > N) continue;
    for (const auto& m : monos) {
      if (total_degree(m) > N - ord) break;
      Vec<K> v(monos.size(), field.zero());
      for (const auto& [gm, c] : g.terms()) {
        Monomial p = mono_mul(gm, m);
        if (total_degree(p) <= N) v[column.at(p)] += c;
      }
      spanning.push_back(std::move(v));
    }
  }
  return reduce_span(std::move(monos), spanning, field);
}

}  // namespace detail

// Local quotient of the power series ring. The truncation order N grows
// until dim R/(I + m^{N+1}) = dim R/(I + m^{N+2}); then m^{N+1} lies in I.
template <class K>
ArtinAlgebra<K> build_local(RingSpec ring, const std::vector<Poly<K>>& gens, const Field<K>& field,
                            const BuildOptions& options = {}) {
  ring.mode = RingMode::Local;
  ring.validate();
  const std::size_t n = ring.nvars();
  std::vector<Poly<K>> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.order(ring) == 0)
      throw Error(ErrorCode::A0NotField,
                  "generator " + render(g, ring) + " is a unit, so the quotient is zero");
    nonzero.push_back(g);
  }
  auto quotient_dim = [](const detail::Reduction<K>& r) { return r.monomials.size() - r.rows.size(); };
  int N = std::max(1, options.min_truncation);
  auto current = detail::local_truncation(ring, nonzero, N, field);
  for (;;) {
    if (quotient_dim(current) > options.max_dim)
      throw Error(ErrorCode::NotArtinian,
                  "quotient dimension exceeds " + std::to_string(options.max_dim) + "; is the ideal m-primary?");
    auto next = detail::local_truncation(ring, nonzero, N + 1, field);
    if (next.monomials.size() > options.max_truncation_monomials)
      throw Error(ErrorCode::NotArtinian, "truncation order " + std::to_string(N + 1) + " is too large");
    if (quotient_dim(next) == quotient_dim(current)) break;
    current = std::move(next);
    ++N;
  }
  std::vector<Monomial> basis;
  std::vector<int> degrees;
  for (std::size_t c = 0; c < current.monomials.size(); ++c) {
    if (current.pivot_row[c] >= 0) continue;
    current.basis_index[c] = static_cast<long>(basis.size());
    basis.push_back(current.monomials[c]);
    degrees.push_back(total_degree(current.monomials[c]));
  }
  const std::size_t dim = basis.size();
  std::vector<Matrix<K>> vars;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<K> m(field, dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      Monomial xb = basis[c];
      ++xb[k];
      m.set_column(c, detail::reduced_class(current, xb, dim, field));
    }
    vars.push_back(std::move(m));
  }
  return ArtinAlgebra<K>(std::move(ring), field, std::move(basis), std::move(degrees), std::move(vars),
                         std::move(nonzero));
}

template <class K>
ArtinAlgebra<K> build_algebra(const RingSpec& ring, const std::vector<Poly<K>>& gens, const Field<K>& field,
                              const BuildOptions& options = {}) {
  return ring.mode == RingMode::Graded ? build_graded(ring, gens, field, options)
                                       : build_local(ring, gens, field, options);
}

// Associated graded algebra of a local algebra: x_k * b is projected onto
// the basis elements of order ord(b) + 1.
template <class K>
ArtinAlgebra<K> associated_graded(const ArtinAlgebra<K>& a) {
  if (a.is_graded()) throw Error(ErrorCode::InvalidArgs, "associated_graded expects a local algebra");
  RingSpec ring = a.ring();
  ring.mode = RingMode::Graded;
  std::vector<Matrix<K>> vars;
  for (std::size_t k = 0; k < a.nvars(); ++k) {
    Matrix<K> m(a.field(), a.dim(), a.dim());
    const auto& x = a.variable_matrix(k);
    for (std::size_t c = 0; c < a.dim(); ++c)
      for (std::size_t r = 0; r < a.dim(); ++r)
        if (a.degrees()[r] == a.degrees()[c] + 1) m(r, c) = x(r, c);
    vars.push_back(std::move(m));
  }
  return ArtinAlgebra<K>(std::move(ring), a.field(), a.basis(), a.degrees(), std::move(vars));
}

}  // namespace jt
