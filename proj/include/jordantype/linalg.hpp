#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "jordantype/error.hpp"
#include "jordantype/field.hpp"
#include "jordantype/partition.hpp"

namespace jt {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field<K>& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field<K>& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field<K>& field() const { return field_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<K> row(std::size_t r) const {
    return Vec<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vec<K> column(std::size_t c) const {
    Vec<K> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_column(std::size_t c, const Vec<K>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vec<K> apply(const Vec<K>& v) const {
    Vec<K> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const K& a = (*this)(r, c);
        if (!a.is_zero()) out[r] += a * v[c];
      }
    }
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& a = (*this)(i, j);
        if (a.is_zero()) continue;
        for (std::size_t k = 0; k < o.cols_; ++k) {
          const K& b = o(j, k);
          if (!b.is_zero()) out(i, k) += a * b;
        }
      }
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  // this += c * o
  void add_scaled(const K& c, const Matrix& o) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!o.data_[i].is_zero()) data_[i] += c * o.data_[i];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix out(field_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

 private:
  Field<K> field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

// Incremental row echelon form. Rows are kept with a leading 1 and zeros in
// the pivot columns of earlier rows. With `track`, each row remembers its
// expression in the independent vectors inserted so far, which gives
// coordinates of vectors in the span.
template <class K>
class Echelon {
 public:
  Echelon(const Field<K>& f, std::size_t dim, bool track = false)
      : field_(f), dim_(dim), track_(track) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Returns true when v is independent of the current rows.
  bool insert(Vec<K> v) {
    Vec<K> coeff;
    if (track_) coeff.assign(rows_.size() + 1, field_.zero());
    reduce(v, track_ ? &coeff : nullptr);
    std::size_t piv = first_nonzero(v);
    if (piv == dim_) return false;
    K inv = v[piv].inverse();
    for (std::size_t i = piv; i < dim_; ++i)
      if (!v[i].is_zero()) v[i] *= inv;
    if (track_) {
      // coeff holds the multiples subtracted; new row = (orig - sum) / lead.
      Vec<K> t(rows_.size() + 1, field_.zero());
      t[rows_.size()] = inv;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        K f = coeff[i] * inv;
        for (std::size_t k = 0; k < transforms_[i].size(); ++k)
          if (!transforms_[i][k].is_zero()) sub_mul(t[k], f, transforms_[i][k]);
      }
      transforms_.push_back(std::move(t));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(Vec<K> v) const {
    reduce(v, nullptr);
    return first_nonzero(v) == dim_;
  }

  // Residue of v after elimination against the rows.
  Vec<K> residue(Vec<K> v) const {
    reduce(v, nullptr);
    return v;
  }

  // Coefficients expressing v in the inserted independent vectors, in
  // insertion order; nullopt when v is outside the span.
  std::optional<Vec<K>> coordinates(Vec<K> v) const {
    if (!track_) throw Error(ErrorCode::InternalInconsistency, "coordinates need a tracking echelon");
    Vec<K> c(rows_.size(), field_.zero());
    reduce(v, &c);
    if (first_nonzero(v) != dim_) return std::nullopt;
    Vec<K> out(rows_.size(), field_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t k = 0; k < transforms_[i].size(); ++k)
        if (!transforms_[i][k].is_zero()) out[k] += c[i] * transforms_[i][k];
    }
    return out;
  }

  // Full reduction: every row is zero in the pivot columns of the others.
  // Rows are reordered by pivot column. Drops coordinate tracking.
  void make_reduced() {
    track_ = false;
    transforms_.clear();
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec<K>> rows;
    std::vector<std::size_t> pivots;
    for (auto i : order) {
      rows.push_back(std::move(rows_[i]));
      pivots.push_back(pivots_[i]);
    }
    for (std::size_t i = rows.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        K c = rows[j][pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t k = pivots[i]; k < dim_; ++k)
          if (!rows[i][k].is_zero()) sub_mul(rows[j][k], c, rows[i][k]);
      }
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
  }

 private:
  std::size_t first_nonzero(const Vec<K>& v) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!v[i].is_zero()) return i;
    return dim_;
  }

  void reduce(Vec<K>& v, Vec<K>* coeff) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t piv = pivots_[i];
      if (v[piv].is_zero()) continue;
      K c = v[piv];
      const Vec<K>& row = rows_[i];
      for (std::size_t k = piv; k < dim_; ++k)
        if (!row[k].is_zero()) sub_mul(v[k], c, row[k]);
      if (coeff) (*coeff)[i] = c;
    }
  }

  Field<K> field_;
  std::size_t dim_;
  bool track_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec<K>> transforms_;
};

// In-place Gauss-Jordan elimination; the pivot of each step is the first
// nonzero entry in column order. Returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    K inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) sub_mul(m(i, k), f, m(r, k));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  Echelon<K> e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    e.insert(m.row(r));
    if (e.rank() == m.cols()) break;
  }
  return e.rank();
}

// Right null space; free columns in column order become the parameters.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  Matrix<K> r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const auto& f = m.field();
  std::vector<Vec<K>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

// Conjugate of the first differences of a rank sequence r_0 > r_1 > ... > 0.
inline Partition partition_from_ranks(const std::vector<std::size_t>& ranks) {
  std::vector<int> diffs;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
    diffs.push_back(static_cast<int>(ranks[i] - ranks[i + 1]));
  if (!ranks.empty() && ranks.back() != 0) diffs.push_back(static_cast<int>(ranks.back()));
  return conjugate(Partition::from_unsorted(std::move(diffs)));
}

// Ranks of m^0, m^1, ... up to the first zero. The image of m^i is carried
// as a basis and multiplied by m at each step.
template <class K>
std::vector<std::size_t> nilpotent_rank_sequence(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgs, "matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  std::vector<Vec<K>> image;
  for (std::size_t c = 0; c < n; ++c) image.push_back(m.column(c));
  while (ranks.back() > 0) {
    Echelon<K> e(m.field(), n);
    std::vector<Vec<K>> basis;
    for (auto& v : image)
      if (e.insert(v)) basis.push_back(std::move(v));
    std::size_t r = basis.size();
    if (r == ranks.back())
      throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    ranks.push_back(r);
    image.clear();
    for (const auto& v : basis) image.push_back(m.apply(v));
  }
  return ranks;
}

template <class K>
Partition nilpotent_jordan_type(const Matrix<K>& m) {
  return partition_from_ranks(nilpotent_rank_sequence(m));
}

// Basis of {X : XB = BX}, from the kernel of the n^2 x n^2 linear system.
template <class K>
std::vector<Matrix<K>> solve_commutant(const Matrix<K>& b) {
  if (b.rows() != b.cols()) throw Error(ErrorCode::InvalidArgs, "matrix is not square");
  const std::size_t n = b.rows();
  const auto& f = b.field();
  Matrix<K> sys(f, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys(row, i * n + k) += b(k, j);
        sys(row, k * n + j) -= b(i, k);
      }
    }
  }
  std::vector<Matrix<K>> out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix<K> x(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = v[i * n + j];
    out.push_back(std::move(x));
  }
  return out;
}

// Nilpotent matrix in Jordan form with superdiagonal ones, blocks in the
// order of the parts.
template <class K>
Matrix<K> jordan_matrix(const Field<K>& f, const Partition& p) {
  Matrix<K> m(f, p.weight(), p.weight());
  std::size_t start = 0;
  for (int part : p.parts()) {
    for (int i = 0; i + 1 < part; ++i) m(start + i, start + i + 1) = f.one();
    start += part;
  }
  return m;
}

}  // namespace jt
