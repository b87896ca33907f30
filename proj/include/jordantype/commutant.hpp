#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordantype/error.hpp"
#include "jordantype/field.hpp"
#include "jordantype/jordan.hpp"
#include "jordantype/linalg.hpp"
#include "jordantype/partition.hpp"

namespace jt {

// Blocks of B sharing one size q. The radical quotient of the centralizer
// maps onto the m_q x m_q matrices indexed by these blocks.
struct PartGroup {
  int size = 0;
  std::vector<std::size_t> block_starts;
  int multiplicity() const { return static_cast<int>(block_starts.size()); }
};

template <class K>
struct CommutantModel {
  Partition p;
  Matrix<K> b;
  std::vector<Matrix<K>> centralizer_basis;
  std::vector<PartGroup> groups;  // by decreasing size

  Field<K> field() const { return b.field(); }
  std::size_t n() const { return b.rows(); }

  // pi_q(X): entry (a, c) is the constant diagonal of the (a, c) block.
  Matrix<K> projection(const Matrix<K>& x, std::size_t group) const {
    const auto& g = groups[group];
    Matrix<K> out(field(), g.block_starts.size(), g.block_starts.size());
    for (std::size_t a = 0; a < g.block_starts.size(); ++a)
      for (std::size_t c = 0; c < g.block_starts.size(); ++c) out(a, c) = x(g.block_starts[a], g.block_starts[c]);
    return out;
  }

  // Element of the centralizer with pi_q(lift) = e_{a,c} and every other
  // projection zero: identity maps between the two blocks.
  Matrix<K> lift_unit(std::size_t group, std::size_t a, std::size_t c) const {
    const auto& g = groups[group];
    Matrix<K> out(field(), n(), n());
    for (int i = 0; i < g.size; ++i) out(g.block_starts[a] + i, g.block_starts[c] + i) = field().one();
    return out;
  }

  // Basis of the kernel of every projection (the radical of the centralizer).
  std::vector<Matrix<K>> radical_basis() const { return constrained_basis(false); }

  // Basis of the slice where every pi_q(X) is strictly upper triangular.
  std::vector<Matrix<K>> slice_basis() const { return constrained_basis(true); }

 private:
  std::vector<Matrix<K>> constrained_basis(bool keep_upper) const {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (const auto& g : groups)
      for (std::size_t a = 0; a < g.block_starts.size(); ++a)
        for (std::size_t c = 0; c < g.block_starts.size(); ++c)
          if (!keep_upper || a >= c) entries.emplace_back(g.block_starts[a], g.block_starts[c]);
    Matrix<K> sys(field(), entries.size(), centralizer_basis.size());
    for (std::size_t r = 0; r < entries.size(); ++r)
      for (std::size_t k = 0; k < centralizer_basis.size(); ++k)
        sys(r, k) = centralizer_basis[k](entries[r].first, entries[r].second);
    std::vector<Matrix<K>> out;
    auto coeffs = entries.empty() ? std::vector<Vec<K>>{} : kernel_basis(sys);
    if (entries.empty())
      for (std::size_t k = 0; k < centralizer_basis.size(); ++k) {
        Vec<K> v(centralizer_basis.size(), field().zero());
        v[k] = field().one();
        coeffs.push_back(std::move(v));
      }
    for (const auto& v : coeffs) {
      Matrix<K> x(field(), n(), n());
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) x.add_scaled(v[k], centralizer_basis[k]);
      out.push_back(std::move(x));
    }
    return out;
  }
};

inline int centralizer_dimension(const Partition& p) {
  int total = 0;
  for (int a : p.parts())
    for (int c : p.parts()) total += std::min(a, c);
  return total;
}

template <class K>
CommutantModel<K> build_model(const Partition& p, const Field<K>& f) {
  if (p.empty()) throw Error(ErrorCode::EmptyPartition, "the commutant needs a nonempty partition");
  CommutantModel<K> m;
  m.p = p;
  m.b = jordan_matrix(f, p);
  m.centralizer_basis = solve_commutant(m.b);
  if (static_cast<int>(m.centralizer_basis.size()) != centralizer_dimension(p))
    throw Error(ErrorCode::InternalInconsistency, "centralizer dimension disagrees with the block count");
  std::size_t start = 0;
  for (int part : p.parts()) {
    if (m.groups.empty() || m.groups.back().size != part) m.groups.push_back({part, {}});
    m.groups.back().block_starts.push_back(start);
    start += static_cast<std::size_t>(part);
  }
  return m;
}

template <class K>
bool is_nilpotent_matrix(const Matrix<K>& x) {
  Matrix<K> power = x;
  for (std::size_t i = 1; i < x.rows() && !power.is_zero(); ++i) power = power * x;
  return power.is_zero();
}

template <class K>
struct QpSample {
  Partition type;
  Matrix<K> witness;
  std::size_t witness_trial = 0;
  std::vector<Partition> samples;  // by trial
  // Characteristic in (0, n]: the result is reported but not asserted.
  bool exploratory = false;
};

// Generic Jordan type of the nilpotent commutator of a nilpotent matrix of
// type p, sampled from the slice where each radical-quotient image is
// strictly upper triangular. Every nilpotent element of the centralizer is
// conjugate into that slice by a unit of the centralizer.
template <class K>
QpSample<K> sample_qp(const Partition& p, const Field<K>& f, const SamplingPlan& plan) {
  plan.validate();
  auto model = build_model(p, f);
  auto basis = model.slice_basis();
  const std::size_t n = model.n();
  QpSample<K> out;
  const auto ch = f.characteristic();
  out.exploratory = ch != 0 && ch <= n;
  std::vector<Matrix<K>> elements(plan.trials);
  std::vector<Partition> types(plan.trials);
  parallel_for(plan.trials, plan.workers, [&](std::size_t i) {
    Rng rng = Rng::for_trial(plan.seed, i);
    Matrix<K> x(f, n, n);
    for (const auto& v : basis) x.add_scaled(f.random(rng, plan.bound), v);
    types[i] = nilpotent_jordan_type(x);
    elements[i] = std::move(x);
  });
  out.type = dominance_maximum(types);
  for (std::size_t i = 0; i < types.size(); ++i)
    if (types[i] == out.type) {
      out.witness = elements[i];
      out.witness_trial = i;
      break;
    }
  out.samples = std::move(types);
  if (out.exploratory) return out;
  if (!is_stable(out.type))
    throw Error(ErrorCode::StabilityViolation, "sampled Q(" + p.str() + ") = " + out.type.str() + " is not stable");
  if (out.type.size() != ar_cover_number(p))
    throw Error(ErrorCode::StabilityViolation, "sampled Q(" + p.str() + ") = " + out.type.str() + " has " +
                                                   std::to_string(out.type.size()) + " parts, expected " +
                                                   std::to_string(ar_cover_number(p)));
  if (!dominated_by(p, out.type))
    throw Error(ErrorCode::InternalInconsistency, "sampled Q(" + p.str() + ") does not dominate the partition");
  return out;
}

enum class BruteMode { Full, Fiber };

inline const char* brute_mode_name(BruteMode m) { return m == BruteMode::Full ? "full" : "fiber"; }

struct BruteQp {
  std::optional<Partition> maximum;
  std::vector<Partition> maximal;  // antichain of maximal achieved types
  std::vector<Partition> achieved;
  BruteMode mode = BruteMode::Full;
  std::uint64_t examined = 0;
};

inline constexpr int kBruteMaxWeight = 5;
inline constexpr std::uint32_t kBruteMaxField = 3;
// Full enumeration up to this many points of the centralizer.
inline constexpr std::uint64_t kBruteFullLimit = std::uint64_t{1} << 20;

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << 40) / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

// Calls fn(x) for every x = base + sum c_k basis_k with c_k in F_q.
template <class Fn>
void enumerate_affine(const Field<Residue>& f, const Matrix<Residue>& base, const std::vector<Matrix<Residue>>& basis,
                      Fn&& fn) {
  const std::uint32_t q = f.characteristic();
  std::vector<std::uint32_t> digits(basis.size(), 0);
  while (true) {
    Matrix<Residue> x = base;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (digits[k] != 0) x.add_scaled(Residue(digits[k], q), basis[k]);
    fn(x);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) return;
  }
}

}  // namespace detail

// Exhaustive dominance maximum of the Jordan types in the nilpotent
// commutator over F_q. Full mode walks every point of the centralizer;
// fiber mode fixes each radical-quotient image to a nilpotent Jordan form
// (every nilpotent element is conjugate to one of these by a unit of the
// centralizer) and walks the radical.
inline BruteQp brute_qp(const Partition& p, std::uint32_t q, std::optional<BruteMode> mode = std::nullopt) {
  if (p.empty()) throw Error(ErrorCode::EmptyPartition, "the commutant needs a nonempty partition");
  if (p.weight() > kBruteMaxWeight || q > kBruteMaxField)
    throw Error(ErrorCode::TooLarge, "exhaustive search needs weight <= " + std::to_string(kBruteMaxWeight) +
                                         " and a field of size <= " + std::to_string(kBruteMaxField));
  Field<Residue> f = Field<Residue>::from_spec(FieldSpec::prime_field(q));
  auto model = build_model(p, f);
  BruteQp out;
  out.mode = mode.value_or(detail::checked_power(q, model.centralizer_basis.size()) <= kBruteFullLimit
                               ? BruteMode::Full
                               : BruteMode::Fiber);
  std::vector<Partition> seen;
  auto record = [&](const Matrix<Residue>& x) {
    ++out.examined;
    if (!is_nilpotent_matrix(x)) {
      if (out.mode == BruteMode::Fiber)
        throw Error(ErrorCode::InternalInconsistency, "fiber over a nilpotent projection is not nilpotent");
      return;
    }
    auto t = nilpotent_jordan_type(x);
    if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(std::move(t));
  };
  const Matrix<Residue> zero(f, model.n(), model.n());
  if (out.mode == BruteMode::Full) {
    if (detail::checked_power(q, model.centralizer_basis.size()) > kBruteFullLimit)
      throw Error(ErrorCode::TooLarge, "centralizer too large for full enumeration");
    detail::enumerate_affine(f, zero, model.centralizer_basis, record);
  } else {
    auto radical = model.radical_basis();
    // One Jordan form per group, all combinations.
    std::vector<std::vector<Partition>> forms;
    for (const auto& g : model.groups) forms.push_back(partitions_of(g.multiplicity()));
    std::vector<std::size_t> choice(forms.size(), 0);
    while (true) {
      Matrix<Residue> base = zero;
      for (std::size_t gi = 0; gi < forms.size(); ++gi) {
        std::size_t a = 0;
        for (int part : forms[gi][choice[gi]].parts()) {
          for (int i = 0; i + 1 < part; ++i) base += model.lift_unit(gi, a + i, a + i + 1);
          a += static_cast<std::size_t>(part);
        }
      }
      detail::enumerate_affine(f, base, radical, record);
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == forms[k].size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
  std::sort(seen.begin(), seen.end(), [](const Partition& a, const Partition& b) { return b < a; });
  out.achieved = seen;
  out.maximal = dominance_maximal(seen);
  if (out.maximal.size() == 1) out.maximum = out.maximal[0];
  return out;
}

enum class Compatibility { BothStableForbidden, Unknown };

const char* compatibility_name(Compatibility c);

// Two distinct stable partitions cannot both be Jordan types of elements
// of one commutative local algebra; nothing is claimed otherwise.
Compatibility check_compatibility(const Partition& p, const Partition& q);

}  // namespace jt
