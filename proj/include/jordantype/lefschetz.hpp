#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jordantype/algebra.hpp"
#include "jordantype/jordan.hpp"
#include "jordantype/partition.hpp"

namespace jt {

inline bool is_unimodal(const HilbertFunction& h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

inline bool is_symmetric(const HilbertFunction& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

template <class K>
struct LefschetzVerdict {
  Vec<K> element;
  Partition jordan;
  Partition h_conjugate;
  // Set only for a graded algebra and an element of A_1.
  std::optional<bool> narrow_sl;
  std::optional<bool> general_sl;
  std::optional<bool> weak_l;
  bool sljt = false;
  // First (i, d) with l^d : A_i -> A_{i+d} not of maximal rank.
  std::optional<std::pair<int, int>> failing_witness;
  // Positive characteristic at most the socle degree.
  bool modular_regime = false;
};

namespace detail {

// Element of A_1: zero or homogeneous of degree one.
template <class K>
bool in_degree_one(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  if (!a.is_graded()) return false;
  if (is_zero_vector(ell)) return true;
  auto d = a.homogeneous_degree(ell);
  return d && *d == 1;
}

}  // namespace detail

template <class K>
LefschetzVerdict<K> classify(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  LefschetzVerdict<K> v;
  v.element = ell;
  v.jordan = jordan_type(a, ell);
  const HilbertFunction& h = a.hilbert();
  v.h_conjugate = p_of_h(h);
  v.sljt = v.jordan == v.h_conjugate;
  const auto p = a.field().characteristic();
  v.modular_regime = p > 0 && static_cast<int>(p) <= a.socle_degree();
  if (!detail::in_degree_one(a, ell)) return v;

  const int j = a.socle_degree();
  auto ranks = detail::degree_power_ranks(a, a.mult_matrix(ell), 1);
  // rank of l^d on A_i; past the recorded list it is zero
  auto r = [&](int i, int d) -> int {
    return d < static_cast<int>(ranks[i].size()) ? static_cast<int>(ranks[i][d]) : 0;
  };
  bool general = true, weak = true;
  for (int i = 0; i <= j; ++i)
    for (int d = 1; d <= j - i; ++d) {
      if (r(i, d) == std::min(h[i], h[i + d])) continue;
      if (general) v.failing_witness = std::make_pair(i, d);
      general = false;
      if (d == 1) weak = false;
    }
  bool narrow = true;
  for (int i = 0; 2 * i <= j; ++i)
    if (h[i] != h[j - i] || r(i, j - 2 * i) != h[i]) narrow = false;
  v.narrow_sl = narrow;
  v.general_sl = general;
  v.weak_l = weak;

  if (narrow && !(is_unimodal(h) && is_symmetric(h)))
    throw Error(ErrorCode::InternalInconsistency, "narrow SL element on a non-unimodal or non-symmetric H");
  if (a.ring().standard_weights() && is_unimodal(h) && is_symmetric(h) &&
      weak != (v.jordan.size() == a.sperner()))
    throw Error(ErrorCode::InternalInconsistency, "weak Lefschetz disagrees with the Sperner count");
  return v;
}

// Maximal rank of every l^b : A_i -> A_{i+b} holds exactly when P_l is the
// conjugate of H. Returns true; a disagreement is a library fault.
template <class K>
bool check_lefhilb_equivalence(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  if (!detail::in_degree_one(a, ell))
    throw Error(ErrorCode::InvalidArgs, "the equivalence check needs a graded algebra and an element of A_1");
  auto v = classify(a, ell);
  if (*v.general_sl != v.sljt)
    throw Error(ErrorCode::InternalInconsistency,
                "maximal rank and Jordan type disagree for " + a.render_element(ell));
  return true;
}

template <class K>
struct SlSearch {
  std::optional<Vec<K>> witness;
  bool linear = false;
  int linear_trials = 0;
  int other_trials = 0;
  // Standard grading, unimodal H, and only a non-homogeneous witness: this
  // would contradict the equivalence of SLJT and SL for such algebras.
  bool conflict = false;
};

// Looks for an element with P_l = H^v: first among plan.trials linear
// forms, then (when `nonhomogeneous`) among plan.trials elements of m.
template <class K>
SlSearch<K> find_sl_element(const ArtinAlgebra<K>& a, const SamplingPlan& plan, bool nonhomogeneous = true) {
  plan.validate();
  SlSearch<K> out;
  const Partition target = p_of_h(a.hilbert());
  auto search = [&](Subspace s, int& count) -> bool {
    SamplingPlan p = plan;
    p.subspace = s;
    try {
      subspace_support(a, s);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EmptySubspace) return false;
      throw;
    }
    std::vector<char> hit(plan.trials, 0);
    std::vector<Vec<K>> elements(plan.trials);
    parallel_for(plan.trials, plan.workers, [&](std::size_t i) {
      elements[i] = sample_element(a, p, i);
      hit[i] = jordan_type(a, elements[i]) == target;
    });
    for (int i = 0; i < plan.trials; ++i)
      if (hit[i]) {
        count = i + 1;
        out.witness = elements[i];
        return true;
      }
    count = plan.trials;
    return false;
  };
  if (a.dim() == 1) {
    out.witness = a.zero_vector();
    out.linear = true;
    return out;
  }
  if (search(Subspace::linear(), out.linear_trials)) {
    out.linear = true;
    return out;
  }
  if (nonhomogeneous && search(Subspace::maximal_ideal(), out.other_trials)) {
    out.conflict = a.is_graded() && a.ring().standard_weights() && is_unimodal(a.hilbert());
  }
  return out;
}

}  // namespace jt
