#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "jordantype/algebra.hpp"
#include "jordantype/error.hpp"
#include "jordantype/linalg.hpp"
#include "jordantype/partition.hpp"
#include "jordantype/random.hpp"

namespace jt {

// Runs fn(0..n-1) on up to `workers` threads. Callers write results by
// index, so the outcome does not depend on scheduling. The exception of the
// lowest failing index is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace detail {

template <class K>
void require_maximal_ideal(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  if (ell.size() != a.dim()) throw Error(ErrorCode::InvalidArgs, "element has the wrong length");
  if (!a.in_maximal_ideal(ell))
    throw Error(ErrorCode::NotInMaximalIdeal, "element has a nonzero constant term");
}

// ranks[i][d] = rank of l^d restricted to A_i, for a homogeneous element
// of degree w > 0; the list for A_i stops at the first zero rank. l^d A_i
// is carried as a basis inside A_{i+dw}.
template <class K>
std::vector<std::vector<std::size_t>> degree_power_ranks(const ArtinAlgebra<K>& a, const Matrix<K>& m, int w) {
  const auto& h = a.hilbert();
  const int top = static_cast<int>(h.size()) - 1;
  std::map<int, Matrix<K>> blocks;
  auto block = [&](int d) -> const Matrix<K>& {
    auto it = blocks.find(d);
    if (it != blocks.end()) return it->second;
    auto [cb, ce] = a.degree_range(d);
    auto [rb, re] = a.degree_range(d + w);
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = rb; r < re; ++r) rows.push_back(r);
    for (std::size_t c = cb; c < ce; ++c) cols.push_back(c);
    return blocks.emplace(d, m.submatrix(rows, cols)).first->second;
  };
  std::vector<std::vector<std::size_t>> ranks(top + 1);
  for (int i = 0; i <= top; ++i) {
    std::vector<Vec<K>> image;
    for (int j = 0; j < h[i]; ++j) {
      Vec<K> e(h[i], a.field().zero());
      e[j] = a.field().one();
      image.push_back(std::move(e));
    }
    ranks[i].push_back(image.size());
    for (int src = i; !image.empty(); src += w) {
      const int dst = src + w;
      if (dst > top || h[dst] == 0) {
        ranks[i].push_back(0);
        break;
      }
      const Matrix<K>& b = block(src);
      Echelon<K> e(a.field(), h[dst]);
      std::vector<Vec<K>> next;
      for (const auto& v : image) {
        Vec<K> u = b.apply(v);
        if (e.insert(u)) next.push_back(std::move(u));
      }
      image = std::move(next);
      ranks[i].push_back(image.size());
    }
  }
  return ranks;
}

// Rank sequence of a homogeneous element of degree w > 0, summed over the
// degree blocks.
template <class K>
std::vector<std::size_t> graded_rank_sequence(const ArtinAlgebra<K>& a, const Matrix<K>& m, int w) {
  auto per_degree = degree_power_ranks(a, m, w);
  std::vector<std::size_t> ranks;
  for (const auto& r : per_degree) {
    if (r.size() > ranks.size()) ranks.resize(r.size(), 0);
    for (std::size_t d = 0; d < r.size(); ++d) ranks[d] += r[d];
  }
  while (ranks.size() > 1 && ranks[ranks.size() - 2] == 0) ranks.pop_back();
  if (ranks.empty() || ranks.back() != 0) ranks.push_back(0);
  return ranks;
}

}  // namespace detail

template <class K>
Partition jordan_type(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  detail::require_maximal_ideal(a, ell);
  Matrix<K> m = a.mult_matrix(ell);
  if (a.is_graded()) {
    if (auto w = a.homogeneous_degree(ell); w && *w > 0)
      return partition_from_ranks(detail::graded_rank_sequence(a, m, *w));
  }
  return nilpotent_jordan_type(m);
}

// Chain z, l z, ..., l^{length-1} z with l^length z = 0.
template <class K>
struct JordanString {
  Vec<K> start;
  int length = 0;
  // Degree of a homogeneous start, otherwise its order.
  int degree = 0;
};

// Jordan basis of a nilpotent m that raises a filtration: level[i] is the
// level of basis vector i and m sends vectors of level >= t to level >=
// t + 1. Strings are lifted one level at a time. At level t the tails
// l^n z of the current strings are read in W_t / W_{t+1}: an independent
// tail extends its string, a zero tail leaves it alone, and a dependent tail
// is repaired by subtracting l^{n_k - n} z_k for the longer strings it
// depends on. Unused directions of level t start new strings. The reported
// degree of a string is the smallest level in its start vector.
template <class K>
std::vector<JordanString<K>> filtered_jordan_strings(const Matrix<K>& m, const std::vector<int>& level) {
  const std::size_t n = m.rows();
  const Field<K>& f = m.field();
  if (m.cols() != n || level.size() != n) throw Error(ErrorCode::InvalidArgs, "matrix and levels disagree");
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!m(r, c).is_zero() && level[r] <= level[c])
        throw Error(ErrorCode::InvalidArgs, "matrix does not raise the filtration");

  struct Chain {
    std::vector<Vec<K>> v;  // v[i] = m^i z for i <= len; v[len] is the tail
    int len;
    int created;
  };
  std::vector<Chain> chains;
  const int top = n == 0 ? -1 : *std::max_element(level.begin(), level.end());
  for (int t = 0; t <= top; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (level[i] == t) idx.push_back(i);
    auto project = [&](const Vec<K>& v) {
      Vec<K> p(idx.size(), f.zero());
      for (std::size_t j = 0; j < idx.size(); ++j) p[j] = v[idx[j]];
      return p;
    };
    std::vector<std::size_t> order(chains.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (chains[x].len != chains[y].len) return chains[x].len > chains[y].len;
      return chains[x].created > chains[y].created;
    });
    std::vector<int> before(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) before[i] = chains[i].len;
    Echelon<K> tails(f, idx.size(), true);
    std::vector<std::size_t> owner;
    for (std::size_t u : order) {
      Chain& ch = chains[u];
      Vec<K> w = project(ch.v[ch.len]);
      if (is_zero_vector(w)) continue;
      if (tails.insert(w)) {
        owner.push_back(u);
        ch.v.push_back(m.apply(ch.v[ch.len]));
        ++ch.len;
        continue;
      }
      auto coords = tails.coordinates(w);
      if (!coords) throw Error(ErrorCode::InternalInconsistency, "tail outside the recorded span");
      for (std::size_t j = 0; j < coords->size(); ++j) {
        const K& c = (*coords)[j];
        if (c.is_zero()) continue;
        const Chain& other = chains[owner[j]];
        const int shift = before[owner[j]] - ch.len;
        if (shift < 0) throw Error(ErrorCode::InternalInconsistency, "repair against a shorter string");
        for (int i = 0; i <= ch.len; ++i)
          for (std::size_t r = 0; r < n; ++r)
            if (!other.v[shift + i][r].is_zero()) sub_mul(ch.v[i][r], c, other.v[shift + i][r]);
      }
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Vec<K> e(idx.size(), f.zero());
      e[j] = f.one();
      if (!tails.insert(e)) continue;
      Vec<K> z(n, f.zero());
      z[idx[j]] = f.one();
      Vec<K> tail = m.apply(z);
      chains.push_back(Chain{{std::move(z), std::move(tail)}, 1, t});
    }
  }

  Echelon<K> all(f, n);
  for (const auto& ch : chains) {
    if (!is_zero_vector(ch.v[ch.len])) throw Error(ErrorCode::InternalInconsistency, "string does not end in zero");
    for (int i = 0; i < ch.len; ++i)
      if (!all.insert(ch.v[i])) throw Error(ErrorCode::InternalInconsistency, "strings are not independent");
  }
  if (all.rank() != n) throw Error(ErrorCode::InternalInconsistency, "strings do not span");

  std::vector<JordanString<K>> out;
  for (auto& ch : chains) {
    int deg = -1;
    for (std::size_t r = 0; r < n; ++r)
      if (!ch.v[0][r].is_zero() && (deg < 0 || level[r] < deg)) deg = level[r];
    out.push_back(JordanString<K>{std::move(ch.v[0]), ch.len, deg});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.degree < y.degree;
  });
  return out;
}

// Strings of multiplication by l, lifted along the degree filtration
// (graded) or the m-adic filtration (local). Degrees are weighted degrees
// when a is graded and l homogeneous, m-adic orders otherwise.
template <class K>
std::vector<JordanString<K>> jordan_strings(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  detail::require_maximal_ideal(a, ell);
  auto strings = filtered_jordan_strings(a.mult_matrix(ell), a.degrees());
  const bool homogeneous = a.is_graded() && (is_zero_vector(ell) || a.homogeneous_degree(ell));
  if (!homogeneous)
    for (auto& s : strings) s.degree = a.m_adic_order(s.start);
  return strings;
}

template <class K>
Partition string_lengths(const std::vector<JordanString<K>>& strings) {
  std::vector<int> parts;
  for (const auto& s : strings) parts.push_back(s.length);
  return Partition::from_unsorted(std::move(parts));
}

// Multiset of (length, initial degree) of the strings of a homogeneous
// element of positive degree on a graded algebra.
template <class K>
JordanDegreeType jordan_degree_type(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  detail::require_maximal_ideal(a, ell);
  if (!a.is_graded()) throw Error(ErrorCode::NotHomogeneous, "degree type needs a graded algebra");
  auto w = a.homogeneous_degree(ell);
  if (!w || *w <= 0) throw Error(ErrorCode::NotHomogeneous, "degree type needs a homogeneous element of positive degree");
  std::vector<DegreeString> entries;
  for (const auto& s : jordan_strings(a, ell)) entries.push_back({s.length, s.degree});
  return JordanDegreeType(std::move(entries));
}

// ---- sampling ----

enum class SubspaceKind { Linear, GradedPiece, MaximalIdeal };

struct Subspace {
  SubspaceKind kind = SubspaceKind::Linear;
  int piece = 1;  // GradedPiece only

  static Subspace linear() { return {SubspaceKind::Linear, 1}; }
  static Subspace graded_piece(int i) { return {SubspaceKind::GradedPiece, i}; }
  static Subspace maximal_ideal() { return {SubspaceKind::MaximalIdeal, 0}; }
  std::string str() const;
};

struct SamplingPlan {
  int trials = 12;
  std::uint64_t seed = 0;
  Subspace subspace;
  // Rational coordinates are integers in [-bound, bound]; over F_p the
  // whole field is used.
  long bound = 101;
  unsigned workers = 1;

  void validate() const {
    if (trials < 1) throw Error(ErrorCode::InvalidArgs, "trials must be positive");
    if (bound < 1) throw Error(ErrorCode::InvalidArgs, "coefficient bound must be positive");
  }
};

inline std::string Subspace::str() const {
  switch (kind) {
    case SubspaceKind::Linear: return "linear";
    case SubspaceKind::GradedPiece: return "piece:" + std::to_string(piece);
    case SubspaceKind::MaximalIdeal: return "maximal";
  }
  return "?";
}

// Basis indices spanning the sampled subspace, or the variables of weight
// one for Linear.
template <class K>
std::vector<std::size_t> subspace_support(const ArtinAlgebra<K>& a, const Subspace& s) {
  std::vector<std::size_t> out;
  switch (s.kind) {
    case SubspaceKind::Linear:
      for (std::size_t k = 0; k < a.nvars(); ++k)
        if (a.ring().weight(k) == 1 && !is_zero_vector(a.variable_matrix(k).column(0))) out.push_back(k);
      break;
    case SubspaceKind::GradedPiece: {
      if (!a.is_graded()) throw Error(ErrorCode::InvalidArgs, "graded pieces need a graded algebra");
      if (s.piece < 1) throw Error(ErrorCode::InvalidArgs, "graded piece must have positive degree");
      auto [b, e] = a.degree_range(s.piece);
      for (std::size_t i = b; i < e; ++i) out.push_back(i);
      break;
    }
    case SubspaceKind::MaximalIdeal:
      for (std::size_t i = 1; i < a.dim(); ++i) out.push_back(i);
      break;
  }
  if (out.empty()) throw Error(ErrorCode::EmptySubspace, "the subspace " + s.str() + " is zero");
  return out;
}

namespace detail {

template <class K>
Vec<K> draw_element(const ArtinAlgebra<K>& a, const Subspace& s, const std::vector<std::size_t>& support,
                    long bound, Rng& rng) {
  if (s.kind == SubspaceKind::Linear) {
    std::vector<K> coeffs(a.nvars(), a.field().zero());
    for (auto k : support) coeffs[k] = a.field().random(rng, bound);
    return a.linear_form(coeffs);
  }
  Vec<K> v = a.zero_vector();
  for (auto i : support) v[i] = a.field().random(rng, bound);
  return v;
}

}  // namespace detail

// Element for trial `index`; draws depend only on (seed, index).
template <class K>
Vec<K> sample_element(const ArtinAlgebra<K>& a, const SamplingPlan& plan, std::uint64_t index) {
  auto support = subspace_support(a, plan.subspace);
  Rng rng = Rng::for_trial(plan.seed, index);
  return detail::draw_element(a, plan.subspace, support, plan.bound, rng);
}

// Elements of `types` not dominated by another element.
inline std::vector<Partition> dominance_maximal(const std::vector<Partition>& types) {
  std::vector<Partition> out;
  for (const auto& p : types) {
    bool dominated = false;
    for (const auto& q : types)
      if (p != q && dominated_by(p, q)) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// Unique dominance maximum of the observed types, or IncomparableSamples.
inline Partition dominance_maximum(const std::vector<Partition>& types) {
  auto top = dominance_maximal(types);
  if (top.size() != 1) {
    std::string list;
    for (const auto& p : top) list += (list.empty() ? "" : ", ") + p.str();
    throw Error(ErrorCode::IncomparableSamples, "observed types have no maximum: " + list);
  }
  return top[0];
}

template <class K>
struct GenericType {
  Partition type;
  Vec<K> witness;
  std::size_t witness_trial = 0;
  std::vector<Partition> samples;  // by trial
};

template <class K>
GenericType<K> generic_jordan_type(const ArtinAlgebra<K>& a, const SamplingPlan& plan) {
  plan.validate();
  subspace_support(a, plan.subspace);
  std::vector<Vec<K>> elements(plan.trials);
  std::vector<Partition> types(plan.trials);
  parallel_for(plan.trials, plan.workers, [&](std::size_t i) {
    elements[i] = sample_element(a, plan, i);
    types[i] = jordan_type(a, elements[i]);
  });
  GenericType<K> out;
  out.type = dominance_maximum(types);
  for (std::size_t i = 0; i < types.size(); ++i)
    if (types[i] == out.type) {
      out.witness = elements[i];
      out.witness_trial = i;
      break;
    }
  out.samples = std::move(types);
  return out;
}

template <class K>
struct GenericDegreeType {
  JordanDegreeType type;
  Vec<K> witness;
  std::size_t witness_trial = 0;
};

// Initial degrees listed by decreasing length, then increasing degree.
inline std::vector<int> degree_profile(const JordanDegreeType& d) {
  auto e = d.entries();
  std::sort(e.begin(), e.end(), [](const DegreeString& x, const DegreeString& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.degree < y.degree;
  });
  std::vector<int> out;
  for (const auto& s : e) out.push_back(s.degree);
  return out;
}

// Dominance-maximal Jordan type first; among its witnesses the smallest
// degree profile.
template <class K>
GenericDegreeType<K> generic_jordan_degree_type(const ArtinAlgebra<K>& a, const SamplingPlan& plan) {
  plan.validate();
  if (plan.subspace.kind == SubspaceKind::MaximalIdeal)
    throw Error(ErrorCode::NotHomogeneous, "degree type needs homogeneous samples");
  if (!a.is_graded()) throw Error(ErrorCode::NotHomogeneous, "degree type needs a graded algebra");
  subspace_support(a, plan.subspace);
  std::vector<Vec<K>> elements(plan.trials);
  std::vector<std::optional<JordanDegreeType>> types(plan.trials);
  parallel_for(plan.trials, plan.workers, [&](std::size_t i) {
    elements[i] = sample_element(a, plan, i);
    if (!is_zero_vector(elements[i])) types[i] = jordan_degree_type(a, elements[i]);
  });
  std::vector<Partition> shapes;
  for (std::size_t i = 0; i < types.size(); ++i)
    shapes.push_back(types[i] ? types[i]->partition() : Partition(std::vector<int>(a.dim(), 1)));
  const Partition best = dominance_maximum(shapes);
  GenericDegreeType<K> out;
  std::optional<std::vector<int>> best_profile;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (shapes[i] != best || !types[i]) continue;
    auto profile = degree_profile(*types[i]);
    if (!best_profile || profile < *best_profile) {
      best_profile = profile;
      out.type = *types[i];
      out.witness = elements[i];
      out.witness_trial = i;
    }
  }
  if (!best_profile) throw Error(ErrorCode::EmptySubspace, "every sample was zero");
  return out;
}

// Rank sequence of the products l_1, l_1 l_2, ... of linear forms drawn in
// turn from the stream of trial `trial`.
template <class K>
std::vector<std::size_t> product_rank_sequence(const ArtinAlgebra<K>& a, const SamplingPlan& plan,
                                               std::uint64_t trial) {
  const Subspace linear = Subspace::linear();
  auto support = subspace_support(a, linear);
  Rng rng = Rng::for_trial(plan.seed, trial);
  std::vector<std::size_t> ranks{a.dim()};
  std::vector<Vec<K>> image;
  for (std::size_t i = 0; i < a.dim(); ++i) image.push_back(a.unit_vector(i));
  while (ranks.back() > 0) {
    Matrix<K> m = a.mult_matrix(detail::draw_element(a, linear, support, plan.bound, rng));
    Echelon<K> e(a.field(), a.dim());
    std::vector<Vec<K>> next;
    for (const auto& v : image) {
      Vec<K> u = m.apply(v);
      if (e.insert(u)) next.push_back(std::move(u));
    }
    if (next.size() == ranks.back())
      throw Error(ErrorCode::InternalInconsistency, "product of linear forms is not nilpotent");
    ranks.push_back(next.size());
    image = std::move(next);
  }
  return ranks;
}

// Partition from the ranks of products of distinct generic linear forms; the
// dominance maximum over the trials. The first differences of the lengths
// are sorted before conjugating.
template <class K>
Partition q_partition(const ArtinAlgebra<K>& a, const SamplingPlan& plan) {
  plan.validate();
  if (a.dim() == 1) return Partition{1};
  subspace_support(a, Subspace::linear());
  std::vector<Partition> types(plan.trials);
  parallel_for(plan.trials, plan.workers,
               [&](std::size_t i) { types[i] = partition_from_ranks(product_rank_sequence(a, plan, i)); });
  return dominance_maximum(types);
}

struct PosetSample {
  std::vector<Partition> types;  // decreasing lexicographic order
  // (i, j): types[i] < types[j] with nothing observed in between.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Observed Jordan types of 0, the basis elements of m, their pairwise sums
// and plan.trials random elements of m. Only a lower approximation of the
// full poset.
template <class K>
PosetSample poset_sample(const ArtinAlgebra<K>& a, const SamplingPlan& plan) {
  plan.validate();
  std::vector<Vec<K>> elements{a.zero_vector()};
  for (std::size_t i = 1; i < a.dim(); ++i) elements.push_back(a.unit_vector(i));
  for (std::size_t i = 1; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec<K> v = a.unit_vector(i);
      v[j] = a.field().one();
      elements.push_back(std::move(v));
    }
  if (a.dim() > 1) {
    SamplingPlan random = plan;
    random.subspace = Subspace::maximal_ideal();
    for (int t = 0; t < plan.trials; ++t) elements.push_back(sample_element(a, random, t));
  }
  std::vector<Partition> types(elements.size());
  parallel_for(elements.size(), plan.workers, [&](std::size_t i) { types[i] = jordan_type(a, elements[i]); });
  std::sort(types.begin(), types.end(), std::greater<>());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  PosetSample out;
  out.types = types;
  const std::size_t n = types.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !dominated_by(types[i], types[j])) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        if (k != i && k != j && dominated_by(types[i], types[k]) && dominated_by(types[k], types[j])) between = true;
      if (!between) out.covers.emplace_back(i, j);
    }
  return out;
}

struct BoundCheck {
  std::string lhs;
  std::string rhs;
  Dominance relation;
  bool holds;
};

struct BoundReport {
  Partition p_ell;
  std::optional<Partition> sf_p;  // only for l in A_1 of a graded algebra
  Partition p_h;
  Partition m_adic_bound;  // conjugate of the m-adic Hilbert function
  std::vector<BoundCheck> checks;
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
  }
};

// Compares P_l with the Hilbert function bounds that apply to l.
template <class K>
BoundReport bound_report(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  BoundReport r;
  r.p_ell = jordan_type(a, ell);
  r.p_h = p_of_h(a.hilbert());
  r.m_adic_bound = p_of_h(a.m_adic_hilbert());
  auto check = [&](const char* lhs, const Partition& p, const char* rhs, const Partition& q) {
    r.checks.push_back({lhs, rhs, dominance_cmp(p, q), dominated_by(p, q)});
  };
  const auto deg = a.homogeneous_degree(ell);
  const bool zero = is_zero_vector(ell);
  if (a.is_graded() && (zero || (deg && *deg == 1))) {
    r.sf_p = sf_p_of_h(a.hilbert());
    check("P_l", r.p_ell, "sfP(H)", *r.sf_p);
    check("sfP(H)", *r.sf_p, "P(H)", r.p_h);
  }
  check("P_l", r.p_ell, "H_m^v", r.m_adic_bound);
  if (!a.is_graded() || zero || (deg && *deg > 0)) check("P_l", r.p_ell, "P(H)", r.p_h);
  return r;
}

}  // namespace jt
