#include <gtest/gtest.h>

#include "jordantype/jordan.hpp"
#include "support/fixtures.hpp"

using namespace jt;
using namespace jt::testing;

namespace {

using Q = Rational;
using Fp = Residue;

const Field<Fp> kF(32003);

Partition P(const char* s) { return Partition::parse(s); }

template <class K>
bool proportional(const Vec<K>& a, const Vec<K>& b) {
  std::optional<K> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    K r = a[i] / b[i];
    if (ratio && !(*ratio == r)) return false;
    ratio = r;
  }
  return ratio.has_value();
}

// Independent oracle: kernel dimensions of l^i by Gaussian elimination on
// explicit matrix powers.
template <class K>
Partition type_from_powers(const Matrix<K>& m) {
  std::vector<std::size_t> ranks{m.rows()};
  Matrix<K> p = m;
  while (ranks.back() > 0) {
    ranks.push_back(rank(p));
    p = p * m;
  }
  return partition_from_ranks(ranks);
}

template <class K>
Vec<K> power(const ArtinAlgebra<K>& a, const Vec<K>& v, int k) {
  Vec<K> out = a.unit_vector(0);
  for (int i = 0; i < k; ++i) out = a.multiply(out, v);
  return out;
}

template <class K>
void check_strings(const ArtinAlgebra<K>& a, const Vec<K>& ell) {
  auto strings = jordan_strings(a, ell);
  EXPECT_EQ(string_lengths(strings), jordan_type(a, ell));
  auto m = a.mult_matrix(ell);
  auto w = a.homogeneous_degree(ell);
  const bool graded_hom = a.is_graded() && w && *w > 0;
  Echelon<K> e(a.field(), a.dim());
  for (const auto& s : strings) {
    Vec<K> v = s.start;
    for (int i = 0; i < s.length; ++i) {
      EXPECT_TRUE(e.insert(v));
      if (graded_hom) EXPECT_EQ(a.homogeneous_degree(v), s.degree + i * *w);
      v = m.apply(v);
    }
    EXPECT_TRUE(is_zero_vector(v));
  }
  EXPECT_EQ(e.rank(), a.dim());
}

template <class K>
std::vector<ArtinAlgebra<K>> random_algebras(std::uint64_t seed, int count, const Field<K>& f, bool local,
                                            std::size_t max_dim = 40) {
  Rng rng(seed);
  std::vector<ArtinAlgebra<K>> out;
  while (static_cast<int>(out.size()) < count) {
    auto inst = random_instance(rng, f, local, max_dim);
    out.push_back(build_algebra(inst.ring, inst.gens, f));
  }
  return out;
}

}  // namespace

TEST(JordanType, Examples) {
  Field<Q> q;
  auto a = weighted_example(q);
  EXPECT_EQ(jordan_type(a, element(a, "y")), P("(7,1,1)"));
  EXPECT_EQ(jordan_type(a, element(a, "y+z")), P("(7,2)"));
  auto b = algebra(make_ring({"x", "y"}), {"x^3", "y^3"}, q);
  EXPECT_EQ(jordan_type(b, element(b, "x^2+y^2")), P("(3,2,2,1,1)"));
  EXPECT_THROW(jordan_type(b, element(b, "1+x")), Error);
}

TEST(JordanType, AgreesWithMatrixPowers) {
  for (bool local : {false, true})
    for (const auto& a : random_algebras(11 + local, 25, kF, local)) {
      Rng rng(a.dim());
      for (bool linear : {true, false}) {
        auto v = random_element(a, rng, linear);
        EXPECT_EQ(jordan_type(a, v), type_from_powers(a.mult_matrix(v)));
      }
      // homogeneous of higher degree takes the block path
      if (a.is_graded() && a.hilbert().size() > 2) {
        auto [b, e] = a.degree_range(2);
        Vec<Fp> v = a.zero_vector();
        for (std::size_t i = b; i < e; ++i) v[i] = kF.random(rng, 0);
        EXPECT_EQ(jordan_type(a, v), type_from_powers(a.mult_matrix(v)));
      }
    }
}

TEST(JordanType, KernelCountAndPowerRule) {
  for (bool local : {false, true})
    for (const auto& a : random_algebras(21 + local, 20, kF, local)) {
      Rng rng(7 * a.dim());
      auto v = random_element(a, rng, rng.uniform_int(0, 1) == 0);
      auto p = jordan_type(a, v);
      EXPECT_EQ(p.weight(), static_cast<int>(a.dim()));
      EXPECT_EQ(p.size(), static_cast<int>(a.dim() - rank(a.mult_matrix(v))));
      for (int k = 1; k <= 5; ++k) EXPECT_EQ(jordan_type(a, power(a, v, k)), power_partition(p, k)) << k;
    }
}

TEST(JordanStrings, Examples) {
  Field<Q> q;
  auto a = weighted_example(q);
  auto s = jordan_strings(a, element(a, "y+z"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].length, 7);
  EXPECT_EQ(s[1].length, 2);
  EXPECT_TRUE(proportional(s[1].start, element(a, "z")));
  EXPECT_EQ(s[0].start, element(a, "1"));

  auto zero = jordan_strings(a, a.zero_vector());
  EXPECT_EQ(zero.size(), a.dim());
  for (const auto& z : zero) EXPECT_EQ(z.length, 1);

  auto local = algebra(local_ring({"x", "y"}), {"x*y - x^3", "y^2"}, q);
  auto t = jordan_strings(local, element(local, "x"));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].length, 5);
  EXPECT_EQ(t[1].length, 1);
  EXPECT_TRUE(proportional(t[1].start, element(local, "y - x^2")));
  EXPECT_EQ(t[1].degree, 1);
}

TEST(JordanStrings, LengthsMatchTypeOnRandomAlgebras) {
  for (bool local : {false, true})
    for (const auto& a : random_algebras(31 + local, 25, kF, local)) {
      Rng rng(3 * a.dim() + 1);
      check_strings(a, random_element(a, rng, true));
      check_strings(a, random_element(a, rng, false));
      if (a.dim() > 1) check_strings(a, a.unit_vector(a.dim() - 1));
    }
}

TEST(JordanStrings, RawNilpotentMatricesAgainstRankRoute) {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 14));
    Matrix<Fp> m(kF, n, n);
    const bool sparse = trial % 2 == 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        if (!sparse || rng.uniform_int(0, 3) == 0) m(r, c) = kF.random(rng, 0);
    std::vector<int> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = static_cast<int>(n - 1 - i);
    auto strings = filtered_jordan_strings(m, level);
    EXPECT_EQ(string_lengths(strings), nilpotent_jordan_type(m));
    EXPECT_EQ(string_lengths(strings), type_from_powers(m));
  }
}

TEST(JordanStrings, RejectsMatrixThatDoesNotRaiseLevels) {
  Matrix<Fp> m(kF, 2, 2);
  m(1, 0) = kF.one();
  EXPECT_THROW(filtered_jordan_strings(m, {1, 0}), Error);
}

TEST(JordanDegreeType, Examples) {
  Field<Q> q;
  auto m = algebra(make_ring({"x", "y"}), {"x^6", "x*y", "y^6"}, q);
  EXPECT_EQ(jordan_degree_type(m, element(m, "x+y")).str(), "(6_0,5_1)");
  auto c = algebra(make_ring({"x"}), {"x^3"}, q);
  EXPECT_EQ(jordan_degree_type(c, element(c, "x")).str(), "(3_0)");

  auto s = stanley_ring();
  auto st = algebra_from_dual(s, parse_dual(stanley_dual(), s, q), q);
  std::vector<DegreeString> expected{{5, 0}};
  for (int i = 0; i < 5; ++i) expected.push_back({3, 1});
  for (int i = 0; i < 3; ++i) expected.push_back({2, 1});
  for (int i = 0; i < 4; ++i) expected.push_back({1, 1});
  for (int i = 0; i < 3; ++i) expected.push_back({2, 2});
  for (int i = 0; i < 4; ++i) expected.push_back({1, 3});
  EXPECT_EQ(jordan_degree_type(st, element(st, stanley_ell())), JordanDegreeType(expected));

  EXPECT_EQ(expect_code([&] { jordan_degree_type(m, element(m, "x+y^2")); }), ErrorCode::NotHomogeneous);
  auto local = algebra(local_ring({"x"}), {"x^3"}, q);
  EXPECT_EQ(expect_code([&] { jordan_degree_type(local, element(local, "x")); }), ErrorCode::NotHomogeneous);
}

TEST(JordanDegreeType, DominatedByHilbertDegreeType) {
  for (const auto& a : random_algebras(41, 25, kF, false)) {
    SamplingPlan plan;
    plan.seed = a.dim();
    Vec<Fp> v;
    try {
      v = sample_element(a, plan, 0);
    } catch (const Error&) {
      continue;  // no degree-one forms
    }
    auto d = jordan_degree_type(a, v);
    EXPECT_EQ(d.partition(), jordan_type(a, v));
    EXPECT_TRUE(dominated_by(d.partition(), degree_type_of_h(a.hilbert()).partition()));
  }
}

TEST(Sampling, DeterministicAcrossWorkers) {
  auto a = algebra(make_ring({"x", "y", "z"}), {"x^3", "y^3", "z^3", "x*y*z"}, kF);
  SamplingPlan plan;
  plan.seed = 99;
  plan.subspace = Subspace::maximal_ideal();
  auto one = generic_jordan_type(a, plan);
  plan.workers = 4;
  auto four = generic_jordan_type(a, plan);
  EXPECT_EQ(one.samples, four.samples);
  EXPECT_EQ(one.witness, four.witness);
  EXPECT_EQ(jordan_type(a, one.witness), one.type);
  EXPECT_EQ(sample_element(a, plan, 3), sample_element(a, plan, 3));
}

TEST(Sampling, GenericExamples) {
  Field<Q> q;
  SamplingPlan plan;
  plan.seed = 1;
  plan.subspace = Subspace::maximal_ideal();
  EXPECT_EQ(generic_jordan_type(family_one(mpq_class(1), q), plan).type, P("(3)"));
  EXPECT_EQ(generic_jordan_type(family_three(mpq_class(1), q), plan).type, P("(6,4,2)"));
  plan.subspace = Subspace::linear();
  auto g = gondim2_ring();
  auto a = algebra_from_dual(g, parse_dual(gondim2_dual(), g, q), q);
  EXPECT_EQ(generic_jordan_type(a, plan).type, P("(5,3,3,3,2,2)"));
}

TEST(Sampling, Errors) {
  Field<Q> q;
  auto k = algebra(make_ring({"x"}), {"x"}, q);
  SamplingPlan plan;
  EXPECT_EQ(expect_code([&] { generic_jordan_type(k, plan); }), ErrorCode::EmptySubspace);
  plan.subspace = Subspace::maximal_ideal();
  EXPECT_EQ(expect_code([&] { generic_jordan_type(k, plan); }), ErrorCode::EmptySubspace);
  auto a = weighted_example(q);
  plan.subspace = Subspace::graded_piece(9);
  EXPECT_EQ(expect_code([&] { generic_jordan_type(a, plan); }), ErrorCode::EmptySubspace);
  plan.trials = 0;
  EXPECT_EQ(expect_code([&] { generic_jordan_type(a, plan); }), ErrorCode::InvalidArgs);
  EXPECT_EQ(expect_code([] { dominance_maximum({P("(3,1,1,1)"), P("(2,2,2)")}); }),
            ErrorCode::IncomparableSamples);
  EXPECT_EQ(dominance_maximum({P("(2,1)"), P("(3)"), P("(1,1,1)")}), P("(3)"));
}

TEST(Sampling, GradedPiece) {
  Field<Q> q;
  auto a = weighted_example(q);
  SamplingPlan plan;
  plan.subspace = Subspace::graded_piece(2);
  auto r = generic_jordan_type(a, plan);
  // Elements of A_2 = <y^2, z>: products a y^2 + b z.
  EXPECT_EQ(r.type, jordan_type(a, element(a, "y^2 + z")));
  EXPECT_EQ(a.homogeneous_degree(r.witness), 2);
}

TEST(Sampling, GenericDegreeType) {
  Field<Q> q;
  auto s = stanley_ring();
  auto st = algebra_from_dual(s, parse_dual(stanley_dual(), s, q), q);
  SamplingPlan plan;
  plan.trials = 4;
  auto r = generic_jordan_degree_type(st, plan);
  EXPECT_EQ(r.type, jordan_degree_type(st, element(st, stanley_ell())));
  plan.subspace = Subspace::maximal_ideal();
  EXPECT_EQ(expect_code([&] { generic_jordan_degree_type(st, plan); }), ErrorCode::NotHomogeneous);
}

TEST(Sampling, Semicontinuity) {
  Field<Q> q;
  SamplingPlan plan;
  plan.seed = 5;
  plan.subspace = Subspace::maximal_ideal();
  struct Case {
    std::function<ArtinAlgebra<Q>(const mpq_class&)> make;
    Partition general, special;
  };
  std::vector<Case> cases{
      {[&](const mpq_class& t) { return family_one(t, q); }, P("(3)"), P("(2,1)")},
      {[&](const mpq_class& t) { return family_two(t, q); }, P("(6)"), P("(4,2)")},
      {[&](const mpq_class& t) { return family_three(t, q); }, P("(6,4,2)"), P("(5,3,3,1)")},
  };
  for (const auto& c : cases) {
    auto special = generic_jordan_type(c.make(mpq_class(0)), plan).type;
    EXPECT_EQ(special, c.special);
    for (mpq_class t : {mpq_class(1), mpq_class(1, 2)}) {
      auto general = generic_jordan_type(c.make(t), plan).type;
      EXPECT_EQ(general, c.general);
      EXPECT_EQ(dominance_cmp(general, special), Dominance::Greater);
    }
  }
}

TEST(Sampling, AssociatedGradedIsDominated) {
  Field<Q> q;
  auto a = weighted_example_local(q);
  EXPECT_EQ(a.hilbert(), (HilbertFunction{1, 2, 2, 1, 1, 1, 1}));
  auto g = associated_graded(a);
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    auto v = random_element(a, rng, i % 2 == 0);
    EXPECT_TRUE(dominated_by(jordan_type(g, v), jordan_type(a, v)));
  }
  EXPECT_EQ(jordan_type(a, element(a, "y+z")), P("(7,2)"));
}

TEST(Sampling, HeightTwoIsStrongLefschetz) {
  Field<Q> q;
  Rng rng(2024);
  int checked = 0;
  while (checked < 16) {
    const bool local = checked % 2 == 1;
    auto ring = local ? local_ring({"x", "y"}) : make_ring({"x", "y"});
    const int a = static_cast<int>(rng.uniform_int(1, 5));
    const int b = static_cast<int>(rng.uniform_int(1, 10 - a));
    std::vector<Poly<Q>> gens{Poly<Q>::monomial({a, 0}, q.one()), Poly<Q>::monomial({0, b}, q.one())};
    for (int e = 0; e < 2; ++e) {
      int d = static_cast<int>(rng.uniform_int(1, 6));
      auto g = random_form(ring, d, q, rng, 2);
      if (local) g += random_form(ring, d + 1, q, rng, 1);
      if (!g.is_zero()) gens.push_back(g);
    }
    auto alg = build_algebra(ring, gens, q);
    if (alg.socle_degree() > 8) continue;
    SamplingPlan plan;
    plan.seed = static_cast<std::uint64_t>(checked);
    plan.subspace = local ? Subspace::maximal_ideal() : Subspace::linear();
    if (alg.dim() == 1) plan.subspace = Subspace::maximal_ideal();
    if (alg.dim() > 1) EXPECT_EQ(generic_jordan_type(alg, plan).type, p_of_h(alg.hilbert())) << checked;
    ++checked;
  }
}

TEST(QPartition, Examples) {
  Field<Q> q;
  SamplingPlan plan;
  auto a = algebra(make_ring({"x", "y"}), {"x^3", "y^3"}, q);
  EXPECT_EQ(q_partition(a, plan), P("(5,3,1)"));
  auto k = algebra(make_ring({"x"}), {"x"}, q);
  EXPECT_EQ(q_partition(k, plan), P("(1)"));
  // Every linear form is a multiple of y, so the products are multiples
  // of y^k; ranks of y^k by hand: 9, 6, 5, 4, 3, 2, 1, 0.
  auto w = weighted_example(q);
  EXPECT_EQ(partition_from_ranks({9, 6, 5, 4, 3, 2, 1, 0}), P("(7,1,1)"));
  EXPECT_EQ(q_partition(w, plan), P("(7,1,1)"));
}

TEST(QPartition, Sandwich) {
  for (const auto& a : random_algebras(51, 25, kF, false)) {
    SamplingPlan plan;
    plan.seed = a.dim();
    if (a.dim() == 1) continue;
    try {
      subspace_support(a, Subspace::linear());
    } catch (const Error&) {
      continue;
    }
    auto qp = q_partition(a, plan);
    EXPECT_EQ(qp.weight(), static_cast<int>(a.dim()));
    EXPECT_TRUE(dominated_by(generic_jordan_type(a, plan).type, qp));
    EXPECT_TRUE(dominated_by(qp, p_of_h(a.hilbert())));
  }
}

TEST(Poset, Examples) {
  Field<Q> q;
  SamplingPlan plan;
  auto one = poset_sample(family_one(mpq_class(1), q), plan);
  EXPECT_EQ(one.types, (std::vector<Partition>{P("(3)"), P("(2,1)"), P("(1,1,1)")}));
  EXPECT_EQ(one.covers, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 1}}));
  auto zero = poset_sample(family_one(mpq_class(0), q), plan);
  EXPECT_EQ(zero.types, (std::vector<Partition>{P("(2,1)"), P("(1,1,1)")}));
  auto x2 = algebra(make_ring({"x"}), {"x^2"}, q);
  EXPECT_EQ(poset_sample(x2, plan).types, (std::vector<Partition>{P("(2)"), P("(1,1)")}));
}

TEST(Bounds, Examples) {
  Field<Q> q;
  auto a = weighted_example(q);
  auto r = bound_report(a, element(a, "y"));
  EXPECT_EQ(r.p_ell, P("(7,1,1)"));
  ASSERT_TRUE(r.sf_p);
  EXPECT_EQ(*r.sf_p, P("(7,1,1)"));
  EXPECT_EQ(r.p_h, P("(7,2)"));
  EXPECT_EQ(dominance_cmp(r.p_ell, r.p_h), Dominance::Less);
  EXPECT_TRUE(r.all_hold());

  auto s = stanley_ring();
  auto st = algebra_from_dual(s, parse_dual(stanley_dual(), s, q), q);
  auto rs = bound_report(st, element(st, stanley_ell()));
  EXPECT_EQ(rs.p_ell, P("(5,3^5,2^6,1^8)"));
  EXPECT_EQ(*rs.sf_p, P("(5,3^11,1^2)"));
  EXPECT_EQ(rs.sf_p->size(), 14);
  EXPECT_TRUE(rs.all_hold());

  auto z = bound_report(st, st.zero_vector());
  EXPECT_EQ(z.p_ell, Partition(std::vector<int>(40, 1)));
  EXPECT_TRUE(z.all_hold());

  // Non-homogeneous: only the m-adic bound and the Hilbert bound apply.
  auto nh = bound_report(a, element(a, "y+z"));
  EXPECT_FALSE(nh.sf_p);
  ASSERT_EQ(nh.checks.size(), 1u);
  EXPECT_EQ(nh.checks[0].rhs, "H_m^v");
  EXPECT_TRUE(nh.all_hold());
  EXPECT_THROW(bound_report(a, element(a, "1")), Error);
}

TEST(Bounds, HoldOnRandomElements) {
  for (bool local : {false, true})
    for (const auto& a : random_algebras(61 + local, 30, kF, local)) {
      Rng rng(a.dim() * 13);
      for (bool linear : {true, false}) {
        auto r = bound_report(a, random_element(a, rng, linear));
        EXPECT_TRUE(r.all_hold());
        for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << c.lhs << " vs " << c.rhs;
      }
    }
}
