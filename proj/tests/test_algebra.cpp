#include <gtest/gtest.h>

#include "jordantype/algebra.hpp"
#include "support/fixtures.hpp"

using namespace jt;
using namespace jt::testing;

namespace {

using Q = Rational;
using Fp = Residue;

template <class K>
void expect_error(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Algebra, WeightedGradedExample) {
  Field<Q> q;
  auto a = algebra(make_ring({"y", "z"}, {1, 2}), {"yz", "y^7", "z^3"}, q);
  EXPECT_EQ(a.hilbert(), (HilbertFunction{1, 1, 2, 1, 2, 1, 1}));
  EXPECT_EQ(a.dim(), 9u);
  EXPECT_EQ(a.socle_degree(), 6);
  EXPECT_EQ(nilpotent_jordan_type(a.mult_matrix(element(a, "y"))), Partition({7, 1, 1}));
  EXPECT_EQ(nilpotent_jordan_type(a.mult_matrix(element(a, "y+z"))), Partition({7, 2}));
  // m-adic filtration of the same ring: m = (y, z), m^2 = (y^2, z^2), ...
  EXPECT_EQ(a.m_adic_hilbert(), (HilbertFunction{1, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(a.m_adic_top(), 6);
}

TEST(Algebra, GradedExamples) {
  Field<Q> q;
  auto a = algebra(make_ring({"x", "y"}), {"x^2", "y^2"}, q);
  EXPECT_EQ(a.hilbert(), (HilbertFunction{1, 2, 1}));
  EXPECT_EQ(a.socle_dimension(), 1u);
  auto field_only = algebra(make_ring({"x", "y"}), {"x", "y"}, q);
  EXPECT_EQ(field_only.hilbert(), (HilbertFunction{1}));
  EXPECT_EQ(field_only.dim(), 1u);
  auto cubic = algebra(make_ring({"x"}), {"x^3"}, q);
  auto shift = cubic.mult_matrix(element(cubic, "x"));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(shift(r, c), r == c + 1 ? q.one() : q.zero());
  EXPECT_TRUE(cubic.mult_matrix(cubic.zero_vector()).is_zero());
}

TEST(Algebra, LocalExamples) {
  Field<Q> q;
  auto a = algebra(local_ring({"y", "z"}), {"yz", "z^3 + y^6"}, q);
  EXPECT_EQ(a.hilbert(), (HilbertFunction{1, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(a.dim(), 9u);
  auto b = algebra(local_ring({"x", "y"}), {"xy - x^3", "y^2"}, q);
  EXPECT_EQ(b.hilbert(), (HilbertFunction{1, 2, 1, 1, 1}));
  auto c = algebra(local_ring({"x", "y"}), {"t*x - y^2", "y^3"}, q, {{"t", 1}});
  EXPECT_EQ(c.hilbert(), (HilbertFunction{1, 1, 1}));
  // The element y - x^2 is killed by x in b.
  auto v = element(b, "y - x^2");
  EXPECT_TRUE(is_zero_vector(b.multiply(element(b, "x"), v)));
}

TEST(Algebra, Sperner) {
  Field<Q> q;
  EXPECT_EQ(algebra(make_ring({"x"}), {"x"}, q).sperner(), 1);
  EXPECT_EQ(algebra(make_ring({"x", "y"}), {"x^2", "y^2"}, q).sperner(), 2);
}

TEST(Algebra, AssociatedGraded) {
  Field<Q> q;
  auto same = algebra(local_ring({"x", "y"}), {"x^2", "xy", "y^2"}, q);
  auto gr_same = associated_graded(same);
  EXPECT_TRUE(gr_same.is_graded());
  EXPECT_EQ(gr_same.hilbert(), (HilbertFunction{1, 2}));
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(gr_same.variable_matrix(k), same.variable_matrix(k));

  auto b = algebra(local_ring({"x", "y"}), {"xy - x^3", "y^2"}, q);
  auto gr = associated_graded(b);
  EXPECT_EQ(gr.hilbert(), (HilbertFunction{1, 2, 1, 1, 1}));
  auto initial = algebra(make_ring({"x", "y"}), {"xy", "y^2", "x^5"}, q);
  ASSERT_EQ(initial.basis(), gr.basis());
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(gr.variable_matrix(k), initial.variable_matrix(k));
}

TEST(Algebra, Errors) {
  Field<Q> q;
  expect_error<Q>(ErrorCode::NotHomogeneous, [&] { algebra(make_ring({"x", "y"}), {"x^2 + y^3", "y^4"}, q); });
  expect_error<Q>(ErrorCode::NonUnitConstants, [&] { algebra(make_ring({"x", "y"}), {"3", "y^4"}, q); });
  expect_error<Q>(ErrorCode::A0NotField, [&] { algebra(local_ring({"x", "y"}), {"1 + x", "y^4"}, q); });
  expect_error<Q>(ErrorCode::NotHomogeneous,
                  [&] { algebra(make_ring({"y", "z"}, {1, 2}), {"y^2 + y*z", "z^3"}, q); });
  BuildOptions small;
  small.max_dim = 50;
  expect_error<Q>(ErrorCode::NotArtinian, [&] {
    auto ring = make_ring({"x", "y"});
    build_graded(ring, polys({"x^2"}, ring, q), q, small);
  });
  expect_error<Q>(ErrorCode::NotArtinian, [&] {
    auto ring = local_ring({"x", "y"});
    build_local(ring, polys({"x^2 - x^3"}, ring, q), q, small);
  });
  auto a = algebra(make_ring({"x"}), {"x^3"}, q);
  expect_error<Q>(ErrorCode::NotInMaximalIdeal, [&] { a.mult_matrix(element(a, "1 + x")); });
}

TEST(Algebra, RandomGradedInvariants) {
  Field<Fp> f(32003);
  Rng rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    auto inst = random_instance(rng, f, false);
    auto a = build_graded(inst.ring, inst.gens, f);
    int total = 0;
    for (int h : a.hilbert()) total += h;
    EXPECT_EQ(static_cast<std::size_t>(total), a.dim());
    EXPECT_EQ(a.hilbert()[0], 1);
    EXPECT_GT(a.hilbert().back(), 0);
    // Homogeneous multiplication respects the grading.
    for (std::size_t k = 0; k < a.nvars(); ++k) {
      const auto& x = a.variable_matrix(k);
      for (std::size_t c = 0; c < a.dim(); ++c)
        for (std::size_t r = 0; r < a.dim(); ++r)
          if (!x(r, c).is_zero()) EXPECT_EQ(a.degrees()[r], a.degrees()[c] + inst.ring.weight(k));
    }
    // Generators vanish, and multiplication is commutative.
    for (const auto& g : inst.gens) EXPECT_TRUE(is_zero_vector(a.normal_form(g)));
    for (std::size_t i = 0; i < a.nvars(); ++i)
      for (std::size_t j = 0; j < a.nvars(); ++j)
        EXPECT_EQ(a.variable_matrix(i) * a.variable_matrix(j), a.variable_matrix(j) * a.variable_matrix(i));
  }
}

TEST(Algebra, HomogeneousInputAgreesWithLocalConstruction) {
  Field<Fp> f(32003);
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, f, false, 60, false);
    auto graded = build_graded(inst.ring, inst.gens, f);
    auto local = build_local(inst.ring, inst.gens, f);
    EXPECT_EQ(graded.dim(), local.dim());
    EXPECT_EQ(local.hilbert(), graded.m_adic_hilbert());
    EXPECT_EQ(graded.hilbert(), graded.m_adic_hilbert());
  }
}

TEST(Algebra, LocalTruncationIsStable) {
  Field<Fp> f(32003);
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, f, true);
    auto a = build_local(inst.ring, inst.gens, f);
    BuildOptions deeper;
    deeper.min_truncation = a.socle_degree() + 2;
    auto b = build_local(inst.ring, inst.gens, f, deeper);
    EXPECT_EQ(a.dim(), b.dim());
    EXPECT_EQ(a.hilbert(), b.hilbert());
    EXPECT_EQ(a.basis(), b.basis());
    for (std::size_t k = 0; k < a.nvars(); ++k) EXPECT_EQ(a.variable_matrix(k), b.variable_matrix(k));
    for (const auto& g : inst.gens) EXPECT_TRUE(is_zero_vector(a.normal_form(g)));
    EXPECT_EQ(a.hilbert(), a.m_adic_hilbert());
    auto gr = associated_graded(a);
    EXPECT_EQ(gr.hilbert(), a.hilbert());
  }
}

TEST(Algebra, RationalAndModularAgree) {
  Field<Q> q;
  Field<Fp> f(32003);
  auto ring = make_ring({"x", "y", "z"});
  std::vector<std::string> gens{"x^2 - y z", "y^2 - 2 x z", "z^2 + 3 x y", "x^3", "y^3"};
  auto a = algebra(ring, gens, q);
  auto b = algebra(ring, gens, f);
  EXPECT_EQ(a.hilbert(), b.hilbert());
  EXPECT_EQ(a.basis(), b.basis());
}
