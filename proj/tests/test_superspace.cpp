#include <gtest/gtest.h>

#include <random>

#include "superalg/superspace.hpp"
#include "test_support.hpp"

using namespace superalg;
using superalg::testing::make_op;
using superalg::testing::random_op;

TEST(SuperSpace, EvenFirstParity) {
  const SuperSpace s(2, 1);
  EXPECT_EQ(s.dim(), 3);
  EXPECT_EQ(s.parity(0), 0);
  EXPECT_EQ(s.parity(1), 0);
  EXPECT_EQ(s.parity(2), 1);
  EXPECT_THROW(SuperSpace(-1, 0), std::invalid_argument);
}

TEST(SuperSpace, ElementParity) {
  const SuperSpace s(1, 1);
  EXPECT_EQ(element_parity(s, {Rat(0), Rat(0)}), 0);
  EXPECT_EQ(element_parity(s, {Rat(0), Rat(3)}), 1);
  EXPECT_FALSE(element_parity(s, {Rat(1), Rat(3)}).has_value());
}

TEST(LinearOp, PartsSumToWhole) {
  const SuperSpace s(1, 2);
  Mat a(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = Rat(r * 3 + c + 1);
  const LinearOp op(s, a);
  EXPECT_EQ(op.part(0) + op.part(1), op);
  EXPECT_EQ(op.part(0).parity(), 0);
  EXPECT_EQ(op.part(1).parity(), 1);
  EXPECT_FALSE(op.parity().has_value());
}

TEST(LinearOp, Supertrace) {
  const SuperSpace s(1, 1);
  EXPECT_EQ(supertrace(LinearOp::identity(s)), Rat(0));
  EXPECT_EQ(supertrace(LinearOp::identity(SuperSpace(2, 1))), Rat(1));
}

TEST(BilinearOp, CoordsRoundTrip) {
  std::mt19937_64 rng(21);
  const SuperSpace s(2, 1);
  for (int t = 0; t < 10; ++t) {
    const BilinearOp b = random_op(s, rng);
    EXPECT_EQ(BilinearOp::from_coords(s, b.coords()), b);
    EXPECT_EQ(b.part(0) + b.part(1), b);
  }
}

TEST(BilinearOp, ParityOfConstants) {
  // e_0 e_1 = e_1 in (1|1) is even, e_0 e_0 = e_1 is odd.
  EXPECT_EQ(make_op(1, 1, {{0, 1, 1, 1}}).parity(), 0);
  EXPECT_EQ(make_op(1, 1, {{0, 0, 1, 1}}).parity(), 1);
}

TEST(BilinearOp, LeftAndRightMultiplication) {
  const BilinearOp m = make_op(2, 0, {{0, 0, 1, 1}, {0, 1, 0, 1}});
  const LinearOp l = left_mul(m, unit_vec(2, 0));
  const LinearOp r = right_mul(m, unit_vec(2, 0));
  EXPECT_EQ(l(unit_vec(2, 1)), unit_vec(2, 0));
  EXPECT_EQ(r(unit_vec(2, 0)), unit_vec(2, 1));
  EXPECT_TRUE(is_zero(r(unit_vec(2, 1))));
}

TEST(InducedIso, ComposesWithInverse) {
  std::mt19937_64 rng(22);
  const SuperSpace s(2, 1);
  Mat p = Mat::identity(3);
  p.at(0, 1) = Rat(2);
  p.at(1, 0) = Rat(-1);
  p.at(2, 2) = Rat(3);
  const LinearOp phi(s, p);
  const LinearOp inv = inverse(phi);
  EXPECT_EQ(phi * inv, LinearOp::identity(s));
  const BilinearOp b = random_op(s, rng);
  EXPECT_EQ(induced_iso(inv, induced_iso(phi, b)), b);
}

TEST(InducedIso, RejectsOddOrSingular) {
  const SuperSpace s(1, 1);
  Mat odd(2, 2);
  odd.at(0, 1) = Rat(1);
  odd.at(1, 0) = Rat(1);
  EXPECT_THROW(induced_iso(LinearOp(s, odd), BilinearOp(s)), std::invalid_argument);
  EXPECT_THROW(inverse(LinearOp(s)), std::invalid_argument);
}

TEST(BasisOps, LexOrderAndParity) {
  const auto ops = basis_ops(SuperSpace(1, 1));
  ASSERT_EQ(ops.size(), 8u);
  EXPECT_EQ(ops[1].i, 0);
  EXPECT_EQ(ops[1].j, 0);
  EXPECT_EQ(ops[1].k, 1);
  EXPECT_EQ(ops[1].parity, 1);
  EXPECT_EQ(ops[1].op.coeff(0, 0, 1), Rat(1));
  int even = 0;
  for (const auto& e : ops) even += e.parity == 0;
  EXPECT_EQ(even, 4);
}

TEST(LinearOp, SupertraceExamples) {
  const SuperSpace s(1, 1);
  Mat diag(2, 2);
  diag.at(0, 0) = Rat(2);
  diag.at(1, 1) = Rat(3);
  EXPECT_EQ(supertrace(LinearOp(s, diag)), Rat(-1));
  Mat odd(2, 2);
  odd.at(0, 1) = Rat(5);
  odd.at(1, 0) = Rat(-1);
  EXPECT_EQ(supertrace(LinearOp(s, odd)), Rat(0));
}

TEST(BilinearOp, GammaOneMultiplications) {
  const BilinearOp g = make_op(1, 1, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  const Vec xi = unit_vec(2, 1);
  EXPECT_TRUE(is_zero(eval_bilinear(g, xi, xi)));
  Mat expect(2, 2);
  expect.at(1, 0) = Rat(1);
  EXPECT_EQ(left_mul(g, xi).matrix(), expect);
  EXPECT_EQ(right_mul(g, xi).matrix(), expect);
  const BilinearOp e = make_op(1, 0, {{0, 0, 0, 1}});
  EXPECT_EQ(eval_bilinear(e, {Rat(2)}, {Rat(3)}), (Vec{Rat(6)}));
  EXPECT_EQ(left_mul(e, unit_vec(1, 0)), LinearOp::identity(SuperSpace(1, 0)));
}

TEST(BilinearOp, Bilinearity) {
  std::mt19937_64 rng(23);
  const SuperSpace s(2, 1);
  const BilinearOp b = random_op(s, rng);
  for (int t = 0; t < 10; ++t) {
    Vec x = zero_vec(3), x2 = zero_vec(3), y = zero_vec(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = Rat(static_cast<long>(rng() % 7) - 3);
      x2[i] = Rat(static_cast<long>(rng() % 7) - 3);
      y[i] = Rat(static_cast<long>(rng() % 7) - 3);
    }
    EXPECT_EQ(b(x + x2, y), b(x, y) + b(x2, y));
    EXPECT_EQ(b(Rat(3, 2) * x, y), Rat(3, 2) * b(x, y));
  }
}

TEST(InducedIso, ScalarAndComposition) {
  const SuperSpace line(1, 0);
  const BilinearOp b = make_op(1, 0, {{0, 0, 0, 6}});
  const LinearOp lambda(line, Mat::from_rows({{Rat(3)}}, 1));
  EXPECT_EQ(induced_iso(lambda, b), make_op(1, 0, {{0, 0, 0, 2}}));
  EXPECT_EQ(induced_iso(LinearOp::identity(line), b), b);

  std::mt19937_64 rng(24);
  const SuperSpace s(2, 0);
  const LinearOp phi(s, Mat::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(2)}}, 2));
  const LinearOp psi(s, Mat::from_rows({{Rat(0), Rat(1)}, {Rat(-1), Rat(3)}}, 2));
  const BilinearOp c = random_op(s, rng);
  EXPECT_EQ(induced_iso(phi, induced_iso(psi, c)), induced_iso(phi * psi, c));
}

TEST(BasisOps, SpanEveryOperation) {
  EXPECT_EQ(basis_ops(SuperSpace(1, 0)).size(), 1u);
  EXPECT_EQ(basis_ops(SuperSpace(2, 1)).size(), 27u);
  std::mt19937_64 rng(25);
  const SuperSpace s(1, 1);
  const BilinearOp b = random_op(s, rng);
  BilinearOp sum(s);
  for (const auto& e : basis_ops(s)) sum = sum + b.coeff(e.i, e.j, e.k) * e.op;
  EXPECT_EQ(sum, b);
}
