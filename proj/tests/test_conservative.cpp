#include <gtest/gtest.h>

#include <random>

#include "superalg/brackets.hpp"
#include "superalg/catalog_io.hpp"
#include "superalg/conservative.hpp"
#include "superalg/universal.hpp"
#include "test_support.hpp"

using namespace superalg;
using superalg::testing::make_op;

namespace {

BilinearOp gamma1() { return catalog("grassmann1").product; }
BilinearOp idempotent() { return catalog("idempotent-line").product; }

const AssociatedSolution& solved(const std::variant<AssociatedSolution, NotConservative>& v) {
  return std::get<AssociatedSolution>(v);
}

}  // namespace

TEST(CheckConservativePair, Examples) {
  for (const char* name : {"lie2", "heisenberg-super", "abelian-lie(2|1)"}) {
    const BilinearOp m = catalog(name).product;
    EXPECT_TRUE(check_conservative_pair(m, BilinearOp(m.space())).verdict) << name;
  }
  EXPECT_TRUE(check_conservative_pair(gamma1(), gamma1()).verdict);
  const ConservativityReport r = check_conservative_pair(idempotent(), make_op(1, 0, {{0, 0, 0, 2}}));
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (Quadruple{0, 0, 0, 0}));
  EXPECT_FALSE(is_zero(r.residual));
}

TEST(CheckConservativePair, WitnessReproducesResidual) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const BilinearOp m = random_superalgebra(100 + t, 1, 1, 0.6);
    const BilinearOp s = random_superalgebra(200 + t, 1, 1, 0.6);
    const ConservativityReport r = check_conservative_pair(m, s);
    if (r.verdict) continue;
    EXPECT_EQ(conservativity_residual(m, s, *r.witness), r.residual);
  }
}

TEST(CheckConservativePair, RejectsOddInputs) {
  const BilinearOp odd = make_op(1, 1, {{0, 0, 1, 1}});
  EXPECT_THROW(check_conservative_pair(odd, BilinearOp(odd.space())), std::invalid_argument);
}

TEST(SolveAssociated, Examples) {
  const auto idem = solve_associated(idempotent());
  ASSERT_TRUE(std::holds_alternative<AssociatedSolution>(idem));
  EXPECT_EQ(solved(idem).particular, idempotent());
  EXPECT_EQ(solved(idem).freedom_dim(), 0);

  const auto g = solve_associated(gamma1());
  ASSERT_TRUE(std::holds_alternative<AssociatedSolution>(g));
  EXPECT_EQ(solved(g).freedom_dim(), 0);
  EXPECT_EQ(solved(g).particular, gamma1());

  // Zero product: every even * works.
  const auto z = solve_associated(BilinearOp(SuperSpace(1, 1)));
  EXPECT_EQ(solved(z).freedom_dim(), 4);
  const auto zu = solve_associated(BilinearOp(SuperSpace(1, 1)), false);
  EXPECT_EQ(solved(zu).freedom_dim(), 8);
}

TEST(SolveAssociated, LeibnizIsConservative) {
  const auto r = solve_associated(catalog("leibniz2").product);
  EXPECT_TRUE(std::holds_alternative<AssociatedSolution>(r));
}

TEST(SolveAssociated, ParticularAndPerturbationsPass) {
  for (const auto& f : catalog_examples()) {
    const auto r = solve_associated(f.product);
    if (!std::holds_alternative<AssociatedSolution>(r)) continue;
    const AssociatedSolution& s = solved(r);
    EXPECT_TRUE(check_conservative_pair(f.product, s.particular).verdict) << f.name;
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      EXPECT_TRUE(check_conservative_pair(f.product, s.random_member(seed)).verdict) << f.name;
    const auto u = solve_associated(f.product, false);
    const int d = f.product.dim();
    EXPECT_EQ(solved(u).freedom_dim(), d * d * jacobi_subspace(f.product).dim()) << f.name;
    EXPECT_EQ(solved(u).freedom().dim(), solved(u).freedom_dim());
  }
}

TEST(SolveAssociated, NotConservativeNamesPair) {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 40 && !found; ++seed) {
    const BilinearOp m = random_superalgebra(seed, 2, 0, 0.7);
    const auto r = solve_associated(m);
    if (const auto* nc = std::get_if<NotConservative>(&r)) {
      ++found;
      EXPECT_GE(nc->a, 0);
      EXPECT_LT(nc->a, 2);
    }
  }
  EXPECT_EQ(found, 1);
}

TEST(JacobiSubspace, Examples) {
  EXPECT_EQ(jacobi_subspace(BilinearOp(SuperSpace(1, 1))), Subspace::full(2));
  EXPECT_EQ(jacobi_subspace(catalog("lie2").product), Subspace::full(2));
  EXPECT_EQ(jacobi_subspace(catalog("heisenberg-super").product), Subspace::full(3));
  EXPECT_EQ(jacobi_subspace(idempotent()).dim(), 0);
  EXPECT_EQ(jacobi_subspace(gamma1()).dim(), 0);
}

TEST(LeftAnnihilator, Examples) {
  EXPECT_EQ(left_annihilator(BilinearOp(SuperSpace(2, 0))), Subspace::full(2));
  EXPECT_EQ(left_annihilator(idempotent()).dim(), 0);
  EXPECT_EQ(left_annihilator(catalog("leibniz2").product), Subspace::span(2, {unit_vec(2, 0)}));
}

TEST(Structure, AnnihilatorInsideJacobiAndClosure) {
  std::vector<BilinearOp> algebras;
  for (const auto& f : catalog_examples()) algebras.push_back(f.product);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) algebras.push_back(random_superalgebra(seed, 1, 1, 0.3));
  for (const auto& m : algebras) {
    const Subspace j = jacobi_subspace(m), n = left_annihilator(m);
    EXPECT_EQ(intersect(n, j), n);
    EXPECT_TRUE(is_subalgebra(m, j));
    const Subspace i = maximal_jacobi_ideal(m);
    EXPECT_TRUE(is_ideal(m, i));
    EXPECT_EQ(intersect(i, j), i);
  }
}

// Brute force over the full space and
// all lines in a 2-dim space with small coordinates.
TEST(MaximalJacobiIdeal, ContainsEveryIdealInsideJ) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const BilinearOp m = random_superalgebra(seed, 2, 0, 0.25);
    const Subspace j = jacobi_subspace(m), i = maximal_jacobi_ideal(m);
    std::vector<Subspace> candidates{Subspace::full(2)};
    for (int p = -2; p <= 2; ++p)
      for (int q = -2; q <= 2; ++q)
        if (p || q) candidates.push_back(Subspace::span(2, {{Rat(p), Rat(q)}}));
    for (const auto& c : candidates)
      if (is_ideal(m, c) && intersect(c, j) == c) EXPECT_EQ(intersect(c, i), c);
  }
}

TEST(MaximalJacobiIdeal, Examples) {
  EXPECT_EQ(maximal_jacobi_ideal(BilinearOp(SuperSpace(1, 1))), Subspace::full(2));
  EXPECT_EQ(maximal_jacobi_ideal(gamma1()).dim(), 0);
  EXPECT_EQ(maximal_jacobi_ideal(build_universal(1, 1).product).dim(), 0);
}

TEST(Quasiunities, Examples) {
  const auto z = quasiunities(BilinearOp(SuperSpace(1, 1)));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->freedom, Subspace::span(2, {unit_vec(2, 0)}));
  const auto e = quasiunities(idempotent());
  ASSERT_TRUE(e);
  EXPECT_EQ(e->particular, unit_vec(1, 0));
  EXPECT_EQ(e->freedom.dim(), 0);
  const auto g = quasiunities(gamma1());
  ASSERT_TRUE(g);
  EXPECT_EQ(g->particular, unit_vec(2, 0));
  EXPECT_FALSE(quasiunities(catalog("nonflexible2").product));
}

TEST(Terminal, Examples) {
  EXPECT_TRUE(is_terminal(idempotent()));
  EXPECT_TRUE(is_terminal(BilinearOp(SuperSpace(1, 1))));
  EXPECT_TRUE(is_terminal(build_w(build_universal(1, 1)).product));
  EXPECT_TRUE(is_terminal(catalog("lie2").product));
}

TEST(Terminal, RoutesAgreeOnRandomAlgebras) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const BilinearOp m = random_superalgebra(seed, 1, 1, 0.5);
    EXPECT_EQ(is_terminal_trilinear(m), check_conservative_pair(m, terminal_associated(m)).verdict);
  }
}

TEST(Spans, Examples) {
  const BilinearOp zero(SuperSpace(1, 1));
  EXPECT_EQ(u0_span(zero).dim(), 0);
  EXPECT_EQ(u1_span(zero).dim(), 0);
  EXPECT_EQ(u0_span(idempotent()), Subspace::span(1, {{Rat(1)}}));
  EXPECT_EQ(u1_span(idempotent()), Subspace::span(1, {{Rat(1)}}));
  EXPECT_EQ(u0_span(gamma1()).dim(), 2);
  EXPECT_EQ(u1_span(gamma1()).dim(), 2);
}

TEST(Rigid, ConservativeCatalogAlgebras) {
  EXPECT_TRUE(is_rigid(BilinearOp(SuperSpace(1, 1))));
  EXPECT_TRUE(is_rigid(catalog("lie2").product));
  for (const auto& f : catalog_examples())
    if (std::holds_alternative<AssociatedSolution>(solve_associated(f.product)))
      EXPECT_TRUE(is_rigid(f.product)) << f.name;
}

TEST(Congruences, Examples) {
  const BilinearOp lie = catalog("lie2").product;
  EXPECT_TRUE(check_mstar_congruences(lie, BilinearOp(lie.space())));
  EXPECT_TRUE(check_mstar_congruences(idempotent(), idempotent()));
  EXPECT_FALSE(check_mstar_congruences(idempotent(), make_op(1, 0, {{0, 0, 0, 2}})));
  for (const auto& f : catalog_examples()) {
    const auto r = solve_associated(f.product);
    if (std::holds_alternative<AssociatedSolution>(r))
      EXPECT_TRUE(check_mstar_congruences(f.product, solved(r).particular)) << f.name;
  }
}

TEST(Derivations, Examples) {
  const BilinearOp ab = catalog("abelian-lie(2|1)").product;
  const DerivationFamily fa = conservative_derivations(ab, BilinearOp(ab.space()));
  for (const auto& d : fa.from_associated) EXPECT_TRUE(d.is_zero());

  const Subalgebra w = build_w(build_universal(1, 1));
  const DerivationFamily fw = conservative_derivations(w.product, terminal_associated(w.product));
  EXPECT_EQ(fw.terminal.size(), 16u);
  for (const auto& d : fw.terminal) EXPECT_TRUE(is_superderivation(d, w.product));

  const DerivationFamily fg = conservative_derivations(gamma1(), gamma1());
  EXPECT_EQ(fg.from_associated.size(), 4u);
  for (const auto& d : fg.from_associated) EXPECT_TRUE(is_superderivation(d, gamma1()));
}

// The variant with (-1)^{ab} in front of the last term is not a
// superderivation family on W(1,1) with its terminal product.
TEST(Derivations, SignedVariantFailsOnW) {
  const BilinearOp w = build_w(build_universal(1, 1)).product;
  const BilinearOp star = terminal_associated(w);
  const int d = w.dim();
  int failing = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Vec ea = unit_vec(d, a), eb = unit_vec(d, b);
      const int ab = w.space().parity(a) * w.space().parity(b);
      Vec arg = star(eb, ea);
      axpy(arg, Rat(-sign(ab)), star(ea, eb));
      const LinearOp op = bracket_lin_lin(left_mul(w, eb), left_mul(w, ea)) - Rat(sign(ab)) * left_mul(w, arg);
      failing += !is_superderivation(op, w);
    }
  EXPECT_EQ(failing, 2);
}
