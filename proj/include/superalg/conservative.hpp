#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "superalg/linalg.hpp"
#include "superalg/superspace.hpp"

namespace superalg {

// Basis indices at which the degree-4 conservativity identity is evaluated.
struct Quadruple {
  int a, b, x, y;
  bool operator==(const Quadruple&) const = default;
};

struct ConservativityReport {
  bool verdict = true;
  std::optional<Quadruple> witness;  // first failing quadruple, lexicographic
  Vec residual;                      // value of the identity at the witness
};

// [L_{e_a}, M] for every basis vector e_a.
std::vector<BilinearOp> left_shift_brackets(const BilinearOp& m);

// Matrix of c -> [L_c, M]: d^3 rows (bilinear coordinates), d columns.
Mat jacobi_operator_matrix(const BilinearOp& m);

// LHS - RHS of the expanded twelve-term identity at basis (a, b, x, y).
Vec conservativity_residual(const BilinearOp& m, const BilinearOp& mstar, const Quadruple& q);

// Checks [L_b, [L_a, M]] = -(-1)^{ab} [L_{a*b}, M] on all basis quadruples,
// once through the operator brackets and once through the expanded
// identity. Both must be even; a disagreement between the two routes
// throws std::logic_error.
ConservativityReport check_conservative_pair(const BilinearOp& m, const BilinearOp& mstar);

struct NotConservative {
  int a, b;  // first basis pair whose linear system for a*b is infeasible
};

struct AssociatedSolution {
  BilinearOp particular;
  bool parity_restricted = true;
  // Solution space of the homogeneous system for one pair. When restricted
  // it depends on the parity q = p(a) + p(b) of the pair; otherwise both
  // entries hold the same subspace of V.
  std::array<Subspace, 2> pair_freedom;

  int freedom_dim() const;
  // Freedom as a subspace of the d^3 bilinear coordinates.
  Subspace freedom() const;
  // particular + sum coeffs[t] * g_t over the freedom generators g_t, listed
  // by pair (a, b) lexicographically and then by kernel basis vector.
  BilinearOp perturbed(const std::vector<Rat>& coeffs) const;
  BilinearOp random_member(std::uint64_t seed) const;
};

// Solves the conservativity condition as a linear system in the structure
// constants of *. Pairs are solved independently; particular solutions
// set free variables to zero. With parity_restricted, a*b is sought in
// V_{p(a)+p(b)} only, i.e. * is even.
std::variant<AssociatedSolution, NotConservative> solve_associated(const BilinearOp& m,
                                                                   bool parity_restricted = true);

Subspace jacobi_subspace(const BilinearOp& m);
Subspace left_annihilator(const BilinearOp& m);
bool is_ideal(const BilinearOp& m, const Subspace& s);
bool is_subalgebra(const BilinearOp& m, const Subspace& s);
Subspace maximal_jacobi_ideal(const BilinearOp& m);

struct AffineElementSet {
  Vec particular;
  Subspace freedom;
};

// Even e with [L_e, M] = -M.
std::optional<AffineElementSet> quasiunities(const BilinearOp& m);

// x*y = 2/3 xy + 1/3 (-1)^{xy} yx
BilinearOp terminal_associated(const BilinearOp& m);

// [[L_a, M], M] = 0 for every basis a.
bool is_terminal_trilinear(const BilinearOp& m);

// Trilinear route, cross-checked (for even M) against conservativity with
// terminal_associated. Disagreement throws std::logic_error.
bool is_terminal(const BilinearOp& m);

// <L_a, [L_a, L_b]> in d^2 operator coordinates and <M, [L_a, M]> in d^3
// bilinear coordinates.
Subspace u0_span(const BilinearOp& m);
Subspace u1_span(const BilinearOp& m);
bool is_rigid(const BilinearOp& m);

bool check_mstar_congruences(const BilinearOp& m, const BilinearOp& mstar);

struct DerivationFamily {
  // [L_b, L_a] - L_{b*a - (-1)^{ab} a*b}, indexed a*d + b
  std::vector<LinearOp> from_associated;
  // [L_a, L_b] - 1/3 L_{[a,b]}, only for terminal M, indexed a*d + b
  std::vector<LinearOp> terminal;
};

// Every emitted operator is verified to be a superderivation of M;
// a failure throws std::logic_error.
DerivationFamily conservative_derivations(const BilinearOp& m, const BilinearOp& mstar);

}  // namespace superalg
