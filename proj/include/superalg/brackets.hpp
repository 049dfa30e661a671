#pragma once

#include <optional>
#include <utility>

#include "superalg/superspace.hpp"

namespace superalg {

// Super-commutators of elements, linear and bilinear operators. Every
// formula is applied to homogeneous components of its arguments and the
// results are summed, so mixed-parity inputs are accepted. Reversed
// argument orders follow [X, Y] = -(-1)^{XY} [Y, X].

// AB - (-1)^{AB} BA
LinearOp bracket_lin_lin(const LinearOp& a, const LinearOp& b);

// [A, B](x, y) = A(B(x, y)) - (-1)^{BA} B(A x, y) - (-1)^{A(B+x)} B(x, A y)
BilinearOp bracket_lin_bilin(const LinearOp& a, const BilinearOp& b);
BilinearOp bracket_bilin_lin(const BilinearOp& b, const LinearOp& a);

// Six-term trilinear bracket of two bilinear operators.
TrilinearOp bracket_bilin_bilin(const BilinearOp& b, const BilinearOp& c);

// [B, x](y) = B(x, y)
LinearOp bracket_bilin_elem(const BilinearOp& b, const Vec& x);
LinearOp bracket_elem_bilin(const Vec& x, const BilinearOp& b);

// [A, x] = A(x)
Vec bracket_lin_elem(const LinearOp& a, const Vec& x);
Vec bracket_elem_lin(const Vec& x, const LinearOp& a);

bool is_superderivation(const LinearOp& d, const BilinearOp& m);

// First basis pair (x, y) violating [R_x, L_y] = [L_x, R_y], where the
// right multiplication carries its Koszul sign R_x(z) = (-1)^{xz} z x.
std::optional<std::pair<int, int>> flexibility_witness(const BilinearOp& m);
bool is_flexible(const BilinearOp& m);

// x o y = (xy + (-1)^{xy} yx) / 2
BilinearOp symmetrized(const BilinearOp& m);

// (xy)z = x(yz) on basis triples; no signs arise.
bool is_associative(const BilinearOp& m);

// Super-anticommutative and every L_a a superderivation.
bool is_lie_superalgebra(const BilinearOp& m);

}  // namespace superalg
