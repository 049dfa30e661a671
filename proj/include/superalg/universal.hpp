#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "superalg/conservative.hpp"
#include "superalg/superspace.hpp"

namespace superalg {

// (A ∆_a B)(x, y) = A(a, B(x, y)) - (-1)^{B(A+a)} B(A(a, x), y)
//                   - (-1)^{(A+a)(B+x)} B(x, A(a, y))
// a must be nonzero and homogeneous; A and B may be mixed.
BilinearOp kantor_product(const BilinearOp& A, const BilinearOp& B, const Vec& a);

// -(-1)^{AB} B(a, A(x, y))
BilinearOp nabla1(const BilinearOp& A, const BilinearOp& B, const Vec& a);

// (A* ∆_a B + (-1)^{AB} B~ ∆_a A) / 3
BilinearOp nabla2(const BilinearOp& A, const BilinearOp& B, const Vec& a);

// A*(x, y) = A(x, y) + (-1)^{xy} A(y, x)
BilinearOp supersymmetrize(const BilinearOp& A);
// B~(x, y) = 2 (-1)^{xy} B(y, x) - B(x, y)
BilinearOp tilde(const BilinearOp& B);

// Coordinates of U(V) = bilinear operations on V. The carrier basis lists
// the elementary operations of even parity first, then the odd ones, each
// group in lexicographic (i, j, k) order.
struct CarrierLayout {
  SuperSpace base;
  SuperSpace carrier;
  std::vector<int> to_lex;    // carrier index -> (i*d + j)*d + k
  std::vector<int> from_lex;  // inverse

  explicit CarrierLayout(const SuperSpace& v);

  BilinearOp to_op(const Vec& c) const;
  Vec from_op(const BilinearOp& b) const;
  BilinearOp basis_op(int t) const;
};

struct UniversalAlgebra {
  CarrierLayout layout;
  Vec distinguished;  // e_1
  BilinearOp product;

  const SuperSpace& base() const { return layout.base; }
  const SuperSpace& carrier() const { return layout.carrier; }
};

// Throws std::invalid_argument when n = 0.
UniversalAlgebra build_universal(int n, int m);

using OpProduct = std::function<BilinearOp(const BilinearOp&, const BilinearOp&, const Vec&)>;

// Structure constants on the carrier of any product of bilinear operations
// parametrized by a vector of V.
BilinearOp carrier_product(const CarrierLayout& layout, const OpProduct& f, const Vec& a);

BilinearOp nabla1_carrier(const UniversalAlgebra& u);
BilinearOp nabla2_carrier(const UniversalAlgebra& u);

// ∆_b on the carrier for a homogeneous b in V.
BilinearOp kantor_carrier_product(const CarrierLayout& layout, const Vec& b);

// [L_A, ∆_b](W, V) = (-1)^{AW} W ∆_{A(a,b)} V for homogeneous carrier
// vectors A, W, V and homogeneous b.
bool check_shift_identity(const UniversalAlgebra& u, const Vec& A, const Vec& w, const Vec& v,
                          const Vec& b);

// {A : A(a, x) = -x for all x}. Every member is verified to be a left unity
// of the carrier product; a failure throws std::logic_error.
AffineElementSet left_unities(const UniversalAlgebra& u);

// Kernel of the carrier product, cross-checked against {A : A(a, a) = 0}.
// Disagreement throws std::logic_error.
Subspace jacobi_of_universal(const UniversalAlgebra& u);

// Symplectic even block [[0, I], [-I, 0]] and identity odd block.
// Throws std::invalid_argument when n is odd.
Mat canonical_h_form(const SuperSpace& v);

// Carrier subspaces of supersymmetric operations and their S and H parts.
Subspace w_subspace(const CarrierLayout& layout);
Subspace s_subspace(const CarrierLayout& layout);
Subspace h_subspace(const CarrierLayout& layout);

struct Subalgebra {
  Subspace span;     // in carrier coordinates, homogeneous RREF basis
  SuperSpace space;  // grading of that basis
  BilinearOp product;

  Vec lift(const Vec& coords) const;
};

// Restriction of a product to a subspace with a homogeneous RREF basis.
// Throws std::invalid_argument when the subspace is not closed.
Subalgebra restrict_product(const BilinearOp& m, const Subspace& s);

Subalgebra build_w(const UniversalAlgebra& u);
Subalgebra build_s(const UniversalAlgebra& u);
Subalgebra build_h(const UniversalAlgebra& u);

// Left unities of U lying in the given subspace.
std::optional<AffineElementSet> left_unities_within(const UniversalAlgebra& u, const Subspace& s);

}  // namespace superalg
