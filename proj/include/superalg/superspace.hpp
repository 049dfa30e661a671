#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superalg/linalg.hpp"
#include "superalg/rational.hpp"

namespace superalg {

// A superspace V = V0 ⊕ V1 of dimension (n|m). The basis is ordered
// even-first, so the parity of basis vector i is (i >= n).
struct SuperSpace {
  int n = 0;
  int m = 0;

  SuperSpace() = default;
  SuperSpace(int even_dim, int odd_dim);

  int dim() const { return n + m; }
  int parity(int i) const { return i < n ? 0 : 1; }
  bool operator==(const SuperSpace&) const = default;
};

inline int sign(int exponent) { return (exponent & 1) ? -1 : 1; }

// Component of x of the given parity.
Vec parity_part(const SuperSpace& s, const Vec& x, int parity);

// Parity of a homogeneous element; zero counts as even. nullopt if mixed.
std::optional<int> element_parity(const SuperSpace& s, const Vec& x);

// Sorted (index, value) list with no zero values.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int d);

// A linear operator as a d x d matrix acting on column vectors.
// Entry (r, c) maps e_c to e_r and has parity p(r) + p(c).
class LinearOp {
 public:
  LinearOp() = default;
  explicit LinearOp(SuperSpace s);
  LinearOp(SuperSpace s, Mat matrix);

  static LinearOp identity(SuperSpace s);

  const SuperSpace& space() const { return space_; }
  const Mat& matrix() const { return matrix_; }
  int dim() const { return space_.dim(); }

  Rat& at(int r, int c) { return matrix_.at(r, c); }
  const Rat& at(int r, int c) const { return matrix_.at(r, c); }

  Vec operator()(const Vec& x) const;

  LinearOp part(int parity) const;
  std::optional<int> parity() const;
  bool is_zero() const { return matrix_.is_zero(); }

  // Row-major d^2 coordinates.
  Vec coords() const;
  static LinearOp from_coords(SuperSpace s, const Vec& c);

  LinearOp operator+(const LinearOp& o) const;
  LinearOp operator-(const LinearOp& o) const;
  LinearOp operator*(const LinearOp& o) const;  // composition
  friend LinearOp operator*(const Rat& c, const LinearOp& a);
  bool operator==(const LinearOp& o) const = default;

 private:
  SuperSpace space_;
  Mat matrix_;
};

// A bilinear operation V x V -> V given by sparse structure constants
// c_ij = B(e_i, e_j). Constant (i, j, k) has parity p(i) + p(j) + p(k).
// Doubles as a superalgebra product and as an element of U(V).
class BilinearOp {
 public:
  BilinearOp() = default;
  explicit BilinearOp(SuperSpace s);

  const SuperSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  const SparseVec& at(int i, int j) const;
  Vec at_dense(int i, int j) const;
  Rat coeff(int i, int j, int k) const;

  void set(int i, int j, const Vec& value);
  void add(int i, int j, int k, const Rat& c);

  Vec operator()(const Vec& x, const Vec& y) const;
  // B(e_i, y) and B(x, e_j) for dense arguments.
  Vec left_basis(int i, const Vec& y) const;
  Vec right_basis(const Vec& x, int j) const;

  BilinearOp part(int parity) const;
  std::optional<int> parity() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  // Lexicographic (i, j, k) coordinates, index (i*d + j)*d + k.
  Vec coords() const;
  static BilinearOp from_coords(SuperSpace s, const Vec& c);
  static int coord_index(int d, int i, int j, int k) { return (i * d + j) * d + k; }

  BilinearOp operator+(const BilinearOp& o) const;
  BilinearOp operator-(const BilinearOp& o) const;
  BilinearOp operator-() const;
  friend BilinearOp operator*(const Rat& c, const BilinearOp& b);
  bool operator==(const BilinearOp& o) const = default;

 private:
  SuperSpace space_;
  std::vector<SparseVec> table_;
};

// T(e_i, e_j, e_k), same sparse layout as BilinearOp.
class TrilinearOp {
 public:
  TrilinearOp() = default;
  explicit TrilinearOp(SuperSpace s);

  const SuperSpace& space() const { return space_; }
  const SparseVec& at(int i, int j, int k) const;
  void set(int i, int j, int k, const Vec& value);

  TrilinearOp part(int parity) const;
  bool is_zero() const;
  bool operator==(const TrilinearOp& o) const = default;

 private:
  SuperSpace space_;
  std::vector<SparseVec> table_;
};

Vec eval_bilinear(const BilinearOp& b, const Vec& x, const Vec& y);

// L_a: x -> M(a, x); column j is M(a, e_j).
LinearOp left_mul(const BilinearOp& m, const Vec& a);

// R_a: x -> M(x, a), raw (no Koszul sign); column j is M(e_j, a).
LinearOp right_mul(const BilinearOp& m, const Vec& a);

// Even-even block trace minus odd-odd block trace.
Rat supertrace(const LinearOp& t);

// phi(B)(x, y) = phi(B(phi^-1 x, phi^-1 y)) for an even invertible phi.
BilinearOp induced_iso(const LinearOp& phi, const BilinearOp& b);

// Inverse of an invertible operator; throws std::invalid_argument otherwise.
LinearOp inverse(const LinearOp& phi);

struct ElementaryOp {
  int i, j, k;
  int parity;
  BilinearOp op;   // E(e_i, e_j) = e_k, zero elsewhere
};

// All d^3 elementary operations in lexicographic (i, j, k) order.
std::vector<ElementaryOp> basis_ops(const SuperSpace& s);

}  // namespace superalg
