#pragma once

#include <optional>
#include <vector>

#include "superalg/rational.hpp"

namespace superalg {

// Dense row-major matrix over Rat.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);
  static Mat from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c);
  const Rat& at(int r, int c) const;

  Vec row(int r) const;
  Vec col(int c) const;

  Mat transpose() const;
  bool is_zero() const;

  Vec operator*(const Vec& v) const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  friend Mat operator*(const Rat& c, const Mat& m);

  bool operator==(const Mat& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Unique reduced row echelon form (pivots strictly increasing, pivot
// entries 1, zero above and below each pivot). Zero rows are kept at the
// bottom so the shape is unchanged.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

// A subspace of Rat^n stored as its canonical RREF basis, so two subspaces
// are equal iff their representations are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  int codim() const { return ambient_ - dim(); }

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // v minus its component along the basis; zero iff v lies in the span.
  Vec residual(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v (assumed inside) against the RREF basis: v[pivot_r].
  Vec coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

bool contains(const Subspace& s, const Vec& v);

// Basis of {v : m v = 0}.
Subspace kernel_basis(const Mat& m);

struct AffineSolution {
  Vec particular;   // free variables set to zero
  Subspace kernel;
};

// Solution set of m x = b; std::nullopt when b is outside the column space.
std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b);

// a ∩ b; throws std::invalid_argument on ambient mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

// a + b
Subspace sum(const Subspace& a, const Subspace& b);

// Repeated solves against one (typically tall, sparse) matrix. A maximal
// independent row set is selected once; each solve works on those rows and
// is then verified against the full system.
class AffineSolver {
 public:
  explicit AffineSolver(const Mat& m);

  int rank() const { return static_cast<int>(pivots_.size()); }
  const Subspace& kernel() const { return kernel_; }

  std::optional<Vec> particular(const Vec& b) const;

 private:
  Mat m_;
  std::vector<int> row_basis_;
  Mat transform_;   // rank x rank, transform_ * m_[row_basis_] = RREF rows
  std::vector<int> pivots_;
  Subspace kernel_;
};

}  // namespace superalg
