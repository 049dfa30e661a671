#include "superalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace superalg {

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Rat& Mat::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

const Rat& Mat::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

Vec Mat::row(int r) const {
  Vec v(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!superalg::is_zero(x)) return false;
  return true;
}

Vec Mat::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(static_cast<std::size_t>(rows_));
  for (int c = 0; c < cols_; ++c) {
    if (superalg::is_zero(v[c])) continue;
    for (int r = 0; r < rows_; ++r) {
      const Rat& x = data_[static_cast<std::size_t>(r) * cols_ + c];
      if (!superalg::is_zero(x)) out[r] += x * v[c];
    }
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(r, k);
      if (superalg::is_zero(x)) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Rat& y = o.at(k, c);
        if (!superalg::is_zero(y)) out.at(r, c) += x * y;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Mat operator*(const Rat& c, const Mat& m) {
  Mat out(m);
  for (auto& x : out.data_) x *= c;
  return out;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& a = res.reduced;
  const int rows = a.rows();
  const int cols = a.cols();
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int pr = -1;
    for (int r = lead; r < rows; ++r)
      if (!is_zero(a.at(r, c))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != lead)
      for (int k = c; k < cols; ++k) std::swap(a.at(pr, k), a.at(lead, k));
    const Rat inv = 1 / a.at(lead, c);
    for (int k = c; k < cols; ++k)
      if (!is_zero(a.at(lead, k))) a.at(lead, k) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || is_zero(a.at(r, c))) continue;
      const Rat f = a.at(r, c);
      for (int k = c; k < cols; ++k)
        if (!is_zero(a.at(lead, k))) a.at(r, k) -= f * a.at(lead, k);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  return res;
}

int rank(const Mat& m) { return rref(m).rank(); }

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vec(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto r = rref(Mat::from_rows(vectors, ambient_dim));
  for (int i = 0; i < r.rank(); ++i) s.rows_.push_back(r.reduced.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Vec Subspace::residual(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  Vec r(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = r[pivots_[i]];
    if (!is_zero(c)) axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return superalg::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool contains(const Subspace& s, const Vec& v) { return s.contains(v); }

Subspace kernel_basis(const Mat& m) {
  auto r = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (int i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("right-hand side length mismatch");
  const int n = m.cols();
  Mat aug(m.rows(), n + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n) = b[r];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vec x = zero_vec(n);
  for (int i = 0; i < red.rank(); ++i) x[red.pivots[i]] = red.reduced.at(i, n);
  return AffineSolution{std::move(x), kernel_basis(m)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const int n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Solve sum alpha_i a_i - sum beta_j b_j = 0 and map alpha back.
  std::vector<Vec> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(-v);
  auto ker = kernel_basis(Mat::from_columns(cols, n));
  std::vector<Vec> out;
  for (const auto& k : ker.basis()) {
    Vec v = zero_vec(n);
    for (int i = 0; i < a.dim(); ++i) axpy(v, k[i], a.basis()[i]);
    out.push_back(std::move(v));
  }
  return Subspace::span(n, out);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

AffineSolver::AffineSolver(const Mat& m) : m_(m) {
  const int n = m.cols();
  std::vector<std::pair<Vec, int>> echelon;
  for (int r = 0; r < m.rows() && static_cast<int>(echelon.size()) < n; ++r) {
    Vec row = m.row(r);
    if (superalg::is_zero(row)) continue;
    for (const auto& [e, p] : echelon)
      if (!is_zero(row[p])) axpy(row, -Rat(row[p]), e);
    int p = -1;
    for (int c = 0; c < n; ++c)
      if (!is_zero(row[c])) {
        p = c;
        break;
      }
    if (p < 0) continue;
    const Rat inv = 1 / row[p];
    for (auto& x : row) x *= inv;
    echelon.emplace_back(std::move(row), p);
    row_basis_.push_back(r);
  }
  const int k = static_cast<int>(row_basis_.size());
  Mat aug(k, n + k);
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < n; ++c) aug.at(i, c) = m.at(row_basis_[i], c);
    aug.at(i, n + i) = 1;
  }
  auto red = rref(aug);
  transform_ = Mat(k, k);
  for (int i = 0; i < k; ++i) {
    pivots_.push_back(red.pivots[i]);
    for (int j = 0; j < k; ++j) transform_.at(i, j) = red.reduced.at(i, n + j);
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<Vec> ker;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (int i = 0; i < k; ++i) v[pivots_[i]] = -red.reduced.at(i, f);
    ker.push_back(std::move(v));
  }
  kernel_ = Subspace::span(n, ker);
}

std::optional<Vec> AffineSolver::particular(const Vec& b) const {
  if (static_cast<int>(b.size()) != m_.rows())
    throw std::invalid_argument("right-hand side length mismatch");
  const int k = rank();
  Vec x = zero_vec(m_.cols());
  for (int i = 0; i < k; ++i) {
    Rat acc = 0;
    for (int j = 0; j < k; ++j) {
      const Rat& t = transform_.at(i, j);
      if (!is_zero(t)) acc += t * b[row_basis_[j]];
    }
    x[pivots_[i]] = acc;
  }
  if (m_ * x != b) return std::nullopt;
  return x;
}

}  // namespace superalg
