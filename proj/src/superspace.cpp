#include "superalg/superspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace superalg {

SuperSpace::SuperSpace(int even_dim, int odd_dim) : n(even_dim), m(odd_dim) {
  if (even_dim < 0 || odd_dim < 0) throw std::invalid_argument("negative superspace dimension");
}

Vec parity_part(const SuperSpace& s, const Vec& x, int parity) {
  Vec r(x.size());
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (s.parity(i) == parity) r[i] = x[i];
  return r;
}

std::optional<int> element_parity(const SuperSpace& s, const Vec& x) {
  bool even = false, odd = false;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (is_zero(x[i])) continue;
    (s.parity(i) ? odd : even) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, int d) {
  Vec r = zero_vec(d);
  for (const auto& [i, c] : v) r[i] = c;
  return r;
}

// ---------------------------------------------------------------- LinearOp

LinearOp::LinearOp(SuperSpace s) : space_(s), matrix_(s.dim(), s.dim()) {}

LinearOp::LinearOp(SuperSpace s, Mat matrix) : space_(s), matrix_(std::move(matrix)) {
  if (matrix_.rows() != s.dim() || matrix_.cols() != s.dim())
    throw std::invalid_argument("operator matrix shape does not match space");
}

LinearOp LinearOp::identity(SuperSpace s) { return LinearOp(s, Mat::identity(s.dim())); }

Vec LinearOp::operator()(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("space mismatch");
  return matrix_ * x;
}

LinearOp LinearOp::part(int parity) const {
  LinearOp r(space_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (((space_.parity(i) + space_.parity(j)) & 1) == parity) r.at(i, j) = at(i, j);
  return r;
}

std::optional<int> LinearOp::parity() const {
  bool even = false, odd = false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!superalg::is_zero(at(i, j))) ((space_.parity(i) + space_.parity(j)) & 1 ? odd : even) = true;
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

Vec LinearOp::coords() const {
  Vec c;
  c.reserve(static_cast<std::size_t>(dim()) * dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) c.push_back(at(i, j));
  return c;
}

LinearOp LinearOp::from_coords(SuperSpace s, const Vec& c) {
  const int d = s.dim();
  if (static_cast<int>(c.size()) != d * d) throw std::invalid_argument("coordinate length mismatch");
  LinearOp r(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = c[i * d + j];
  return r;
}

LinearOp LinearOp::operator+(const LinearOp& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  return LinearOp(space_, matrix_ + o.matrix_);
}

LinearOp LinearOp::operator-(const LinearOp& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  return LinearOp(space_, matrix_ - o.matrix_);
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  return LinearOp(space_, matrix_ * o.matrix_);
}

LinearOp operator*(const Rat& c, const LinearOp& a) { return LinearOp(a.space_, c * a.matrix_); }

// -------------------------------------------------------------- BilinearOp

BilinearOp::BilinearOp(SuperSpace s)
    : space_(s), table_(static_cast<std::size_t>(s.dim()) * s.dim()) {}

const SparseVec& BilinearOp::at(int i, int j) const {
  return table_[static_cast<std::size_t>(i) * dim() + j];
}

Vec BilinearOp::at_dense(int i, int j) const { return to_dense(at(i, j), dim()); }

Rat BilinearOp::coeff(int i, int j, int k) const {
  for (const auto& [idx, c] : at(i, j))
    if (idx == k) return c;
  return Rat(0);
}

void BilinearOp::set(int i, int j, const Vec& value) {
  if (static_cast<int>(value.size()) != dim()) throw std::invalid_argument("value length mismatch");
  table_[static_cast<std::size_t>(i) * dim() + j] = to_sparse(value);
}

void BilinearOp::add(int i, int j, int k, const Rat& c) {
  if (superalg::is_zero(c)) return;
  auto& e = table_[static_cast<std::size_t>(i) * dim() + j];
  auto it = std::lower_bound(e.begin(), e.end(), k,
                             [](const auto& p, int key) { return p.first < key; });
  if (it != e.end() && it->first == k) {
    it->second += c;
    if (superalg::is_zero(it->second)) e.erase(it);
  } else {
    e.insert(it, {k, c});
  }
}

Vec BilinearOp::operator()(const Vec& x, const Vec& y) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("space mismatch");
  Vec r = zero_vec(d);
  for (int i = 0; i < d; ++i) {
    if (superalg::is_zero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (superalg::is_zero(y[j])) continue;
      const auto& e = at(i, j);
      if (e.empty()) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, v] : e) r[k] += c * v;
    }
  }
  return r;
}

Vec BilinearOp::left_basis(int i, const Vec& y) const {
  Vec r = zero_vec(dim());
  for (int j = 0; j < dim(); ++j) {
    if (superalg::is_zero(y[j])) continue;
    for (const auto& [k, v] : at(i, j)) r[k] += y[j] * v;
  }
  return r;
}

Vec BilinearOp::right_basis(const Vec& x, int j) const {
  Vec r = zero_vec(dim());
  for (int i = 0; i < dim(); ++i) {
    if (superalg::is_zero(x[i])) continue;
    for (const auto& [k, v] : at(i, j)) r[k] += x[i] * v;
  }
  return r;
}

BilinearOp BilinearOp::part(int parity) const {
  BilinearOp r(space_);
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto& out = r.table_[static_cast<std::size_t>(i) * d + j];
      for (const auto& [k, v] : at(i, j))
        if (((space_.parity(i) + space_.parity(j) + space_.parity(k)) & 1) == parity)
          out.emplace_back(k, v);
    }
  return r;
}

std::optional<int> BilinearOp::parity() const {
  bool even = false, odd = false;
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, v] : at(i, j))
        ((space_.parity(i) + space_.parity(j) + space_.parity(k)) & 1 ? odd : even) = true;
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

bool BilinearOp::is_zero() const {
  for (const auto& e : table_)
    if (!e.empty()) return false;
  return true;
}

std::size_t BilinearOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& e : table_) n += e.size();
  return n;
}

Vec BilinearOp::coords() const {
  const int d = dim();
  Vec c = zero_vec(d * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, v] : at(i, j)) c[coord_index(d, i, j, k)] = v;
  return c;
}

BilinearOp BilinearOp::from_coords(SuperSpace s, const Vec& c) {
  const int d = s.dim();
  if (static_cast<int>(c.size()) != d * d * d) throw std::invalid_argument("coordinate length mismatch");
  BilinearOp r(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto& out = r.table_[static_cast<std::size_t>(i) * d + j];
      for (int k = 0; k < d; ++k) {
        const Rat& v = c[coord_index(d, i, j, k)];
        if (!superalg::is_zero(v)) out.emplace_back(k, v);
      }
    }
  return r;
}

namespace {

SparseVec merge(const SparseVec& a, const SparseVec& b, const Rat& scale_b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, scale_b * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second + scale_b * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BilinearOp BilinearOp::operator+(const BilinearOp& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  BilinearOp r(space_);
  for (std::size_t t = 0; t < table_.size(); ++t) r.table_[t] = merge(table_[t], o.table_[t], Rat(1));
  return r;
}

BilinearOp BilinearOp::operator-(const BilinearOp& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  BilinearOp r(space_);
  for (std::size_t t = 0; t < table_.size(); ++t) r.table_[t] = merge(table_[t], o.table_[t], Rat(-1));
  return r;
}

BilinearOp BilinearOp::operator-() const { return Rat(-1) * *this; }

BilinearOp operator*(const Rat& c, const BilinearOp& b) {
  BilinearOp r(b.space_);
  if (is_zero(c)) return r;
  for (std::size_t t = 0; t < b.table_.size(); ++t) {
    r.table_[t] = b.table_[t];
    for (auto& kv : r.table_[t]) kv.second *= c;
  }
  return r;
}

// ------------------------------------------------------------- TrilinearOp

TrilinearOp::TrilinearOp(SuperSpace s)
    : space_(s), table_(static_cast<std::size_t>(s.dim()) * s.dim() * s.dim()) {}

const SparseVec& TrilinearOp::at(int i, int j, int k) const {
  const std::size_t d = static_cast<std::size_t>(space_.dim());
  return table_[(i * d + j) * d + k];
}

void TrilinearOp::set(int i, int j, int k, const Vec& value) {
  const std::size_t d = static_cast<std::size_t>(space_.dim());
  table_[(i * d + j) * d + k] = to_sparse(value);
}

TrilinearOp TrilinearOp::part(int parity) const {
  TrilinearOp r(space_);
  const int d = space_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int base = space_.parity(i) + space_.parity(j) + space_.parity(k);
        Vec v = zero_vec(d);
        for (const auto& [l, c] : at(i, j, k))
          if (((base + space_.parity(l)) & 1) == parity) v[l] = c;
        r.set(i, j, k, v);
      }
  return r;
}

bool TrilinearOp::is_zero() const {
  for (const auto& e : table_)
    if (!e.empty()) return false;
  return true;
}

// -------------------------------------------------------------- operations

Vec eval_bilinear(const BilinearOp& b, const Vec& x, const Vec& y) { return b(x, y); }

LinearOp left_mul(const BilinearOp& m, const Vec& a) {
  const int d = m.dim();
  if (static_cast<int>(a.size()) != d) throw std::invalid_argument("space mismatch");
  LinearOp l(m.space());
  for (int i = 0; i < d; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, v] : m.at(i, j)) l.at(k, j) += a[i] * v;
  }
  return l;
}

LinearOp right_mul(const BilinearOp& m, const Vec& a) {
  const int d = m.dim();
  if (static_cast<int>(a.size()) != d) throw std::invalid_argument("space mismatch");
  LinearOp r(m.space());
  for (int j = 0; j < d; ++j) {
    if (is_zero(a[j])) continue;
    for (int i = 0; i < d; ++i)
      for (const auto& [k, v] : m.at(i, j)) r.at(k, i) += a[j] * v;
  }
  return r;
}

Rat supertrace(const LinearOp& t) {
  Rat s = 0;
  for (int i = 0; i < t.dim(); ++i) {
    if (t.space().parity(i) == 0)
      s += t.at(i, i);
    else
      s -= t.at(i, i);
  }
  return s;
}

LinearOp inverse(const LinearOp& phi) {
  const int d = phi.dim();
  Mat aug(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug.at(i, j) = phi.at(i, j);
    aug.at(i, d + i) = 1;
  }
  auto r = rref(aug);
  if (r.rank() < d || (d > 0 && r.pivots[d - 1] != d - 1))
    throw std::invalid_argument("operator is not invertible");
  Mat inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv.at(i, j) = r.reduced.at(i, d + j);
  return LinearOp(phi.space(), inv);
}

BilinearOp induced_iso(const LinearOp& phi, const BilinearOp& b) {
  if (!(phi.space() == b.space())) throw std::invalid_argument("space mismatch");
  if (!phi.part(1).is_zero()) throw std::invalid_argument("induced_iso needs an even operator");
  const LinearOp inv = inverse(phi);
  const int d = b.dim();
  std::vector<Vec> pre(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pre[i] = inv.matrix().col(i);
  BilinearOp r(b.space());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.set(i, j, phi(b(pre[i], pre[j])));
  return r;
}

std::vector<ElementaryOp> basis_ops(const SuperSpace& s) {
  std::vector<ElementaryOp> ops;
  const int d = s.dim();
  ops.reserve(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        BilinearOp e(s);
        e.add(i, j, k, Rat(1));
        ops.push_back({i, j, k, (s.parity(i) + s.parity(j) + s.parity(k)) & 1, std::move(e)});
      }
  return ops;
}

}  // namespace superalg
