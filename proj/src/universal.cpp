#include "superalg/universal.hpp"

#include <stdexcept>

#include "superalg/brackets.hpp"

namespace superalg {

namespace {

int require_homogeneous(const SuperSpace& s, const Vec& a) {
  if (is_zero(a)) throw std::invalid_argument("distinguished vector must be nonzero");
  auto p = element_parity(s, a);
  if (!p) throw std::invalid_argument("distinguished vector must be homogeneous");
  return *p;
}

std::vector<std::pair<int, BilinearOp>> nonzero_parts(const BilinearOp& b) {
  std::vector<std::pair<int, BilinearOp>> out;
  for (int p = 0; p < 2; ++p) {
    BilinearOp part = b.part(p);
    if (!part.is_zero()) out.emplace_back(p, std::move(part));
  }
  return out;
}

// acc += c * B(u, e_j) and acc += c * B(e_i, u) for sparse u.
void add_left(Vec& acc, const Rat& c, const BilinearOp& b, const SparseVec& u, int j) {
  for (const auto& [l, cu] : u)
    for (const auto& [k, v] : b.at(l, j)) acc[k] += c * cu * v;
}

void add_right(Vec& acc, const Rat& c, const BilinearOp& b, int i, const SparseVec& u) {
  for (const auto& [l, cu] : u)
    for (const auto& [k, v] : b.at(i, l)) acc[k] += c * cu * v;
}

}  // namespace

BilinearOp kantor_product(const BilinearOp& A, const BilinearOp& B, const Vec& a) {
  if (!(A.space() == B.space())) throw std::invalid_argument("space mismatch");
  const SuperSpace& s = A.space();
  const int d = s.dim();
  const int pa = require_homogeneous(s, a);
  BilinearOp out(s);
  const auto aps = nonzero_parts(A);
  const auto bps = nonzero_parts(B);
  if (aps.empty() || bps.empty()) return out;

  struct Shifted {
    int parity;  // A + a
    std::vector<SparseVec> cols;  // A(a, e_j)
  };
  std::vector<Shifted> shifted;
  for (const auto& [p, ap] : aps) {
    Shifted sh{(p + pa) & 1, {}};
    for (int j = 0; j < d; ++j) sh.cols.push_back(to_sparse(ap.right_basis(a, j)));
    shifted.push_back(std::move(sh));
  }

  for (int i = 0; i < d; ++i) {
    [[maybe_unused]] const int px = s.parity(i);
    for (int j = 0; j < d; ++j) {
      Vec acc = zero_vec(d);
      for (std::size_t t = 0; t < aps.size(); ++t) {
        const Shifted& sh = shifted[t];
        for (const auto& [pb, bp] : bps) {
          // A(a, B(x, y))
          for (const auto& [k, v] : bp.at(i, j))
            for (const auto& [r, c] : sh.cols[k]) acc[r] += v * c;
          // B(A(a, x), y)
          add_left(acc, Rat(-sign(pb * sh.parity)), bp, sh.cols[i], j);
          // B(x, A(a, y))
#ifdef SUPERALG_MUTATE_KANTOR_SIGN
          const int e = sh.parity * pb;
#else
          const int e = sh.parity * (pb + px);
#endif
          add_right(acc, Rat(-sign(e)), bp, i, sh.cols[j]);
        }
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

BilinearOp nabla1(const BilinearOp& A, const BilinearOp& B, const Vec& a) {
  const SuperSpace& s = A.space();
  const int d = s.dim();
  BilinearOp out(s);
  for (const auto& [pa, ap] : nonzero_parts(A))
    for (const auto& [pb, bp] : nonzero_parts(B)) {
      const Rat c(-sign(pa * pb));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const SparseVec& v = ap.at(i, j);
          if (v.empty()) continue;
          Vec acc = out.at_dense(i, j);
          for (const auto& [k, cv] : v) axpy(acc, c * cv, bp.right_basis(a, k));
          out.set(i, j, acc);
        }
    }
  return out;
}

BilinearOp supersymmetrize(const BilinearOp& A) {
  const SuperSpace& s = A.space();
  const int d = s.dim();
  BilinearOp out(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v = A.at_dense(i, j);
      axpy(v, Rat(sign(s.parity(i) * s.parity(j))), A.at_dense(j, i));
      out.set(i, j, v);
    }
  return out;
}

BilinearOp tilde(const BilinearOp& B) {
  const SuperSpace& s = B.space();
  const int d = s.dim();
  BilinearOp out(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v = Rat(2 * sign(s.parity(i) * s.parity(j))) * B.at_dense(j, i);
      axpy(v, Rat(-1), B.at_dense(i, j));
      out.set(i, j, v);
    }
  return out;
}

BilinearOp nabla2(const BilinearOp& A, const BilinearOp& B, const Vec& a) {
  BilinearOp out(A.space());
  for (const auto& [pa, ap] : nonzero_parts(A))
    for (const auto& [pb, bp] : nonzero_parts(B)) {
      BilinearOp t = kantor_product(supersymmetrize(ap), bp, a) +
                     Rat(sign(pa * pb)) * kantor_product(tilde(bp), ap, a);
      out = out + Rat(1, 3) * t;
    }
  return out;
}

CarrierLayout::CarrierLayout(const SuperSpace& v) : base(v) {
  const int d = v.dim();
  const int d3 = d * d * d;
  from_lex.assign(d3, -1);
  int even = 0;
  for (int want = 0; want < 2; ++want)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          if (((v.parity(i) + v.parity(j) + v.parity(k)) & 1) != want) continue;
          const int lex = BilinearOp::coord_index(d, i, j, k);
          from_lex[lex] = static_cast<int>(to_lex.size());
          to_lex.push_back(lex);
          if (want == 0) ++even;
        }
  carrier = SuperSpace(even, d3 - even);
}

BilinearOp CarrierLayout::to_op(const Vec& c) const {
  if (static_cast<int>(c.size()) != carrier.dim()) throw std::invalid_argument("carrier vector length");
  Vec lex = zero_vec(carrier.dim());
  for (int t = 0; t < carrier.dim(); ++t) lex[to_lex[t]] = c[t];
  return BilinearOp::from_coords(base, lex);
}

Vec CarrierLayout::from_op(const BilinearOp& b) const {
  if (!(b.space() == base)) throw std::invalid_argument("space mismatch");
  const Vec lex = b.coords();
  Vec c = zero_vec(carrier.dim());
  for (int t = 0; t < carrier.dim(); ++t) c[t] = lex[to_lex[t]];
  return c;
}

BilinearOp CarrierLayout::basis_op(int t) const { return to_op(unit_vec(carrier.dim(), t)); }

BilinearOp carrier_product(const CarrierLayout& layout, const OpProduct& f, const Vec& a) {
  const int dc = layout.carrier.dim();
  std::vector<BilinearOp> ops;
  for (int t = 0; t < dc; ++t) ops.push_back(layout.basis_op(t));
  BilinearOp out(layout.carrier);
  for (int s = 0; s < dc; ++s)
    for (int t = 0; t < dc; ++t) out.set(s, t, layout.from_op(f(ops[s], ops[t], a)));
  return out;
}

UniversalAlgebra build_universal(int n, int m) {
  if (n < 1) throw std::invalid_argument("U(n,m) needs n >= 1 for an even distinguished vector");
  if (m < 0) throw std::invalid_argument("odd dimension must be nonnegative");
  CarrierLayout layout(SuperSpace(n, m));
  Vec a = unit_vec(n + m, 0);
  BilinearOp product = carrier_product(layout, kantor_product, a);
  return UniversalAlgebra{std::move(layout), std::move(a), std::move(product)};
}

BilinearOp nabla1_carrier(const UniversalAlgebra& u) {
  return carrier_product(u.layout, nabla1, u.distinguished);
}

BilinearOp nabla2_carrier(const UniversalAlgebra& u) {
  return carrier_product(u.layout, nabla2, u.distinguished);
}

BilinearOp kantor_carrier_product(const CarrierLayout& layout, const Vec& b) {
  return carrier_product(layout, kantor_product, b);
}

bool check_shift_identity(const UniversalAlgebra& u, const Vec& A, const Vec& w, const Vec& v,
                          const Vec& b) {
  const SuperSpace& c = u.carrier();
  auto pA = element_parity(c, A);
  auto pW = element_parity(c, w);
  if (!pA || !pW || !element_parity(c, v)) throw std::invalid_argument("arguments must be homogeneous");
  const LinearOp la = left_mul(u.product, A);
  const BilinearOp db = kantor_carrier_product(u.layout, b);
  const Vec lhs = bracket_lin_bilin(la, db)(w, v);
  const Vec shift = u.layout.to_op(A)(u.distinguished, b);
  if (is_zero(shift)) return is_zero(lhs);
  const BilinearOp wv = kantor_product(u.layout.to_op(w), u.layout.to_op(v), shift);
  return lhs == Rat(sign(*pA * *pW)) * u.layout.from_op(wv);
}

std::optional<AffineElementSet> left_unities_within(const UniversalAlgebra& u, const Subspace& s) {
  const int d = u.base().dim();
  const int dim = s.dim();
  // A(e_1, e_j) = -e_j, one equation per (j, k).
  Mat eqs(d * d, dim);
  Vec rhs = zero_vec(d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const int row = j * d + k;
      const int t = u.layout.from_lex[BilinearOp::coord_index(d, 0, j, k)];
      for (int c = 0; c < dim; ++c) eqs.at(row, c) = s.basis()[c][t];
      if (j == k) rhs[row] = -1;
    }
  auto sol = solve_affine(eqs, rhs);
  if (!sol) return std::nullopt;
  auto lift = [&](const Vec& coords) {
    Vec v = zero_vec(s.ambient_dim());
    for (int c = 0; c < dim; ++c) axpy(v, coords[c], s.basis()[c]);
    return v;
  };
  std::vector<Vec> free;
  for (const auto& k : sol->kernel.basis()) free.push_back(lift(k));
  return AffineElementSet{lift(sol->particular), Subspace::span(s.ambient_dim(), free)};
}

AffineElementSet left_unities(const UniversalAlgebra& u) {
  const int dc = u.carrier().dim();
  auto set = left_unities_within(u, Subspace::full(dc));
  if (!set) throw std::logic_error("U has no left unity");
  for (int t = 0; t < dc; ++t) {
    const Vec b = unit_vec(dc, t);
    if (u.product(set->particular, b) != b) throw std::logic_error("left unity check failed");
    for (const auto& f : set->freedom.basis())
      if (!is_zero(u.product(f, b))) throw std::logic_error("left unity check failed");
  }
  return *set;
}

Subspace jacobi_of_universal(const UniversalAlgebra& u) {
  const int d = u.base().dim();
  const int dc = u.carrier().dim();
  const Subspace by_kernel = jacobi_subspace(u.product);
  std::vector<Vec> rows;
  for (int k = 0; k < d; ++k) rows.push_back(unit_vec(dc, u.layout.from_lex[BilinearOp::coord_index(d, 0, 0, k)]));
  const Subspace by_value = kernel_basis(Mat::from_rows(rows, dc));
  if (!(by_kernel == by_value))
    throw std::logic_error("Jacobi subspace of U disagrees with {A : A(a,a) = 0}");
  return by_kernel;
}

Mat canonical_h_form(const SuperSpace& v) {
  if (v.n % 2 != 0) throw std::invalid_argument("n must be even");
  const int d = v.dim();
  const int h = v.n / 2;
  Mat w(d, d);
  for (int i = 0; i < h; ++i) {
    w.at(i, h + i) = 1;
    w.at(h + i, i) = -1;
  }
  for (int i = v.n; i < d; ++i) w.at(i, i) = 1;
  return w;
}

namespace {

Mat supersymmetry_rows(const CarrierLayout& layout) {
  const SuperSpace& v = layout.base;
  const int d = v.dim();
  std::vector<Vec> rows;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec r = zero_vec(layout.carrier.dim());
        r[layout.from_lex[BilinearOp::coord_index(d, i, j, k)]] += 1;
        r[layout.from_lex[BilinearOp::coord_index(d, j, i, k)]] -= sign(v.parity(i) * v.parity(j));
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
  return Mat::from_rows(rows, layout.carrier.dim());
}

Subspace with_extra_rows(const CarrierLayout& layout, std::vector<Vec> extra) {
  const Mat base = supersymmetry_rows(layout);
  for (int r = 0; r < base.rows(); ++r) extra.push_back(base.row(r));
  return kernel_basis(Mat::from_rows(extra, layout.carrier.dim()));
}

}  // namespace

Subspace w_subspace(const CarrierLayout& layout) { return kernel_basis(supersymmetry_rows(layout)); }

Subspace s_subspace(const CarrierLayout& layout) {
  const SuperSpace& v = layout.base;
  const int d = v.dim();
  std::vector<Vec> rows;
  for (int a = 0; a < d; ++a) {
    Vec r = zero_vec(layout.carrier.dim());
    for (int j = 0; j < d; ++j) r[layout.from_lex[BilinearOp::coord_index(d, a, j, j)]] += sign(v.parity(j));
    rows.push_back(std::move(r));
  }
  return with_extra_rows(layout, std::move(rows));
}

Subspace h_subspace(const CarrierLayout& layout) {
  const SuperSpace& v = layout.base;
  const int d = v.dim();
  const Mat w = canonical_h_form(v);
  std::vector<Vec> rows;
  // <A(x,y), z> - (-1)^{yz} <A(x,z), y>
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Vec r = zero_vec(layout.carrier.dim());
        const int s = sign(v.parity(y) * v.parity(z));
        for (int k = 0; k < d; ++k) {
          r[layout.from_lex[BilinearOp::coord_index(d, x, y, k)]] += w.at(k, z);
          r[layout.from_lex[BilinearOp::coord_index(d, x, z, k)]] -= s * w.at(k, y);
        }
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
  return with_extra_rows(layout, std::move(rows));
}

Vec Subalgebra::lift(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != span.dim()) throw std::invalid_argument("coordinate length");
  Vec v = zero_vec(span.ambient_dim());
  for (int t = 0; t < span.dim(); ++t) axpy(v, coords[t], span.basis()[t]);
  return v;
}

Subalgebra restrict_product(const BilinearOp& m, const Subspace& s) {
  const SuperSpace& c = m.space();
  int even = 0;
  bool seen_odd = false;
  for (const auto& v : s.basis()) {
    auto p = element_parity(c, v);
    if (!p) throw std::invalid_argument("subspace basis is not homogeneous");
    if (*p == 0) {
      if (seen_odd) throw std::invalid_argument("subspace basis is not even-first");
      ++even;
    } else {
      seen_odd = true;
    }
  }
  Subalgebra sub{s, SuperSpace(even, s.dim() - even), BilinearOp(SuperSpace(even, s.dim() - even))};
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      const Vec v = m(s.basis()[i], s.basis()[j]);
      if (!s.contains(v)) throw std::invalid_argument("subspace is not closed under the product");
      sub.product.set(i, j, s.coordinates(v));
    }
  return sub;
}

Subalgebra build_w(const UniversalAlgebra& u) { return restrict_product(u.product, w_subspace(u.layout)); }
Subalgebra build_s(const UniversalAlgebra& u) { return restrict_product(u.product, s_subspace(u.layout)); }
Subalgebra build_h(const UniversalAlgebra& u) { return restrict_product(u.product, h_subspace(u.layout)); }

}  // namespace superalg
