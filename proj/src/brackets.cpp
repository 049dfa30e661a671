#include "superalg/brackets.hpp"

#include <array>
#include <stdexcept>

namespace superalg {

namespace {

void require_same(const SuperSpace& a, const SuperSpace& b) {
  if (!(a == b)) throw std::invalid_argument("space mismatch");
}

// Column c of a linear operator as a sparse list of (row, value).
std::vector<SparseVec> sparse_columns(const LinearOp& a) {
  const int d = a.dim();
  std::vector<SparseVec> cols(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r)
      if (!is_zero(a.at(r, c))) cols[c].emplace_back(r, a.at(r, c));
  return cols;
}

struct LinPart {
  int parity;
  std::vector<SparseVec> cols;
};

std::vector<LinPart> lin_parts(const LinearOp& a) {
  std::vector<LinPart> out;
  for (int p = 0; p < 2; ++p) {
    LinearOp part = a.part(p);
    if (!part.is_zero()) out.push_back({p, sparse_columns(part)});
  }
  return out;
}

struct BilPart {
  int parity;
  BilinearOp op;
};

std::vector<BilPart> bil_parts(const BilinearOp& b) {
  std::vector<BilPart> out;
  for (int p = 0; p < 2; ++p) {
    BilinearOp part = b.part(p);
    if (!part.is_zero()) out.push_back({p, std::move(part)});
  }
  return out;
}

// acc += s * B(u, e_j) for sparse u
void add_left_sparse(Vec& acc, const Rat& s, const BilinearOp& b, const SparseVec& u, int j) {
  for (const auto& [l, c] : u)
    for (const auto& [k, v] : b.at(l, j)) acc[k] += s * c * v;
}

// acc += s * B(e_i, u) for sparse u
void add_right_sparse(Vec& acc, const Rat& s, const BilinearOp& b, int i, const SparseVec& u) {
  for (const auto& [l, c] : u)
    for (const auto& [k, v] : b.at(i, l)) acc[k] += s * c * v;
}

}  // namespace

LinearOp bracket_lin_lin(const LinearOp& a, const LinearOp& b) {
  require_same(a.space(), b.space());
  LinearOp out(a.space());
  for (int pa = 0; pa < 2; ++pa) {
    LinearOp ap = a.part(pa);
    if (ap.is_zero()) continue;
    for (int pb = 0; pb < 2; ++pb) {
      LinearOp bp = b.part(pb);
      if (bp.is_zero()) continue;
      out = out + ap * bp - Rat(sign(pa * pb)) * (bp * ap);
    }
  }
  return out;
}

BilinearOp bracket_lin_bilin(const LinearOp& a, const BilinearOp& b) {
  require_same(a.space(), b.space());
  const SuperSpace& s = b.space();
  const int d = s.dim();
  const auto aps = lin_parts(a);
  const auto bps = bil_parts(b);
  BilinearOp out(s);
  for (int i = 0; i < d; ++i) {
    const int px = s.parity(i);
    for (int j = 0; j < d; ++j) {
      Vec acc = zero_vec(d);
      for (const auto& ap : aps) {
        for (const auto& bp : bps) {
          // A(B(x, y))
          for (const auto& [k, v] : bp.op.at(i, j))
            for (const auto& [r, c] : ap.cols[k]) acc[r] += c * v;
          // -(-1)^{BA} B(A x, y)
          add_left_sparse(acc, Rat(-sign(bp.parity * ap.parity)), bp.op, ap.cols[i], j);
          // -(-1)^{A(B+x)} B(x, A y)
          add_right_sparse(acc, Rat(-sign(ap.parity * (bp.parity + px))), bp.op, i, ap.cols[j]);
        }
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

BilinearOp bracket_bilin_lin(const BilinearOp& b, const LinearOp& a) {
  BilinearOp out(b.space());
  for (int pa = 0; pa < 2; ++pa) {
    LinearOp ap = a.part(pa);
    if (ap.is_zero()) continue;
    for (int pb = 0; pb < 2; ++pb) {
      BilinearOp bp = b.part(pb);
      if (bp.is_zero()) continue;
      out = out - Rat(sign(pa * pb)) * bracket_lin_bilin(ap, bp);
    }
  }
  return out;
}

TrilinearOp bracket_bilin_bilin(const BilinearOp& b, const BilinearOp& c) {
  require_same(b.space(), c.space());
  const SuperSpace& s = b.space();
  const int d = s.dim();
  const auto bps = bil_parts(b);
  const auto cps = bil_parts(c);
  TrilinearOp out(s);
  for (int i = 0; i < d; ++i) {
    const int px = s.parity(i);
    for (int j = 0; j < d; ++j) {
      const int py = s.parity(j);
      for (int k = 0; k < d; ++k) {
        Vec acc = zero_vec(d);
        for (const auto& bp : bps) {
          const int pb = bp.parity;
          for (const auto& cp : cps) {
            const int pc = cp.parity;
            const BilinearOp& B = bp.op;
            const BilinearOp& C = cp.op;
            // B(C(x,y), z)
            add_left_sparse(acc, Rat(1), B, C.at(i, j), k);
            // (-1)^{xC} B(x, C(y,z))
            add_right_sparse(acc, Rat(sign(px * pc)), B, i, C.at(j, k));
            // (-1)^{y(C+x)} B(y, C(x,z))
            add_right_sparse(acc, Rat(sign(py * (pc + px))), B, j, C.at(i, k));
            // -(-1)^{BC} C(B(x,y), z)
            add_left_sparse(acc, Rat(-sign(pb * pc)), C, B.at(i, j), k);
            // -(-1)^{B(C+x)} C(x, B(y,z))
            add_right_sparse(acc, Rat(-sign(pb * (pc + px))), C, i, B.at(j, k));
            // -(-1)^{CB+xy+By} C(y, B(x,z))
            add_right_sparse(acc, Rat(-sign(pc * pb + px * py + pb * py)), C, j, B.at(i, k));
          }
        }
        out.set(i, j, k, acc);
      }
    }
  }
  return out;
}

LinearOp bracket_bilin_elem(const BilinearOp& b, const Vec& x) { return left_mul(b, x); }

LinearOp bracket_elem_bilin(const Vec& x, const BilinearOp& b) {
  LinearOp out(b.space());
  for (int px = 0; px < 2; ++px) {
    Vec xp = parity_part(b.space(), x, px);
    if (is_zero(xp)) continue;
    for (int pb = 0; pb < 2; ++pb) {
      BilinearOp bp = b.part(pb);
      if (bp.is_zero()) continue;
      out = out - Rat(sign(px * pb)) * left_mul(bp, xp);
    }
  }
  return out;
}

Vec bracket_lin_elem(const LinearOp& a, const Vec& x) { return a(x); }

Vec bracket_elem_lin(const Vec& x, const LinearOp& a) {
  Vec out = zero_vec(a.dim());
  for (int px = 0; px < 2; ++px) {
    Vec xp = parity_part(a.space(), x, px);
    if (is_zero(xp)) continue;
    for (int pa = 0; pa < 2; ++pa) axpy(out, Rat(-sign(px * pa)), a.part(pa)(xp));
  }
  return out;
}

bool is_superderivation(const LinearOp& d, const BilinearOp& m) {
  return bracket_lin_bilin(d, m).is_zero();
}

namespace {

LinearOp signed_right_mul(const BilinearOp& m, int x) {
  const SuperSpace& s = m.space();
  LinearOp r(s);
  for (int z = 0; z < s.dim(); ++z) {
    const Rat sg(sign(s.parity(x) * s.parity(z)));
    for (const auto& [k, v] : m.at(z, x)) r.at(k, z) += sg * v;
  }
  return r;
}

}  // namespace

std::optional<std::pair<int, int>> flexibility_witness(const BilinearOp& m) {
  const int d = m.dim();
  std::vector<LinearOp> l, r;
  for (int x = 0; x < d; ++x) {
    l.push_back(left_mul(m, unit_vec(d, x)));
    r.push_back(signed_right_mul(m, x));
  }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (!(bracket_lin_lin(r[x], l[y]) == bracket_lin_lin(l[x], r[y]))) return std::make_pair(x, y);
  return std::nullopt;
}

bool is_flexible(const BilinearOp& m) { return !flexibility_witness(m).has_value(); }

BilinearOp symmetrized(const BilinearOp& m) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  BilinearOp out(s);
  const Rat half(1, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v = m.at_dense(i, j);
      axpy(v, Rat(sign(s.parity(i) * s.parity(j))), m.at_dense(j, i));
      out.set(i, j, half * v);
    }
  return out;
}

bool is_associative(const BilinearOp& m) {
  const int d = m.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec ij = m.at_dense(i, j);
      for (int k = 0; k < d; ++k)
        if (m.right_basis(ij, k) != m.left_basis(i, m.at_dense(j, k))) return false;
    }
  return true;
}

bool is_lie_superalgebra(const BilinearOp& m) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Vec v = m.at_dense(i, j);
      axpy(v, Rat(sign(s.parity(i) * s.parity(j))), m.at_dense(j, i));
      if (!is_zero(v)) return false;
    }
  for (int a = 0; a < d; ++a)
    if (!is_superderivation(left_mul(m, unit_vec(d, a)), m)) return false;
  return true;
}

}  // namespace superalg
