#include "superalg/conservative.hpp"

#include <random>
#include <stdexcept>

#include "superalg/brackets.hpp"

namespace superalg {

namespace {

void require_even(const BilinearOp& op, const char* what) {
  auto p = op.parity();
  if (!p || *p != 0) throw std::invalid_argument(std::string(what) + " must be an even bilinear operation");
}

// Products of sparse vectors under a fixed bilinear operation.
class SparseProduct {
 public:
  explicit SparseProduct(const BilinearOp& m) : m_(m), acc_(zero_vec(m.dim())) {}

  SparseVec operator()(const SparseVec& u, const SparseVec& v) {
    for (const auto& [i, cu] : u)
      for (const auto& [j, cv] : v)
        for (const auto& [k, c] : m_.at(i, j)) acc_[k] += cu * cv * c;
    return flush();
  }

 private:
  SparseVec flush() {
    SparseVec out;
    for (int k = 0; k < static_cast<int>(acc_.size()); ++k)
      if (!is_zero(acc_[k])) {
        out.emplace_back(k, acc_[k]);
        acc_[k] = 0;
      }
    return out;
  }

  const BilinearOp& m_;
  Vec acc_;
};

void add_scaled(Vec& acc, int s, const SparseVec& v) {
  for (const auto& [k, c] : v) {
    if (s > 0)
      acc[k] += c;
    else
      acc[k] -= c;
  }
}

SparseVec basis_sparse(int i) { return SparseVec{{i, Rat(1)}}; }

std::vector<LinearOp> left_mul_all(const BilinearOp& m) {
  std::vector<LinearOp> out;
  for (int a = 0; a < m.dim(); ++a) out.push_back(left_mul(m, unit_vec(m.dim(), a)));
  return out;
}

BilinearOp combine(const std::vector<BilinearOp>& ops, const Vec& c, const SuperSpace& s) {
  BilinearOp out(s);
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (!is_zero(c[k])) out = out + c[k] * ops[k];
  return out;
}

}  // namespace

std::vector<BilinearOp> left_shift_brackets(const BilinearOp& m) {
  std::vector<BilinearOp> out;
  for (const auto& l : left_mul_all(m)) out.push_back(bracket_lin_bilin(l, m));
  return out;
}

Mat jacobi_operator_matrix(const BilinearOp& m) {
  const int d = m.dim();
  std::vector<Vec> cols;
  for (const auto& x : left_shift_brackets(m)) cols.push_back(x.coords());
  return Mat::from_columns(cols, d * d * d);
}

Vec conservativity_residual(const BilinearOp& m, const BilinearOp& mstar, const Quadruple& q) {
  const SuperSpace& s = m.space();
  const int pa = s.parity(q.a), pb = s.parity(q.b), px = s.parity(q.x);
  SparseProduct mul(m);
  SparseProduct star(mstar);
  const SparseVec a = basis_sparse(q.a), b = basis_sparse(q.b);
  const SparseVec x = basis_sparse(q.x), y = basis_sparse(q.y);

  const SparseVec xy = mul(x, y), ax = mul(a, x), ay = mul(a, y);
  const SparseVec bx = mul(b, x), by = mul(b, y);
  const SparseVec c = star(a, b);

  Vec r = zero_vec(s.dim());
  add_scaled(r, 1, mul(b, mul(a, xy)));
  add_scaled(r, -1, mul(b, mul(ax, y)));
  add_scaled(r, -sign(pa * px), mul(b, mul(x, ay)));
  add_scaled(r, -sign(pa * pb), mul(a, mul(bx, y)));
  add_scaled(r, sign(pa * pb), mul(mul(a, bx), y));
  add_scaled(r, sign(pa * px), mul(bx, ay));
  add_scaled(r, -sign(pb * (pa + px)), mul(a, mul(x, by)));
  add_scaled(r, sign(pb * (pa + px)), mul(ax, by));
  add_scaled(r, sign(px * (pa + pb) + pa * pb), mul(x, mul(a, by)));
  // minus the right-hand side
  add_scaled(r, sign(pa * pb), mul(c, xy));
  add_scaled(r, -sign(pa * pb), mul(mul(c, x), y));
  add_scaled(r, -sign(px * (pa + pb) + pa * pb), mul(x, mul(c, y)));
  return r;
}

ConservativityReport check_conservative_pair(const BilinearOp& m, const BilinearOp& mstar) {
  if (!(m.space() == mstar.space())) throw std::invalid_argument("space mismatch");
  require_even(m, "product");
  require_even(mstar, "associated product");
  const SuperSpace& s = m.space();
  const int d = s.dim();
  const auto shifts = left_shift_brackets(m);
  const auto lefts = left_mul_all(m);
  ConservativityReport report;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const BilinearOp lhs = bracket_lin_bilin(lefts[b], shifts[a]);
      const BilinearOp rhs = combine(shifts, mstar.at_dense(a, b), s);
      const BilinearOp op_residual = lhs + Rat(sign(s.parity(a) * s.parity(b))) * rhs;
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
          const Quadruple q{a, b, x, y};
          Vec expanded = conservativity_residual(m, mstar, q);
          if (expanded != op_residual.at_dense(x, y))
            throw std::logic_error("operator and expanded conservativity routes disagree");
          if (report.verdict && !is_zero(expanded)) {
            report.verdict = false;
            report.witness = q;
            report.residual = std::move(expanded);
          }
        }
    }
  return report;
}

int AssociatedSolution::freedom_dim() const {
  const SuperSpace& s = particular.space();
  int total = 0;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      total += pair_freedom[parity_restricted ? ((s.parity(a) + s.parity(b)) & 1) : 0].dim();
  return total;
}

namespace {

template <class Fn>
void for_each_generator(const AssociatedSolution& sol, Fn&& fn) {
  const SuperSpace& s = sol.particular.space();
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b) {
      const int q = sol.parity_restricted ? ((s.parity(a) + s.parity(b)) & 1) : 0;
      for (const auto& v : sol.pair_freedom[q].basis()) fn(a, b, v);
    }
}

}  // namespace

Subspace AssociatedSolution::freedom() const {
  const SuperSpace& s = particular.space();
  const int d = s.dim();
  std::vector<Vec> gens;
  for_each_generator(*this, [&](int a, int b, const Vec& v) {
    Vec c = zero_vec(d * d * d);
    for (int k = 0; k < d; ++k) c[BilinearOp::coord_index(d, a, b, k)] = v[k];
    gens.push_back(std::move(c));
  });
  return Subspace::span(d * d * d, gens);
}

BilinearOp AssociatedSolution::perturbed(const std::vector<Rat>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != freedom_dim())
    throw std::invalid_argument("perturbation length must equal the freedom dimension");
  BilinearOp out = particular;
  std::size_t t = 0;
  for_each_generator(*this, [&](int a, int b, const Vec& v) {
    const Rat& c = coeffs[t++];
    for (int k = 0; k < static_cast<int>(v.size()); ++k) out.add(a, b, k, c * v[k]);
  });
  return out;
}

BilinearOp AssociatedSolution::random_member(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Rat> coeffs;
  for (int t = 0; t < freedom_dim(); ++t) coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
  return perturbed(coeffs);
}

std::variant<AssociatedSolution, NotConservative> solve_associated(const BilinearOp& m,
                                                                   bool parity_restricted) {
  require_even(m, "product");
  const SuperSpace& s = m.space();
  const int d = s.dim();
  const auto shifts = left_shift_brackets(m);
  const auto lefts = left_mul_all(m);

  // Unknown a*b lives in the columns of the admissible parity.
  std::array<std::vector<int>, 2> columns;
  for (int k = 0; k < d; ++k) {
    if (parity_restricted)
      columns[s.parity(k)].push_back(k);
    else
      columns[0].push_back(k), columns[1].push_back(k);
  }
  std::array<std::optional<AffineSolver>, 2> solvers;
  AssociatedSolution sol{BilinearOp(s), parity_restricted, {Subspace(d), Subspace(d)}};
  for (int q = 0; q < 2; ++q) {
    std::vector<Vec> cols;
    for (int k : columns[q]) cols.push_back(shifts[k].coords());
    solvers[q].emplace(Mat::from_columns(cols, d * d * d));
    std::vector<Vec> ker;
    for (const auto& v : solvers[q]->kernel().basis()) {
      Vec full = zero_vec(d);
      for (std::size_t t = 0; t < columns[q].size(); ++t) full[columns[q][t]] = v[t];
      ker.push_back(std::move(full));
    }
    sol.pair_freedom[q] = Subspace::span(d, ker);
  }

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int q = (s.parity(a) + s.parity(b)) & 1;
      const BilinearOp lhs = bracket_lin_bilin(lefts[b], shifts[a]);
      Vec rhs = Rat(-sign(s.parity(a) * s.parity(b))) * lhs.coords();
      auto x = solvers[parity_restricted ? q : 0]->particular(rhs);
      if (!x) return NotConservative{a, b};
      Vec value = zero_vec(d);
      const auto& cols = columns[parity_restricted ? q : 0];
      for (std::size_t t = 0; t < cols.size(); ++t) value[cols[t]] = (*x)[t];
      sol.particular.set(a, b, value);
    }
  return sol;
}

Subspace jacobi_subspace(const BilinearOp& m) { return kernel_basis(jacobi_operator_matrix(m)); }

Subspace left_annihilator(const BilinearOp& m) {
  const int d = m.dim();
  std::vector<Vec> cols;
  for (const auto& l : left_mul_all(m)) cols.push_back(l.coords());
  return kernel_basis(Mat::from_columns(cols, d * d));
}

bool is_ideal(const BilinearOp& m, const Subspace& s) {
  const int d = m.dim();
  for (const auto& v : s.basis())
    for (int j = 0; j < d; ++j) {
      if (!s.contains(m.right_basis(v, j))) return false;
      if (!s.contains(m.left_basis(j, v))) return false;
    }
  return true;
}

bool is_subalgebra(const BilinearOp& m, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(m(u, v))) return false;
  return true;
}

Subspace maximal_jacobi_ideal(const BilinearOp& m) {
  const int d = m.dim();
  Subspace ideal = jacobi_subspace(m);
  while (ideal.dim() > 0) {
    // Linear functionals vanishing on the current candidate.
    const Subspace ann = kernel_basis(Mat::from_rows(ideal.basis(), d));
    const int r = ideal.dim();
    std::vector<Vec> rows;
    for (int j = 0; j < d; ++j) {
      std::vector<Vec> right, left;
      for (const auto& v : ideal.basis()) {
        right.push_back(m.right_basis(v, j));
        left.push_back(m.left_basis(j, v));
      }
      for (const auto& alpha : ann.basis())
        for (const auto* images : {&right, &left}) {
          Vec row = zero_vec(r);
          for (int t = 0; t < r; ++t)
            for (int k = 0; k < d; ++k)
              if (!is_zero(alpha[k])) row[t] += alpha[k] * (*images)[t][k];
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) break;
    const Subspace coeffs = kernel_basis(Mat::from_rows(rows, r));
    std::vector<Vec> next;
    for (const auto& c : coeffs.basis()) {
      Vec v = zero_vec(d);
      for (int t = 0; t < r; ++t) axpy(v, c[t], ideal.basis()[t]);
      next.push_back(std::move(v));
    }
    Subspace shrunk = Subspace::span(d, next);
    if (shrunk.dim() == ideal.dim()) break;
    ideal = std::move(shrunk);
  }
  return ideal;
}

std::optional<AffineElementSet> quasiunities(const BilinearOp& m) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  const auto shifts = left_shift_brackets(m);
  std::vector<Vec> cols;
  for (int k = 0; k < s.n; ++k) cols.push_back(shifts[k].coords());
  AffineSolver solver(Mat::from_columns(cols, d * d * d));
  auto x = solver.particular(-m.coords());
  if (!x) return std::nullopt;
  auto lift = [&](const Vec& even) {
    Vec v = zero_vec(d);
    for (int k = 0; k < s.n; ++k) v[k] = even[k];
    return v;
  };
  std::vector<Vec> ker;
  for (const auto& v : solver.kernel().basis()) ker.push_back(lift(v));
  return AffineElementSet{lift(*x), Subspace::span(d, ker)};
}

BilinearOp terminal_associated(const BilinearOp& m) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  BilinearOp out(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v = Rat(2, 3) * m.at_dense(i, j);
      axpy(v, Rat(sign(s.parity(i) * s.parity(j)), 3), m.at_dense(j, i));
      out.set(i, j, v);
    }
  return out;
}

bool is_terminal_trilinear(const BilinearOp& m) {
  for (const auto& shift : left_shift_brackets(m))
    if (!bracket_bilin_bilin(shift, m).is_zero()) return false;
  return true;
}

bool is_terminal(const BilinearOp& m) {
  const bool trilinear = is_terminal_trilinear(m);
  auto p = m.parity();
  if (p && *p == 0) {
    const bool via_associated = check_conservative_pair(m, terminal_associated(m)).verdict;
    if (via_associated != trilinear)
      throw std::logic_error("terminal identity and its associated-product form disagree");
  }
  return trilinear;
}

namespace {

std::vector<LinearOp> u0_generators(const BilinearOp& m) {
  const auto lefts = left_mul_all(m);
  std::vector<LinearOp> gens = lefts;
  for (std::size_t a = 0; a < lefts.size(); ++a)
    for (std::size_t b = a; b < lefts.size(); ++b) gens.push_back(bracket_lin_lin(lefts[a], lefts[b]));
  return gens;
}

std::vector<BilinearOp> u1_generators(const BilinearOp& m) {
  std::vector<BilinearOp> gens{m};
  for (auto& x : left_shift_brackets(m)) gens.push_back(std::move(x));
  return gens;
}

}  // namespace

Subspace u0_span(const BilinearOp& m) {
  const int d = m.dim();
  std::vector<Vec> vs;
  for (const auto& g : u0_generators(m)) vs.push_back(g.coords());
  return Subspace::span(d * d, vs);
}

Subspace u1_span(const BilinearOp& m) {
  const int d = m.dim();
  std::vector<Vec> vs;
  for (const auto& g : u1_generators(m)) vs.push_back(g.coords());
  return Subspace::span(d * d * d, vs);
}

bool is_rigid(const BilinearOp& m) {
  const Subspace u1 = u1_span(m);
  const auto b_gens = u1_generators(m);
  for (const auto& dgen : u0_generators(m))
    for (const auto& bgen : b_gens)
      if (!u1.contains(bracket_lin_bilin(dgen, bgen).coords())) return false;
  return true;
}

bool check_mstar_congruences(const BilinearOp& m, const BilinearOp& mstar) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  const Subspace j = jacobi_subspace(m);
  for (const auto& jv : j.basis()) {
    auto pj = element_parity(s, jv);
    if (!pj) throw std::logic_error("Jacobi basis vector is not homogeneous");
    for (int b = 0; b < d; ++b) {
      const Vec eb = unit_vec(d, b);
      // a in J: a*b in J
      if (!j.contains(mstar(jv, eb))) return false;
      // b in J: a*b + (-1)^{ab} ba in J
      Vec v = mstar(eb, jv);
      axpy(v, Rat(sign(s.parity(b) * *pj)), m(jv, eb));
      if (!j.contains(v)) return false;
    }
  }
  if (auto q = quasiunities(m)) {
    const Vec& e = q->particular;
    for (int a = 0; a < d; ++a) {
      const Vec ea = unit_vec(d, a);
      if (!j.contains(mstar(e, ea) - ea)) return false;
      Vec v = mstar(ea, e);
      axpy(v, Rat(-2), ea);
      axpy(v, Rat(1), m(e, ea));
      if (!j.contains(v)) return false;
    }
  }
  return true;
}

DerivationFamily conservative_derivations(const BilinearOp& m, const BilinearOp& mstar) {
  const SuperSpace& s = m.space();
  const int d = s.dim();
  const auto lefts = left_mul_all(m);
  DerivationFamily fam;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Vec ea = unit_vec(d, a), eb = unit_vec(d, b);
      Vec c = mstar(eb, ea);
      axpy(c, Rat(-sign(s.parity(a) * s.parity(b))), mstar(ea, eb));
      LinearOp op = bracket_lin_lin(lefts[b], lefts[a]) - left_mul(m, c);
      if (!is_superderivation(op, m))
        throw std::logic_error("associated-product operator is not a superderivation");
      fam.from_associated.push_back(std::move(op));
    }
  if (is_terminal_trilinear(m)) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec ea = unit_vec(d, a), eb = unit_vec(d, b);
        Vec comm = m(ea, eb);
        axpy(comm, Rat(-sign(s.parity(a) * s.parity(b))), m(eb, ea));
        LinearOp op = bracket_lin_lin(lefts[a], lefts[b]) - Rat(1, 3) * left_mul(m, comm);
        if (!is_superderivation(op, m))
          throw std::logic_error("terminal operator is not a superderivation");
        fam.terminal.push_back(std::move(op));
      }
  }
  return fam;
}

}  // namespace superalg
