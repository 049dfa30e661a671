#include "superalg/embedding.hpp"

#include <stdexcept>

#include "superalg/universal.hpp"

namespace superalg {

const char* to_string(EpsilonOrigin o) {
  return o == EpsilonOrigin::FromQuasiunity ? "quasiunity" : "adjoined";
}

namespace {

int parity_of(const SuperSpace& s, const Vec& v) {
  auto p = element_parity(s, v);
  if (!p) throw std::logic_error("expected a homogeneous vector");
  return *p;
}

// ad(a)(alpha, beta) before projection.
class AdjointFormulas {
 public:
  AdjointFormulas(const BilinearOp& m, const BilinearOp& mstar) : m_(m), star_(mstar) {}

  Vec generic(const Vec& a, const Vec& alpha, const Vec& beta) const {
    const SuperSpace& s = m_.space();
    const int pa = parity_of(s, a), pl = parity_of(s, alpha), pb = parity_of(s, beta);
    const Rat t(sign(pl * pa));
    Vec v = star_(star_(beta, a), alpha);
    axpy(v, t, star_(beta, m_(alpha, a)));
    axpy(v, -t, star_(star_(beta, alpha), a));
    return Rat(sign(pb * (pa + pl))) * v;
  }

  // ad(a)(alpha, eps)
  Vec alpha_eps(const Vec& a, const Vec& alpha) const {
    const SuperSpace& s = m_.space();
    const Rat t(sign(parity_of(s, alpha) * parity_of(s, a)));
    Vec v = star_(a, alpha);
    axpy(v, t, m_(alpha, a));
    axpy(v, -t, star_(alpha, a));
    return v;
  }

  // ad(a)(eps, beta)
  Vec eps_beta(const Vec& a, const Vec& beta) const {
    const SuperSpace& s = m_.space();
    return Rat(sign(parity_of(s, a) * parity_of(s, beta))) * star_(beta, a);
  }

 private:
  const BilinearOp& m_;
  const BilinearOp& star_;
};

}  // namespace

QuotientData build_quotient(const BilinearOp& m, const Subspace& jacobi) {
  const SuperSpace& v = m.space();
  const int d = v.dim();
  if (jacobi.ambient_dim() != d) throw std::invalid_argument("Jacobi subspace has the wrong ambient dimension");
  QuotientData q;
  q.source = v;
  q.jacobi = jacobi;

  std::vector<bool> pivot(d, false);
  for (int p : jacobi.pivots()) pivot[p] = true;
  std::vector<int> reps;
  for (int c = 0; c < d; ++c)
    if (!pivot[c]) reps.push_back(c);

  auto qu = quasiunities(m);
  const bool from_quasiunity = qu && !jacobi.contains(qu->particular);
  q.origin = from_quasiunity ? EpsilonOrigin::FromQuasiunity : EpsilonOrigin::Adjoined;
  const int offset = from_quasiunity ? 0 : 1;
  if (offset) q.representatives.push_back(-1);
  int even = offset;
  for (int c : reps) {
    q.representatives.push_back(c);
    if (v.parity(c) == 0) ++even;
  }
  const int dw = static_cast<int>(q.representatives.size());
  q.w = SuperSpace(even, dw - even);

  q.projection = Mat(dw, d);
  for (int c = 0; c < d; ++c) {
    const Vec r = jacobi.residual(unit_vec(d, c));
    for (std::size_t t = 0; t < reps.size(); ++t) q.projection.at(offset + static_cast<int>(t), c) = r[reps[t]];
  }
  q.section = Mat(d, dw);
  for (std::size_t t = 0; t < reps.size(); ++t) q.section.at(reps[t], offset + static_cast<int>(t)) = 1;

  q.epsilon = from_quasiunity ? q.project(qu->particular) : unit_vec(dw, 0);
  return q;
}

std::vector<BilinearOp> adjoint_map(const BilinearOp& m, const BilinearOp& mstar, const QuotientData& q) {
  const SuperSpace& v = m.space();
  const int d = v.dim();
  const int dw = q.w.dim();
  const AdjointFormulas f(m, mstar);

  std::vector<Vec> jbasis = q.jacobi.basis();
  for (int a = 0; a < d; ++a) {
    const Vec ea = unit_vec(d, a);
    auto vanishes = [&](const Vec& x) { return q.jacobi.contains(x); };
    for (const auto& j : jbasis) {
      for (int x = 0; x < d; ++x) {
        const Vec ex = unit_vec(d, x);
        if (!vanishes(f.generic(ea, j, ex)) || !vanishes(f.generic(ea, ex, j)))
          throw std::logic_error("adjoint map depends on the choice of representatives");
      }
      if (q.adjoined() && (!vanishes(f.alpha_eps(ea, j)) || !vanishes(f.eps_beta(ea, j))))
        throw std::logic_error("adjoint map depends on the choice of representatives");
    }
  }

  std::vector<BilinearOp> out;
  for (int a = 0; a < d; ++a) {
    const Vec ea = unit_vec(d, a);
    BilinearOp ad(q.w);
    for (int s = 0; s < dw; ++s)
      for (int t = 0; t < dw; ++t) {
        const int rs = q.representatives[s], rt = q.representatives[t];
        Vec value;
        if (rs < 0 && rt < 0)
          value = ea;
        else if (rs < 0)
          value = f.eps_beta(ea, unit_vec(d, rt));
        else if (rt < 0)
          value = f.alpha_eps(ea, unit_vec(d, rs));
        else
          value = f.generic(ea, unit_vec(d, rs), unit_vec(d, rt));
        ad.set(s, t, q.project(value));
      }
    out.push_back(std::move(ad));
  }
  return out;
}

EmbeddingReport verify_embedding(const BilinearOp& m, const BilinearOp& mstar) {
  if (!check_conservative_pair(m, mstar).verdict)
    throw std::invalid_argument("the associated product does not make the algebra conservative");
  const int d = m.dim();
  EmbeddingReport r;
  r.quotient = build_quotient(m, jacobi_subspace(m));
  r.ad = adjoint_map(m, mstar, r.quotient);
  const SuperSpace& w = r.quotient.w;
  const Vec neg_eps = -r.quotient.epsilon;

  for (int a = 0; a < d && r.is_homomorphism; ++a)
    for (int b = 0; b < d; ++b) {
      BilinearOp lhs(w);
      for (const auto& [k, c] : m.at(a, b)) lhs = lhs + c * r.ad[k];
      if (!(lhs == kantor_product(r.ad[a], r.ad[b], neg_eps))) {
        r.is_homomorphism = false;
        r.witness = std::make_pair(a, b);
        break;
      }
    }

  std::vector<Vec> cols;
  for (const auto& op : r.ad) cols.push_back(op.coords());
  const int dw = w.dim();
  r.kernel = kernel_basis(Mat::from_columns(cols, dw * dw * dw));
  r.max_jacobi_ideal = maximal_jacobi_ideal(m);
  r.kernel_equals_max_jacobi_ideal = r.kernel == r.max_jacobi_ideal;
  return r;
}

bool adjoint_independence_check(const BilinearOp& m, const BilinearOp& mstar1, const BilinearOp& mstar2) {
  const QuotientData q = build_quotient(m, jacobi_subspace(m));
  return adjoint_map(m, mstar1, q) == adjoint_map(m, mstar2, q);
}

bool quasiunity_epsilon_consistent(const BilinearOp& m, const BilinearOp& mstar) {
  const Subspace j = jacobi_subspace(m);
  const QuotientData q = build_quotient(m, j);
  if (q.adjoined()) return true;
  const int d = m.dim();
  const Vec e = quasiunities(m)->particular;
  const AdjointFormulas f(m, mstar);
  for (int a = 0; a < d; ++a) {
    const Vec ea = unit_vec(d, a);
    if (!j.contains(f.generic(ea, e, e) - ea)) return false;
    for (int x = 0; x < d; ++x) {
      const Vec ex = unit_vec(d, x);
      if (!j.contains(f.generic(ea, ex, e) - f.alpha_eps(ea, ex))) return false;
      if (!j.contains(f.generic(ea, e, ex) - f.eps_beta(ea, ex))) return false;
    }
  }
  return true;
}

bool verify_ad_is_identity_on_U(int n, int m) {
  const UniversalAlgebra u = build_universal(n, m);
  const BilinearOp star = nabla1_carrier(u);
  const AdjointFormulas f(u.product, star);
  const int dc = u.carrier().dim();
  const Vec& a = u.distinguished;
  std::vector<BilinearOp> ops;
  std::vector<Vec> at_aa;
  for (int t = 0; t < dc; ++t) {
    ops.push_back(u.layout.basis_op(t));
    at_aa.push_back(ops.back()(a, a));
  }
  for (int A = 0; A < dc; ++A) {
    const Vec eA = unit_vec(dc, A);
    for (int B = 0; B < dc; ++B)
      for (int C = 0; C < dc; ++C) {
        const Vec x = f.generic(eA, unit_vec(dc, B), unit_vec(dc, C));
        if (u.layout.to_op(x)(a, a) != ops[A](at_aa[B], at_aa[C])) return false;
      }
  }
  return true;
}

}  // namespace superalg
