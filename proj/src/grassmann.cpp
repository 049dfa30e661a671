#include "superalg/grassmann.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>

#include "superalg/brackets.hpp"
#include "superalg/conservative.hpp"

namespace superalg {

int GrassmannAlgebra::merge_sign(std::uint32_t s, std::uint32_t t) {
  if (s & t) return 0;
  int swaps = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannAlgebra::GrassmannAlgebra(int g) : g_(g) {
  if (g < 0 || g > 16) throw std::invalid_argument("generator count out of range");
  const std::uint32_t count = 1u << g;
  for (int want = 0; want < 2; ++want)
    for (std::uint32_t s = 0; s < count; ++s)
      if ((std::popcount(s) & 1) == want) masks_.push_back(s);
  const int even = g == 0 ? 1 : static_cast<int>(count / 2);
  std::vector<int> index(count);
  for (std::size_t t = 0; t < masks_.size(); ++t) index[masks_[t]] = static_cast<int>(t);
  algebra_ = BilinearOp(SuperSpace(even, static_cast<int>(count) - even));
  for (std::size_t a = 0; a < masks_.size(); ++a)
    for (std::size_t b = 0; b < masks_.size(); ++b) {
      const int s = merge_sign(masks_[a], masks_[b]);
      if (s != 0)
        algebra_.add(static_cast<int>(a), static_cast<int>(b), index[masks_[a] | masks_[b]], Rat(s));
    }
}

Envelope::Envelope(const BilinearOp& m, int g) : g_(g), source_dim_(m.dim()) {
  if (g < 0 || g > 16) throw std::invalid_argument("generator count out of range");
  auto p = m.parity();
  if (!p || *p != 0) throw std::invalid_argument("the envelope needs an even product");
  const SuperSpace& s = m.space();
  const std::uint32_t count = 1u << g;
  lookup_.assign(static_cast<std::size_t>(source_dim_) * count, -1);
  for (int i = 0; i < source_dim_; ++i)
    for (std::uint32_t f = 0; f < count; ++f)
      if ((std::popcount(f) & 1) == s.parity(i)) {
        lookup_[i * count + f] = static_cast<int>(keys_.size());
        keys_.push_back({i, f});
      }
  algebra_ = BilinearOp(SuperSpace(dim(), 0));
  for (int u = 0; u < dim(); ++u)
    for (int v = 0; v < dim(); ++v) {
      const auto [i, f] = keys_[u];
      const auto [j, h] = keys_[v];
      const int g_sign = GrassmannAlgebra::merge_sign(f, h);
      if (g_sign == 0) continue;
      const int sg = g_sign * sign(s.parity(i) * s.parity(j));
      for (const auto& [k, c] : m.at(i, j)) algebra_.add(u, v, index_of(k, f | h), sg * c);
    }
}

int Envelope::index_of(int i, std::uint32_t mask) const {
  const int t = lookup_.at(static_cast<std::size_t>(i) * (1u << g_) + mask);
  if (t < 0) throw std::invalid_argument("monomial parity does not match the basis vector");
  return t;
}

namespace {

// Sparse elements of an ordinary algebra.
class Calc {
 public:
  explicit Calc(const BilinearOp& alg) : alg_(alg), acc_(zero_vec(alg.dim())) {}

  SparseVec mul(const SparseVec& u, const SparseVec& v) {
    for (const auto& [i, cu] : u)
      for (const auto& [j, cv] : v)
        for (const auto& [k, c] : alg_.at(i, j)) acc_[k] += cu * cv * c;
    return flush();
  }

  SparseVec combine(std::initializer_list<std::pair<int, const SparseVec*>> terms) {
    for (const auto& [s, v] : terms)
      for (const auto& [k, c] : *v) acc_[k] += s * c;
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

  const BilinearOp& alg_;
  Vec acc_;
};

// Runs fn over all basis tuples of M of the given arity, each slot tagged
// with its own generator when odd. Stops at the first false.
bool for_all_tagged(const BilinearOp& m, const Envelope& env, int arity,
                    const std::function<bool(const std::vector<SparseVec>&)>& fn) {
  if (env.generators() < arity) throw std::invalid_argument("not enough Grassmann generators for the identity");
  const SuperSpace& s = m.space();
  const int d = s.dim();
  if (d == 0) return true;
  std::vector<int> idx(arity, 0);
  std::vector<SparseVec> args(arity);
  while (true) {
    for (int t = 0; t < arity; ++t) {
      const std::uint32_t mask = s.parity(idx[t]) ? (1u << t) : 0u;
      args[t] = SparseVec{{env.index_of(idx[t], mask), Rat(1)}};
    }
    if (!fn(args)) return false;
    int t = arity - 1;
    while (t >= 0 && ++idx[t] == d) idx[t--] = 0;
    if (t < 0) return true;
  }
}

}  // namespace

bool envelope_conservative(const BilinearOp& m, const BilinearOp& mstar, int g) {
  const Envelope env(m, g);
  const Envelope star_env(mstar, g);
  Calc c(env.as_algebra());
  Calc star(star_env.as_algebra());
  return for_all_tagged(m, env, 4, [&](const std::vector<SparseVec>& t) {
    const SparseVec &a = t[0], &b = t[1], &x = t[2], &y = t[3];
    const SparseVec ab = star.mul(a, b);
    const SparseVec xy = c.mul(x, y), ax = c.mul(a, x), ay = c.mul(a, y), bx = c.mul(b, x), by = c.mul(b, y);
    const SparseVec t1 = c.mul(b, c.mul(a, xy)), t2 = c.mul(b, c.mul(ax, y)), t3 = c.mul(b, c.mul(x, ay));
    const SparseVec t4 = c.mul(a, c.mul(bx, y)), t5 = c.mul(c.mul(a, bx), y), t6 = c.mul(bx, ay);
    const SparseVec t7 = c.mul(a, c.mul(x, by)), t8 = c.mul(ax, by), t9 = c.mul(x, c.mul(a, by));
    const SparseVec r1 = c.mul(ab, xy), r2 = c.mul(c.mul(ab, x), y), r3 = c.mul(x, c.mul(ab, y));
    return c.combine({{1, &t1}, {-1, &t2}, {-1, &t3}, {-1, &t4}, {1, &t5}, {1, &t6}, {-1, &t7}, {1, &t8},
                      {1, &t9}, {1, &r1}, {-1, &r2}, {-1, &r3}})
        .empty();
  });
}

bool envelope_flexible(const BilinearOp& m, int g) {
  const Envelope env(m, g);
  Calc c(env.as_algebra());
  return for_all_tagged(m, env, 3, [&](const std::vector<SparseVec>& t) {
    const SparseVec &x = t[0], &y = t[1], &z = t[2];
    const SparseVec a = c.mul(c.mul(x, y), z), b = c.mul(c.mul(z, y), x);
    const SparseVec e = c.mul(x, c.mul(y, z)), f = c.mul(z, c.mul(y, x));
    return c.combine({{1, &a}, {1, &b}, {-1, &e}, {-1, &f}}).empty();
  });
}

bool envelope_terminal(const BilinearOp& m, int g) {
  const Envelope env(m, g);
  Calc c(env.as_algebra());
  return for_all_tagged(m, env, 4, [&](const std::vector<SparseVec>& t) {
    const SparseVec &a = t[0], &x = t[1], &y = t[2], &z = t[3];
    // [L_a, M](u, v)
    auto shift = [&](const SparseVec& u, const SparseVec& v) {
      const SparseVec p = c.mul(a, c.mul(u, v)), q = c.mul(c.mul(a, u), v), r = c.mul(u, c.mul(a, v));
      return c.combine({{1, &p}, {-1, &q}, {-1, &r}});
    };
    const SparseVec t1 = shift(c.mul(x, y), z), t2 = shift(x, c.mul(y, z)), t3 = shift(y, c.mul(x, z));
    const SparseVec t4 = c.mul(shift(x, y), z), t5 = c.mul(x, shift(y, z)), t6 = c.mul(y, shift(x, z));
    return c.combine({{1, &t1}, {1, &t2}, {1, &t3}, {-1, &t4}, {-1, &t5}, {-1, &t6}}).empty();
  });
}

bool envelope_associative(const BilinearOp& m, int g) {
  const Envelope env(m, g);
  Calc c(env.as_algebra());
  return for_all_tagged(m, env, 3, [&](const std::vector<SparseVec>& t) {
    const SparseVec l = c.mul(c.mul(t[0], t[1]), t[2]), r = c.mul(t[0], c.mul(t[1], t[2]));
    return c.combine({{1, &l}, {-1, &r}}).empty();
  });
}

bool envelope_commutative(const BilinearOp& m, int g) {
  const Envelope env(m, g);
  Calc c(env.as_algebra());
  return for_all_tagged(m, env, 2, [&](const std::vector<SparseVec>& t) {
    const SparseVec l = c.mul(t[0], t[1]), r = c.mul(t[1], t[0]);
    return c.combine({{1, &l}, {-1, &r}}).empty();
  });
}

bool envelope_jordan(const BilinearOp& m, int g) {
  const Envelope env(m, g);
  Calc c(env.as_algebra());
  return for_all_tagged(m, env, 4, [&](const std::vector<SparseVec>& t) {
    std::array<int, 3> perm{0, 1, 2};
    const SparseVec& w = t[3];
    SparseVec total;
    do {
      const SparseVec& x1 = t[perm[0]];
      const SparseVec& x2 = t[perm[1]];
      const SparseVec& x3 = t[perm[2]];
      const SparseVec sq = c.mul(x1, x2);
      const SparseVec l = c.mul(c.mul(sq, w), x3), r = c.mul(sq, c.mul(w, x3));
      total = c.combine({{1, &total}, {1, &l}, {-1, &r}});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total.empty();
  });
}

bool is_associative_ordinary(const BilinearOp& algebra) {
  const int d = algebra.dim();
  Calc c(algebra);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const SparseVec x{{i, Rat(1)}}, y{{j, Rat(1)}}, z{{k, Rat(1)}};
        const SparseVec l = c.mul(c.mul(x, y), z), r = c.mul(x, c.mul(y, z));
        if (!c.combine({{1, &l}, {-1, &r}}).empty()) return false;
      }
  return true;
}

TransferReport transfer_check_conservative(const BilinearOp& m, const BilinearOp& mstar, int g) {
  return {check_conservative_pair(m, mstar).verdict, envelope_conservative(m, mstar, g)};
}

bool is_jordan_super(const BilinearOp& m) { return envelope_commutative(m) && envelope_jordan(m); }

bool is_ncjordan_super(const BilinearOp& m) { return is_flexible(m) && is_jordan_super(symmetrized(m)); }

}  // namespace superalg
