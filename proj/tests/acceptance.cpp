// Acceptance suite. Prints one PASS/FAIL line per criterion; every check
// is exact over the rationals. Exit status is nonzero if any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "superalg/brackets.hpp"
#include "superalg/catalog_io.hpp"
#include "superalg/conservative.hpp"
#include "superalg/embedding.hpp"
#include "superalg/grassmann.hpp"
#include "superalg/universal.hpp"

using namespace superalg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const AssociatedSolution* solution_of(const std::variant<AssociatedSolution, NotConservative>& v) {
  return std::get_if<AssociatedSolution>(&v);
}

struct Named {
  std::string name;
  BilinearOp product;
};

std::vector<Named> conservative_catalog() {
  std::vector<Named> out;
  for (const auto& f : catalog_examples())
    if (solution_of(solve_associated(f.product))) out.push_back({f.name, f.product});
  return out;
}

Vec random_homogeneous(const SuperSpace& s, int parity, std::mt19937_64& rng) {
  Vec v = zero_vec(s.dim());
  for (int i = 0; i < s.dim(); ++i)
    if (s.parity(i) == parity) v[i] = Rat(static_cast<long>(rng() % 5) - 2);
  return v;
}

BilinearOp random_homogeneous_op(const SuperSpace& s, int parity, std::mt19937_64& rng) {
  BilinearOp b(s);
  const int d = s.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if ((s.parity(i) + s.parity(j) + s.parity(k)) % 2 == parity && rng() % 2)
          b.add(i, j, k, Rat(static_cast<long>(rng() % 5) - 2));
  return b;
}

Subalgebra w_of(int n, int m) { return build_w(build_universal(n, m)); }

// 1. U is conservative with both associated products
void universal_conservative(Outcome& o, bool deep) {
  const auto t0 = std::chrono::steady_clock::now();
  const UniversalAlgebra u = build_universal(1, 1);
  o.require(check_conservative_pair(u.product, nabla1_carrier(u)).verdict, "U(1,1) nabla1");
  o.require(check_conservative_pair(u.product, nabla2_carrier(u)).verdict, "U(1,1) nabla2");
  const double t = seconds_since(t0);
  o.require(t < 5.0, "U(1,1) took longer than 5 s");
  o.detail << (o.pass ? "" : "; ") << "U(1,1) 4096 quadruples x2 in " << t << " s";
  if (deep) {
    const auto t1 = std::chrono::steady_clock::now();
    const UniversalAlgebra u21 = build_universal(2, 1);
    o.require(check_conservative_pair(u21.product, nabla1_carrier(u21)).verdict, "U(2,1) nabla1");
    o.require(check_conservative_pair(u21.product, nabla2_carrier(u21)).verdict, "U(2,1) nabla2");
    o.detail << "; U(2,1) in " << seconds_since(t1) << " s";
  }
}

// 2. codim J = n + m, both computations of J
void codimension(Outcome& o) {
  for (auto [n, m] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}, std::pair{2, 1}}) {
    const UniversalAlgebra u = build_universal(n, m);
    const Subspace j = jacobi_of_universal(u);
    const std::string tag = "U(" + std::to_string(n) + "," + std::to_string(m) + ")";
    o.require(j.codim() == n + m, tag + " codim");
    o.require(j == jacobi_subspace(u.product), tag + " routes");
    o.detail << (o.pass ? "" : "; ") << tag << " codim " << j.codim() << ", ";
  }
  o.detail << "J routes agree";
}

// 3. No nonzero Jacobi ideals
void no_jacobi_ideals(Outcome& o) {
  for (auto [n, m] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}}) {
    const int dim = maximal_jacobi_ideal(build_universal(n, m).product).dim();
    o.require(dim == 0, "U(" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  o.detail << "max Jacobi ideal 0 for U(1,0), U(1,1), U(2,0)";
}

// 4. Shift identity
void shift_identity(Outcome& o) {
  std::mt19937_64 rng(20);
  const UniversalAlgebra u = build_universal(1, 1);
  int checked = 0, failed = 0;
  while (checked < 200) {
    const Vec A = random_homogeneous(u.carrier(), static_cast<int>(rng() % 2), rng);
    const Vec w = random_homogeneous(u.carrier(), static_cast<int>(rng() % 2), rng);
    const Vec v = random_homogeneous(u.carrier(), static_cast<int>(rng() % 2), rng);
    const Vec b = random_homogeneous(u.base(), 0, rng);
    if (is_zero(b)) continue;
    ++checked;
    failed += !check_shift_identity(u, A, w, v, b);
  }
  o.require(failed == 0, std::to_string(failed) + " triples");
  o.detail << (o.pass ? "" : "; ") << checked << " seeded triples in U(1,1), even b";
}

// 5. Terminality by two routes
void terminality(Outcome& o) {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 0}}) {
    const BilinearOp w = w_of(n, m).product;
    const std::string tag = "W(" + std::to_string(n) + "," + std::to_string(m) + ")";
    o.require(is_terminal_trilinear(w), tag + " trilinear");
    o.require(check_conservative_pair(w, terminal_associated(w)).verdict, tag + " associated");
  }
  int terminal = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const BilinearOp m = seed % 2 ? random_superalgebra(seed, 1, 1, 0.4) : random_superalgebra(seed, 2, 0, 0.4);
    const bool a = is_terminal_trilinear(m), b = check_conservative_pair(m, terminal_associated(m)).verdict;
    o.require(a == b, "seed " + std::to_string(seed));
    terminal += a;
  }
  o.detail << (o.pass ? "" : "; ") << "W(1,1), W(2,0) terminal; 100 random agree (" << terminal << " terminal)";
}

// 6. Superderivations
void superderivations(Outcome& o) {
  const BilinearOp w = w_of(1, 1).product;
  const DerivationFamily fw = conservative_derivations(w, terminal_associated(w));
  o.require(fw.terminal.size() == 16, "W(1,1) terminal family size");
  for (const auto& d : fw.terminal) o.require(is_superderivation(d, w), "W(1,1) terminal operator");
  int count = 0;
  for (const auto& [name, m] : conservative_catalog()) {
    const BilinearOp star = std::get<AssociatedSolution>(solve_associated(m)).particular;
    const int d = m.dim();
    const SuperSpace& s = m.space();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec ea = unit_vec(d, a), eb = unit_vec(d, b);
        const int ab = s.parity(a) * s.parity(b);
        Vec arg = star(eb, ea);
        axpy(arg, Rat(-sign(ab)), star(ea, eb));
        const LinearOp op = bracket_lin_lin(left_mul(m, eb), left_mul(m, ea)) - Rat(sign(ab)) * left_mul(m, arg);
        o.require(is_superderivation(op, m), name + " pair " + std::to_string(a) + "," + std::to_string(b));
        ++count;
      }
    conservative_derivations(m, star);
  }
  o.detail << (o.pass ? "" : "; ") << "16 W(1,1) operators; " << count << " catalog operators";
}

// 7. Jacobi subspaces, quasiunities, left unities
void jacobi_suite(Outcome& o) {
  for (const char* name : {"lie2", "heisenberg-super"}) {
    const BilinearOp m = catalog(name).product;
    o.require(jacobi_subspace(m) == Subspace::full(m.dim()), std::string(name) + " J");
  }
  const BilinearOp e = catalog("idempotent-line").product;
  o.require(jacobi_subspace(e).dim() == 0, "idempotent-line J");
  const auto q = quasiunities(e);
  o.require(q && q->particular == unit_vec(1, 0) && q->freedom.dim() == 0, "idempotent-line quasiunities");
  const UniversalAlgebra u = build_universal(1, 1);
  const AffineElementSet l = left_unities(u);
  o.require(l.freedom.dim() == 4, "U(1,1) left unity dimension");
  std::vector<Vec> members{l.particular};
  for (const auto& g : l.freedom.basis()) members.push_back(l.particular + g);
  for (const auto& g : members)
    for (int b = 0; b < u.carrier().dim(); ++b)
      o.require(u.product(g, unit_vec(u.carrier().dim(), b)) == unit_vec(u.carrier().dim(), b), "left unity");
  o.detail << (o.pass ? "" : "; ") << "J full for Lie, J = 0 and {e} for idempotent-line, U(1,1) left unities dim "
           << l.freedom.dim();
}

// 8. Freedom dimension
void freedom(Outcome& o) {
  for (const auto& [name, m] : conservative_catalog()) {
    const int d = m.dim(), j = jacobi_subspace(m).dim();
    const int full = std::get<AssociatedSolution>(solve_associated(m, false)).freedom_dim();
    const int even = std::get<AssociatedSolution>(solve_associated(m, true)).freedom_dim();
    o.require(full == d * d * j, name);
    o.detail << name << " " << full << "/" << even << " ";
  }
  o.detail << "(unrestricted/even)";
}

// 9. Congruences
void congruences(Outcome& o) {
  int count = 0;
  for (const auto& [name, m] : conservative_catalog()) {
    const auto s = std::get<AssociatedSolution>(solve_associated(m));
    o.require(check_mstar_congruences(m, s.particular), name);
    o.require(check_mstar_congruences(m, s.random_member(9)), name + " perturbed");
    ++count;
  }
  o.detail << (o.pass ? "" : "; ") << count << " conservative catalog algebras";
}

// 10. Embedding
void embedding(Outcome& o) {
  std::vector<Named> algebras;
  for (const char* name : {"grassmann1", "lie2", "heisenberg-super", "leibniz2", "zero(1|1)"})
    algebras.push_back({name, catalog(name).product});
  algebras.push_back({"W(1,1)", w_of(1, 1).product});
  for (const auto& [name, m] : algebras) {
    const auto s = std::get<AssociatedSolution>(solve_associated(m));
    const EmbeddingReport r = verify_embedding(m, s.particular);
    o.require(r.is_homomorphism, name + " homomorphism");
    o.require(r.kernel_equals_max_jacobi_ideal, name + " kernel");
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
      if (!adjoint_independence_check(m, s.particular, s.random_member(seed)))
        o.require(false, name + " seed " + std::to_string(seed));
  }
  const BilinearOp w = w_of(1, 1).product;
  const EmbeddingReport rt = verify_embedding(w, terminal_associated(w));
  o.require(rt.is_homomorphism && rt.kernel_equals_max_jacobi_ideal, "W(1,1) with terminal product");
  o.detail << (o.pass ? "" : "; ") << "6 algebras, 50 perturbations each";
}

// 11. ad = id on U
void ad_identity(Outcome& o) {
  for (auto [n, m] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}})
    o.require(verify_ad_is_identity_on_U(n, m), "U(" + std::to_string(n) + "," + std::to_string(m) + ")");
  o.detail << (o.pass ? "" : "; ") << "U(1,0), U(1,1), U(2,0)";
}

// 12. Sign oracle
void sign_oracle(Outcome& o) {
  int cases = 0, conservative = 0;
  auto compare = [&](const std::string& tag, const BilinearOp& m, const BilinearOp& star) {
    const TransferReport r = transfer_check_conservative(m, star);
    o.require(r.agree(), tag);
    conservative += r.super_verdict;
    ++cases;
  };
  for (const auto& f : catalog_examples()) {
    const auto s = solve_associated(f.product);
    compare(f.name, f.product, solution_of(s) ? solution_of(s)->particular : f.product);
  }
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}})
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const BilinearOp a = random_superalgebra(seed, n, m, 0.3);
      const auto s = solve_associated(a);
      const BilinearOp star = solution_of(s) ? solution_of(s)->random_member(seed)
                                             : random_superalgebra(seed + 5000, n, m, 0.3);
      compare("random " + std::to_string(n) + "|" + std::to_string(m) + " seed " + std::to_string(seed), a, star);
    }
  const UniversalAlgebra u = build_universal(1, 1);
  compare("U(1,1) nabla1", u.product, nabla1_carrier(u));
  compare("U(1,1) nabla2", u.product, nabla2_carrier(u));
  o.require(envelope_conservative(u.product, nabla1_carrier(u)), "U(1,1) envelope");
  // The product of U is the bracket of a left multiplication with B.
  std::mt19937_64 rng(12);
  const SuperSpace v(1, 1);
  int mismatches = 0;
  for (int t = 0; t < 64; ++t) {
    const BilinearOp A = random_homogeneous_op(v, t % 2, rng), B = random_homogeneous_op(v, (t / 2) % 2, rng);
    Vec a = random_homogeneous(v, (t / 4) % 2, rng);
    if (is_zero(a)) a = unit_vec(2, (t / 4) % 2);
    mismatches += kantor_product(A, B, a) != bracket_lin_bilin(left_mul(A, a), B);
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " Kantor/bracket mismatches");
  o.detail << (o.pass ? "" : "; ") << cases << " pairs agree (" << conservative << " conservative); Kantor = bracket on 64 triples";
}

// 13. Variety propositions
void varieties(Outcome& o) {
  int assoc = 0;
  for (const auto& f : catalog_examples())
    if (is_associative(f.product)) {
      o.require(check_conservative_pair(f.product, f.product).verdict, f.name);
      ++assoc;
    }
  o.require(is_ncjordan_super(catalog("grassmann1").product), "grassmann1 ncJordan");
  o.detail << (o.pass ? "" : "; ") << assoc << " associative catalog algebras with * = product; grassmann1 ncJordan";
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--deep") == 0) deep = true;

  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"universal-conservative", [deep](Outcome& o) { universal_conservative(o, deep); }},
      {"jacobi-codimension", codimension},
      {"no-jacobi-ideals", no_jacobi_ideals},
      {"shift-identity", shift_identity},
      {"terminality", terminality},
      {"superderivations", superderivations},
      {"jacobi-quasiunity", jacobi_suite},
      {"solver-freedom", freedom},
      {"mstar-congruences", congruences},
      {"embedding", embedding},
      {"ad-identity", ad_identity},
      {"sign-oracle", sign_oracle},
      {"variety-propositions", varieties},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %2zu %-22s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
