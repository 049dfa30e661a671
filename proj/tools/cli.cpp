#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <variant>

#include "superalg/brackets.hpp"
#include "superalg/catalog_io.hpp"
#include "superalg/conservative.hpp"
#include "superalg/embedding.hpp"
#include "superalg/grassmann.hpp"
#include "superalg/universal.hpp"

namespace superalg::cli {

void Report::print(std::ostream& out, bool machine) const {
  std::size_t width = 0;
  for (const auto& [k, v] : lines_) width = std::max(width, k.size());
  for (const auto& [k, v] : lines_) {
    if (machine)
      out << k << '=' << v << '\n';
    else
      out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }
}

namespace {

struct Options {
  std::string algebra;
  std::string catalog_name;
  std::string assoc;
  std::string out;
  bool deep = false;
  bool machine = false;
  std::uint64_t seed = 0;
  std::string property;
  int n = 0;
  int m = 0;
  std::string which;
  int generators = 4;
  bool transfer = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string dims(const SuperSpace& s) { return std::to_string(s.n) + "|" + std::to_string(s.m); }

std::string indices(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void add_subspace(Report& r, const std::string& key, const Subspace& s) {
  r.add(key + "_dim", s.dim());
  for (int t = 0; t < s.dim(); ++t) r.add(key + "_basis_" + std::to_string(t), csv(s.basis()[t]));
}

AlgebraFile load(const Options& o) {
  if (o.algebra.empty() == o.catalog_name.empty()) throw InputError("give exactly one of --algebra or --catalog");
  return o.algebra.empty() ? catalog(o.catalog_name) : read_algebra_file(o.algebra);
}

std::optional<BilinearOp> load_assoc(const Options& o, const AlgebraFile& f) {
  if (o.assoc.empty()) return f.assoc;
  AlgebraFile a = read_algebra_file(o.assoc);
  if (!(a.product.space() == f.product.space())) throw InputError("associated product has different dimensions");
  return a.assoc ? a.assoc : a.product;
}

void require_even(const BilinearOp& m) {
  auto p = m.parity();
  if (!p || *p != 0) throw InputError("the product must be even");
}

void header(Report& r, const std::string& command, const AlgebraFile& f) {
  r.add("command", command);
  r.add("algebra", f.name);
  r.add("dims", dims(f.product.space()));
}

int cmd_check(const Options& o, Report& r) {
  const AlgebraFile f = load(o);
  const BilinearOp& m = f.product;
  header(r, "check", f);
  r.add("property", o.property);
  bool pass = true;
  if (o.property == "conservative") {
    require_even(m);
    if (auto star = load_assoc(o, f)) {
      require_even(*star);
      r.add("associated", "supplied");
      const auto rep = check_conservative_pair(m, *star);
      pass = rep.verdict;
      if (rep.witness) {
        const auto& q = *rep.witness;
        r.add("witness", indices({q.a, q.b, q.x, q.y}));
        r.add("residual", csv(rep.residual));
      }
    } else {
      const auto sol = solve_associated(m);
      if (const auto* s = std::get_if<AssociatedSolution>(&sol)) {
        pass = check_conservative_pair(m, s->particular).verdict;
        r.add("associated", "solved");
        r.add("freedom_dim", s->freedom_dim());
        r.add("jacobi_dim", jacobi_subspace(m).dim());
        if (!o.out.empty()) write_algebra_file(o.out, AlgebraFile{f.name, m, s->particular});
      } else {
        const auto& nc = std::get<NotConservative>(sol);
        pass = false;
        r.add("associated", "none");
        r.add("witness", indices({nc.a, nc.b}));
      }
    }
  } else if (o.property == "terminal") {
    pass = is_terminal(m);
    if (!pass && m.parity() == 0) {
      const auto rep = check_conservative_pair(m, terminal_associated(m));
      if (rep.witness) r.add("witness", indices({rep.witness->a, rep.witness->b, rep.witness->x, rep.witness->y}));
    }
  } else if (o.property == "flexible") {
    const auto w = flexibility_witness(m);
    pass = !w;
    if (w) r.add("witness", indices({w->first, w->second}));
  } else if (o.property == "rigid") {
    pass = is_rigid(m);
  } else if (o.property == "jordan") {
    require_even(m);
    pass = is_jordan_super(m);
  } else if (o.property == "ncjordan") {
    require_even(m);
    pass = is_ncjordan_super(m);
  }
  r.add_flag("verdict", pass);
  return pass ? kPass : kFail;
}

int cmd_structure(const Options& o, Report& r) {
  const AlgebraFile f = load(o);
  const BilinearOp& m = f.product;
  require_even(m);
  header(r, "structure", f);
  add_subspace(r, "jacobi", jacobi_subspace(m));
  add_subspace(r, "left_annihilator", left_annihilator(m));
  add_subspace(r, "max_jacobi_ideal", maximal_jacobi_ideal(m));
  if (auto q = quasiunities(m)) {
    r.add("quasiunity", csv(q->particular));
    add_subspace(r, "quasiunity_freedom", q->freedom);
  } else {
    r.add("quasiunity", "none");
  }
  r.add("u0_dim", u0_span(m).dim());
  r.add("u1_dim", u1_span(m).dim());
  return kPass;
}

std::string universal_name(const std::string& prefix, int n, int m) {
  return prefix + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

int cmd_build_u(const Options& o, Report& r, std::ostream& err) {
  const UniversalAlgebra u = build_universal(o.n, o.m);
  r.add("command", "build-u");
  r.add("base", dims(u.base()));
  r.add("carrier", dims(u.carrier()));
  r.add("carrier_dim", u.carrier().dim());
  r.add("nonzeros", static_cast<long>(u.product.nonzeros()));
  const Subspace j = jacobi_of_universal(u);
  r.add("jacobi_codim", j.codim());
  r.add("left_unity_freedom_dim", left_unities(u).freedom.dim());
  const BilinearOp star = nabla1_carrier(u);
  bool pass = true;
  if (o.deep || u.carrier().dim() <= 8) {
    if (o.deep) err << "checking conservativity with nabla1\n";
    const bool c1 = check_conservative_pair(u.product, star).verdict;
    if (o.deep) err << "checking conservativity with nabla2\n";
    const bool c2 = check_conservative_pair(u.product, nabla2_carrier(u)).verdict;
    r.add_flag("conservative_nabla1", c1);
    r.add_flag("conservative_nabla2", c2);
    pass = c1 && c2;
  } else {
    r.add("conservative_nabla1", "skipped");
    r.add("conservative_nabla2", "skipped");
  }
  if (!o.out.empty()) write_algebra_file(o.out, AlgebraFile{universal_name("U", o.n, o.m), u.product, star});
  return pass ? kPass : kFail;
}

int cmd_subalg(const Options& o, Report& r) {
  if (o.which == "H" && o.n % 2 != 0) throw InputError("n must be even");
  const UniversalAlgebra u = build_universal(o.n, o.m);
  const Subalgebra s = o.which == "W" ? build_w(u) : o.which == "S" ? build_s(u) : build_h(u);
  r.add("command", "subalg");
  r.add("which", o.which);
  r.add("base", dims(u.base()));
  r.add("dims", dims(s.space));
  r.add("codim", s.span.codim());
  const bool terminal = is_terminal(s.product);
  r.add_flag("terminal", terminal);
  r.add("left_unity", left_unities_within(u, s.span) ? "present" : "absent");
  if (!o.out.empty()) write_algebra_file(o.out, AlgebraFile{universal_name(o.which, o.n, o.m), s.product, std::nullopt});
  return terminal ? kPass : kFail;
}

// (n, m) when the algebra is U(n, m) as produced by build_universal.
std::optional<std::pair<int, int>> detect_universal(const BilinearOp& p) {
  const int dc = p.dim();
  for (int d = 1; d * d * d <= dc; ++d) {
    if (d * d * d != dc) continue;
    for (int n = 1; n <= d; ++n) {
      if (!(CarrierLayout(SuperSpace(n, d - n)).carrier == p.space())) continue;
      if (build_universal(n, d - n).product == p) return std::make_pair(n, d - n);
    }
  }
  return std::nullopt;
}

int cmd_embed(const Options& o, Report& r) {
  const AlgebraFile f = load(o);
  const BilinearOp& m = f.product;
  require_even(m);
  header(r, "embed", f);
  std::optional<BilinearOp> star = load_assoc(o, f);
  std::optional<AssociatedSolution> solution;
  if (star) {
    require_even(*star);
    if (!check_conservative_pair(m, *star).verdict) {
      r.add("verdict", "NotConservative");
      return kFail;
    }
  } else {
    auto sol = solve_associated(m);
    if (auto* nc = std::get_if<NotConservative>(&sol)) {
      r.add("verdict", "NotConservative");
      r.add("witness", indices({nc->a, nc->b}));
      return kFail;
    }
    solution = std::get<AssociatedSolution>(std::move(sol));
    star = solution->particular;
  }
  const EmbeddingReport e = verify_embedding(m, *star);
  r.add("w_dims", dims(e.quotient.w));
  r.add("epsilon_origin", to_string(e.quotient.origin));
  r.add("epsilon", csv(e.quotient.epsilon));
  r.add_flag("homomorphism", e.is_homomorphism);
  if (e.witness) r.add("homomorphism_witness", indices({e.witness->first, e.witness->second}));
  add_subspace(r, "kernel", e.kernel);
  r.add("max_jacobi_ideal_dim", e.max_jacobi_ideal.dim());
  r.add_flag("kernel_equals_max_jacobi_ideal", e.kernel_equals_max_jacobi_ideal);
  bool pass = e.is_homomorphism && e.kernel_equals_max_jacobi_ideal;
  if (solution && solution->freedom_dim() > 0) {
    const bool indep = adjoint_independence_check(m, *star, solution->random_member(o.seed));
    r.add_flag("independent_of_associated", indep);
    pass = pass && indep;
  }
  if (auto nm = detect_universal(m)) {
    const bool id = verify_ad_is_identity_on_U(nm->first, nm->second);
    r.add("universal", universal_name("U", nm->first, nm->second));
    r.add_flag("ad_identity", id);
    pass = pass && id;
  }
  r.add_flag("verdict", pass);
  return pass ? kPass : kFail;
}

int cmd_envelope(const Options& o, Report& r) {
  const AlgebraFile f = load(o);
  const BilinearOp& m = f.product;
  require_even(m);
  header(r, "envelope", f);
  const Envelope env(m, o.generators);
  const GrassmannAlgebra g(o.generators);
  r.add("generators", o.generators);
  r.add("grassmann_dims", dims(g.as_superalgebra().space()));
  r.add("envelope_dim", env.dim());
  if (!o.transfer) return kPass;

  bool agree = true;
  auto pair = [&](const std::string& key, bool super, bool ordinary) {
    r.add(key, std::string(super ? "true" : "false") + "/" + (ordinary ? "true" : "false"));
    agree = agree && super == ordinary;
  };
  std::optional<BilinearOp> star = load_assoc(o, f);
  if (!star)
    if (auto sol = solve_associated(m); std::holds_alternative<AssociatedSolution>(sol))
      star = std::get<AssociatedSolution>(sol).particular;
  if (!star) star = m;
  require_even(*star);
  const auto tr = transfer_check_conservative(m, *star, o.generators);
  pair("conservative", tr.super_verdict, tr.envelope_verdict);
  pair("flexible", is_flexible(m), envelope_flexible(m, o.generators));
  pair("terminal", is_terminal(m), envelope_terminal(m, o.generators));
  pair("associative", is_associative(m), envelope_associative(m, o.generators));
  r.add_flag("transfer", agree);
  return agree ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for conservative superalgebras", "superalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--algebra", o.algebra, "Algebra file ('-' reads standard input)");
  app.add_option("--catalog", o.catalog_name, "Built-in algebra, e.g. grassmann1 or zero(1|1)");
  app.add_option("--assoc", o.assoc, "File whose product is the associated product");
  app.add_option("--out", o.out, "Write the resulting algebra here ('-' for standard output)");
  app.add_flag("--deep", o.deep, "Run the long checks");
  app.add_flag("--machine", o.machine, "key=value output");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* check = app.add_subcommand("check", "Check a property");
  check->add_option("property", o.property)
      ->required()
      ->check(CLI::IsMember({"conservative", "terminal", "flexible", "rigid", "jordan", "ncjordan"}));
  auto* structure = app.add_subcommand("structure", "Jacobi subspace, annihilator, quasiunities, U0/U1");
  auto* build_u = app.add_subcommand("build-u", "Build U(n,m)");
  build_u->add_option("n", o.n)->required();
  build_u->add_option("m", o.m)->required();
  auto* subalg = app.add_subcommand("subalg", "Build W, S or H inside U(n,m)");
  subalg->add_option("n", o.n)->required();
  subalg->add_option("m", o.m)->required();
  subalg->add_option("which", o.which)->required()->check(CLI::IsMember({"W", "S", "H"}));
  auto* embed = app.add_subcommand("embed", "Adjoint embedding into U(W)");
  auto* envelope = app.add_subcommand("envelope", "Grassmann envelope");
  envelope->add_option("--generators", o.generators, "Grassmann generators")->check(CLI::Range(0, 12));
  envelope->add_flag("--transfer", o.transfer, "Compare super and envelope verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  const bool report_to_err = o.out == "-";
  std::ostream& report_out = report_to_err ? err : out;
  Report r;
  int status = kPass;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*check)
      status = cmd_check(o, r);
    else if (*structure)
      status = cmd_structure(o, r);
    else if (*build_u)
      status = cmd_build_u(o, r, err);
    else if (*subalg)
      status = cmd_subalg(o, r);
    else if (*embed)
      status = cmd_embed(o, r);
    else if (*envelope)
      status = cmd_envelope(o, r);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!o.machine) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.add("elapsed_ms", static_cast<long>(ms.count()));
  }
  r.print(report_out, o.machine);
  return status;
}

}  // namespace superalg::cli
