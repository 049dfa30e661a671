#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superalg/conservative.hpp"
#include "superalg/superspace.hpp"

namespace superalg {

enum class EpsilonOrigin { FromQuasiunity, Adjoined };

const char* to_string(EpsilonOrigin o);

// W = V/J, or V/J + <eps> with eps adjoined at index 0.
struct QuotientData {
  SuperSpace source;
  Subspace jacobi;
  SuperSpace w;
  Mat projection;  // dim W x dim V
  Mat section;     // dim V x dim W; zero column for an adjoined eps
  Vec epsilon;
  EpsilonOrigin origin = EpsilonOrigin::Adjoined;
  std::vector<int> representatives;  // V index of each W basis vector, -1 for eps

  bool adjoined() const { return origin == EpsilonOrigin::Adjoined; }
  Vec project(const Vec& v) const { return projection * v; }
};

// J must be the Jacobi subspace of m. Representatives are the non-pivot
// coordinates of J. eps comes from a quasiunity when one exists outside J.
QuotientData build_quotient(const BilinearOp& m, const Subspace& jacobi);

// ad(e_a) for every basis vector of V. Representative independence is
// checked on all of J; a dependence throws std::logic_error.
std::vector<BilinearOp> adjoint_map(const BilinearOp& m, const BilinearOp& mstar, const QuotientData& q);

struct EmbeddingReport {
  QuotientData quotient;
  std::vector<BilinearOp> ad;
  bool is_homomorphism = true;
  std::optional<std::pair<int, int>> witness;  // first failing basis pair
  Subspace kernel;
  Subspace max_jacobi_ideal;
  bool kernel_equals_max_jacobi_ideal = false;
};

// Checks ad(ab) = ad(a) ∆_{-eps} ad(b) on basis pairs and compares ker ad
// with the maximal Jacobi ideal. Throws std::invalid_argument when
// (m, mstar) is not a conservative pair.
EmbeddingReport verify_embedding(const BilinearOp& m, const BilinearOp& mstar);

bool adjoint_independence_check(const BilinearOp& m, const BilinearOp& mstar1, const BilinearOp& mstar2);

// With eps = e mod J for a quasiunity e, the generic formula agrees with
// the eps-slot formulas. Vacuously true when eps is adjoined.
bool quasiunity_epsilon_consistent(const BilinearOp& m, const BilinearOp& mstar);

// U(n,m)/J is identified with V by A -> A(a,a); checks
// ad(A)(B, C)(a, a) = A(B(a,a), C(a,a)) on all carrier basis triples,
// with the associated product taken as nabla1.
bool verify_ad_is_identity_on_U(int n, int m);

}  // namespace superalg
