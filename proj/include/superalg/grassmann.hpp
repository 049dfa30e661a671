#pragma once

#include <cstdint>
#include <vector>

#include "superalg/superspace.hpp"

namespace superalg {

// Grassmann algebra on g generators. Basis monomials are bitmasks over the
// generators, written in increasing generator order.
class GrassmannAlgebra {
 public:
  explicit GrassmannAlgebra(int g);

  int generators() const { return g_; }
  int dim() const { return 1 << g_; }

  // Product of two monomials: sign in {-1, 0, 1} and resulting mask.
  static int merge_sign(std::uint32_t s, std::uint32_t t);

  // Superalgebra with the even monomials first, in increasing mask order.
  const BilinearOp& as_superalgebra() const { return algebra_; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }

 private:
  int g_;
  std::vector<std::uint32_t> masks_;
  BilinearOp algebra_;
};

// (M_0 ⊗ Γ_0) ⊕ (M_1 ⊗ Γ_1) as an ordinary algebra, with
// (a ⊗ f)(b ⊗ h) = (-1)^{ab} ab ⊗ fh.
class Envelope {
 public:
  struct Key {
    int index;           // basis vector of M
    std::uint32_t mask;  // Grassmann monomial
  };

  Envelope(const BilinearOp& m, int g);

  int generators() const { return g_; }
  int dim() const { return static_cast<int>(keys_.size()); }
  const std::vector<Key>& keys() const { return keys_; }
  int index_of(int i, std::uint32_t mask) const;

  // Ungraded structure constants (every basis vector counted as even).
  const BilinearOp& as_algebra() const { return algebra_; }

 private:
  int g_;
  int source_dim_;
  std::vector<Key> keys_;
  std::vector<int> lookup_;  // i * 2^g + mask -> index or -1
  BilinearOp algebra_;
};

// Ordinary identities evaluated on envelope elements e_i ⊗ ξ_t, where
// slot t of the identity gets generator t when e_i is odd and 1 otherwise.
// Every evaluator here is sign-free; signs only enter through the envelope.
bool envelope_conservative(const BilinearOp& m, const BilinearOp& mstar, int g = 4);
bool envelope_flexible(const BilinearOp& m, int g = 4);
bool envelope_terminal(const BilinearOp& m, int g = 4);
bool envelope_associative(const BilinearOp& m, int g = 4);
bool envelope_commutative(const BilinearOp& m, int g = 4);
bool envelope_jordan(const BilinearOp& m, int g = 4);

// Associativity of the ordinary algebra itself over all basis triples.
bool is_associative_ordinary(const BilinearOp& algebra);

struct TransferReport {
  bool super_verdict;
  bool envelope_verdict;
  bool agree() const { return super_verdict == envelope_verdict; }
};

TransferReport transfer_check_conservative(const BilinearOp& m, const BilinearOp& mstar, int g = 4);

// Commutative and satisfying the linearized Jordan identity, through the
// envelope.
bool is_jordan_super(const BilinearOp& m);
// Flexible with a Jordan symmetrization.
bool is_ncjordan_super(const BilinearOp& m);

}  // namespace superalg
