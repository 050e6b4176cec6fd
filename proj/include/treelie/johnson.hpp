#pragma once

// Johnson-type maps on simulated IC[k]: automorphisms of the truncated free
// Lie algebra that fix ω and are the identity modulo L_{>=k+1}.

#include "treelie/automorphism.hpp"
#include "treelie/hl_tensor.hpp"
#include "treelie/jacobi.hpp"
#include "treelie/koszul.hpp"

#include <cstdint>

namespace treelie {

/// Derivation dual to x via ω: h ⊗ u with h = a_i gives δ(b_i) += u, with
/// h = b_i gives δ(a_i) -= u. Its value on ω is the bracket contraction of x.
Derivation to_derivation(const HLieTensor& x, int max_degree);
/// Inverse of to_derivation on the values of degree <= max_lie_degree.
HLieTensor to_tensor(const Derivation& delta, int max_lie_degree);

/// Derivation η(c) on L/L_{>=max_degree+1}.
Derivation tree_derivation(const TreeCombo& c, int max_degree);

/// Degree k+1 .. 2k part of the deviation of psi, as an element of H ⊗ L
/// graded in Lie degrees k+1 .. 2k. Throws std::domain_error when psi
/// deviates below degree k+1 and std::invalid_argument when the working
/// truncation is below 2k.
HLieTensor tau_truncated(const LieAutomorphism& psi, int k);
/// Lie degree k+1 piece of tau_truncated.
HLieTensor johnson_k(const LieAutomorphism& psi, int k);
/// Every graded piece of tau_truncated lies in the bracket kernel.
bool tau_bracket_check(const LieAutomorphism& psi, int k);
/// eta_inverse of tau_truncated, degree by degree. Throws std::domain_error
/// when some piece is outside the bracket kernel.
TreeCombo tau_to_trees(const LieAutomorphism& psi, int k);

struct KernelReport
{
	bool tau_vanishes = false;
	bool trivial_mod_2k = false;  // psi ≡ id mod L_{>=2k+1} on generators
	bool agree() const { return tau_vanishes == trivial_mod_2k; }
};

KernelReport kernel_check(const LieAutomorphism& psi, int k);

/// exp of a random sum of tree derivations of degrees k .. max_degree-1.
/// Requires 2k <= max_degree. Deterministic per seed.
LieAutomorphism random_ic_element(int genus, int k, std::uint64_t seed, int max_degree);

/// Class of the reduction of t with ∂_3 t = w - psi(w), w = sum a_i ∧ b_i,
/// in H_3(L/L_{>=k+1}).
HomologyClass morita_mk(const LieAutomorphism& psi, int k);

} // namespace treelie
