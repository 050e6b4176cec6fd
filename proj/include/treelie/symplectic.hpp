#pragma once

// Symplectic expansions of the surface group: construction by correcting the
// basis expansion degree by degree, a hard-coded degree-4 example, and an
// independent verifier.

#include "treelie/automorphism.hpp"
#include "treelie/tensor.hpp"

#include <optional>
#include <string>

namespace treelie {

/// prod_i [b_i^-1, a_i] with [x,y] = x y x^-1 y^-1.
FreeGroupWord zeta_inverse_word(int genus);
FreeGroupWord zeta_word(int genus);

/// log prod_i exp(-b_i) exp(a_i) exp(b_i) exp(-a_i), as a Lie series.
LieSeries omega_tilde(int genus, int max_degree);

/// Lie automorphism psi, identity on the graded level, with
/// psi(omega) = omega_tilde up to the truncation.
LieAutomorphism build_corrector(int genus, int max_degree);

/// theta(h) = exp(psi^-1(h)) on generators.
ExpansionMap construct_symplectic(int genus, int max_degree);

/// Logarithms of the generator images of the explicit degree-4 example,
/// indexed by letter.
std::vector<LieSeries> known_example_logs(int genus);
ExpansionMap known_example_expansion(int genus);

ExpansionMap expansion_from_logs(int genus, int max_degree, const std::vector<LieSeries>& logs);

struct SymplecticReport
{
	int degree = 0;            // log-side truncation N
	bool normalized = false;   // 1 + generator + higher
	bool grouplike = false;
	bool zeta_condition = false;
	/// Lowest degree where theta(zeta) exp(omega) differs from 1.
	std::optional<int> first_failing_degree;
	std::string message;

	bool ok() const { return normalized && grouplike && zeta_condition; }
};

/// Checks theta(zeta) exp(omega) = 1 modulo degree N+1 plus the expansion
/// and group-like conditions on generators.
SymplecticReport verify_symplectic(const ExpansionMap& theta, int max_degree);

} // namespace treelie
