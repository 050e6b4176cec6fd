#pragma once

// Filtration-preserving endomorphisms and derivations of the truncated free
// Lie algebra, given by the images of the 2g generators.

#include "treelie/free_lie.hpp"

#include <vector>

namespace treelie {

class LieAutomorphism
{
public:
	LieAutomorphism() = default;

	static LieAutomorphism identity(int genus, int max_degree);
	/// images[l] is the image of letter l. Each image must be the generator
	/// plus terms of degree >= 2; throws std::invalid_argument otherwise.
	static LieAutomorphism from_images(int genus, int max_degree, std::vector<LieSeries> images);

	int genus() const { return genus_; }
	int max_degree() const { return max_degree_; }
	const std::vector<LieSeries>& images() const { return images_; }
	const LieSeries& image(Letter l) const { return images_.at(l); }
	const LieSeries& image(GenName g) const { return image(letter_of(g)); }

	/// image(l) - generator(l).
	LieSeries deviation(Letter l) const;
	/// Lowest degree of a nonzero deviation, or max_degree + 1 for the identity.
	int deviation_degree() const;

	friend bool operator==(const LieAutomorphism&, const LieAutomorphism&) = default;

private:
	int genus_ = 0;
	int max_degree_ = 0;
	std::vector<LieSeries> images_;
};

class Derivation
{
public:
	Derivation() = default;

	static Derivation zero(int genus, int max_degree);
	/// Values must lie in degree >= 2; throws std::invalid_argument otherwise.
	static Derivation from_images(int genus, int max_degree, std::vector<LieSeries> images);

	int genus() const { return genus_; }
	int max_degree() const { return max_degree_; }
	const std::vector<LieSeries>& images() const { return images_; }
	const LieSeries& image(Letter l) const { return images_.at(l); }
	bool is_zero() const;

	Derivation& operator+=(const Derivation& o);
	friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
	friend bool operator==(const Derivation&, const Derivation&) = default;

private:
	int genus_ = 0;
	int max_degree_ = 0;
	std::vector<LieSeries> images_;
};

/// Extends the generator images over the Lyndon bracketings.
LieSeries apply_aut(const LieAutomorphism& psi, const LieSeries& x);
/// Extends the generator values by the Leibniz rule.
LieSeries apply_der(const Derivation& delta, const LieSeries& x);

/// (psi ∘ phi)(x) = psi(phi(x)).
LieAutomorphism compose(const LieAutomorphism& psi, const LieAutomorphism& phi);
LieAutomorphism inverse(const LieAutomorphism& psi);

/// sum_n delta^n / n! on the generators.
LieAutomorphism exp_der(const Derivation& delta);
/// sum_n (-1)^{n+1} (psi - id)^n / n on the generators.
Derivation log_aut(const LieAutomorphism& psi);
/// The logarithmic series of psi applied to an arbitrary element, without
/// assuming it is a derivation.
LieSeries log_series_apply(const LieAutomorphism& psi, const LieSeries& x);

LieSeries omega(int genus, int max_degree);
bool is_omega_fixing(const LieAutomorphism& psi);

} // namespace treelie
