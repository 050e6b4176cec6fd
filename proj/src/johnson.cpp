#include "treelie/johnson.hpp"

#include <random>
#include <stdexcept>

namespace treelie {

namespace {

Letter a_letter(int i) { return static_cast<Letter>(2 * i); }
Letter b_letter(int i) { return static_cast<Letter>(2 * i + 1); }

void require_ic(const LieAutomorphism& psi, int k)
{
	if (k < 1)
		throw std::invalid_argument("johnson: k must be >= 1");
	if (psi.max_degree() < 2 * k)
		throw std::invalid_argument("johnson: working truncation " + std::to_string(psi.max_degree()) +
		                            " is below 2k = " + std::to_string(2 * k));
	if (psi.deviation_degree() < k + 1)
		throw std::domain_error("johnson: automorphism deviates from the identity in degree " +
		                        std::to_string(psi.deviation_degree()) + " < k+1");
}

} // namespace

Derivation to_derivation(const HLieTensor& x, int max_degree)
{
	const int g = x.genus();
	std::vector<LieSeries> images(static_cast<std::size_t>(2 * g), LieSeries(g, max_degree));
	for (int i = 0; i < g; ++i)
	{
		images[b_letter(i)] = x.component(a_letter(i), max_degree);
		images[a_letter(i)] = -x.component(b_letter(i), max_degree);
	}
	return Derivation::from_images(g, max_degree, std::move(images));
}

HLieTensor to_tensor(const Derivation& delta, int max_lie_degree)
{
	HLieTensor out(delta.genus());
	for (int i = 0; i < delta.genus(); ++i)
	{
		out.add(a_letter(i), delta.image(b_letter(i)).degree_range(1, max_lie_degree));
		out.add(b_letter(i), delta.image(a_letter(i)).degree_range(1, max_lie_degree), Rational(-1));
	}
	return out;
}

Derivation tree_derivation(const TreeCombo& c, int max_degree)
{
	return to_derivation(eta(c), max_degree);
}

HLieTensor tau_truncated(const LieAutomorphism& psi, int k)
{
	require_ic(psi, k);
	HLieTensor out(psi.genus());
	for (int i = 0; i < psi.genus(); ++i)
	{
		out.add(a_letter(i), psi.deviation(b_letter(i)).degree_range(k + 1, 2 * k));
		out.add(b_letter(i), psi.deviation(a_letter(i)).degree_range(k + 1, 2 * k), Rational(-1));
	}
	return out;
}

HLieTensor johnson_k(const LieAutomorphism& psi, int k)
{
	return tau_truncated(psi, k).degree_part(k + 1);
}

bool tau_bracket_check(const LieAutomorphism& psi, int k)
{
	const HLieTensor tau = tau_truncated(psi, k);
	for (int m = k + 1; m <= 2 * k; ++m)
		if (!tau.degree_part(m).bracket_contraction().is_zero())
			return false;
	return true;
}

TreeCombo tau_to_trees(const LieAutomorphism& psi, int k)
{
	const HLieTensor tau = tau_truncated(psi, k);
	TreeCombo out(psi.genus());
	for (int d = k; d <= 2 * k - 1; ++d)
		out += eta_inverse(tau.degree_part(d + 1), d);
	return out;
}

KernelReport kernel_check(const LieAutomorphism& psi, int k)
{
	KernelReport r;
	r.tau_vanishes = tau_truncated(psi, k).is_zero();
	r.trivial_mod_2k = psi.deviation_degree() >= 2 * k + 1;
	return r;
}

LieAutomorphism random_ic_element(int genus, int k, std::uint64_t seed, int max_degree)
{
	if (genus < 1 || k < 1 || 2 * k > max_degree)
		throw std::invalid_argument("random_ic_element: requires genus >= 1, k >= 1 and 2k <= max_degree");
	std::mt19937_64 rng(seed);
	TreeCombo c(genus);
	const int trees = 1 + static_cast<int>(rng() % 3);
	for (int i = 0; i < trees; ++i)
	{
		const int d = k + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree - k));
		const long num = 1 + static_cast<long>(rng() % 3);
		const long den = 1 + static_cast<long>(rng() % 2);
		// redraw trees that vanish under AS/IHX; T_d itself may be zero
		TreeDiagram t = random_tree(genus, d, rng);
		for (int attempt = 0; attempt < 16 && eta(t).is_zero(); ++attempt)
			t = random_tree(genus, d, rng);
		c.add(t, make_rational(rng() % 2 ? num : -num, den));
	}
	return exp_der(tree_derivation(c, max_degree));
}

HomologyClass morita_mk(const LieAutomorphism& psi, int k)
{
	require_ic(psi, k);
	const int g = psi.genus();
	const int big = 2 * k;
	WedgeChain c(g, big, 2);
	for (int i = 0; i < g; ++i)
	{
		c += WedgeChain::wedge({LieSeries::generator(g, big, a_letter(i)), LieSeries::generator(g, big, b_letter(i))});
		c -= WedgeChain::wedge({psi.image(a_letter(i)).truncated(big), psi.image(b_letter(i)).truncated(big)});
	}
	// only degrees k+2 .. 2k+1 carry H_3 of the class-k quotient
	WedgeChain t(g, big, 3);
	for (int d = k + 2; d <= 2 * k + 1; ++d)
	{
		const WedgeChain cd = c.degree_part(d);
		if (cd.is_zero())
			continue;
		const auto& rows = chain_basis(g, big, 2, d);
		const auto& cols = chain_basis(g, big, 3, d);
		VectorQ rhs(rows.size(), Rational(0));
		for (std::size_t r = 0; r < rows.size(); ++r)
			if (auto it = cd.terms().find(rows[r]); it != cd.terms().end())
				rhs[r] = it->second;
		auto sol = solve(boundary_matrix(g, big, 3, d), rhs);
		if (!sol)
			throw std::logic_error("morita_mk: w - psi(w) is not a boundary in degree " + std::to_string(d));
		for (std::size_t j = 0; j < cols.size(); ++j)
			if (!is_zero((*sol)[j]))
				t.add_monomial(cols[j], (*sol)[j]);
	}
	return class_of(t.reduced(k));
}

} // namespace treelie
