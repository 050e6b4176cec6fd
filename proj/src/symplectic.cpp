#include "treelie/symplectic.hpp"

#include "treelie/linalg.hpp"

#include <stdexcept>

namespace treelie {

FreeGroupWord zeta_inverse_word(int genus)
{
	std::vector<FreeGroupWord::Syllable> s;
	for (int i = 1; i <= genus; ++i)
	{
		s.emplace_back(GenName{'b', i}, -1);
		s.emplace_back(GenName{'a', i}, 1);
		s.emplace_back(GenName{'b', i}, 1);
		s.emplace_back(GenName{'a', i}, -1);
	}
	return FreeGroupWord(std::move(s));
}

FreeGroupWord zeta_word(int genus)
{
	return zeta_inverse_word(genus).inverse();
}

LieSeries omega_tilde(int genus, int max_degree)
{
	if (genus == 0)
		return LieSeries(0, max_degree);
	return project_lie(log(evaluate_expansion(basis_expansion(genus, max_degree), zeta_inverse_word(genus))));
}

LieAutomorphism build_corrector(int genus, int max_degree)
{
	if (max_degree < 2)
		throw std::invalid_argument("build_corrector: truncation degree must be >= 2");
	const int n_max = max_degree;
	const LieSeries target = omega_tilde(genus, n_max);
	const LieSeries w = omega(genus, n_max);
	auto table = LyndonTable::get(genus, n_max);

	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * genus; ++l)
		images.push_back(LieSeries::generator(genus, n_max, static_cast<Letter>(l)));
	LieAutomorphism psi = LieAutomorphism::from_images(genus, n_max, images);

	// Unknowns u_i (for a_i) and v_i (for b_i) in degree m; the defect sits in
	// degree m + 1 and equals sum_i [a_i, v_i] + [u_i, b_i].
	for (int m = 2; m < n_max; ++m)
	{
		const LieSeries defect = target - apply_aut(psi, w);
		if (!defect.is_zero() && defect.lowest_degree() < m + 1)
			throw std::logic_error("build_corrector: defect below the expected degree");
		const LieSeries part = defect.degree_part(m + 1);
		if (part.is_zero())
			continue;

		const LyndonId in0 = table->begin_of_degree(m), in1 = table->end_of_degree(m);
		const LyndonId out0 = table->begin_of_degree(m + 1), out1 = table->end_of_degree(m + 1);
		const std::size_t block = in1 - in0;
		MatrixQ a(out1 - out0, block * static_cast<std::size_t>(2 * genus));
		for (int l = 0; l < 2 * genus; ++l)
		{
			const bool is_a = l % 2 == 0;
			// partner letter: b_i for a_i, a_i for b_i
			const LyndonId partner = table->letter_id(static_cast<Letter>(is_a ? l + 1 : l - 1));
			for (LyndonId e = in0; e < in1; ++e)
			{
				const IntTerms& br = is_a ? table->bracket(e, partner) : table->bracket(partner, e);
				const std::size_t col = static_cast<std::size_t>(l) * block + (e - in0);
				for (const auto& [s, c] : br)
					a.add(s - out0, col, Rational(c));
			}
		}
		VectorQ b(out1 - out0, Rational(0));
		for (const auto& [id, c] : part.coords())
			b[id - out0] = c;
		auto x = solve(a, b);
		if (!x)
			throw std::logic_error("build_corrector: bracket system unexpectedly inconsistent");
		for (int l = 0; l < 2 * genus; ++l)
			for (std::size_t k = 0; k < block; ++k)
			{
				const Rational& c = (*x)[static_cast<std::size_t>(l) * block + k];
				if (!is_zero(c))
					images[static_cast<std::size_t>(l)].add_term(in0 + static_cast<LyndonId>(k), c);
			}
		psi = LieAutomorphism::from_images(genus, n_max, images);
	}
	if (apply_aut(psi, w) != target)
		throw std::logic_error("build_corrector: psi(omega) differs from omega_tilde");
	return psi;
}

ExpansionMap expansion_from_logs(int genus, int max_degree, const std::vector<LieSeries>& logs)
{
	ExpansionMap theta{genus, max_degree, {}};
	for (const auto& x : logs)
		theta.images.push_back(exp(embed_lie(x)));
	return theta;
}

ExpansionMap construct_symplectic(int genus, int max_degree)
{
	const LieAutomorphism psi_inv = inverse(build_corrector(genus, max_degree));
	return expansion_from_logs(genus, max_degree, psi_inv.images());
}

std::vector<LieSeries> known_example_logs(int genus)
{
	if (genus < 1)
		throw std::invalid_argument("known example requires genus >= 1");
	constexpr int n = 4;
	auto a = [&](int i) { return LieSeries::generator(genus, n, GenName{'a', i}); };
	auto b = [&](int i) { return LieSeries::generator(genus, n, GenName{'b', i}); };
	auto br = [](const LieSeries& x, const LieSeries& y) { return bracket(x, y); };
	const Rational half(1, 2), twelfth(1, 12), quarter(1, 4), r24(1, 24);

	std::vector<LieSeries> logs;
	for (int i = 1; i <= genus; ++i)
	{
		const LieSeries ab = br(a(i), b(i));
		LieSeries sum_ai(genus, n), sum_bi(genus, n), sum_ab(genus, n);
		for (int j = 1; j < i; ++j)
		{
			const LieSeries w = br(a(j), b(j));
			sum_ai += br(w, a(i));
			sum_bi += br(b(i), w);
			sum_ab += br(w, ab);
		}
		LieSeries la = a(i) - ab * half + br(ab, b(i)) * twelfth - sum_ai * half -
		               br(a(i), br(a(i), ab)) * r24 + sum_ab * quarter;
		LieSeries lb = b(i) - ab * half + br(a(i), ab) * twelfth + br(ab, b(i)) * quarter + sum_bi * half -
		               br(br(ab, b(i)), b(i)) * r24 + sum_ab * quarter;
		logs.push_back(std::move(la));
		logs.push_back(std::move(lb));
	}
	return logs;
}

ExpansionMap known_example_expansion(int genus)
{
	return expansion_from_logs(genus, 4, known_example_logs(genus));
}

SymplecticReport verify_symplectic(const ExpansionMap& theta, int max_degree)
{
	SymplecticReport r;
	r.degree = max_degree;
	const std::string order = "mod degree " + std::to_string(max_degree + 1) + " (log-degree " +
	                          std::to_string(max_degree) + ", order " + std::to_string(max_degree + 1) + ")";
	if (theta.max_degree < max_degree)
	{
		r.message = "expansion truncated at degree " + std::to_string(theta.max_degree) + ", below " +
		            std::to_string(max_degree);
		return r;
	}
	ExpansionMap t{theta.genus, max_degree, {}};
	for (const auto& x : theta.images)
		t.images.push_back(x.truncated(max_degree));

	const ExpansionReport er = check_expansion(t);
	r.normalized = er.is_expansion;
	r.grouplike = er.is_grouplike;
	if (!r.normalized)
	{
		r.message = "not an expansion: generator images are not 1 + generator + higher terms";
		return r;
	}
	if (!r.grouplike)
	{
		r.message = "not group-like";
		return r;
	}
	const TensorSeries lhs =
	    mul(evaluate_expansion(t, zeta_word(t.genus)), exp(embed_lie(omega(t.genus, max_degree))));
	const TensorSeries defect = lhs - TensorSeries::one(t.genus, max_degree);
	for (int d = 0; d <= max_degree; ++d)
		if (!defect.degree_part(d).is_zero())
		{
			r.first_failing_degree = d;
			break;
		}
	r.zeta_condition = !r.first_failing_degree.has_value();
	if (r.zeta_condition)
		r.message = "symplectic " + order;
	else
		r.message = "not symplectic: theta(zeta) exp(omega) differs from 1 in degree " +
		            std::to_string(*r.first_failing_degree);
	return r;
}

} // namespace treelie
