#include "treelie/suite.hpp"

#include "treelie/johnson.hpp"
#include "treelie/symplectic.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace treelie {

namespace {

struct Outcome
{
	bool pass = true;
	std::ostringstream detail;

	void fail(const std::string& what)
	{
		if (pass)
			detail << what;
		pass = false;
	}
};

Rational small_rational(std::mt19937_64& rng)
{
	const long num = static_cast<long>(rng() % 7) - 3;
	const long den = static_cast<long>(rng() % 3) + 1;
	return make_rational(num, den);
}

// Random element with terms of degree lo .. n.
LieSeries random_lie(int g, int n, int lo, std::mt19937_64& rng, int terms = 4)
{
	LieSeries x(g, n);
	auto t = x.table();
	const LyndonId begin = t->begin_of_degree(lo);
	const LyndonId end = t->end_of_degree(n);
	for (int i = 0; i < terms; ++i)
		x.add_term(begin + static_cast<LyndonId>(rng() % (end - begin)), small_rational(rng));
	return x;
}

Derivation random_derivation(int g, int n, std::mt19937_64& rng)
{
	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * g; ++l)
		images.push_back(random_lie(g, n, 2, rng, 3));
	return Derivation::from_images(g, n, std::move(images));
}

LieAutomorphism random_automorphism(int g, int n, std::mt19937_64& rng)
{
	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * g; ++l)
		images.push_back(LieSeries::generator(g, n, static_cast<Letter>(l)) + random_lie(g, n, 2, rng, 3));
	return LieAutomorphism::from_images(g, n, std::move(images));
}

std::string context(int g, int k)
{
	return "(genus " + std::to_string(g) + ", k " + std::to_string(k) + ")";
}

const std::pair<int, int> kAllCases[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

// 1
void known_example(const SuiteOptions&, Outcome& out)
{
	for (int g : {1, 2, 3, 5})
	{
		const auto r = verify_symplectic(known_example_expansion(g), 4);
		if (!r.ok())
			out.fail("genus " + std::to_string(g) + ": " + r.message);
	}
	if (out.pass)
		out.detail << "symplectic mod degree 5 for genus 1, 2, 3, 5";
}

// 2
void constructor(const SuiteOptions&, Outcome& out)
{
	const auto r = verify_symplectic(construct_symplectic(2, 6), 6);
	if (!r.ok())
		out.fail(r.message);
	else
		out.detail << "genus 2: " << r.message;
}

// 3
void bch_oracle(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 3);
	for (int i = 0; i < 20; ++i)
	{
		const int g = 1 + i % 2;
		const int n = 3 + i % 4;
		const LieSeries x = random_lie(g, n, 1, rng), y = random_lie(g, n, 1, rng);
		const LieSeries viaTensor = project_lie(log(mul(exp(embed_lie(x)), exp(embed_lie(y)))));
		if (bch(x, y) != viaTensor)
			out.fail("pair " + std::to_string(i) + " differs: x = " + x.to_string() + ", y = " + y.to_string());
	}
	if (out.pass)
		out.detail << "20 pairs, genus <= 2, N <= 6";
}

// 4
void fission_boundary(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 4);
	for (int i = 0; i < 50; ++i)
	{
		const int g = 1 + i % 2;
		const int d = 1 + static_cast<int>(rng() % 5);
		const TreeDiagram t = random_tree(g, d, rng);
		if (boundary(fission(t, d + 1)) != leaf_wedge_sum(t, d + 1))
			out.fail("tree " + t.to_string());
	}
	if (out.pass)
		out.detail << "50 trees, degree <= 5, genus <= 2";
}

// 5
void ihx(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 5);
	const int g = 2, k = 3;
	for (int i = 0; i < 20; ++i)
	{
		std::string c[4];
		std::vector<LieSeries> gens;
		for (auto& s : c)
		{
			const auto l = static_cast<Letter>(rng() % (2 * g));
			s = to_string(gen_name(l));
			gens.push_back(LieSeries::generator(g, k, l));
		}
		auto tree = [&](int x, int y, int z, int w) {
			return TreeDiagram::parse("((" + c[x] + " " + c[y] + ") " + c[z] + " " + c[w] + ")", g);
		};
		const WedgeChain lhs = fission(tree(0, 2, 1, 3), k) - fission(tree(0, 1, 2, 3), k) - fission(tree(0, 3, 1, 2), k);
		if (lhs != boundary(WedgeChain::wedge(gens)))
			out.fail("colors " + c[0] + " " + c[1] + " " + c[2] + " " + c[3]);
	}
	if (out.pass)
		out.detail << "20 color tuples";
}

// 6
void fission_dims(const SuiteOptions&, Outcome& out)
{
	std::ostringstream summary;
	for (auto [g, k] : kAllCases)
	{
		long oracle = 0;
		for (int d = k + 2; d <= 2 * k + 1; ++d)
			oracle += static_cast<long>(2 * g * witt_dim(2 * g, d - 1)) - static_cast<long>(witt_dim(2 * g, d));
		std::size_t h3 = 0;
		for (const auto& [d, dim] : homology_dims(g, k, 3))
			h3 += dim;
		const PhiRankReport r = phi_rank(g, k);
		if (static_cast<long>(h3) != oracle || r.rank != h3 || r.tree_dim != h3)
			out.fail(context(g, k) + ": dim H3 " + std::to_string(h3) + ", oracle " + std::to_string(oracle) +
			         ", Phi rank " + std::to_string(r.rank) + ", trees " + std::to_string(r.tree_dim));
		summary << (summary.tellp() > 0 ? ", " : "") << context(g, k) << " -> " << h3;
	}
	if (out.pass)
		out.detail << "dim H3 = rank Phi: " << summary.str();
}

// 7
void homomorphism(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 7);
	for (auto [g, k] : {std::pair{1, 1}, std::pair{2, 2}})
		for (int i = 0; i < 20; ++i)
		{
			const auto p = random_ic_element(g, k, rng(), 2 * k + 1);
			const auto q = random_ic_element(g, k, rng(), 2 * k + 1);
			const auto pq = compose(p, q);
			if (pq.deviation_degree() < k + 1)
				out.fail(context(g, k) + " pair " + std::to_string(i) + ": product left IC[k]");
			else if (tau_truncated(pq, k) != tau_truncated(p, k) + tau_truncated(q, k))
				out.fail(context(g, k) + " pair " + std::to_string(i) + ": tau not additive");
			else if (morita_mk(pq, k) != morita_mk(p, k) + morita_mk(q, k))
				out.fail(context(g, k) + " pair " + std::to_string(i) + ": m_k not additive");
		}
	if (out.pass)
		out.detail << "20 pairs each at (genus 1, k 1) and (genus 2, k 2)";
}

// 8
void morita_vs_fission(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 8);
	int nonzero = 0;
	for (auto [g, k] : kAllCases)
		for (int i = 0; i < 10; ++i)
		{
			const auto psi = random_ic_element(g, k, rng(), 2 * k + 1);
			const HomologyClass m = morita_mk(psi, k);
			if (-m != capital_phi(tau_to_trees(psi, k), k))
				out.fail(context(g, k) + " element " + std::to_string(i));
			nonzero += m.is_zero() ? 0 : 1;
		}
	if (out.pass)
		out.detail << "-m_k = Phi(eta^-1 tau) for 10 elements at each of 4 (genus, k), " << nonzero
		           << " nonzero classes";
}

// 9
void kernel(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 9);
	int in_kernel = 0;
	// T_1 vanishes in genus 1, so genus 1 uses k = 2 only
	const std::pair<int, int> cases[] = {{1, 2}, {2, 1}, {2, 2}};
	for (int i = 0; i < 20; ++i)
	{
		const auto [g, k] = cases[i % 3];
		const int n = 2 * k + 1;
		TreeCombo c(g);
		if (i % 2 == 0)
		{
			TreeDiagram t = random_tree(g, k, rng);
			while (eta(t).is_zero())
				t = random_tree(g, k, rng);
			c.add(t, make_rational(1 + static_cast<long>(rng() % 3), 1));
		}
		c.add(random_tree(g, 2 * k, rng), make_rational(1 + static_cast<long>(rng() % 3), 2));
		const auto psi = exp_der(tree_derivation(c, n));
		const KernelReport r = kernel_check(psi, k);
		if (!r.agree())
			out.fail("case " + std::to_string(i) + " " + context(g, k) + ": tau vanishes " +
			         (r.tau_vanishes ? "yes" : "no") + ", trivial mod 2k+1 " + (r.trivial_mod_2k ? "yes" : "no"));
		in_kernel += r.tau_vanishes ? 1 : 0;
	}
	if (out.pass)
		out.detail << "20 cases agree (" << in_kernel << " in the kernel)";
}

// 10
void exp_log(const SuiteOptions& opts, Outcome& out)
{
	std::mt19937_64 rng(opts.seed * 1009 + 10);
	for (int i = 0; i < 20; ++i)
	{
		const int g = 1 + i % 2;
		const int n = 3 + i % 4;
		const Derivation delta = random_derivation(g, n, rng);
		if (log_aut(exp_der(delta)) != delta)
			out.fail("derivation " + std::to_string(i) + ": log(exp) differs");
		const LieAutomorphism psi = random_automorphism(g, n, rng);
		if (exp_der(log_aut(psi)) != psi)
			out.fail("automorphism " + std::to_string(i) + ": exp(log) differs");
		const LieSeries x = random_lie(g, n, 1, rng), y = random_lie(g, n, 1, rng);
		const LieSeries lhs = log_series_apply(psi, bracket(x, y));
		const LieSeries rhs = bracket(log_series_apply(psi, x), y) + bracket(x, log_series_apply(psi, y));
		if (lhs != rhs)
			out.fail("automorphism " + std::to_string(i) + ": log is not a derivation");
	}
	if (out.pass)
		out.detail << "20 derivations and 20 automorphisms, N <= 6";
}

struct Criterion
{
	const char* name;
	void (*run)(const SuiteOptions&, Outcome&);
};

const Criterion kCriteria[] = {
    {"known example is symplectic", known_example},
    {"constructed expansion is symplectic (genus 2, N 6)", constructor},
    {"bch matches the tensor route", bch_oracle},
    {"boundary of fission is the leaf sum", fission_boundary},
    {"fission of IHX is a boundary", ihx},
    {"H3 dimensions and Phi rank", fission_dims},
    {"tau and m_k are additive", homomorphism},
    {"-m_k equals Phi of eta^-1 tau", morita_vs_fission},
    {"kernel of tau is IC[2k]", kernel},
    {"exp and log of derivations", exp_log},
};

} // namespace

int criterion_count()
{
	return static_cast<int>(std::size(kCriteria));
}

CriterionResult run_criterion(int id, const SuiteOptions& opts)
{
	if (id < 1 || id > criterion_count())
		throw std::out_of_range("no criterion " + std::to_string(id));
	const Criterion& c = kCriteria[id - 1];
	CriterionResult r;
	r.id = id;
	r.name = c.name;
	const auto start = std::chrono::steady_clock::now();
	Outcome out;
	try
	{
		c.run(opts, out);
	}
	catch (const std::exception& e)
	{
		out.fail(std::string("exception: ") + e.what());
	}
	r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	r.pass = out.pass;
	r.detail = out.detail.str();
	return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts, const std::function<void(const CriterionResult&)>& on_result)
{
	std::vector<CriterionResult> results;
	for (int id = 1; id <= criterion_count(); ++id)
	{
		results.push_back(run_criterion(id, opts));
		if (on_result)
			on_result(results.back());
	}
	return results;
}

} // namespace treelie
