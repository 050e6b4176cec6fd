#include "treelie/johnson.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

TreeCombo one_tree(int g, const char* text)
{
	TreeCombo c(g);
	c.add(std::string(text), Rational(1));
	return c;
}

} // namespace

TEST(Duality, DerivationOfEtaKillsOmega)
{
	std::mt19937_64 rng(2);
	for (int i = 0; i < 10; ++i)
	{
		auto t = random_tree(2, 1 + i % 3, rng);
		auto delta = tree_derivation(TreeCombo::single(t), 5);
		EXPECT_TRUE(apply_der(delta, omega(2, 5)).is_zero());
		EXPECT_EQ(to_tensor(delta, 5), eta(t));
	}
}

TEST(Duality, ContractionIsValueOnOmega)
{
	HLieTensor x(1);
	auto a = LieSeries::generator(1, 3, Letter{0});
	auto b = LieSeries::generator(1, 3, Letter{1});
	x.add(0, bracket(a, b));
	x.add(1, bracket(bracket(a, b), b), Rational(3));
	auto delta = to_derivation(x, 3);
	EXPECT_EQ(apply_der(delta, omega(1, 3)), x.bracket_contraction().truncated(3));
}

TEST(Tau, Identity)
{
	auto id = LieAutomorphism::identity(2, 4);
	EXPECT_TRUE(tau_truncated(id, 2).is_zero());
	EXPECT_TRUE(johnson_k(id, 2).is_zero());
	EXPECT_TRUE(tau_to_trees(id, 2).is_zero());
	EXPECT_TRUE(morita_mk(id, 2).is_zero());
	EXPECT_TRUE(kernel_check(id, 2).tau_vanishes);
	EXPECT_TRUE(kernel_check(id, 2).trivial_mod_2k);
}

TEST(Tau, Preconditions)
{
	auto psi = exp_der(tree_derivation(one_tree(2, "(a1 b1 a2)"), 4));
	EXPECT_THROW(tau_truncated(psi, 2), std::domain_error);
	EXPECT_THROW(tau_truncated(psi, 3), std::invalid_argument);
	EXPECT_NO_THROW(tau_truncated(psi, 1));
}

TEST(Tau, SingleTree)
{
	for (int k = 1; k <= 2; ++k)
	{
		std::mt19937_64 rng(static_cast<std::uint64_t>(k));
		auto t = random_tree(2, k, rng);
		auto psi = exp_der(tree_derivation(TreeCombo::single(t), 2 * k));
		EXPECT_TRUE(is_omega_fixing(psi));
		EXPECT_EQ(tau_truncated(psi, k), eta(t));
		EXPECT_EQ(johnson_k(psi, k), eta(t));
		EXPECT_TRUE(tau_bracket_check(psi, k));
		EXPECT_TRUE(tree_equal(tau_to_trees(psi, k), TreeCombo::single(t)));
	}
}

TEST(Tau, Additive)
{
	for (auto [g, k] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{1, 2}})
		for (std::uint64_t s = 0; s < 4; ++s)
		{
			auto p = random_ic_element(g, k, 100 + s, 2 * k);
			auto q = random_ic_element(g, k, 200 + s, 2 * k);
			auto pq = compose(p, q);
			EXPECT_EQ(tau_truncated(pq, k), tau_truncated(p, k) + tau_truncated(q, k));
			EXPECT_EQ(morita_mk(pq, k), morita_mk(p, k) + morita_mk(q, k));
		}
}

TEST(Tau, MoritaMatchesFission)
{
	for (auto [g, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}})
		for (std::uint64_t s = 0; s < 3; ++s)
		{
			auto psi = random_ic_element(g, k, s, 2 * k);
			EXPECT_TRUE(tau_bracket_check(psi, k));
			EXPECT_EQ(-morita_mk(psi, k), capital_phi(tau_to_trees(psi, k), k)) << g << " " << k << " " << s;
		}
}

TEST(Tau, LowestTreesGiveJohnson)
{
	auto psi = random_ic_element(2, 2, 17, 4);
	auto trees = tau_to_trees(psi, 2);
	TreeCombo low(2);
	for (const auto& [key, c] : trees.terms())
		if (TreeDiagram::parse(key, 2).degree() == 2)
			low.add(key, c);
	EXPECT_EQ(eta(low), johnson_k(psi, 2));
}

TEST(Kernel, DegreeTwoK)
{
	std::mt19937_64 rng(21);
	for (int k = 1; k <= 2; ++k)
	{
		auto deep = exp_der(tree_derivation(TreeCombo::single(random_tree(2, 2 * k, rng)), 2 * k + 1));
		auto r = kernel_check(deep, k);
		EXPECT_TRUE(r.tau_vanishes);
		EXPECT_TRUE(r.trivial_mod_2k);
		auto shallow = exp_der(tree_derivation(one_tree(2, k == 1 ? "(a1 b1 a2)" : "(a1 b1 (a2 b2))"), 2 * k + 1));
		r = kernel_check(shallow, k);
		EXPECT_FALSE(r.tau_vanishes);
		EXPECT_FALSE(r.trivial_mod_2k);
	}
}

TEST(RandomIc, Properties)
{
	auto a = random_ic_element(2, 2, 5, 5);
	auto b = random_ic_element(2, 2, 5, 5);
	EXPECT_EQ(a, b);
	EXPECT_TRUE(is_omega_fixing(a));
	EXPECT_GE(a.deviation_degree(), 3);
	EXPECT_THROW(random_ic_element(2, 3, 5, 5), std::invalid_argument);
}
