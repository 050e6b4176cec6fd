#include "treelie/jacobi.hpp"
#include "treelie/koszul.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

LieSeries gen(int g, int n, const char* name)
{
	return LieSeries::generator(g, n, parse_gen_name(name));
}

WedgeChain random_chain(int g, int k, int arity, std::mt19937_64& rng)
{
	WedgeChain c(g, k, arity);
	auto t = LyndonTable::get(g, k);
	const LyndonId total = t->end_of_degree(k);
	for (int i = 0; i < 6; ++i)
	{
		std::vector<LyndonId> ids;
		for (int j = 0; j < arity; ++j)
			ids.push_back(static_cast<LyndonId>(rng() % total));
		c.add_monomial(ids, make_rational(static_cast<long>(rng() % 5) - 2, 1));
	}
	return c;
}

} // namespace

TEST(Wedge, SortsWithSign)
{
	auto a = gen(1, 2, "a1"), b = gen(1, 2, "b1");
	EXPECT_EQ(WedgeChain::wedge({a, b}), -WedgeChain::wedge({b, a}));
	EXPECT_TRUE(WedgeChain::wedge({a, a}).is_zero());
	// factors above the class are dropped
	auto c = WedgeChain::wedge({gen(1, 1, "a1"), gen(1, 1, "b1")});
	EXPECT_EQ(c.nil_class(), 1);
	EXPECT_FALSE(c.is_zero());
}

TEST(Boundary, TwoChain)
{
	auto a = gen(1, 2, "a1"), b = gen(1, 2, "b1");
	WedgeChain expected(1, 2, 1);
	expected += WedgeChain::wedge({-bracket(a, b)});
	EXPECT_EQ(boundary(WedgeChain::wedge({a, b})), expected);
	// in the abelian quotient the bracket dies
	EXPECT_TRUE(boundary(WedgeChain::wedge({gen(1, 1, "a1"), gen(1, 1, "b1")})).is_zero());
}

TEST(Boundary, SquaresToZero)
{
	std::mt19937_64 rng(1);
	for (int g = 1; g <= 2; ++g)
		for (int k = 1; k <= 3; ++k)
			for (int n = 2; n <= 4; ++n)
			{
				auto c = random_chain(g, k, n, rng);
				EXPECT_TRUE(boundary(boundary(c)).is_zero());
			}
}

TEST(Boundary, MatrixMatchesChains)
{
	const auto& src = chain_basis(2, 2, 3, 4);
	const auto& dst = chain_basis(2, 2, 2, 4);
	auto m = boundary_matrix(2, 2, 3, 4);
	ASSERT_EQ(m.cols(), src.size());
	ASSERT_EQ(m.rows(), dst.size());
	for (std::size_t j = 0; j < src.size(); j += 7)
	{
		WedgeChain c(2, 2, 3);
		c.add_monomial(src[j], 1);
		auto b = boundary(c);
		for (std::size_t i = 0; i < dst.size(); ++i)
		{
			auto it = b.terms().find(dst[i]);
			EXPECT_EQ(m.at(i, j), it == b.terms().end() ? Rational(0) : it->second);
		}
	}
}

TEST(Homology, LowDimensions)
{
	// H_1 is H in degree 1
	EXPECT_EQ(homology_dims(2, 3, 1), (std::map<int, std::size_t>{{1, 4}}));
	// abelian case: H_n = Λ^n H
	EXPECT_EQ(homology_dims(2, 1, 2), (std::map<int, std::size_t>{{2, 6}}));
	EXPECT_EQ(homology_dims(2, 1, 3), (std::map<int, std::size_t>{{3, 4}}));
	EXPECT_EQ(homology_dims(1, 2, 3), (std::map<int, std::size_t>{{4, 1}}));
}

TEST(Homology, ThirdHomologyMatchesTrees)
{
	const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
	const std::size_t totals[] = {0, 1, 4, 56};
	for (std::size_t i = 0; i < 4; ++i)
	{
		auto [g, k] = cases[i];
		std::size_t total = 0;
		for (const auto& [d, dim] : homology_dims(g, k, 3))
		{
			EXPECT_GE(d, k + 2);
			EXPECT_LE(d, 2 * k + 1);
			total += dim;
		}
		EXPECT_EQ(total, totals[i]);
	}
}

TEST(Classes, BoundariesAreZero)
{
	std::mt19937_64 rng(4);
	for (int i = 0; i < 5; ++i)
	{
		auto c = random_chain(2, 2, 4, rng);
		EXPECT_TRUE(class_of(boundary(c)).is_zero());
	}
	EXPECT_THROW(class_of(WedgeChain::wedge({gen(2, 2, "a1"), gen(2, 2, "b1"), gen(2, 2, "a2")})),
	             std::domain_error);
}

TEST(Classes, PhiRespectsIhx)
{
	auto lhs = TreeCombo(2);
	lhs.add(std::string("((a1 b1) a2 b2)"), 1);
	auto rhs = TreeCombo(2);
	rhs.add(std::string("((a1 a2) b1 b2)"), 1);
	rhs.add(std::string("((a1 b2) b1 a2)"), -1);
	EXPECT_EQ(capital_phi(lhs, 2), capital_phi(rhs, 2));
	EXPECT_FALSE(capital_phi(lhs, 2).is_zero());
}

TEST(Classes, PhiDegreeRange)
{
	TreeCombo low(2);
	low.add(std::string("(a1 b1 a2)"), 1);
	EXPECT_THROW(capital_phi(low, 2), std::domain_error);
	// degree >= 2k goes to zero
	std::mt19937_64 rng(8);
	for (int i = 0; i < 5; ++i)
		EXPECT_TRUE(capital_phi(TreeCombo::single(random_tree(2, 4, rng)), 2).is_zero());
}

TEST(Classes, PhiFullRank)
{
	const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
	for (auto [g, k] : cases)
	{
		auto r = phi_rank(g, k);
		EXPECT_EQ(r.rank, r.h3_dim) << g << " " << k;
		EXPECT_EQ(r.tree_dim, r.h3_dim) << g << " " << k;
	}
}
