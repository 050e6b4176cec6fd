#include "treelie/jacobi.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

LieSeries gen(int g, int n, const char* name)
{
	return LieSeries::generator(g, n, parse_gen_name(name));
}

TreeCombo combo(int g, std::initializer_list<std::pair<const char*, long>> terms)
{
	TreeCombo c(g);
	for (const auto& [text, coef] : terms)
		c.add(std::string(text), Rational(coef));
	return c;
}

} // namespace

TEST(Tree, ParseAndWrite)
{
	auto t = TreeDiagram::parse("(a1 b1 (a2 b2))", 2);
	EXPECT_EQ(t.degree(), 2);
	EXPECT_EQ(t.leaves().size(), 4u);
	EXPECT_EQ(t.to_string(), "(a1 b1 (a2 b2))");
	auto s = TreeDiagram::parse("(a1 b2)", 2);
	EXPECT_EQ(s.degree(), 0);
	EXPECT_EQ(s.to_string(), "(a1 b2)");
	// pair with an internal child is the same tree as a triple
	EXPECT_EQ(TreeDiagram::parse("((a1 b1) a2)", 2).canonical().key, TreeDiagram::parse("(a1 b1 a2)", 2).canonical().key);
}

TEST(Tree, ParseErrors)
{
	EXPECT_THROW(TreeDiagram::parse("(a1 b1", 1), std::invalid_argument);
	EXPECT_THROW(TreeDiagram::parse("(a1 b1 a2)", 1), std::invalid_argument);
	EXPECT_THROW(TreeDiagram::parse("(a1 (b1 a1 b1) a1)", 1), std::invalid_argument);
	EXPECT_THROW(TreeDiagram::parse("a1", 1), std::invalid_argument);
	EXPECT_THROW(TreeDiagram::parse("(a1 b1 a1 b1)", 1), std::invalid_argument);
	EXPECT_THROW(TreeDiagram::parse("(a1 b1 a1) x", 1), std::invalid_argument);
}

TEST(Tree, CanonicalIsRootIndependent)
{
	// same tree written from different leaves
	auto x = TreeDiagram::parse("(a1 b1 (a2 b2))", 2).canonical();
	auto y = TreeDiagram::parse("(a2 b2 (a1 b1))", 2).canonical();
	auto z = TreeDiagram::parse("(b2 (a1 b1) a2)", 2).canonical();
	EXPECT_EQ(x.key, y.key);
	EXPECT_EQ(x.key, z.key);
	EXPECT_EQ(x.sign, y.sign);
	EXPECT_EQ(x.sign, z.sign);
	// a flip negates
	auto f = TreeDiagram::parse("(a1 (a2 b2) b1)", 2).canonical();
	EXPECT_EQ(f.key, x.key);
	EXPECT_EQ(f.sign, -x.sign);
}

TEST(Tree, SymmetricTreesVanish)
{
	EXPECT_EQ(TreeDiagram::parse("(a1 a1 b1)", 1).canonical().sign, 0);
	EXPECT_EQ(TreeDiagram::parse("(b1 (a1 a1) b1)", 1).canonical().sign, 0);
	// swapping the two equal branches is a rotation plus a flip
	EXPECT_EQ(TreeDiagram::parse("((a1 b1) (a1 b1) a1)", 1).canonical().sign, 0);
	EXPECT_NE(TreeDiagram::parse("(a1 b1 (a1 b1))", 1).canonical().sign, 0);
}

TEST(Tree, CanonicalAgreesWithEta)
{
	std::mt19937_64 rng(7);
	for (int i = 0; i < 40; ++i)
	{
		const int g = 1 + static_cast<int>(i % 2);
		const auto t = random_tree(g, 1 + i % 4, rng);
		const auto c = t.canonical();
		const auto e = eta(t);
		if (c.sign == 0)
			EXPECT_TRUE(e.is_zero()) << t.to_string();
		else
			EXPECT_EQ(eta(TreeDiagram::parse(c.key, g)) * Rational(c.sign), e) << t.to_string();
		EXPECT_EQ(TreeDiagram::parse(t.to_string(), g).canonical().key, c.key);
	}
}

TEST(Comm, Caterpillar)
{
	// root a1; g1..g4 = b1 a2 b2 a3
	auto t = TreeDiagram::parse("(a1 b1 ((a2 b2) a3))", 3);
	const int root = t.leaves().front();
	const int n = 4;
	auto expected = bracket(gen(3, n, "b1"), bracket(bracket(gen(3, n, "a2"), gen(3, n, "b2")), gen(3, n, "a3")));
	EXPECT_EQ(t.comm(root, n), expected);
	EXPECT_THROW(t.comm(0, n), std::invalid_argument);
}

TEST(Comm, StrutAndY)
{
	auto s = TreeDiagram::parse("(a1 b1)", 1);
	EXPECT_EQ(s.comm(0, 2), gen(1, 2, "b1"));
	auto y = TreeDiagram::parse("(a1 b1 a2)", 2);
	EXPECT_EQ(y.comm(y.leaves().front(), 2), bracket(gen(2, 2, "b1"), gen(2, 2, "a2")));
}

TEST(Fission, DisplayedExample)
{
	// g1..g5 = a1 b1 a2 b2 a3
	const int k = 3;
	auto g = [&](const char* n) { return gen(3, k, n); };
	auto t = TreeDiagram::parse("((a1 b1) a2 (b2 a3))", 3);
	auto expected = WedgeChain::wedge({g("a1"), g("b1"), bracket(g("a2"), bracket(g("b2"), g("a3")))}) +
	                WedgeChain::wedge({g("a2"), bracket(g("b2"), g("a3")), bracket(g("a1"), g("b1"))}) +
	                WedgeChain::wedge({g("a3"), bracket(bracket(g("a1"), g("b1")), g("a2")), g("b2")});
	EXPECT_EQ(fission(t, k), expected);
	EXPECT_THROW(fission(TreeDiagram::parse("(a1 b1)", 1), 2), std::invalid_argument);
}

TEST(Fission, AntisymmetryVanishes)
{
	std::mt19937_64 rng(3);
	for (int i = 0; i < 20; ++i)
	{
		auto t = random_tree(2, 1 + i % 4, rng);
		for (int v = 0; v < static_cast<int>(t.vertices().size()); ++v)
		{
			if (t.vertices()[static_cast<std::size_t>(v)].leaf)
				continue;
			auto f = t.flipped(v);
			EXPECT_TRUE((fission(t, 4) + fission(f, 4)).is_zero());
			EXPECT_TRUE((eta(t) + eta(f)).is_zero());
			TreeCombo c(2);
			c.add(t, 1);
			c.add(f, 1);
			EXPECT_TRUE(c.is_zero());
		}
	}
}

TEST(Fission, IhxIsBoundary)
{
	std::mt19937_64 rng(11);
	const std::vector<std::string> names{"a1", "b1", "a2", "b2"};
	for (int i = 0; i < 20; ++i)
	{
		std::string c[4];
		for (auto& s : c)
			s = names[rng() % 4];
		const int k = 3;
		auto I = TreeDiagram::parse("((" + c[0] + " " + c[1] + ") " + c[2] + " " + c[3] + ")", 2);
		auto H = TreeDiagram::parse("((" + c[0] + " " + c[2] + ") " + c[1] + " " + c[3] + ")", 2);
		auto X = TreeDiagram::parse("((" + c[0] + " " + c[3] + ") " + c[1] + " " + c[2] + ")", 2);
		auto lhs = fission(H, k) - fission(I, k) - fission(X, k);
		std::vector<LieSeries> f;
		for (const auto& s : c)
			f.push_back(gen(2, k, s.c_str()));
		EXPECT_EQ(lhs, boundary(WedgeChain::wedge(f))) << c[0] << c[1] << c[2] << c[3];
	}
}

TEST(Fission, BoundaryIsLeafSum)
{
	std::mt19937_64 rng(5);
	for (int i = 0; i < 30; ++i)
	{
		const int g = 1 + i % 2;
		const int d = 1 + i % 5;
		auto t = random_tree(g, d, rng);
		const int k = d + 1;
		EXPECT_EQ(boundary(fission(t, k)), leaf_wedge_sum(t, k)) << t.to_string();
	}
}

TEST(Fission, Multilinear)
{
	SparseQ<Letter> x{{0, Rational(2)}, {1, Rational(-1)}};
	SparseQ<Letter> y{{1, Rational(1)}, {3, Rational(1, 3)}};
	SparseQ<Letter> z{{2, Rational(1)}};
	auto c = multilinear_tree("(0 1 (2 3))", {x, y, z, x}, 2);
	WedgeChain expanded(2, 3, 3);
	for (const auto& [l0, c0] : x)
		for (const auto& [l1, c1] : y)
			for (const auto& [l3, c3] : x)
			{
				auto t = TreeDiagram::parse("(" + to_string(gen_name(l0)) + " " + to_string(gen_name(l1)) + " (a2 " +
				                                to_string(gen_name(l3)) + "))",
				                            2);
				expanded += fission(t, 3) * Rational(c0 * c1 * c3);
			}
	EXPECT_EQ(fission(c, 3), expanded);
	EXPECT_THROW(multilinear_tree("(0 0 1)", {x, y}, 2), std::invalid_argument);
}

TEST(Eta, YDiagram)
{
	auto t = TreeDiagram::parse("(a1 b1 a2)", 2);
	HLieTensor e(2);
	auto x = gen(2, 2, "a1"), y = gen(2, 2, "b1"), z = gen(2, 2, "a2");
	e.add(0, bracket(y, z));
	e.add(1, bracket(z, x));
	e.add(2, bracket(x, y));
	EXPECT_EQ(eta(t), e);
	EXPECT_TRUE(e.bracket_contraction().is_zero());
	auto back = eta_inverse(e, 1);
	EXPECT_TRUE(tree_equal(back, TreeCombo::single(t)));
}

TEST(Eta, KernelOfBracket)
{
	std::mt19937_64 rng(9);
	for (int i = 0; i < 20; ++i)
	{
		auto t = random_tree(2, 1 + i % 5, rng);
		EXPECT_TRUE(eta(t).bracket_contraction().is_zero()) << t.to_string();
	}
}

TEST(Eta, IhxEquality)
{
	auto I = combo(2, {{"((a1 b1) a2 b2)", 1}});
	auto HX = combo(2, {{"((a1 a2) b1 b2)", 1}, {"((a1 b2) b1 a2)", -1}});
	EXPECT_NE(I, HX);
	EXPECT_TRUE(tree_equal(I, HX));
	EXPECT_FALSE(tree_equal(I, HX * Rational(2)));
}

TEST(Eta, SpaceDimensions)
{
	EXPECT_EQ(tree_space_dim(1, 1), 0u);
	EXPECT_EQ(tree_space_dim(1, 2), 1u);
	EXPECT_EQ(tree_space_dim(1, 3), 0u);
	EXPECT_EQ(tree_space_dim(2, 1), 4u);
	EXPECT_EQ(tree_space_dim(2, 2), 20u);
	EXPECT_EQ(tree_space_dim(2, 3), 36u);
	for (int g = 1; g <= 2; ++g)
		for (int d = 1; d <= 3; ++d)
		{
			const auto dim = static_cast<long>(2 * g * witt_dim(2 * g, d + 1)) - static_cast<long>(witt_dim(2 * g, d + 2));
			EXPECT_EQ(static_cast<long>(tree_space_dim(g, d)), dim);
			EXPECT_EQ(tree_basis(g, d).size(), tree_space_dim(g, d));
		}
}

TEST(Eta, InverseRoundTrip)
{
	std::mt19937_64 rng(13);
	for (int i = 0; i < 15; ++i)
	{
		const int g = 1 + i % 2;
		const int d = 1 + i % 3;
		TreeCombo c(g);
		c.add(random_tree(g, d, rng), 1);
		c.add(random_tree(g, d, rng), make_rational(-2, 3));
		auto back = eta_inverse(eta(c), d);
		EXPECT_TRUE(tree_equal(back, c)) << c << " vs " << back;
	}
	EXPECT_TRUE(eta_inverse(HLieTensor(2), 2).is_zero());
}

TEST(Eta, InverseRejectsNonKernel)
{
	HLieTensor x(1);
	x.add(0, bracket(gen(1, 2, "a1"), gen(1, 2, "b1")));
	EXPECT_THROW(eta_inverse(x, 1), std::domain_error);
	HLieTensor y(1);
	y.add(0, gen(1, 2, "b1"));
	y.add(1, gen(1, 2, "a1"));
	// a strut image has Lie degree 1, not d + 1 = 2
	EXPECT_THROW(eta_inverse(y, 1), std::domain_error);
}

TEST(RandomTree, Deterministic)
{
	std::mt19937_64 r1(42), r2(42);
	for (int d = 0; d <= 5; ++d)
	{
		auto a = random_tree(2, d, r1);
		auto b = random_tree(2, d, r2);
		EXPECT_EQ(a.to_string(), b.to_string());
		EXPECT_EQ(a.degree(), d);
		EXPECT_EQ(a.leaves().size(), static_cast<std::size_t>(d + 2));
	}
}
