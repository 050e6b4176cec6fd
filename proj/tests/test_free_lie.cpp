#include "treelie/free_lie.hpp"
#include "treelie/tensor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

LieSeries gen(int g, int n, const char* name)
{
	return LieSeries::generator(g, n, parse_gen_name(name));
}

LieSeries random_lie(int g, int n, std::mt19937_64& rng, int terms = 4)
{
	LieSeries x(g, n);
	auto t = x.table();
	const LyndonId total = t->end_of_degree(n);
	for (int i = 0; i < terms; ++i)
	{
		LyndonId id = static_cast<LyndonId>(rng() % total);
		x.add_term(id, make_rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
	}
	return x;
}

} // namespace

TEST(Lyndon, SmallBases)
{
	auto b1 = lyndon_basis(1, 1);
	ASSERT_EQ(b1.size(), 2u);
	EXPECT_EQ(b1[0].bracketing, "a1");
	EXPECT_EQ(b1[1].bracketing, "b1");
	auto b2 = lyndon_basis(1, 2);
	ASSERT_EQ(b2.size(), 1u);
	EXPECT_EQ(b2[0].bracketing, "[a1,b1]");
	auto b3 = lyndon_basis(1, 3);
	ASSERT_EQ(b3.size(), 2u);
	EXPECT_EQ(b3[0].bracketing, "[a1,[a1,b1]]");
	EXPECT_EQ(b3[1].bracketing, "[[a1,b1],b1]");
}

TEST(Lyndon, WittMatchesEnumeration)
{
	EXPECT_EQ(witt_dim(5, 1), 5u);
	EXPECT_EQ(witt_dim(2, 2), 1u);
	EXPECT_EQ(witt_dim(4, 3), 20u);
	for (int g = 1; g <= 3; ++g)
		for (int d = 1; d <= 7; ++d)
			EXPECT_EQ(lyndon_basis(g, d).size(), witt_dim(2 * g, d)) << g << " " << d;
}

TEST(Lyndon, WordsAreLyndon)
{
	for (const auto& e : lyndon_basis(2, 5))
		EXPECT_TRUE(is_lyndon(e.word));
	EXPECT_FALSE(is_lyndon(Word{1, 0}));
	EXPECT_FALSE(is_lyndon(Word{0, 0}));
}

TEST(Bracket, Basics)
{
	auto a = gen(1, 4, "a1");
	auto b = gen(1, 4, "b1");
	EXPECT_TRUE(bracket(a, a).is_zero());
	EXPECT_EQ(bracket(b, a), -bracket(a, b));
	EXPECT_EQ(bracket(a, b).to_string(), "[a1,b1]");
}

TEST(Bracket, MatchesTensorOracle)
{
	auto a = gen(1, 5, "a1");
	auto b = gen(1, 5, "b1");
	auto x = bracket(a, bracket(b, bracket(a, b)));
	auto ta = embed_lie(a), tb = embed_lie(b);
	auto comm = [](const TensorSeries& u, const TensorSeries& v) { return mul(u, v) - mul(v, u); };
	EXPECT_EQ(embed_lie(x), comm(ta, comm(tb, comm(ta, tb))));
}

TEST(Bracket, ContextMismatchThrows)
{
	EXPECT_THROW(bracket(gen(1, 4, "a1"), gen(1, 5, "b1")), std::invalid_argument);
	EXPECT_THROW(bracket(gen(1, 4, "a1"), gen(2, 4, "b1")), std::invalid_argument);
}

TEST(Bracket, JacobiAndGrading)
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 10; ++trial)
	{
		auto x = random_lie(2, 6, rng), y = random_lie(2, 6, rng), z = random_lie(2, 6, rng);
		auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
		EXPECT_TRUE(j.is_zero());
		EXPECT_EQ(embed_lie(bracket(x, y)), mul(embed_lie(x), embed_lie(y)) - mul(embed_lie(y), embed_lie(x)));
	}
	auto p = LieSeries::basis(2, 6, lyndon_basis(2, 2)[3].id);
	auto q = LieSeries::basis(2, 6, lyndon_basis(2, 3)[5].id);
	auto r = bracket(p, q);
	EXPECT_EQ(r.lowest_degree(), 5);
	EXPECT_EQ(r.highest_degree(), 5);
	EXPECT_TRUE(bracket(q, LieSeries::basis(2, 6, lyndon_basis(2, 4)[0].id)).is_zero());
}

TEST(Bch, TrivialCases)
{
	std::mt19937_64 rng(3);
	auto x = random_lie(2, 5, rng);
	EXPECT_EQ(bch(x, LieSeries(2, 5)), x);
	EXPECT_TRUE(bch(x, -x).is_zero());
}

TEST(Bch, LowDegree)
{
	auto x = gen(1, 2, "a1"), y = gen(1, 2, "b1");
	EXPECT_EQ(bch(x, y), x + y + bracket(x, y) * Rational(1, 2));
}

TEST(Bch, MatchesTensorRoute)
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 6; ++trial)
	{
		int g = 1 + trial % 2;
		int n = 4 + trial % 3;
		auto x = random_lie(g, n, rng), y = random_lie(g, n, rng);
		auto oracle = project_lie(log(mul(exp(embed_lie(x)), exp(embed_lie(y)))));
		EXPECT_EQ(bch(x, y), oracle);
	}
}

TEST(Bch, Associative)
{
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 3; ++trial)
	{
		auto x = random_lie(2, 6, rng), y = random_lie(2, 6, rng), z = random_lie(2, 6, rng);
		EXPECT_EQ(bch(bch(x, y), z), bch(x, bch(y, z)));
	}
}

TEST(Bernoulli, Values)
{
	EXPECT_EQ(bernoulli(0), 1);
	EXPECT_EQ(bernoulli(1), Rational(-1, 2));
	EXPECT_EQ(bernoulli(2), Rational(1, 6));
	EXPECT_EQ(bernoulli(3), 0);
	EXPECT_EQ(bernoulli(4), Rational(-1, 30));
}
