#include "treelie/tensor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

TensorSeries gen(int g, int n, const char* name)
{
	return TensorSeries::generator(g, n, letter_of(parse_gen_name(name)));
}

TensorSeries random_tensor(int g, int n, std::mt19937_64& rng, int terms = 5)
{
	TensorSeries x(g, n);
	for (int i = 0; i < terms; ++i)
	{
		Word w(1 + rng() % static_cast<unsigned>(n));
		for (auto& l : w)
			l = static_cast<Letter>(rng() % static_cast<unsigned>(2 * g));
		x.add(w, make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2)));
	}
	return x;
}

FreeGroupWord random_word(int g, std::mt19937_64& rng, int len)
{
	std::vector<FreeGroupWord::Syllable> s;
	for (int i = 0; i < len; ++i)
		s.emplace_back(GenName{rng() % 2 ? 'a' : 'b', 1 + static_cast<int>(rng() % static_cast<unsigned>(g))},
		               rng() % 2 ? 1 : -1);
	return FreeGroupWord(s);
}

} // namespace

TEST(Tensor, Multiplication)
{
	auto one = TensorSeries::one(1, 3);
	auto a = gen(1, 3, "a1"), b = gen(1, 3, "b1");
	EXPECT_EQ(mul(one, a), a);
	EXPECT_NE(mul(a, b), mul(b, a));
	auto p = mul(exp(a), exp(b)).degree_part(2);
	TensorSeries expected(1, 3);
	expected.add({0, 0}, Rational(1, 2));
	expected.add({0, 1}, 1);
	expected.add({1, 1}, Rational(1, 2));
	EXPECT_EQ(p, expected);
}

TEST(Tensor, ExpLog)
{
	EXPECT_EQ(exp(TensorSeries(2, 4)), TensorSeries::one(2, 4));
	EXPECT_TRUE(log(TensorSeries::one(2, 4)).is_zero());
	auto a = gen(1, 4, "a1");
	auto l = log(TensorSeries::one(1, 4) + a);
	EXPECT_EQ(l.coeff({0}), 1);
	EXPECT_EQ(l.coeff({0, 0}), Rational(-1, 2));
	EXPECT_EQ(l.coeff({0, 0, 0}), Rational(1, 3));
	EXPECT_EQ(l.coeff({0, 0, 0, 0}), Rational(-1, 4));
	std::mt19937_64 rng(1);
	for (int n = 2; n <= 6; ++n)
	{
		auto x = random_tensor(2, n, rng);
		EXPECT_EQ(log(exp(x)), x);
	}
	EXPECT_THROW(exp(TensorSeries::one(1, 3)), std::invalid_argument);
	EXPECT_THROW(log(TensorSeries(1, 3)), std::invalid_argument);
}

TEST(Tensor, Inverse)
{
	std::mt19937_64 rng(2);
	auto x = TensorSeries::one(2, 5) + random_tensor(2, 5, rng);
	EXPECT_EQ(mul(x, inverse(x)), TensorSeries::one(2, 5));
	EXPECT_EQ(mul(inverse(x), x), TensorSeries::one(2, 5));
}

TEST(Tensor, GrouplikePrimitive)
{
	auto a = gen(1, 4, "a1"), b = gen(1, 4, "b1");
	EXPECT_TRUE(is_grouplike(exp(a)));
	EXPECT_TRUE(is_primitive(mul(a, b) - mul(b, a)));
	EXPECT_FALSE(is_primitive(mul(a, b)));
	EXPECT_FALSE(is_grouplike(TensorSeries::one(1, 2) + gen(1, 2, "a1")));
	EXPECT_EQ(grouplike_defect(TensorSeries::one(1, 2) + gen(1, 2, "a1")), 2);
	EXPECT_TRUE(is_grouplike(mul(exp(a), exp(b))));
}

TEST(Tensor, EmbedProject)
{
	auto la = LieSeries::generator(1, 3, parse_gen_name("a1"));
	auto lb = LieSeries::generator(1, 3, parse_gen_name("b1"));
	auto ta = gen(1, 3, "a1"), tb = gen(1, 3, "b1");
	EXPECT_EQ(embed_lie(bracket(la, lb)), mul(ta, tb) - mul(tb, ta));
	EXPECT_EQ(project_lie(mul(ta, tb) - mul(tb, ta)), bracket(la, lb));
	EXPECT_THROW(project_lie(mul(ta, tb)), std::invalid_argument);
	std::mt19937_64 rng(4);
	for (int trial = 0; trial < 5; ++trial)
	{
		LieSeries x(2, 5);
		auto t = x.table();
		for (int i = 0; i < 6; ++i)
			x.add_term(static_cast<LyndonId>(rng() % t->end_of_degree(5)), Rational(static_cast<long>(rng() % 5) + 1));
		EXPECT_EQ(project_lie(embed_lie(x)), x);
	}
}

TEST(FreeGroup, Reduction)
{
	auto w = FreeGroupWord::parse("a1 b1 b1^-1 a2");
	EXPECT_EQ(w.to_string(), "a1 a2");
	EXPECT_TRUE((w * w.inverse()).empty());
}

TEST(Expansion, Evaluation)
{
	auto basis = basis_expansion(2, 4);
	auto magnus = magnus_expansion(2, 4);
	EXPECT_EQ(evaluate_expansion(basis, FreeGroupWord()), TensorSeries::one(2, 4));
	EXPECT_EQ(magnus.image({'b', 1}), TensorSeries::one(2, 4) + gen(2, 4, "b1"));
	EXPECT_EQ(basis.image({'b', 2}), exp(gen(2, 4, "b2")));
	std::mt19937_64 rng(9);
	for (int trial = 0; trial < 5; ++trial)
	{
		auto u = random_word(2, rng, 4), v = random_word(2, rng, 3);
		EXPECT_EQ(evaluate_expansion(magnus, u * v), mul(evaluate_expansion(magnus, u), evaluate_expansion(magnus, v)));
		EXPECT_TRUE(is_grouplike(evaluate_expansion(basis, u * v)));
	}
}

TEST(Expansion, Check)
{
	auto m = check_expansion(magnus_expansion(1, 3));
	EXPECT_TRUE(m.is_expansion);
	EXPECT_FALSE(m.is_grouplike);
	auto b = check_expansion(basis_expansion(1, 3));
	EXPECT_TRUE(b.is_expansion);
	EXPECT_TRUE(b.is_grouplike);
	ExpansionMap zero{1, 3, {TensorSeries(1, 3), TensorSeries(1, 3)}};
	EXPECT_FALSE(check_expansion(zero).is_expansion);
}
