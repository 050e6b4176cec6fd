#include "treelie/linalg.hpp"

#include <gtest/gtest.h>

using namespace treelie;

TEST(Rref, Identity)
{
	auto r = rref(MatrixQ::identity(2));
	EXPECT_EQ(r.rank, 2u);
	EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroMatrix)
{
	auto r = rref(MatrixQ(3, 3));
	EXPECT_EQ(r.rank, 0u);
	EXPECT_TRUE(r.pivot_cols.empty());
}

TEST(Rref, DependentRows)
{
	EXPECT_EQ(rank(MatrixQ::from_dense({{1, 2}, {2, 4}})), 1u);
}

TEST(Rref, Idempotent)
{
	auto m = MatrixQ::from_dense({{0, 2, 4, 1}, {1, 1, 0, 3}, {2, 4, 4, 7}});
	auto r = rref(m);
	EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
	EXPECT_EQ(r.rank, 2u);
}

TEST(Solve, IdentityReturnsRhs)
{
	VectorQ b{Rational(3), Rational(-1, 2)};
	auto x = solve(MatrixQ::identity(2), b);
	ASSERT_TRUE(x);
	EXPECT_EQ(*x, b);
}

TEST(Solve, FreeVariableZeroed)
{
	VectorQ b{Rational(2)};
	auto x = solve(MatrixQ::from_dense({{1, 1}}), b);
	ASSERT_TRUE(x);
	EXPECT_EQ(*x, (VectorQ{Rational(2), Rational(0)}));
}

TEST(Solve, Inconsistent)
{
	VectorQ b{Rational(1)};
	EXPECT_FALSE(solve(MatrixQ::from_dense({{0}}), b));
}

TEST(Solve, DimensionMismatchThrows)
{
	VectorQ b{Rational(1), Rational(2)};
	EXPECT_THROW(solve(MatrixQ::identity(3), b), std::invalid_argument);
}

TEST(Solve, SolutionSatisfiesSystem)
{
	auto a = MatrixQ::from_dense({{2, 1, 0, 5}, {4, 2, 1, 0}, {6, 3, 1, 5}});
	VectorQ b{Rational(1), Rational(2), Rational(3)};
	auto x = solve(a, b);
	ASSERT_TRUE(x);
	EXPECT_EQ(a.apply(*x), b);
	LinearSolver s(a);
	EXPECT_EQ(s.solve(b), x);
}

TEST(Kernel, Cases)
{
	EXPECT_TRUE(kernel_basis(MatrixQ::identity(4)).empty());
	EXPECT_EQ(kernel_basis(MatrixQ(1, 3)).size(), 3u);
	auto k = kernel_basis(MatrixQ::from_dense({{1, 1}}));
	ASSERT_EQ(k.size(), 1u);
	EXPECT_EQ(k[0][0], -k[0][1]);
	EXPECT_NE(k[0][0], 0);
}

TEST(Kernel, RankNullity)
{
	auto m = MatrixQ::from_dense({{1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}, {0, 1, 0, 1, 0}});
	auto k = kernel_basis(m);
	EXPECT_EQ(rank(m) + k.size(), m.cols());
	for (const auto& v : k)
		EXPECT_EQ(m.apply(v), VectorQ(3, Rational(0)));
}

TEST(Echelon, ReduceVanishesOnSpan)
{
	EchelonBasis e(3);
	EXPECT_TRUE(e.insert({{0, Rational(1)}, {1, Rational(1)}}));
	EXPECT_FALSE(e.insert({{0, Rational(2)}, {1, Rational(2)}}));
	EXPECT_TRUE(e.contains({{0, Rational(-3)}, {1, Rational(-3)}}));
	EXPECT_FALSE(e.contains({{2, Rational(1)}}));
}
