#include "treelie/symplectic.hpp"

#include <gtest/gtest.h>

using namespace treelie;

TEST(Omega, Values)
{
	EXPECT_EQ(omega(1, 3).to_string(), "[a1,b1]");
	EXPECT_TRUE(omega(0, 3).is_zero());
	EXPECT_EQ(omega(2, 3).coords().size(), 2u);
}

TEST(OmegaTilde, LowDegrees)
{
	for (int g = 1; g <= 2; ++g)
		EXPECT_EQ(omega_tilde(g, 4).degree_part(2), omega(g, 4));
	EXPECT_TRUE(omega_tilde(0, 4).is_zero());
	// same product through the Lie-side bch
	auto a = LieSeries::generator(1, 4, GenName{'a', 1});
	auto b = LieSeries::generator(1, 4, GenName{'b', 1});
	auto viaBch = bch(bch(bch(-b, a), b), -a);
	EXPECT_EQ(omega_tilde(1, 4), viaBch);
}

TEST(Corrector, FixesOmegaTilde)
{
	for (int g = 1; g <= 2; ++g)
		for (int n = 2; n <= 5; ++n)
		{
			auto psi = build_corrector(g, n);
			EXPECT_EQ(apply_aut(psi, omega(g, n)), omega_tilde(g, n));
			EXPECT_GE(psi.deviation_degree(), 2);
		}
}

TEST(Corrector, InverseIsGradedIdentity)
{
	auto psi = build_corrector(2, 5);
	auto inv = inverse(psi);
	EXPECT_GE(inv.deviation_degree(), 2);
	EXPECT_EQ(compose(psi, inv), LieAutomorphism::identity(2, 5));
	EXPECT_EQ(compose(inv, psi), LieAutomorphism::identity(2, 5));
}

TEST(Construct, Verifies)
{
	for (int g = 1; g <= 2; ++g)
	{
		auto theta = construct_symplectic(g, 5);
		auto r = verify_symplectic(theta, 5);
		EXPECT_TRUE(r.ok()) << r.message;
		for (int l = 0; l < 2 * g; ++l)
			EXPECT_EQ(project_lie(log(theta.images[l])).degree_part(1),
			          LieSeries::generator(g, 5, static_cast<Letter>(l)));
		// log theta(zeta^-1) = omega
		EXPECT_EQ(project_lie(log(evaluate_expansion(theta, zeta_inverse_word(g)))), omega(g, 5));
		// stable under truncation
		EXPECT_TRUE(verify_symplectic(theta, 3).ok());
	}
}

TEST(KnownExample, Coefficients)
{
	auto logs = known_example_logs(2);
	EXPECT_EQ(logs[0].coeff(Word{0, 1}), Rational(-1, 2));
	// [a1,[a1,b1]] is the Lyndon element a1a1b1
	EXPECT_EQ(logs[1].coeff(Word{0, 0, 1}), Rational(1, 12));
	auto one = known_example_logs(1);
	EXPECT_EQ(one[0].coords().size(), 4u);
}

TEST(KnownExample, SymplecticModDegree5)
{
	for (int g = 1; g <= 3; ++g)
	{
		auto r = verify_symplectic(known_example_expansion(g), 4);
		EXPECT_TRUE(r.ok()) << "genus " << g << ": " << r.message;
	}
}

TEST(Verify, Failures)
{
	auto magnus = verify_symplectic(magnus_expansion(1, 4), 4);
	EXPECT_FALSE(magnus.ok());
	EXPECT_EQ(magnus.message, "not group-like");
	auto basis = verify_symplectic(basis_expansion(1, 4), 4);
	EXPECT_TRUE(basis.grouplike);
	EXPECT_FALSE(basis.zeta_condition);
	ASSERT_TRUE(basis.first_failing_degree);
	EXPECT_EQ(*basis.first_failing_degree, 3);
}
