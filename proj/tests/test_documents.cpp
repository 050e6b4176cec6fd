#include "treelie/documents.hpp"
#include "treelie/johnson.hpp"
#include "treelie/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace treelie;

namespace {

std::string error_field(const std::function<void()>& f)
{
	try
	{
		f();
	}
	catch (const DocumentError& e)
	{
		return e.field();
	}
	return "<no error>";
}

} // namespace

TEST(Documents, LieRoundTrip)
{
	auto x = bch(LieSeries::generator(2, 4, Letter{0}), LieSeries::generator(2, 4, Letter{3}));
	EXPECT_EQ(read_lie(write_lie(x)), x);
	EXPECT_EQ(read_lie(write_lie(LieSeries(1, 3))), LieSeries(1, 3));
}

TEST(Documents, ExpansionRoundTrip)
{
	auto theta = known_example_expansion(2);
	auto back = read_expansion(write_expansion(theta));
	EXPECT_EQ(back.genus, theta.genus);
	EXPECT_EQ(back.max_degree, theta.max_degree);
	ASSERT_EQ(back.images.size(), theta.images.size());
	for (std::size_t l = 0; l < theta.images.size(); ++l)
		EXPECT_EQ(back.images[l], theta.images[l]);
	EXPECT_EQ(write_expansion(back), write_expansion(theta));
}

TEST(Documents, AutomorphismRoundTrip)
{
	auto psi = random_ic_element(2, 2, 9, 5);
	EXPECT_EQ(read_automorphism(write_automorphism(psi)), psi);
}

TEST(Documents, TreesRoundTrip)
{
	std::mt19937_64 rng(1);
	TreeCombo c(2);
	for (int i = 0; i < 5; ++i)
		c.add(random_tree(2, 1 + i, rng), make_rational(i + 1, 3));
	EXPECT_EQ(read_trees(write_trees(c)), c);
}

TEST(Documents, ErrorsNameTheField)
{
	EXPECT_EQ(error_field([] { read_lie("{"); }), "document");
	EXPECT_EQ(error_field([] { read_lie(R"({"kind":"trees"})"); }), "kind");
	EXPECT_EQ(error_field([] { read_lie(R"({"kind":"lie","genus":1})"); }), "max_degree");
	EXPECT_EQ(error_field([] { read_lie(R"({"kind":"lie","genus":9,"max_degree":2,"terms":[]})"); }), "genus");
	EXPECT_EQ(error_field([] {
		          read_lie(R"({"kind":"lie","genus":1,"max_degree":2,"terms":[{"coeff":"x","word":["a1"]}]})");
	          }),
	          "terms[0].coeff");
	EXPECT_EQ(error_field([] {
		          read_lie(R"({"kind":"lie","genus":1,"max_degree":2,"terms":[{"coeff":"1","word":["b1","a1"]}]})");
	          }),
	          "terms[0].word");
	EXPECT_EQ(error_field([] {
		          read_lie(R"({"kind":"lie","genus":1,"max_degree":2,"terms":[{"coeff":"1","word":["a1","c1"]}]})");
	          }),
	          "terms[0].word[1]");
	EXPECT_EQ(error_field([] {
		          read_automorphism(R"({"kind":"automorphism","genus":1,"max_degree":2,"images":{"a1":[]}})");
	          }),
	          "images.a1");
	EXPECT_EQ(error_field([] {
		          read_automorphism(R"({"kind":"automorphism","genus":1,"max_degree":2,"images":{"a2":[]}})");
	          }),
	          "images.a2");
	EXPECT_EQ(error_field([] { read_trees(R"({"kind":"trees","genus":1,"trees":[{"coeff":"1","tree":"(a1 b1"}]})"); }),
	          "trees[0].tree");
}
