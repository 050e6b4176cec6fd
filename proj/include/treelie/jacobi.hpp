#pragma once

// Tree-shaped Jacobi diagrams colored by the basis of H, the comm map, the
// fission map into Λ^3 L, and η: T_d -> D_{d+2} ⊂ H ⊗ L_{d+1} with its
// inverse.
//
// Text form: a trivalent vertex is written with its neighbours in cyclic
// order. The outermost expression is either a triple "(X Y Z)" or a strut
// "(x y)"; an inner pair "(U V)" is a vertex whose cyclic order is
// (U, V, parent). Leaves are generator names.

#include "treelie/hl_tensor.hpp"
#include "treelie/koszul.hpp"

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace treelie {

class TreeDiagram
{
public:
	struct Vertex
	{
		bool leaf = true;
		Letter color = 0;
		// leaves use nbr[0] only; trivalent vertices list neighbours in cyclic order
		std::array<int, 3> nbr{-1, -1, -1};
	};

	/// Throws std::invalid_argument on malformed text or colors beyond genus.
	static TreeDiagram parse(std::string_view text, int genus);
	static TreeDiagram strut(int genus, Letter x, Letter y);

	int genus() const { return genus_; }
	/// Number of trivalent vertices.
	int degree() const;
	const std::vector<Vertex>& vertices() const { return vertices_; }
	std::vector<int> leaves() const;

	/// Written form rooted at the first leaf.
	std::string to_string() const;

	/// Canonical key with T = sign * tree(key); sign 0 when T = 0 by AS.
	struct Canonical
	{
		int sign = 0;
		std::string key;
	};
	Canonical canonical() const;

	/// Same tree with the cyclic order at trivalent vertex v reversed.
	TreeDiagram flipped(int v) const;

	/// Iterated bracket of the tree rooted at a leaf, in L/L_{>max_degree}.
	LieSeries comm(int root_leaf, int max_degree) const;
	/// Bracket of the branch hanging off `from` through its neighbour v.
	LieSeries branch(int v, int from, int max_degree) const;

	/// Throws std::invalid_argument unless the vertices form a connected
	/// unitrivalent tree with consistent adjacency.
	static TreeDiagram from_vertices(int genus, std::vector<Vertex> vertices);

private:
	int genus_ = 0;
	std::vector<Vertex> vertices_;
};

/// Formal combination of trees keyed by canonical form.
class TreeCombo
{
public:
	TreeCombo() = default;
	explicit TreeCombo(int genus) : genus_(genus) {}

	static TreeCombo single(const TreeDiagram& t, const Rational& c = 1);

	int genus() const { return genus_; }
	const SparseQ<std::string>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add(const TreeDiagram& t, const Rational& c);
	/// Adds a tree given in text form.
	void add(const std::string& text, const Rational& c);

	TreeCombo& operator+=(const TreeCombo& o);
	TreeCombo& operator-=(const TreeCombo& o);
	TreeCombo& operator*=(const Rational& c);
	friend TreeCombo operator+(TreeCombo a, const TreeCombo& b) { return a += b; }
	friend TreeCombo operator-(TreeCombo a, const TreeCombo& b) { return a -= b; }
	friend TreeCombo operator*(TreeCombo a, const Rational& c) { return a *= c; }
	/// Syntactic equality of canonical forms; see tree_equal for AS/IHX.
	friend bool operator==(const TreeCombo&, const TreeCombo&) = default;

	std::string to_string() const;

private:
	int genus_ = 0;
	SparseQ<std::string> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TreeCombo& c) { return os << c.to_string(); }

/// sum over trivalent vertices of comm(s1) ∧ comm(s2) ∧ comm(s3) in
/// Λ^3(L/L_{>=k+1}). Struts are rejected.
WedgeChain fission(const TreeDiagram& t, int k);
WedgeChain fission(const TreeCombo& c, int k);

/// sum over leaves of col(v) ∧ comm(T_v) in Λ^2(L/L_{>=k+1}).
WedgeChain leaf_wedge_sum(const TreeDiagram& t, int k);

HLieTensor eta(const TreeDiagram& t);
HLieTensor eta(const TreeCombo& c);
bool tree_equal(const TreeCombo& x, const TreeCombo& y);

/// dim ker([-,-]: H ⊗ L_{d+1} -> L_{d+2}).
std::size_t tree_space_dim(int genus, int d);
/// Canonical keys of caterpillar trees forming a basis of T_d.
const std::vector<std::string>& tree_basis(int genus, int d);
/// Combination of basis caterpillars with η equal to x; x must be
/// homogeneous with Lie degree d+1 and in the bracket kernel
/// (std::domain_error otherwise).
TreeCombo eta_inverse(const HLieTensor& x, int d);

/// Random tree with uniformly random colors.
TreeDiagram random_tree(int genus, int degree, std::mt19937_64& rng);

/// Expands a tree whose leaves are slot numbers "0", "1", ... with each slot
/// colored by a combination of generators.
TreeCombo multilinear_tree(std::string_view shape, const std::vector<SparseQ<Letter>>& colors, int genus);

} // namespace treelie
