#pragma once

// Koszul complex of the free nilpotent Lie algebra L/L_{>=k+1}: wedge chains
// on the Lyndon basis, boundary operators, graded homology and canonical H_3
// coordinates.

#include "treelie/free_lie.hpp"
#include "treelie/linalg.hpp"

#include <map>
#include <memory>
#include <vector>

namespace treelie {

class TreeCombo;

/// Increasing tuple of Lyndon ids.
using WedgeKey = std::vector<LyndonId>;

class WedgeChain
{
public:
	WedgeChain() = default;
	/// Zero chain of the given arity in Λ(L/L_{>=k+1}).
	WedgeChain(int genus, int k, int arity);

	/// x_1 ∧ ... ∧ x_n expanded multilinearly. All factors must share the
	/// context (genus, k).
	static WedgeChain wedge(const std::vector<LieSeries>& factors);

	int genus() const { return genus_; }
	int nil_class() const { return k_; }
	int arity() const { return arity_; }
	const SparseQ<WedgeKey>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Adds c * e_{ids[0]} ∧ ... in any order; sorts with sign, drops
	/// repeated factors and factors of degree > k.
	void add_monomial(std::vector<LyndonId> ids, const Rational& c);

	/// Sum of factor degrees of a monomial.
	int total_degree(const WedgeKey& key) const;
	WedgeChain degree_part(int d) const;
	/// Image in Λ(L/L_{>=k'+1}) for k' <= k.
	WedgeChain reduced(int k) const;

	WedgeChain& operator+=(const WedgeChain& o);
	WedgeChain& operator-=(const WedgeChain& o);
	WedgeChain& operator*=(const Rational& c);
	friend WedgeChain operator+(WedgeChain a, const WedgeChain& b) { return a += b; }
	friend WedgeChain operator-(WedgeChain a, const WedgeChain& b) { return a -= b; }
	friend WedgeChain operator*(WedgeChain a, const Rational& c) { return a *= c; }
	friend WedgeChain operator*(const Rational& c, WedgeChain a) { return a *= c; }
	WedgeChain operator-() const { return *this * Rational(-1); }
	friend bool operator==(const WedgeChain&, const WedgeChain&) = default;

	std::string to_string() const;

private:
	void check_context(const WedgeChain& o, const char* what) const;

	int genus_ = 0;
	int k_ = 0;
	int arity_ = 0;
	SparseQ<WedgeKey> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const WedgeChain& c) { return os << c.to_string(); }

/// ∂_n(g_1∧...∧g_n) = sum_{i<j} (-1)^{i+j} [g_i,g_j] ∧ g_1 ∧ ...ĝ_i...ĝ_j... ∧ g_n.
WedgeChain boundary(const WedgeChain& c);

/// Increasing n-tuples of Lyndon ids of degree <= k with the given total
/// degree, in lexicographic order.
const std::vector<WedgeKey>& chain_basis(int genus, int k, int arity, int degree);
/// Matrix of ∂_n from degree-d n-chains to degree-d (n-1)-chains.
MatrixQ boundary_matrix(int genus, int k, int arity, int degree);

/// Degree -> dim H_n, omitting zero entries.
std::map<int, std::size_t> homology_dims(int genus, int k, int n);

/// Class in H_3(L/L_{>=k+1}); coords[d] holds the coordinates in degree d
/// for every degree with nonzero H_3.
struct HomologyClass
{
	int genus = 0;
	int k = 0;
	std::map<int, VectorQ> coords;

	bool is_zero() const;
	HomologyClass& operator+=(const HomologyClass& o);
	HomologyClass operator-() const;
	friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
	friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
	std::string to_string() const;
};

inline std::ostream& operator<<(std::ostream& os, const HomologyClass& c) { return os << c.to_string(); }

HomologyClass zero_class(int genus, int k);
/// Throws std::domain_error unless z is a 3-cycle.
HomologyClass class_of(const WedgeChain& z);

/// Class of the reduction of fission(c). Trees of degree below k are
/// rejected with std::domain_error.
HomologyClass capital_phi(const TreeCombo& c, int k);

struct PhiRankReport
{
	std::size_t rank = 0;
	std::size_t h3_dim = 0;
	std::size_t tree_dim = 0;  // sum_{d=k}^{2k-1} dim T_d
};

/// Rank of Φ on T_k ⊕ ... ⊕ T_{2k-1}.
PhiRankReport phi_rank(int genus, int k);

} // namespace treelie
