#pragma once

// Elements of H ⊗ L(H), graded by the degree of the Lie factor.

#include "treelie/free_lie.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace treelie {

class HLieTensor
{
public:
	using Key = std::pair<Letter, LyndonId>;

	HLieTensor() = default;
	explicit HLieTensor(int genus) : genus_(genus) {}

	int genus() const { return genus_; }
	const SparseQ<Key>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Adds c * h ⊗ x.
	void add(Letter h, const LieSeries& x, const Rational& c = 1);
	void add_term(Letter h, LyndonId id, const Rational& c);

	/// Part whose Lie factor has degree d.
	HLieTensor degree_part(int d) const;
	/// Lowest / highest Lie degree, 0 when zero.
	int lowest_degree() const;
	int highest_degree() const;
	/// The Lie factor attached to h, in a series truncated at max_degree.
	LieSeries component(Letter h, int max_degree) const;

	/// sum [h, x] over the terms h ⊗ x.
	LieSeries bracket_contraction() const;

	HLieTensor& operator+=(const HLieTensor& o);
	HLieTensor& operator-=(const HLieTensor& o);
	HLieTensor& operator*=(const Rational& c);
	friend HLieTensor operator+(HLieTensor a, const HLieTensor& b) { return a += b; }
	friend HLieTensor operator-(HLieTensor a, const HLieTensor& b) { return a -= b; }
	friend HLieTensor operator*(HLieTensor a, const Rational& c) { return a *= c; }
	friend bool operator==(const HLieTensor&, const HLieTensor&) = default;

	std::string to_string() const;

private:
	int lie_degree(LyndonId id) const;

	int genus_ = 0;
	SparseQ<Key> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const HLieTensor& x) { return os << x.to_string(); }

} // namespace treelie
