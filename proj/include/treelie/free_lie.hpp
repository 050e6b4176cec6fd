#pragma once

// Free Lie algebra on H = span(a_1, b_1, ..., a_g, b_g), truncated at a degree
// bound, in coordinates on the Lyndon basis.
//
// Letters are numbered a_i -> 2(i-1), b_i -> 2(i-1)+1, which fixes the order
// a1 < b1 < a2 < b2 < ... used for every Lyndon word. Lyndon ids are global
// per genus: words are ordered by degree first, then lexicographically, so an
// id never changes when the table is extended to a higher degree.

#include "treelie/rational.hpp"
#include "treelie/sparse.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treelie {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using LyndonId = std::uint32_t;

/// Basis generator of H: kind 'a' or 'b' with 1-based index.
struct GenName
{
	char kind = 'a';
	int index = 1;

	friend bool operator==(const GenName&, const GenName&) = default;
};

Letter letter_of(GenName g);
GenName gen_name(Letter l);
std::string to_string(GenName g);
/// Parses "a3" / "b12"; throws std::invalid_argument. The index is checked
/// against genus when genus > 0.
GenName parse_gen_name(std::string_view text, int genus = 0);
std::string word_to_string(const Word& w);

/// Lexicographic order with a proper prefix smaller than the word.
bool lex_less(const Word& u, const Word& v);
bool is_lyndon(const Word& w);

/// Number of Lyndon words of the given length (Witt's formula).
std::uint64_t witt_dim(int alphabet_size, int degree);

/// Integer-coefficient combination of basis elements (brackets of basis
/// elements always have integer Lyndon coordinates).
using IntTerms = std::vector<std::pair<LyndonId, std::int64_t>>;
/// Integer combination of words of one degree, words given by their base-2g
/// index inside that degree.
using WordTerms = std::vector<std::pair<std::uint64_t, std::int64_t>>;

class LyndonTable
{
public:
	/// Shared table covering all Lyndon words of length <= max_degree.
	static std::shared_ptr<const LyndonTable> get(int genus, int max_degree);

	int genus() const { return genus_; }
	int alphabet() const { return 2 * genus_; }
	int max_degree() const { return max_degree_; }
	std::size_t size() const { return words_.size(); }

	LyndonId begin_of_degree(int d) const;
	LyndonId end_of_degree(int d) const;
	int degree(LyndonId id) const { return static_cast<int>(words_[id].size()); }
	const Word& word(LyndonId id) const { return words_[id]; }
	/// Standard factorization (left, right); only for degree >= 2.
	LyndonId left(LyndonId id) const { return left_[id]; }
	LyndonId right(LyndonId id) const { return right_[id]; }
	std::optional<LyndonId> find(const Word& w) const;
	LyndonId letter_id(Letter l) const { return l; }

	/// Canonical bracketing, e.g. "[a1,[a1,b1]]".
	std::string bracketing(LyndonId id) const;

	/// [e_i, e_j] in Lyndon coordinates. Requires deg i + deg j <= max_degree.
	const IntTerms& bracket(LyndonId i, LyndonId j) const;

	/// Tensor expansion of the standard bracketing of e_id, as word indices
	/// within degree(id).
	const WordTerms& expansion(LyndonId id) const;

	/// Index of a word among the words of its length (base-2g number).
	std::uint64_t word_index(const Word& w) const;
	Word word_at(int degree, std::uint64_t index) const;

	LyndonTable(int genus, int max_degree);

private:
	IntTerms compute_bracket(LyndonId i, LyndonId j) const;

	int genus_;
	int max_degree_;
	std::vector<Word> words_;
	std::vector<LyndonId> left_;
	std::vector<LyndonId> right_;
	std::vector<LyndonId> degree_start_;
	std::unordered_map<std::uint64_t, LyndonId> index_;  // packed word -> id

	mutable std::recursive_mutex mutex_;
	mutable std::unordered_map<std::uint64_t, IntTerms> bracket_cache_;
	mutable std::unordered_map<LyndonId, WordTerms> expansion_cache_;
};

/// Element of L(H)/L_{>= max_degree+1} on the Lyndon basis.
class LieSeries
{
public:
	LieSeries() = default;
	LieSeries(int genus, int max_degree);

	static LieSeries generator(int genus, int max_degree, Letter l);
	static LieSeries generator(int genus, int max_degree, GenName g);
	static LieSeries basis(int genus, int max_degree, LyndonId id, const Rational& c = 1);

	int genus() const { return genus_; }
	int max_degree() const { return max_degree_; }
	const SparseQ<LyndonId>& coords() const { return coords_; }
	std::shared_ptr<const LyndonTable> table() const;

	bool is_zero() const { return coords_.empty(); }
	Rational coeff(LyndonId id) const;
	/// Coefficient of the Lyndon element spelled by the word (0 if not Lyndon).
	Rational coeff(const Word& w) const;
	void add_term(LyndonId id, const Rational& c);

	/// Homogeneous component of degree d.
	LieSeries degree_part(int d) const;
	/// Components of degree in [lo, hi].
	LieSeries degree_range(int lo, int hi) const;
	/// Lowest degree with a nonzero component, or 0 for the zero series.
	int lowest_degree() const;
	int highest_degree() const;
	/// Same element with a lower truncation bound.
	LieSeries truncated(int max_degree) const;
	/// Same element viewed in a larger truncation (no new terms).
	LieSeries extended(int max_degree) const;

	LieSeries& operator+=(const LieSeries& o);
	LieSeries& operator-=(const LieSeries& o);
	LieSeries& operator*=(const Rational& c);
	friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
	friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
	friend LieSeries operator*(LieSeries a, const Rational& c) { return a *= c; }
	friend LieSeries operator*(const Rational& c, LieSeries a) { return a *= c; }
	LieSeries operator-() const;

	friend bool operator==(const LieSeries& a, const LieSeries& b);

	/// Human readable, e.g. "a1 - 1/2*[a1,b1]".
	std::string to_string() const;

private:
	void check_context(const LieSeries& o, const char* what) const;

	int genus_ = 0;
	int max_degree_ = 0;
	SparseQ<LyndonId> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const LieSeries& x) { return os << x.to_string(); }

/// Throws std::invalid_argument when genus or truncation differ.
void require_same_context(const LieSeries& x, const LieSeries& y, const char* what);

LieSeries bracket(const LieSeries& x, const LieSeries& y);

/// log(exp(x) exp(y)), computed on the Lie side by the Varadarajan recursion.
LieSeries bch(const LieSeries& x, const LieSeries& y);

struct LyndonElem
{
	LyndonId id;
	Word word;
	std::string bracketing;
};

/// All Lyndon words of the given length over 2*genus letters, in
/// lexicographic order.
std::vector<LyndonElem> lyndon_basis(int genus, int degree);

/// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

} // namespace treelie
