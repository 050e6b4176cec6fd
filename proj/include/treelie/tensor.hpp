#pragma once

// Truncated tensor algebra T(H)/T_{>N} with concatenation product, exp/log and
// the coproduct tests for group-like and primitive elements; expansions of the
// free group evaluated on words.

#include "treelie/free_lie.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace treelie {

class TensorSeries
{
public:
	TensorSeries() = default;
	/// Zero series.
	TensorSeries(int genus, int max_degree);

	static TensorSeries one(int genus, int max_degree);
	static TensorSeries generator(int genus, int max_degree, Letter l);
	static TensorSeries word(int genus, int max_degree, const Word& w, const Rational& c = 1);

	int genus() const { return genus_; }
	int max_degree() const { return max_degree_; }
	int base() const { return 2 * genus_; }

	/// Dense block of degree d, indexed by the base-2g number of the word.
	const std::vector<Rational>& block(int d) const { return blocks_[static_cast<std::size_t>(d)]; }

	Rational coeff(const Word& w) const;
	void add(const Word& w, const Rational& c);
	const Rational& constant() const { return blocks_[0][0]; }

	bool is_zero() const;
	TensorSeries degree_part(int d) const;
	/// Nonzero terms ordered by degree, then word.
	std::vector<std::pair<Word, Rational>> terms() const;
	TensorSeries truncated(int max_degree) const;

	TensorSeries& operator+=(const TensorSeries& o);
	TensorSeries& operator-=(const TensorSeries& o);
	TensorSeries& operator*=(const Rational& c);
	friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
	friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
	friend TensorSeries operator*(TensorSeries a, const Rational& c) { return a *= c; }
	friend TensorSeries operator*(const Rational& c, TensorSeries a) { return a *= c; }
	TensorSeries operator-() const;
	friend bool operator==(const TensorSeries&, const TensorSeries&) = default;

	std::string to_string() const;

	friend TensorSeries mul(const TensorSeries& x, const TensorSeries& y);

private:
	void check_context(const TensorSeries& o, const char* what) const;

	int genus_ = 0;
	int max_degree_ = 0;
	std::vector<std::vector<Rational>> blocks_;
};

inline std::ostream& operator<<(std::ostream& os, const TensorSeries& x) { return os << x.to_string(); }

void require_same_context(const TensorSeries& x, const TensorSeries& y, const char* what);

TensorSeries mul(const TensorSeries& x, const TensorSeries& y);
/// Requires a zero constant term.
TensorSeries exp(const TensorSeries& x);
/// Requires constant term 1.
TensorSeries log(const TensorSeries& x);
/// Requires a nonzero constant term.
TensorSeries inverse(const TensorSeries& x);

/// Lowest degree d in which Δ(x) and x⊗x differ, or nullopt if x is
/// group-like in the truncation. Degree 0 stands for a constant term != 1.
std::optional<int> grouplike_defect(const TensorSeries& x);
bool is_grouplike(const TensorSeries& x);
bool is_primitive(const TensorSeries& x);

TensorSeries embed_lie(const LieSeries& x);
/// Dynkin projection, degreewise r(w)/n with r the left-normed bracketing.
/// Throws std::invalid_argument unless x is primitive.
LieSeries project_lie(const TensorSeries& x);

/// Freely reduced word in the generators of the surface group.
class FreeGroupWord
{
public:
	using Syllable = std::pair<GenName, int>;

	FreeGroupWord() = default;
	explicit FreeGroupWord(std::vector<Syllable> letters);
	/// Parses whitespace separated syllables such as "a1 b2^-1".
	static FreeGroupWord parse(std::string_view text);

	const std::vector<Syllable>& letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }
	FreeGroupWord inverse() const;
	friend FreeGroupWord operator*(const FreeGroupWord& x, const FreeGroupWord& y);
	friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;
	std::string to_string() const;

private:
	std::vector<Syllable> letters_;
};

/// Images of the generators a_1..b_g, indexed by letter.
struct ExpansionMap
{
	int genus = 0;
	int max_degree = 0;
	std::vector<TensorSeries> images;

	const TensorSeries& image(GenName g) const { return images.at(letter_of(g)); }
};

TensorSeries evaluate_expansion(const ExpansionMap& theta, const FreeGroupWord& w);

struct ExpansionReport
{
	bool is_expansion = false;
	bool is_grouplike = false;
};

ExpansionReport check_expansion(const ExpansionMap& theta);

/// theta(x) = 1 + x.
ExpansionMap magnus_expansion(int genus, int max_degree);
/// theta(x) = exp(x).
ExpansionMap basis_expansion(int genus, int max_degree);

} // namespace treelie
