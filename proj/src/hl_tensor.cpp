#include "treelie/hl_tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace treelie {

namespace {

// Smallest table that is already built for the genus is fine for degree
// lookups because Lyndon ids never change when a table grows.
std::shared_ptr<const LyndonTable> any_table(int genus)
{
	return LyndonTable::get(genus, 1);
}

} // namespace

int HLieTensor::lie_degree(LyndonId id) const
{
	auto t = any_table(genus_);
	if (id >= t->size())
		throw std::out_of_range("HLieTensor: Lyndon id outside the current table");
	return t->degree(id);
}

void HLieTensor::add(Letter h, const LieSeries& x, const Rational& c)
{
	if (x.genus() != genus_)
		throw std::invalid_argument("HLieTensor::add: genus mismatch");
	if (h >= 2 * genus_)
		throw std::invalid_argument("HLieTensor::add: letter exceeds genus");
	for (const auto& [id, v] : x.coords())
		accumulate(terms_, Key{h, id}, Rational(v * c));
}

void HLieTensor::add_term(Letter h, LyndonId id, const Rational& c)
{
	if (h >= 2 * genus_)
		throw std::invalid_argument("HLieTensor::add_term: letter exceeds genus");
	accumulate(terms_, Key{h, id}, c);
}

HLieTensor HLieTensor::degree_part(int d) const
{
	HLieTensor out(genus_);
	for (const auto& [key, c] : terms_)
		if (lie_degree(key.second) == d)
			out.terms_.emplace(key, c);
	return out;
}

int HLieTensor::lowest_degree() const
{
	int lo = 0;
	for (const auto& [key, c] : terms_)
	{
		const int d = lie_degree(key.second);
		lo = lo == 0 ? d : std::min(lo, d);
	}
	return lo;
}

int HLieTensor::highest_degree() const
{
	int hi = 0;
	for (const auto& [key, c] : terms_)
		hi = std::max(hi, lie_degree(key.second));
	return hi;
}

LieSeries HLieTensor::component(Letter h, int max_degree) const
{
	LieSeries x(genus_, max_degree);
	for (const auto& [key, c] : terms_)
		if (key.first == h)
			x.add_term(key.second, c);
	return x;
}

LieSeries HLieTensor::bracket_contraction() const
{
	const int n = highest_degree() + 1;
	LieSeries out(genus_, n);
	if (terms_.empty())
		return out;
	auto t = LyndonTable::get(genus_, n);
	for (const auto& [key, c] : terms_)
		for (const auto& [s, k] : t->bracket(t->letter_id(key.first), key.second))
			out.add_term(s, c * k);
	return out;
}

HLieTensor& HLieTensor::operator+=(const HLieTensor& o)
{
	if (genus_ != o.genus_)
		throw std::invalid_argument("HLieTensor +: genus mismatch");
	for (const auto& [key, c] : o.terms_)
		accumulate(terms_, key, c);
	return *this;
}

HLieTensor& HLieTensor::operator-=(const HLieTensor& o)
{
	if (genus_ != o.genus_)
		throw std::invalid_argument("HLieTensor -: genus mismatch");
	for (const auto& [key, c] : o.terms_)
		accumulate(terms_, key, Rational(-c));
	return *this;
}

HLieTensor& HLieTensor::operator*=(const Rational& c)
{
	scale(terms_, c);
	return *this;
}

std::string HLieTensor::to_string() const
{
	if (terms_.empty())
		return "0";
	auto t = any_table(genus_);
	std::ostringstream os;
	bool first = true;
	for (const auto& [key, c] : terms_)
	{
		Rational mag = abs(c);
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		if (mag != 1)
			os << treelie::to_string(mag) << "*";
		os << treelie::to_string(gen_name(key.first)) << "⊗" << t->bracketing(key.second);
		first = false;
	}
	return os.str();
}

} // namespace treelie
