#include "treelie/tensor.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace treelie {

namespace {

constexpr std::size_t kMaxBlock = std::size_t{1} << 22;

std::size_t ipow(std::size_t b, int e)
{
	std::size_t r = 1;
	while (e-- > 0)
		r *= b;
	return r;
}

std::size_t word_number(const Word& w, std::size_t base)
{
	std::size_t idx = 0;
	for (Letter l : w)
		idx = idx * base + l;
	return idx;
}

Word decode(std::size_t idx, int degree, std::size_t base)
{
	Word w(static_cast<std::size_t>(degree));
	for (int p = degree - 1; p >= 0; --p)
	{
		w[static_cast<std::size_t>(p)] = static_cast<Letter>(idx % base);
		idx /= base;
	}
	return w;
}

using NonZeros = std::vector<std::pair<std::size_t, const Rational*>>;

NonZeros nonzeros(const std::vector<Rational>& block)
{
	NonZeros out;
	for (std::size_t i = 0; i < block.size(); ++i)
		if (!is_zero(block[i]))
			out.emplace_back(i, &block[i]);
	return out;
}

// Blocks of Δ restricted to bidegrees (p, n-p), 1 <= p <= n-1. The (p,q)
// component u⊗v is stored at the index of the concatenated word uv.
std::vector<std::vector<Rational>> coproduct_blocks(const TensorSeries& x, int n)
{
	const std::size_t base = static_cast<std::size_t>(x.base());
	const std::size_t size = ipow(base, n);
	std::vector<std::vector<Rational>> delta(static_cast<std::size_t>(n) + 1);
	for (int p = 1; p < n; ++p)
		delta[static_cast<std::size_t>(p)].assign(size, Rational(0));
	if (n < 2)
		return delta;
	const auto& blk = x.block(n);
	const unsigned full = (1u << n) - 1;
	for (std::size_t w = 0; w < blk.size(); ++w)
	{
		if (is_zero(blk[w]))
			continue;
		const Word letters = decode(w, n, base);
		for (unsigned mask = 1; mask < full; ++mask)
		{
			std::size_t iu = 0, iv = 0;
			int p = 0;
			for (int pos = 0; pos < n; ++pos)
			{
				if (mask & (1u << pos))
				{
					iu = iu * base + letters[static_cast<std::size_t>(pos)];
					++p;
				}
				else
					iv = iv * base + letters[static_cast<std::size_t>(pos)];
			}
			delta[static_cast<std::size_t>(p)][iu * ipow(base, n - p) + iv] += blk[w];
		}
	}
	return delta;
}

} // namespace

TensorSeries::TensorSeries(int genus, int max_degree) : genus_(genus), max_degree_(max_degree)
{
	if (genus < 0 || max_degree < 0)
		throw std::invalid_argument("TensorSeries: negative genus or degree");
	blocks_.resize(static_cast<std::size_t>(max_degree) + 1);
	for (int d = 0; d <= max_degree; ++d)
	{
		const std::size_t size = ipow(static_cast<std::size_t>(base()), d);
		if (size > kMaxBlock)
			throw std::invalid_argument("TensorSeries: truncation too large for genus " +
			                            std::to_string(genus));
		blocks_[static_cast<std::size_t>(d)].assign(size, Rational(0));
	}
}

TensorSeries TensorSeries::one(int genus, int max_degree)
{
	TensorSeries x(genus, max_degree);
	x.blocks_[0][0] = 1;
	return x;
}

TensorSeries TensorSeries::generator(int genus, int max_degree, Letter l)
{
	return word(genus, max_degree, Word{l});
}

TensorSeries TensorSeries::word(int genus, int max_degree, const Word& w, const Rational& c)
{
	TensorSeries x(genus, max_degree);
	x.add(w, c);
	return x;
}

Rational TensorSeries::coeff(const Word& w) const
{
	if (w.size() > static_cast<std::size_t>(max_degree_))
		return 0;
	for (Letter l : w)
		if (l >= base())
			return 0;
	return blocks_[w.size()][word_number(w, static_cast<std::size_t>(base()))];
}

void TensorSeries::add(const Word& w, const Rational& c)
{
	for (Letter l : w)
		if (l >= base())
			throw std::invalid_argument("TensorSeries: letter exceeds genus");
	if (w.size() > static_cast<std::size_t>(max_degree_))
		return;
	blocks_[w.size()][word_number(w, static_cast<std::size_t>(base()))] += c;
}

bool TensorSeries::is_zero() const
{
	for (const auto& blk : blocks_)
		for (const auto& c : blk)
			if (!treelie::is_zero(c))
				return false;
	return true;
}

TensorSeries TensorSeries::degree_part(int d) const
{
	TensorSeries out(genus_, max_degree_);
	if (d >= 0 && d <= max_degree_)
		out.blocks_[static_cast<std::size_t>(d)] = blocks_[static_cast<std::size_t>(d)];
	return out;
}

std::vector<std::pair<Word, Rational>> TensorSeries::terms() const
{
	std::vector<std::pair<Word, Rational>> out;
	for (int d = 0; d <= max_degree_; ++d)
	{
		const auto& blk = blocks_[static_cast<std::size_t>(d)];
		for (std::size_t i = 0; i < blk.size(); ++i)
			if (!treelie::is_zero(blk[i]))
				out.emplace_back(decode(i, d, static_cast<std::size_t>(base())), blk[i]);
	}
	return out;
}

TensorSeries TensorSeries::truncated(int max_degree) const
{
	if (max_degree > max_degree_)
		throw std::invalid_argument("TensorSeries::truncated: bound above current truncation");
	TensorSeries out = *this;
	out.max_degree_ = max_degree;
	out.blocks_.resize(static_cast<std::size_t>(max_degree) + 1);
	return out;
}

void require_same_context(const TensorSeries& x, const TensorSeries& y, const char* what)
{
	if (x.genus() != y.genus() || x.max_degree() != y.max_degree())
		throw std::invalid_argument(std::string(what) + ": genus/truncation mismatch");
}

void TensorSeries::check_context(const TensorSeries& o, const char* what) const
{
	require_same_context(*this, o, what);
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o)
{
	check_context(o, "TensorSeries +");
	for (std::size_t d = 0; d < blocks_.size(); ++d)
		for (std::size_t i = 0; i < blocks_[d].size(); ++i)
			if (!treelie::is_zero(o.blocks_[d][i]))
				blocks_[d][i] += o.blocks_[d][i];
	return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o)
{
	check_context(o, "TensorSeries -");
	for (std::size_t d = 0; d < blocks_.size(); ++d)
		for (std::size_t i = 0; i < blocks_[d].size(); ++i)
			if (!treelie::is_zero(o.blocks_[d][i]))
				blocks_[d][i] -= o.blocks_[d][i];
	return *this;
}

TensorSeries& TensorSeries::operator*=(const Rational& c)
{
	for (auto& blk : blocks_)
		for (auto& v : blk)
			if (!treelie::is_zero(v))
				v *= c;
	return *this;
}

TensorSeries TensorSeries::operator-() const
{
	TensorSeries out = *this;
	return out *= Rational(-1);
}

std::string TensorSeries::to_string() const
{
	auto ts = terms();
	if (ts.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [w, c] : ts)
	{
		Rational mag = abs(c);
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		if (w.empty())
			os << treelie::to_string(mag);
		else
		{
			if (mag != 1)
				os << treelie::to_string(mag) << "*";
			os << word_to_string(w);
		}
		first = false;
	}
	return os.str();
}

TensorSeries mul(const TensorSeries& x, const TensorSeries& y)
{
	require_same_context(x, y, "mul");
	const int n = x.max_degree();
	const std::size_t base = static_cast<std::size_t>(x.base());
	std::vector<NonZeros> nx, ny;
	for (int d = 0; d <= n; ++d)
	{
		nx.push_back(nonzeros(x.block(d)));
		ny.push_back(nonzeros(y.block(d)));
	}
	TensorSeries r(x.genus(), n);
	Rational t;
	for (int p = 0; p <= n; ++p)
		for (int q = 0; p + q <= n; ++q)
		{
			const std::size_t shift = ipow(base, q);
			auto& dst = r.blocks_[static_cast<std::size_t>(p + q)];
			for (const auto& [i, a] : nx[static_cast<std::size_t>(p)])
				for (const auto& [j, b] : ny[static_cast<std::size_t>(q)])
				{
					mpq_mul(t.get_mpq_t(), a->get_mpq_t(), b->get_mpq_t());
					dst[i * shift + j] += t;
				}
		}
	return r;
}

TensorSeries exp(const TensorSeries& x)
{
	if (!is_zero(x.constant()))
		throw std::invalid_argument("exp: constant term must be zero");
	TensorSeries result = TensorSeries::one(x.genus(), x.max_degree());
	TensorSeries term = result;
	for (int n = 1; n <= x.max_degree(); ++n)
	{
		term = mul(term, x) * Rational(1, n);
		if (term.is_zero())
			break;
		result += term;
	}
	return result;
}

TensorSeries log(const TensorSeries& x)
{
	if (x.constant() != 1)
		throw std::invalid_argument("log: constant term must be 1");
	TensorSeries u = x - TensorSeries::one(x.genus(), x.max_degree());
	TensorSeries result(x.genus(), x.max_degree());
	TensorSeries power = u;
	for (int n = 1; n <= x.max_degree(); ++n)
	{
		if (power.is_zero())
			break;
		result += power * Rational(n % 2 == 1 ? 1 : -1, n);
		power = mul(power, u);
	}
	return result;
}

TensorSeries inverse(const TensorSeries& x)
{
	if (is_zero(x.constant()))
		throw std::invalid_argument("inverse: constant term must be nonzero");
	const Rational c = x.constant();
	TensorSeries one = TensorSeries::one(x.genus(), x.max_degree());
	TensorSeries neg_u = one - x * Rational(1 / c);
	TensorSeries result = one;
	TensorSeries power = one;
	for (int n = 1; n <= x.max_degree(); ++n)
	{
		power = mul(power, neg_u);
		if (power.is_zero())
			break;
		result += power;
	}
	return result * Rational(1 / c);
}

std::optional<int> grouplike_defect(const TensorSeries& x)
{
	if (x.constant() != 1)
		return 0;
	const std::size_t base = static_cast<std::size_t>(x.base());
	for (int n = 2; n <= x.max_degree(); ++n)
	{
		auto delta = coproduct_blocks(x, n);
		for (int p = 1; p < n; ++p)
		{
			const int q = n - p;
			const auto& xp = x.block(p);
			const auto& xq = x.block(q);
			const std::size_t shift = ipow(base, q);
			const auto& d = delta[static_cast<std::size_t>(p)];
			for (std::size_t i = 0; i < xp.size(); ++i)
				for (std::size_t j = 0; j < xq.size(); ++j)
					if (d[i * shift + j] != xp[i] * xq[j])
						return n;
		}
	}
	return std::nullopt;
}

bool is_grouplike(const TensorSeries& x)
{
	return !grouplike_defect(x).has_value();
}

bool is_primitive(const TensorSeries& x)
{
	if (!is_zero(x.constant()))
		return false;
	for (int n = 2; n <= x.max_degree(); ++n)
	{
		auto delta = coproduct_blocks(x, n);
		for (int p = 1; p < n; ++p)
			for (const auto& c : delta[static_cast<std::size_t>(p)])
				if (!is_zero(c))
					return false;
	}
	return true;
}

TensorSeries embed_lie(const LieSeries& x)
{
	TensorSeries out(x.genus(), x.max_degree());
	if (x.is_zero())
		return out;
	auto t = x.table();
	for (const auto& [id, c] : x.coords())
	{
		const int d = t->degree(id);
		for (const auto& [w, k] : t->expansion(id))
			out.add(decode(static_cast<std::size_t>(w), d, static_cast<std::size_t>(x.genus() * 2)),
			        c * k);
	}
	return out;
}

LieSeries project_lie(const TensorSeries& x)
{
	if (!is_primitive(x))
		throw std::invalid_argument("project_lie: input is not primitive");
	const int n_max = x.max_degree();
	LieSeries out(x.genus(), n_max);
	if (x.genus() == 0 || n_max == 0)
		return out;
	auto t = LyndonTable::get(x.genus(), n_max);
	const std::size_t base = static_cast<std::size_t>(x.base());

	// left-normed bracketings of prefixes, keyed by (length, word number)
	std::unordered_map<std::uint64_t, IntTerms> memo;
	auto left_normed = [&](auto&& self, const Word& w, std::size_t len) -> const IntTerms& {
		const std::uint64_t key = (static_cast<std::uint64_t>(len) << 56) |
		                          word_number(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)), base);
		if (auto it = memo.find(key); it != memo.end())
			return it->second;
		IntTerms value;
		if (len == 1)
			value.emplace_back(t->letter_id(w[0]), 1);
		else
		{
			std::map<LyndonId, std::int64_t> acc;
			const LyndonId last = t->letter_id(w[len - 1]);
			for (const auto& [id, c] : self(self, w, len - 1))
				for (const auto& [s, d] : t->bracket(id, last))
					acc[s] += c * d;
			for (const auto& [s, c] : acc)
				if (c != 0)
					value.emplace_back(s, c);
		}
		return memo.emplace(key, std::move(value)).first->second;
	};

	SparseQ<LyndonId> acc;
	Rational term;
	for (int n = 1; n <= n_max; ++n)
	{
		const auto& blk = x.block(n);
		for (std::size_t i = 0; i < blk.size(); ++i)
		{
			if (is_zero(blk[i]))
				continue;
			const Word w = decode(i, n, base);
			for (const auto& [s, c] : left_normed(left_normed, w, w.size()))
			{
				term = blk[i] * c / n;
				accumulate(acc, s, term);
			}
		}
	}
	for (const auto& [id, c] : acc)
		out.add_term(id, c);
	return out;
}

// ---------------------------------------------------------------------------

FreeGroupWord::FreeGroupWord(std::vector<Syllable> letters)
{
	for (const auto& s : letters)
	{
		if (s.second != 1 && s.second != -1)
			throw std::invalid_argument("FreeGroupWord: exponents must be +1 or -1");
		if (!letters_.empty() && letters_.back().first == s.first &&
		    letters_.back().second == -s.second)
			letters_.pop_back();
		else
			letters_.push_back(s);
	}
}

FreeGroupWord FreeGroupWord::parse(std::string_view text)
{
	std::vector<Syllable> out;
	std::istringstream is{std::string(text)};
	std::string tok;
	while (is >> tok)
	{
		int e = 1;
		std::string_view name = tok;
		if (auto pos = tok.find('^'); pos != std::string::npos)
		{
			std::string_view ex = std::string_view(tok).substr(pos + 1);
			if (ex == "-1")
				e = -1;
			else if (ex != "1")
				throw std::invalid_argument("bad exponent in '" + tok + "'");
			name = std::string_view(tok).substr(0, pos);
		}
		out.emplace_back(parse_gen_name(name), e);
	}
	return FreeGroupWord(std::move(out));
}

FreeGroupWord FreeGroupWord::inverse() const
{
	std::vector<Syllable> out(letters_.rbegin(), letters_.rend());
	for (auto& s : out)
		s.second = -s.second;
	return FreeGroupWord(std::move(out));
}

FreeGroupWord operator*(const FreeGroupWord& x, const FreeGroupWord& y)
{
	std::vector<FreeGroupWord::Syllable> all = x.letters_;
	all.insert(all.end(), y.letters_.begin(), y.letters_.end());
	return FreeGroupWord(std::move(all));
}

std::string FreeGroupWord::to_string() const
{
	std::string s;
	for (const auto& [g, e] : letters_)
	{
		if (!s.empty())
			s += ' ';
		s += treelie::to_string(g);
		if (e < 0)
			s += "^-1";
	}
	return s;
}

TensorSeries evaluate_expansion(const ExpansionMap& theta, const FreeGroupWord& w)
{
	if (theta.images.size() != static_cast<std::size_t>(2 * theta.genus))
		throw std::invalid_argument("evaluate_expansion: image count does not match genus");
	std::vector<std::optional<TensorSeries>> inverses(theta.images.size());
	TensorSeries result = TensorSeries::one(theta.genus, theta.max_degree);
	for (const auto& [g, e] : w.letters())
	{
		if (g.index > theta.genus)
			throw std::invalid_argument("evaluate_expansion: generator exceeds genus");
		const Letter l = letter_of(g);
		if (e > 0)
			result = mul(result, theta.images[l]);
		else
		{
			if (!inverses[l])
				inverses[l] = inverse(theta.images[l]);
			result = mul(result, *inverses[l]);
		}
	}
	return result;
}

ExpansionReport check_expansion(const ExpansionMap& theta)
{
	ExpansionReport r;
	if (theta.images.size() != static_cast<std::size_t>(2 * theta.genus))
		return r;
	r.is_expansion = true;
	r.is_grouplike = true;
	for (std::size_t l = 0; l < theta.images.size(); ++l)
	{
		const TensorSeries& x = theta.images[l];
		if (x.genus() != theta.genus || x.max_degree() != theta.max_degree)
		{
			r.is_expansion = r.is_grouplike = false;
			return r;
		}
		TensorSeries expected = TensorSeries::one(theta.genus, theta.max_degree);
		if (theta.max_degree >= 1)
			expected += TensorSeries::generator(theta.genus, theta.max_degree, static_cast<Letter>(l));
		if (x.constant() != 1 || x.degree_part(1) != expected.degree_part(1))
			r.is_expansion = false;
		if (!is_grouplike(x))
			r.is_grouplike = false;
	}
	return r;
}

ExpansionMap magnus_expansion(int genus, int max_degree)
{
	ExpansionMap m{genus, max_degree, {}};
	for (int l = 0; l < 2 * genus; ++l)
		m.images.push_back(TensorSeries::one(genus, max_degree) +
		                   TensorSeries::generator(genus, max_degree, static_cast<Letter>(l)));
	return m;
}

ExpansionMap basis_expansion(int genus, int max_degree)
{
	ExpansionMap m{genus, max_degree, {}};
	for (int l = 0; l < 2 * genus; ++l)
		m.images.push_back(exp(TensorSeries::generator(genus, max_degree, static_cast<Letter>(l))));
	return m;
}

} // namespace treelie
