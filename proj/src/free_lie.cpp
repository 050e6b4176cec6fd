#include "treelie/free_lie.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace treelie {

namespace {

constexpr int kMaxGenus = 8;       // alphabet fits in 4 bits
constexpr int kMaxTableDegree = 14; // packed words fit in 64 bits

std::uint64_t pack(const Word& w)
{
	std::uint64_t key = static_cast<std::uint64_t>(w.size()) << 56;
	for (std::size_t i = 0; i < w.size(); ++i)
		key |= static_cast<std::uint64_t>(w[i]) << (4 * i);
	return key;
}

std::uint64_t ipow(std::uint64_t b, int e)
{
	std::uint64_t r = 1;
	while (e-- > 0)
		r *= b;
	return r;
}

} // namespace

Letter letter_of(GenName g)
{
	return static_cast<Letter>(2 * (g.index - 1) + (g.kind == 'b' ? 1 : 0));
}

GenName gen_name(Letter l)
{
	return GenName{(l % 2 == 0) ? 'a' : 'b', l / 2 + 1};
}

std::string to_string(GenName g)
{
	return std::string(1, g.kind) + std::to_string(g.index);
}

GenName parse_gen_name(std::string_view text, int genus)
{
	if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
		throw std::invalid_argument("bad generator name '" + std::string(text) + "'");
	int index = 0;
	auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
	if (ec != std::errc() || ptr != text.data() + text.size() || index < 1)
		throw std::invalid_argument("bad generator name '" + std::string(text) + "'");
	if (genus > 0 && index > genus)
		throw std::invalid_argument("generator '" + std::string(text) + "' exceeds genus " +
		                            std::to_string(genus));
	return GenName{text[0], index};
}

std::string word_to_string(const Word& w)
{
	std::string s;
	for (Letter l : w)
		s += to_string(gen_name(l));
	return s;
}

bool lex_less(const Word& u, const Word& v)
{
	return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

bool is_lyndon(const Word& w)
{
	if (w.empty())
		return false;
	for (std::size_t s = 1; s < w.size(); ++s)
	{
		Word rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
		rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
		if (!lex_less(w, rot))
			return false;
	}
	return true;
}

std::uint64_t witt_dim(int alphabet_size, int degree)
{
	if (alphabet_size < 1 || degree < 1)
		throw std::invalid_argument("witt_dim: alphabet and degree must be positive");
	// (1/n) * sum_{d | n} mu(d) * q^{n/d}
	auto mobius = [](int n) {
		int m = 1;
		for (int p = 2; p * p <= n; ++p)
			if (n % p == 0)
			{
				n /= p;
				if (n % p == 0)
					return 0;
				m = -m;
			}
		if (n > 1)
			m = -m;
		return m;
	};
	mpz_class sum = 0;
	for (int d = 1; d <= degree; ++d)
	{
		if (degree % d != 0)
			continue;
		mpz_class term;
		mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(alphabet_size),
		              static_cast<unsigned long>(degree / d));
		sum += mobius(d) * term;
	}
	sum /= degree;
	return sum.get_ui();
}

// ---------------------------------------------------------------------------
// LyndonTable

std::shared_ptr<const LyndonTable> LyndonTable::get(int genus, int max_degree)
{
	static std::mutex registry_mutex;
	static std::map<int, std::shared_ptr<const LyndonTable>> registry;
	if (genus < 0 || genus > kMaxGenus)
		throw std::invalid_argument("genus must be in [0, 8]");
	if (max_degree < 0 || max_degree > kMaxTableDegree)
		throw std::invalid_argument("truncation degree must be in [0, 14]");
	std::lock_guard lock(registry_mutex);
	auto& slot = registry[genus];
	if (!slot || slot->max_degree() < max_degree)
	{
		int degree = std::max(max_degree, slot ? slot->max_degree() : 0);
		slot = std::make_shared<const LyndonTable>(genus, degree);
	}
	return slot;
}

LyndonTable::LyndonTable(int genus, int max_degree) : genus_(genus), max_degree_(max_degree)
{
	const int alphabet = 2 * genus;
	std::vector<Word> all;
	if (alphabet > 0 && max_degree > 0)
	{
		// Duval's generation: all Lyndon words of length <= n in lex order.
		std::vector<int> cur{-1};
		while (!cur.empty())
		{
			++cur.back();
			all.emplace_back(cur.begin(), cur.end());
			const std::size_t m = cur.size();
			while (cur.size() < static_cast<std::size_t>(max_degree))
				cur.push_back(cur[cur.size() - m]);
			while (!cur.empty() && cur.back() == alphabet - 1)
				cur.pop_back();
		}
	}
	std::stable_sort(all.begin(), all.end(),
	                 [](const Word& a, const Word& b) { return a.size() < b.size(); });
	words_ = std::move(all);

	degree_start_.assign(static_cast<std::size_t>(max_degree) + 2, 0);
	for (int d = 0; d <= max_degree + 1; ++d)
		degree_start_[d] = static_cast<LyndonId>(
		    std::lower_bound(words_.begin(), words_.end(), static_cast<std::size_t>(d),
		                     [](const Word& w, std::size_t len) { return w.size() < len; }) -
		    words_.begin());

	left_.assign(words_.size(), 0);
	right_.assign(words_.size(), 0);
	for (LyndonId id = 0; id < words_.size(); ++id)
	{
		const Word& w = words_[id];
		index_.emplace(pack(w), id);
		if (w.size() < 2)
			continue;
		for (std::size_t s = 1; s < w.size(); ++s)
		{
			Word suffix(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
			auto it = index_.find(pack(suffix));
			if (it == index_.end())
				continue;
			Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
			left_[id] = index_.at(pack(prefix));
			right_[id] = it->second;
			break;
		}
	}
}

LyndonId LyndonTable::begin_of_degree(int d) const
{
	if (d < 0)
		return 0;
	if (d > max_degree_)
		return static_cast<LyndonId>(words_.size());
	return degree_start_[d];
}

LyndonId LyndonTable::end_of_degree(int d) const
{
	return begin_of_degree(d + 1);
}

std::optional<LyndonId> LyndonTable::find(const Word& w) const
{
	if (w.empty() || w.size() > static_cast<std::size_t>(max_degree_))
		return std::nullopt;
	auto it = index_.find(pack(w));
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

std::string LyndonTable::bracketing(LyndonId id) const
{
	if (degree(id) == 1)
		return to_string(gen_name(words_[id][0]));
	return "[" + bracketing(left_[id]) + "," + bracketing(right_[id]) + "]";
}

const IntTerms& LyndonTable::bracket(LyndonId i, LyndonId j) const
{
	if (degree(i) + degree(j) > max_degree_)
		throw std::logic_error("LyndonTable::bracket: degree exceeds table");
	const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
	std::lock_guard lock(mutex_);
	if (auto it = bracket_cache_.find(key); it != bracket_cache_.end())
		return it->second;
	IntTerms value = compute_bracket(i, j);
	return bracket_cache_.emplace(key, std::move(value)).first->second;
}

IntTerms LyndonTable::compute_bracket(LyndonId i, LyndonId j) const
{
	if (i == j)
		return {};
	if (lex_less(words_[j], words_[i]))
	{
		IntTerms r = bracket(j, i);
		for (auto& t : r)
			t.second = -t.second;
		return r;
	}
	// Now w_i < w_j. If w_i is a letter or its right standard factor is
	// >= w_j, then w_i w_j is Lyndon with standard factorization (w_i, w_j).
	if (degree(i) == 1 || !lex_less(words_[right_[i]], words_[j]))
	{
		Word w = words_[i];
		w.insert(w.end(), words_[j].begin(), words_[j].end());
		return {{index_.at(pack(w)), 1}};
	}
	// [[u,v],w] = [u,[v,w]] + [[u,w],v]
	const LyndonId u = left_[i];
	const LyndonId v = right_[i];
	std::map<LyndonId, std::int64_t> acc;
	for (const auto& [t, c] : bracket(v, j))
		for (const auto& [s, d] : bracket(u, t))
			acc[s] += c * d;
	for (const auto& [t, c] : bracket(u, j))
		for (const auto& [s, d] : bracket(t, v))
			acc[s] += c * d;
	IntTerms out;
	for (const auto& [s, c] : acc)
		if (c != 0)
			out.emplace_back(s, c);
	return out;
}

const WordTerms& LyndonTable::expansion(LyndonId id) const
{
	std::lock_guard lock(mutex_);
	if (auto it = expansion_cache_.find(id); it != expansion_cache_.end())
		return it->second;
	WordTerms out;
	if (degree(id) == 1)
		out.emplace_back(words_[id][0], 1);
	else
	{
		const WordTerms& eu = expansion(left_[id]);
		const WordTerms& ev = expansion(right_[id]);
		const std::uint64_t base = static_cast<std::uint64_t>(alphabet());
		const std::uint64_t shift_v = ipow(base, degree(right_[id]));
		const std::uint64_t shift_u = ipow(base, degree(left_[id]));
		std::map<std::uint64_t, std::int64_t> acc;
		for (const auto& [iu, cu] : eu)
			for (const auto& [iv, cv] : ev)
			{
				acc[iu * shift_v + iv] += cu * cv;
				acc[iv * shift_u + iu] -= cu * cv;
			}
		for (const auto& [w, c] : acc)
			if (c != 0)
				out.emplace_back(w, c);
	}
	return expansion_cache_.emplace(id, std::move(out)).first->second;
}

std::uint64_t LyndonTable::word_index(const Word& w) const
{
	std::uint64_t idx = 0;
	for (Letter l : w)
		idx = idx * static_cast<std::uint64_t>(alphabet()) + l;
	return idx;
}

Word LyndonTable::word_at(int degree, std::uint64_t index) const
{
	Word w(static_cast<std::size_t>(degree));
	const auto base = static_cast<std::uint64_t>(alphabet());
	for (int p = degree - 1; p >= 0; --p)
	{
		w[static_cast<std::size_t>(p)] = static_cast<Letter>(index % base);
		index /= base;
	}
	return w;
}

// ---------------------------------------------------------------------------
// LieSeries

LieSeries::LieSeries(int genus, int max_degree) : genus_(genus), max_degree_(max_degree)
{
	if (genus < 0 || max_degree < 0)
		throw std::invalid_argument("LieSeries: negative genus or degree");
}

LieSeries LieSeries::generator(int genus, int max_degree, Letter l)
{
	if (l >= 2 * genus)
		throw std::invalid_argument("LieSeries::generator: letter exceeds genus");
	LieSeries x(genus, max_degree);
	if (max_degree >= 1)
		x.coords_.emplace(l, Rational(1));
	return x;
}

LieSeries LieSeries::generator(int genus, int max_degree, GenName g)
{
	return generator(genus, max_degree, letter_of(g));
}

LieSeries LieSeries::basis(int genus, int max_degree, LyndonId id, const Rational& c)
{
	LieSeries x(genus, max_degree);
	x.add_term(id, c);
	return x;
}

std::shared_ptr<const LyndonTable> LieSeries::table() const
{
	return LyndonTable::get(genus_, max_degree_);
}

Rational LieSeries::coeff(LyndonId id) const
{
	auto it = coords_.find(id);
	return it == coords_.end() ? Rational(0) : it->second;
}

Rational LieSeries::coeff(const Word& w) const
{
	auto id = table()->find(w);
	return id ? coeff(*id) : Rational(0);
}

void LieSeries::add_term(LyndonId id, const Rational& c)
{
	auto t = table();
	if (id >= t->size())
		throw std::out_of_range("LieSeries::add_term: unknown Lyndon id");
	if (t->degree(id) > max_degree_)
		return;
	accumulate(coords_, id, c);
}

LieSeries LieSeries::degree_part(int d) const
{
	return degree_range(d, d);
}

LieSeries LieSeries::degree_range(int lo, int hi) const
{
	LieSeries out(genus_, max_degree_);
	if (coords_.empty() || lo > hi)
		return out;
	auto t = table();
	auto first = coords_.lower_bound(t->begin_of_degree(std::max(lo, 1)));
	auto last = coords_.lower_bound(t->end_of_degree(std::min(hi, max_degree_)));
	if (hi < 1)
		return out;
	out.coords_.insert(first, last);
	return out;
}

int LieSeries::lowest_degree() const
{
	if (coords_.empty())
		return 0;
	return table()->degree(coords_.begin()->first);
}

int LieSeries::highest_degree() const
{
	if (coords_.empty())
		return 0;
	return table()->degree(coords_.rbegin()->first);
}

LieSeries LieSeries::truncated(int max_degree) const
{
	if (max_degree > max_degree_)
		throw std::invalid_argument("LieSeries::truncated: bound above current truncation");
	LieSeries out = degree_range(1, max_degree);
	out.max_degree_ = max_degree;
	return out;
}

LieSeries LieSeries::extended(int max_degree) const
{
	if (max_degree < max_degree_)
		throw std::invalid_argument("LieSeries::extended: bound below current truncation");
	LieSeries out = *this;
	out.max_degree_ = max_degree;
	return out;
}

void LieSeries::check_context(const LieSeries& o, const char* what) const
{
	require_same_context(*this, o, what);
}

void require_same_context(const LieSeries& x, const LieSeries& y, const char* what)
{
	if (x.genus() != y.genus() || x.max_degree() != y.max_degree())
		throw std::invalid_argument(std::string(what) + ": genus/truncation mismatch (" +
		                            std::to_string(x.genus()) + "," +
		                            std::to_string(x.max_degree()) + ") vs (" +
		                            std::to_string(y.genus()) + "," +
		                            std::to_string(y.max_degree()) + ")");
}

LieSeries& LieSeries::operator+=(const LieSeries& o)
{
	check_context(o, "LieSeries +");
	for (const auto& [k, v] : o.coords_)
		accumulate(coords_, k, v);
	return *this;
}

LieSeries& LieSeries::operator-=(const LieSeries& o)
{
	check_context(o, "LieSeries -");
	Rational neg;
	for (const auto& [k, v] : o.coords_)
	{
		neg = -v;
		accumulate(coords_, k, neg);
	}
	return *this;
}

LieSeries& LieSeries::operator*=(const Rational& c)
{
	scale(coords_, c);
	return *this;
}

LieSeries LieSeries::operator-() const
{
	LieSeries out = *this;
	for (auto& [k, v] : out.coords_)
		v = -v;
	return out;
}

bool operator==(const LieSeries& a, const LieSeries& b)
{
	return a.genus_ == b.genus_ && a.max_degree_ == b.max_degree_ && a.coords_ == b.coords_;
}

std::string LieSeries::to_string() const
{
	if (coords_.empty())
		return "0";
	auto t = table();
	std::ostringstream os;
	bool first = true;
	for (const auto& [id, c] : coords_)
	{
		Rational mag = abs(c);
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		if (mag != 1)
			os << treelie::to_string(mag) << "*";
		os << t->bracketing(id);
		first = false;
	}
	return os.str();
}

LieSeries bracket(const LieSeries& x, const LieSeries& y)
{
	require_same_context(x, y, "bracket");
	LieSeries out(x.genus(), x.max_degree());
	if (x.is_zero() || y.is_zero())
		return out;
	auto t = x.table();
	const int n = x.max_degree();
	SparseQ<LyndonId> acc;
	Rational cc, term;
	for (const auto& [i, ci] : x.coords())
	{
		const int di = t->degree(i);
		if (di + 1 > n)
			break;
		for (const auto& [j, cj] : y.coords())
		{
			if (di + t->degree(j) > n)
				break;
			const IntTerms& br = t->bracket(i, j);
			if (br.empty())
				continue;
			cc = ci * cj;
			for (const auto& [s, c] : br)
			{
				term = cc * c;
				accumulate(acc, s, term);
			}
		}
	}
	for (const auto& [k, v] : acc)
		out.add_term(k, v);
	return out;
}

Rational bernoulli(int n)
{
	if (n < 0)
		throw std::invalid_argument("bernoulli: negative index");
	std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
	b[0] = 1;
	for (int m = 1; m <= n; ++m)
	{
		Rational s = 0;
		mpz_class binom = 1; // C(m+1, k)
		for (int k = 0; k < m; ++k)
		{
			s += Rational(binom) * b[k];
			binom = binom * (m + 1 - k) / (k + 1);
		}
		b[m] = -s / (m + 1);
	}
	return b[n];
}

LieSeries bch(const LieSeries& x, const LieSeries& y)
{
	require_same_context(x, y, "bch");
	const int n_max = x.max_degree();
	LieSeries sum = x + y;
	LieSeries diff = x - y;
	if (n_max < 1)
		return sum;

	// Z(t) = log(e^{tX} e^{tY}) = sum_n Z_n t^n with
	//   Z_1 = X + Y,
	//   (n+1) Z_{n+1} = 1/2 [X - Y, Z_n]
	//       + sum_{p>=1, 2p<=n} B_{2p}/(2p)! sum_{k_1+...+k_2p = n}
	//             [Z_{k_1}, [..., [Z_{k_2p}, X + Y]...]].
	// Z_n has Lie degree >= n, so n <= max_degree suffices.
	std::vector<LieSeries> z(static_cast<std::size_t>(n_max) + 1, LieSeries(x.genus(), n_max));
	z[1] = sum;
	// nested[q][m] = sum over compositions of m into q parts of the nested bracket
	std::map<std::pair<int, int>, LieSeries> nested;
	nested.emplace(std::pair{0, 0}, sum);
	auto get_nested = [&](auto&& self, int q, int m) -> const LieSeries& {
		auto key = std::pair{q, m};
		if (auto it = nested.find(key); it != nested.end())
			return it->second;
		LieSeries acc(x.genus(), n_max);
		if (q > 0 && m >= q)
			for (int k = 1; k <= m - q + 1; ++k)
			{
				if (z[k].is_zero())
					continue;
				const LieSeries& inner = self(self, q - 1, m - k);
				if (!inner.is_zero())
					acc += bracket(z[k], inner);
			}
		return nested.emplace(key, std::move(acc)).first->second;
	};

	for (int n = 1; n < n_max; ++n)
	{
		LieSeries next = bracket(diff, z[n]) * Rational(1, 2);
		mpz_class fact = 1;
		for (int p = 1; 2 * p <= n; ++p)
		{
			fact *= (2 * p - 1) * (2 * p);
			Rational k = bernoulli(2 * p) / Rational(fact);
			const LieSeries& s = get_nested(get_nested, 2 * p, n);
			if (!s.is_zero())
				next += s * k;
		}
		z[n + 1] = next * Rational(1, n + 1);
	}
	LieSeries out(x.genus(), n_max);
	for (int n = 1; n <= n_max; ++n)
		out += z[n];
	return out;
}

std::vector<LyndonElem> lyndon_basis(int genus, int degree)
{
	if (degree < 1)
		throw std::invalid_argument("lyndon_basis: degree must be >= 1");
	auto t = LyndonTable::get(genus, degree);
	std::vector<LyndonElem> out;
	for (LyndonId id = t->begin_of_degree(degree); id < t->end_of_degree(degree); ++id)
		out.push_back(LyndonElem{id, t->word(id), t->bracketing(id)});
	return out;
}

} // namespace treelie
