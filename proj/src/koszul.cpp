#include "treelie/koszul.hpp"

#include "treelie/jacobi.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace treelie {

namespace {

struct ChainBasis
{
	std::vector<WedgeKey> keys;
	std::map<WedgeKey, std::size_t> index;
};

std::shared_ptr<const LyndonTable> table_for(int genus, int k)
{
	return LyndonTable::get(genus, k);
}

// Inserts s into the increasing tuple rest; returns the sign of the sort or 0
// when s is already present.
int insert_sorted(LyndonId s, const WedgeKey& rest, WedgeKey& out)
{
	auto pos = std::lower_bound(rest.begin(), rest.end(), s);
	if (pos != rest.end() && *pos == s)
		return 0;
	out.clear();
	out.reserve(rest.size() + 1);
	out.insert(out.end(), rest.begin(), pos);
	out.push_back(s);
	out.insert(out.end(), pos, rest.end());
	return (pos - rest.begin()) % 2 == 0 ? 1 : -1;
}

// ∂ of one monomial accumulated into acc with factor c.
void boundary_monomial(const LyndonTable& t, int k, const WedgeKey& key, const Rational& c,
                       SparseQ<WedgeKey>& acc)
{
	const std::size_t n = key.size();
	WedgeKey rest, out;
	Rational term;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			if (t.degree(key[i]) + t.degree(key[j]) > k)
				continue;
			const IntTerms& br = t.bracket(key[i], key[j]);
			if (br.empty())
				continue;
			rest.clear();
			for (std::size_t m = 0; m < n; ++m)
				if (m != i && m != j)
					rest.push_back(key[m]);
			// 1-based (-1)^{i+j} equals 0-based (-1)^{i+j}
			const int sign = (i + j) % 2 == 0 ? 1 : -1;
			for (const auto& [s, coef] : br)
			{
				const int s2 = insert_sorted(s, rest, out);
				if (s2 == 0)
					continue;
				term = c * (coef * sign * s2);
				accumulate(acc, out, term);
			}
		}
}

const ChainBasis& basis_data(int genus, int k, int arity, int degree)
{
	static std::mutex mutex;
	static std::map<std::tuple<int, int, int, int>, std::unique_ptr<ChainBasis>> cache;
	std::lock_guard lock(mutex);
	auto& slot = cache[{genus, k, arity, degree}];
	if (slot)
		return *slot;
	slot = std::make_unique<ChainBasis>();
	if (genus > 0 && k >= 1 && arity >= 0)
	{
		auto t = table_for(genus, k);
		const LyndonId end = t->end_of_degree(k);
		WedgeKey cur;
		auto rec = [&](auto&& self, LyndonId start, int remaining_arity, int remaining_degree) -> void {
			if (remaining_arity == 0)
			{
				if (remaining_degree == 0)
					slot->keys.push_back(cur);
				return;
			}
			for (LyndonId id = start; id < end; ++id)
			{
				const int dg = t->degree(id);
				// later factors have degree >= dg
				if (dg * remaining_arity > remaining_degree)
					break;
				cur.push_back(id);
				self(self, id + 1, remaining_arity - 1, remaining_degree - dg);
				cur.pop_back();
			}
		};
		rec(rec, 0, arity, degree);
	}
	for (std::size_t i = 0; i < slot->keys.size(); ++i)
		slot->index.emplace(slot->keys[i], i);
	return *slot;
}

struct H3Data
{
	std::size_t dim = 0;
	EchelonBasis image{0};
	std::vector<std::size_t> q_pivots;
};

const H3Data& h3_data(int genus, int k, int degree)
{
	static std::mutex mutex;
	static std::map<std::tuple<int, int, int>, std::unique_ptr<H3Data>> cache;
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find({genus, k, degree}); it != cache.end())
			return *it->second;
	}
	auto data = std::make_unique<H3Data>();
	const std::size_t c3 = chain_basis(genus, k, 3, degree).size();
	data->image = EchelonBasis(c3);
	if (c3 > 0)
	{
		const MatrixQ d4t = boundary_matrix(genus, k, 4, degree).transpose();
		for (std::size_t r = 0; r < d4t.rows(); ++r)
			data->image.insert(d4t.row(r));
		MatrixQ reduced(0, c3);
		for (const auto& z : kernel_basis(boundary_matrix(genus, k, 3, degree)))
		{
			SparseRow r = data->image.reduce(to_sparse(z));
			if (!r.empty())
				reduced.append_row(std::move(r));
		}
		RrefResult rr = rref(reduced);
		data->dim = rr.rank;
		data->q_pivots = rr.pivot_cols;
	}
	std::lock_guard lock(mutex);
	auto [it, inserted] = cache.emplace(std::tuple{genus, k, degree}, std::move(data));
	return *it->second;
}

} // namespace

// ---------------------------------------------------------------------------

WedgeChain::WedgeChain(int genus, int k, int arity) : genus_(genus), k_(k), arity_(arity)
{
	if (genus < 0 || k < 1 || arity < 0)
		throw std::invalid_argument("WedgeChain: invalid genus, class or arity");
}

WedgeChain WedgeChain::wedge(const std::vector<LieSeries>& factors)
{
	if (factors.empty())
		throw std::invalid_argument("wedge: no factors");
	for (const auto& f : factors)
		require_same_context(f, factors.front(), "wedge");
	WedgeChain out(factors.front().genus(), factors.front().max_degree(), static_cast<int>(factors.size()));
	std::vector<LyndonId> ids(factors.size());
	auto rec = [&](auto&& self, std::size_t pos, const Rational& c) -> void {
		if (pos == factors.size())
		{
			out.add_monomial(ids, c);
			return;
		}
		for (const auto& [id, v] : factors[pos].coords())
		{
			ids[pos] = id;
			self(self, pos + 1, c * v);
		}
	};
	rec(rec, 0, Rational(1));
	return out;
}

void WedgeChain::add_monomial(std::vector<LyndonId> ids, const Rational& c)
{
	if (ids.size() != static_cast<std::size_t>(arity_))
		throw std::invalid_argument("WedgeChain: monomial arity mismatch");
	if (treelie::is_zero(c))
		return;
	auto t = table_for(genus_, k_);
	for (LyndonId id : ids)
		if (id >= t->size() || t->degree(id) > k_)
			return;
	// insertion sort with sign
	int sign = 1;
	for (std::size_t i = 1; i < ids.size(); ++i)
		for (std::size_t j = i; j > 0 && ids[j - 1] >= ids[j]; --j)
		{
			if (ids[j - 1] == ids[j])
				return;
			std::swap(ids[j - 1], ids[j]);
			sign = -sign;
		}
	accumulate(terms_, ids, sign > 0 ? c : Rational(-c));
}

int WedgeChain::total_degree(const WedgeKey& key) const
{
	auto t = table_for(genus_, k_);
	int d = 0;
	for (LyndonId id : key)
		d += t->degree(id);
	return d;
}

WedgeChain WedgeChain::degree_part(int d) const
{
	WedgeChain out(genus_, k_, arity_);
	for (const auto& [key, c] : terms_)
		if (total_degree(key) == d)
			out.terms_.emplace(key, c);
	return out;
}

WedgeChain WedgeChain::reduced(int k) const
{
	if (k > k_)
		throw std::invalid_argument("WedgeChain::reduced: class above current class");
	WedgeChain out(genus_, k, arity_);
	auto t = table_for(genus_, k_);
	for (const auto& [key, c] : terms_)
	{
		bool keep = true;
		for (LyndonId id : key)
			keep = keep && t->degree(id) <= k;
		if (keep)
			out.terms_.emplace(key, c);
	}
	return out;
}

void WedgeChain::check_context(const WedgeChain& o, const char* what) const
{
	if (genus_ != o.genus_ || k_ != o.k_ || arity_ != o.arity_)
		throw std::invalid_argument(std::string(what) + ": chain context mismatch");
}

WedgeChain& WedgeChain::operator+=(const WedgeChain& o)
{
	check_context(o, "WedgeChain +");
	for (const auto& [key, c] : o.terms_)
		accumulate(terms_, key, c);
	return *this;
}

WedgeChain& WedgeChain::operator-=(const WedgeChain& o)
{
	check_context(o, "WedgeChain -");
	Rational neg;
	for (const auto& [key, c] : o.terms_)
	{
		neg = -c;
		accumulate(terms_, key, neg);
	}
	return *this;
}

WedgeChain& WedgeChain::operator*=(const Rational& c)
{
	scale(terms_, c);
	return *this;
}

std::string WedgeChain::to_string() const
{
	if (terms_.empty())
		return "0";
	auto t = table_for(genus_, k_);
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
		for (std::size_t i = 0; i < key.size(); ++i)
			os << (i ? "∧" : "") << t->bracketing(key[i]);
		first = false;
	}
	return os.str();
}

WedgeChain boundary(const WedgeChain& c)
{
	if (c.arity() < 1)
		throw std::invalid_argument("boundary: arity must be >= 1");
	WedgeChain out(c.genus(), c.nil_class(), c.arity() - 1);
	if (c.arity() < 2)
		return out;
	auto t = table_for(c.genus(), c.nil_class());
	SparseQ<WedgeKey> acc;
	for (const auto& [key, coef] : c.terms())
		boundary_monomial(*t, c.nil_class(), key, coef, acc);
	for (const auto& [key, coef] : acc)
		out.add_monomial(key, coef);
	return out;
}

const std::vector<WedgeKey>& chain_basis(int genus, int k, int arity, int degree)
{
	return basis_data(genus, k, arity, degree).keys;
}

MatrixQ boundary_matrix(int genus, int k, int arity, int degree)
{
	const ChainBasis& src = basis_data(genus, k, arity, degree);
	const ChainBasis& dst = basis_data(genus, k, arity - 1, degree);
	MatrixQ m(dst.keys.size(), src.keys.size());
	if (arity < 2 || src.keys.empty())
		return m;
	auto t = table_for(genus, k);
	for (std::size_t col = 0; col < src.keys.size(); ++col)
	{
		SparseQ<WedgeKey> acc;
		boundary_monomial(*t, k, src.keys[col], Rational(1), acc);
		for (const auto& [key, c] : acc)
			m.add(dst.index.at(key), col, c);
	}
	return m;
}

std::map<int, std::size_t> homology_dims(int genus, int k, int n)
{
	if (k < 1 || n < 1)
		throw std::invalid_argument("homology_dims: class and n must be >= 1");
	std::map<int, std::size_t> dims;
	for (int d = n; d <= n * k; ++d)
	{
		const std::size_t cn = chain_basis(genus, k, n, d).size();
		if (cn == 0)
			continue;
		const std::size_t rank_n = n >= 2 ? rank(boundary_matrix(genus, k, n, d)) : 0;
		const std::size_t rank_up = chain_basis(genus, k, n + 1, d).empty() ? 0 : rank(boundary_matrix(genus, k, n + 1, d));
		const std::size_t dim = cn - rank_n - rank_up;
		if (dim > 0)
			dims[d] = dim;
	}
	return dims;
}

// ---------------------------------------------------------------------------

bool HomologyClass::is_zero() const
{
	for (const auto& [d, v] : coords)
		for (const auto& c : v)
			if (!treelie::is_zero(c))
				return false;
	return true;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o)
{
	if (genus != o.genus || k != o.k || coords.size() != o.coords.size())
		throw std::invalid_argument("HomologyClass +: context mismatch");
	for (auto& [d, v] : coords)
	{
		const VectorQ& w = o.coords.at(d);
		for (std::size_t i = 0; i < v.size(); ++i)
			v[i] += w[i];
	}
	return *this;
}

HomologyClass HomologyClass::operator-() const
{
	HomologyClass out = *this;
	for (auto& [d, v] : out.coords)
		for (auto& c : v)
			c = -c;
	return out;
}

std::string HomologyClass::to_string() const
{
	std::ostringstream os;
	os << "{";
	bool first = true;
	for (const auto& [d, v] : coords)
	{
		os << (first ? "" : ", ") << "deg " << d << ": [";
		for (std::size_t i = 0; i < v.size(); ++i)
			os << (i ? " " : "") << treelie::to_string(v[i]);
		os << "]";
		first = false;
	}
	os << "}";
	return os.str();
}

HomologyClass zero_class(int genus, int k)
{
	HomologyClass h{genus, k, {}};
	for (int d = 3; d <= 3 * k; ++d)
	{
		const H3Data& data = h3_data(genus, k, d);
		if (data.dim > 0)
			h.coords[d] = VectorQ(data.dim, Rational(0));
	}
	return h;
}

HomologyClass class_of(const WedgeChain& z)
{
	if (z.arity() != 3)
		throw std::domain_error("class_of: expected a 3-chain");
	if (!boundary(z).is_zero())
		throw std::domain_error("class_of: chain is not a cycle");
	HomologyClass h = zero_class(z.genus(), z.nil_class());
	for (auto& [d, coords] : h.coords)
	{
		const ChainBasis& basis = basis_data(z.genus(), z.nil_class(), 3, d);
		SparseRow row;
		for (const auto& [key, c] : z.terms())
			if (auto it = basis.index.find(key); it != basis.index.end())
				row.emplace_back(it->second, c);
		std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
		const H3Data& data = h3_data(z.genus(), z.nil_class(), d);
		const SparseRow r = data.image.reduce(std::move(row));
		for (std::size_t i = 0; i < data.q_pivots.size(); ++i)
		{
			auto it = std::lower_bound(r.begin(), r.end(), data.q_pivots[i],
			                           [](const auto& e, std::size_t col) { return e.first < col; });
			if (it != r.end() && it->first == data.q_pivots[i])
				coords[i] = it->second;
		}
	}
	return h;
}

HomologyClass capital_phi(const TreeCombo& c, int k)
{
	WedgeChain sum(c.genus(), k, 3);
	for (const auto& [key, coef] : c.terms())
	{
		const TreeDiagram t = TreeDiagram::parse(key, c.genus());
		if (t.degree() < k)
			throw std::domain_error("capital_phi: tree degree " + std::to_string(t.degree()) + " below class " +
			                        std::to_string(k));
		sum += fission(t, k) * coef;
	}
	return class_of(sum);
}

PhiRankReport phi_rank(int genus, int k)
{
	PhiRankReport r;
	for (const auto& [d, dim] : homology_dims(genus, k, 3))
		r.h3_dim += dim;
	MatrixQ m(0, r.h3_dim);
	for (int d = k; d <= 2 * k - 1; ++d)
	{
		r.tree_dim += tree_space_dim(genus, d);
		for (const auto& t : tree_basis(genus, d))
		{
			TreeCombo one(genus);
			one.add(t, Rational(1));
			const HomologyClass h = capital_phi(one, k);
			VectorQ flat;
			for (const auto& [deg, v] : h.coords)
				flat.insert(flat.end(), v.begin(), v.end());
			m.append_row(to_sparse(flat));
		}
	}
	r.rank = rank(m);
	return r;
}

} // namespace treelie
