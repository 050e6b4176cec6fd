#include "treelie/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace treelie {

namespace {

// dst -= factor * src, merging sorted sparse rows.
void sub_scaled(SparseRow& dst, const SparseRow& src, const Rational& factor)
{
	SparseRow out;
	out.reserve(dst.size() + src.size());
	auto a = dst.begin();
	auto b = src.begin();
	Rational t;
	while (a != dst.end() || b != src.end())
	{
		if (b == src.end() || (a != dst.end() && a->first < b->first))
		{
			out.push_back(std::move(*a));
			++a;
		}
		else if (a == dst.end() || b->first < a->first)
		{
			t = -factor * b->second;
			out.emplace_back(b->first, t);
			++b;
		}
		else
		{
			t = a->second - factor * b->second;
			if (!is_zero(t))
				out.emplace_back(a->first, t);
			++a;
			++b;
		}
	}
	dst = std::move(out);
}

const Rational* find_entry(const SparseRow& row, std::size_t col)
{
	auto it = std::lower_bound(row.begin(), row.end(), col,
	                           [](const auto& e, std::size_t c) { return e.first < c; });
	if (it == row.end() || it->first != col)
		return nullptr;
	return &it->second;
}

// Gaussian elimination to the unique reduced row echelon form. Rows are
// bucketed by leading column; within a bucket the sparsest row is the pivot.
std::vector<SparseRow> eliminate(std::vector<SparseRow> input)
{
	std::map<std::size_t, std::vector<SparseRow>> buckets;
	for (auto& r : input)
		if (!r.empty())
			buckets[r.front().first].push_back(std::move(r));

	std::vector<SparseRow> echelon;
	while (!buckets.empty())
	{
		auto node = buckets.extract(buckets.begin());
		auto& list = node.mapped();
		std::size_t best = 0;
		for (std::size_t i = 1; i < list.size(); ++i)
			if (list[i].size() < list[best].size())
				best = i;
		SparseRow pivot = std::move(list[best]);
		if (pivot.front().second != 1)
		{
			Rational inv = 1 / pivot.front().second;
			for (auto& e : pivot)
				e.second *= inv;
		}
		for (std::size_t i = 0; i < list.size(); ++i)
		{
			if (i == best)
				continue;
			SparseRow r = std::move(list[i]);
			Rational f = r.front().second;
			sub_scaled(r, pivot, f);
			if (!r.empty())
				buckets[r.front().first].push_back(std::move(r));
		}
		echelon.push_back(std::move(pivot));
	}

	// Back substitution. Later rows are already free of other pivot columns,
	// so subtracting them never reintroduces a pivot entry.
	std::vector<std::size_t> pivots;
	pivots.reserve(echelon.size());
	for (const auto& r : echelon)
		pivots.push_back(r.front().first);
	for (std::size_t i = echelon.size(); i-- > 0;)
	{
		std::vector<std::pair<std::size_t, Rational>> hits;
		for (std::size_t e = 1; e < echelon[i].size(); ++e)
		{
			auto col = echelon[i][e].first;
			auto it = std::lower_bound(pivots.begin(), pivots.end(), col);
			if (it != pivots.end() && *it == col)
				hits.emplace_back(static_cast<std::size_t>(it - pivots.begin()),
				                  echelon[i][e].second);
		}
		for (const auto& [j, f] : hits)
			sub_scaled(echelon[i], echelon[j], f);
	}
	return echelon;
}

Rational dot(const SparseRow& row, std::span<const Rational> b)
{
	Rational s = 0;
	for (const auto& [c, v] : row)
		if (!is_zero(b[c]))
			s += v * b[c];
	return s;
}

} // namespace

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

MatrixQ MatrixQ::identity(std::size_t n)
{
	MatrixQ m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m.rows_[i].emplace_back(i, Rational(1));
	return m;
}

MatrixQ MatrixQ::from_dense(std::initializer_list<std::initializer_list<long>> rows)
{
	std::vector<VectorQ> dense;
	for (const auto& r : rows)
	{
		VectorQ v;
		for (long x : r)
			v.emplace_back(x);
		dense.push_back(std::move(v));
	}
	return from_dense(dense);
}

MatrixQ MatrixQ::from_dense(const std::vector<VectorQ>& rows)
{
	std::size_t cols = rows.empty() ? 0 : rows.front().size();
	MatrixQ m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		if (rows[r].size() != cols)
			throw std::invalid_argument("MatrixQ::from_dense: ragged rows");
		m.rows_[r] = to_sparse(rows[r]);
	}
	return m;
}

void MatrixQ::add(std::size_t r, std::size_t c, const Rational& value)
{
	if (r >= rows_.size() || c >= cols_)
		throw std::out_of_range("MatrixQ::add: index out of range");
	if (is_zero(value))
		return;
	auto& row = rows_[r];
	auto it = std::lower_bound(row.begin(), row.end(), c,
	                           [](const auto& e, std::size_t col) { return e.first < col; });
	if (it != row.end() && it->first == c)
	{
		it->second += value;
		if (is_zero(it->second))
			row.erase(it);
	}
	else
		row.emplace(it, c, value);
}

void MatrixQ::set(std::size_t r, std::size_t c, const Rational& value)
{
	if (r >= rows_.size() || c >= cols_)
		throw std::out_of_range("MatrixQ::set: index out of range");
	auto& row = rows_[r];
	auto it = std::lower_bound(row.begin(), row.end(), c,
	                           [](const auto& e, std::size_t col) { return e.first < col; });
	bool present = it != row.end() && it->first == c;
	if (is_zero(value))
	{
		if (present)
			row.erase(it);
	}
	else if (present)
		it->second = value;
	else
		row.emplace(it, c, value);
}

Rational MatrixQ::at(std::size_t r, std::size_t c) const
{
	if (r >= rows_.size() || c >= cols_)
		throw std::out_of_range("MatrixQ::at: index out of range");
	const Rational* v = find_entry(rows_[r], c);
	return v ? *v : Rational(0);
}

void MatrixQ::set_row(std::size_t r, SparseRow row)
{
	if (r >= rows_.size())
		throw std::out_of_range("MatrixQ::set_row: row out of range");
	for (std::size_t i = 0; i < row.size(); ++i)
	{
		if (row[i].first >= cols_ || is_zero(row[i].second) ||
		    (i > 0 && row[i - 1].first >= row[i].first))
			throw std::invalid_argument("MatrixQ::set_row: row not sorted, in range and nonzero");
	}
	rows_[r] = std::move(row);
}

void MatrixQ::append_row(SparseRow row)
{
	rows_.emplace_back();
	set_row(rows_.size() - 1, std::move(row));
}

std::size_t MatrixQ::nonzeros() const
{
	std::size_t n = 0;
	for (const auto& r : rows_)
		n += r.size();
	return n;
}

VectorQ MatrixQ::apply(std::span<const Rational> x) const
{
	if (x.size() != cols_)
		throw std::invalid_argument("MatrixQ::apply: dimension mismatch");
	VectorQ y(rows_.size());
	for (std::size_t r = 0; r < rows_.size(); ++r)
		y[r] = dot(rows_[r], x);
	return y;
}

MatrixQ MatrixQ::transpose() const
{
	MatrixQ t(cols_, rows_.size());
	for (std::size_t r = 0; r < rows_.size(); ++r)
		for (const auto& [c, v] : rows_[r])
			t.rows_[c].emplace_back(r, v);
	return t;
}

RrefResult rref(const MatrixQ& m)
{
	std::vector<SparseRow> rows;
	rows.reserve(m.rows());
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(m.row(r));
	auto echelon = eliminate(std::move(rows));

	RrefResult out;
	out.rank = echelon.size();
	out.reduced = MatrixQ(m.rows(), m.cols());
	for (std::size_t i = 0; i < echelon.size(); ++i)
	{
		out.pivot_cols.push_back(echelon[i].front().first);
		out.reduced.set_row(i, std::move(echelon[i]));
	}
	return out;
}

std::size_t rank(const MatrixQ& m)
{
	return rref(m).rank;
}

std::optional<VectorQ> solve(const MatrixQ& a, std::span<const Rational> b)
{
	if (a.rows() != b.size())
		throw std::invalid_argument("solve: matrix rows and right-hand side length differ");
	const std::size_t n = a.cols();
	std::vector<SparseRow> rows;
	rows.reserve(a.rows());
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		SparseRow row = a.row(r);
		if (!is_zero(b[r]))
			row.emplace_back(n, b[r]);
		rows.push_back(std::move(row));
	}
	auto echelon = eliminate(std::move(rows));
	VectorQ x(n);
	for (const auto& row : echelon)
	{
		std::size_t lead = row.front().first;
		if (lead == n)
			return std::nullopt;
		if (row.back().first == n)
			x[lead] = row.back().second;
	}
	return x;
}

std::vector<VectorQ> kernel_basis(const MatrixQ& a)
{
	auto r = rref(a);
	const std::size_t n = a.cols();
	std::vector<bool> is_pivot(n, false);
	for (auto p : r.pivot_cols)
		is_pivot[p] = true;
	std::vector<VectorQ> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (is_pivot[f])
			continue;
		VectorQ v(n);
		v[f] = 1;
		for (std::size_t i = 0; i < r.rank; ++i)
			if (const Rational* e = find_entry(r.reduced.row(i), f))
				v[r.pivot_cols[i]] = -*e;
		basis.push_back(std::move(v));
	}
	return basis;
}

LinearSolver::LinearSolver(const MatrixQ& a) : rows_(a.rows()), cols_(a.cols())
{
	std::vector<SparseRow> rows;
	rows.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
	{
		SparseRow row = a.row(r);
		row.emplace_back(cols_ + r, Rational(1));
		rows.push_back(std::move(row));
	}
	auto echelon = eliminate(std::move(rows));
	for (auto& row : echelon)
	{
		std::size_t lead = row.front().first;
		SparseRow tail;
		for (auto& [c, v] : row)
			if (c >= cols_)
				tail.emplace_back(c - cols_, std::move(v));
		if (lead < cols_)
		{
			pivot_cols_.push_back(lead);
			transform_.push_back(std::move(tail));
		}
		else
			consistency_.push_back(std::move(tail));
	}
}

std::optional<VectorQ> LinearSolver::solve(std::span<const Rational> b) const
{
	if (b.size() != rows_)
		throw std::invalid_argument("LinearSolver::solve: right-hand side length mismatch");
	for (const auto& row : consistency_)
		if (!is_zero(dot(row, b)))
			return std::nullopt;
	VectorQ x(cols_);
	for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
		x[pivot_cols_[i]] = dot(transform_[i], b);
	return x;
}

SparseRow EchelonBasis::reduce(SparseRow v) const
{
	std::vector<std::pair<std::size_t, Rational>> hits;
	for (const auto& [c, val] : v)
	{
		auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
		if (it != pivots_.end() && *it == c)
			hits.emplace_back(static_cast<std::size_t>(it - pivots_.begin()), val);
	}
	for (const auto& [i, f] : hits)
		sub_scaled(v, rows_[i], f);
	return v;
}

bool EchelonBasis::insert(SparseRow v)
{
	for (const auto& e : v)
		if (e.first >= dim_)
			throw std::out_of_range("EchelonBasis::insert: index out of range");
	v = reduce(std::move(v));
	if (v.empty())
		return false;
	if (v.front().second != 1)
	{
		Rational inv = 1 / v.front().second;
		for (auto& e : v)
			e.second *= inv;
	}
	const std::size_t lead = v.front().first;
	for (auto& row : rows_)
		if (const Rational* e = find_entry(row, lead))
		{
			Rational f = *e;
			sub_scaled(row, v, f);
		}
	auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
	auto idx = pos - pivots_.begin();
	pivots_.insert(pos, lead);
	rows_.insert(rows_.begin() + idx, std::move(v));
	return true;
}

SparseRow to_sparse(std::span<const Rational> dense)
{
	SparseRow row;
	for (std::size_t i = 0; i < dense.size(); ++i)
		if (!is_zero(dense[i]))
			row.emplace_back(i, dense[i]);
	return row;
}

VectorQ to_dense(const SparseRow& row, std::size_t dim)
{
	VectorQ v(dim);
	for (const auto& [c, x] : row)
		v.at(c) = x;
	return v;
}

} // namespace treelie
