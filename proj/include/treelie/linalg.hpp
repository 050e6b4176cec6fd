#pragma once

// Exact rational linear algebra. Every rank, kernel, solve and quotient in the
// library goes through here. Matrices are stored as sorted sparse rows; the
// reduced row echelon form is unique, so all derived coordinates are
// reproducible regardless of the elimination order used internally.

#include "treelie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace treelie {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using VectorQ = std::vector<Rational>;

class MatrixQ
{
public:
	MatrixQ() = default;
	MatrixQ(std::size_t rows, std::size_t cols);

	static MatrixQ identity(std::size_t n);
	static MatrixQ from_dense(std::initializer_list<std::initializer_list<long>> rows);
	static MatrixQ from_dense(const std::vector<VectorQ>& rows);

	std::size_t rows() const { return rows_.size(); }
	std::size_t cols() const { return cols_; }

	/// Adds value to entry (r, c). Throws std::out_of_range on bad indices.
	void add(std::size_t r, std::size_t c, const Rational& value);
	void set(std::size_t r, std::size_t c, const Rational& value);
	Rational at(std::size_t r, std::size_t c) const;

	const SparseRow& row(std::size_t r) const { return rows_[r]; }
	/// Replaces a whole row; entries must be sorted by column and nonzero.
	void set_row(std::size_t r, SparseRow row);
	void append_row(SparseRow row);

	std::size_t nonzeros() const;
	VectorQ apply(std::span<const Rational> x) const;
	MatrixQ transpose() const;

	friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

private:
	std::size_t cols_ = 0;
	std::vector<SparseRow> rows_;
};

struct RrefResult
{
	std::size_t rank = 0;
	std::vector<std::size_t> pivot_cols;
	MatrixQ reduced;
};

/// Reduced row echelon form. Zero rows are moved to the bottom.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Particular solution of a·x = b with all free variables set to zero, or
/// nullopt when inconsistent. Throws std::invalid_argument if
/// a.rows() != b.size().
std::optional<VectorQ> solve(const MatrixQ& a, std::span<const Rational> b);

/// Null space basis: one vector per free column (in increasing order), with
/// a 1 at that column and zeros at the other free columns.
std::vector<VectorQ> kernel_basis(const MatrixQ& a);

/// Precomputed factorization for repeated solves against the same matrix.
/// Results are identical to solve().
class LinearSolver
{
public:
	explicit LinearSolver(const MatrixQ& a);

	std::size_t rank() const { return pivot_cols_.size(); }
	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

	std::optional<VectorQ> solve(std::span<const Rational> b) const;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<std::size_t> pivot_cols_;
	// Row transforms: transform_[i] · b gives the i-th reduced right-hand side.
	std::vector<SparseRow> transform_;
	std::vector<SparseRow> consistency_;
};

/// Incrementally built basis of a subspace of Q^n kept in reduced row
/// echelon form. reduce(v) is the canonical representative of v modulo the
/// span: it vanishes at every pivot column.
class EchelonBasis
{
public:
	explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

	std::size_t dim() const { return dim_; }
	std::size_t rank() const { return rows_.size(); }
	const std::vector<std::size_t>& pivots() const { return pivots_; }
	const std::vector<SparseRow>& rows() const { return rows_; }

	/// Returns true if v was independent of the current span.
	bool insert(SparseRow v);
	SparseRow reduce(SparseRow v) const;
	bool contains(const SparseRow& v) const { return reduce(v).empty(); }

private:
	std::size_t dim_;
	std::vector<SparseRow> rows_;      // sorted by pivot column
	std::vector<std::size_t> pivots_;  // increasing
};

SparseRow to_sparse(std::span<const Rational> dense);
VectorQ to_dense(const SparseRow& row, std::size_t dim);

} // namespace treelie
