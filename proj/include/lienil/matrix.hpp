#pragma once

#include <optional>
#include <vector>

#include "lienil/subspace.hpp"

namespace lienil {

/// Exact rational matrix with fixed dimensions. Storage is column-sparse;
/// the contract is only exactness and canonical reduced forms.
class Matrix {
public:
	Matrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {
		if (rows < 0 || cols < 0)
			throw DomainError("Matrix: negative dimension");
	}

	static Matrix identity(int n) {
		Matrix m(n, n);
		for (int i = 0; i < n; ++i)
			m.col_[i] = SparseVec::unit(i);
		return m;
	}

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	const SparseVec& col(int c) const {
		check_col(c);
		return col_[c];
	}

	void set_col(int c, SparseVec v) {
		check_col(c);
		if (!v.is_zero() && v.entries().back().first >= rows_)
			throw DomainError("Matrix: column entry out of range");
		col_[c] = std::move(v);
	}

	Rational at(int r, int c) const {
		check_col(c);
		if (r < 0 || r >= rows_)
			throw DomainError("Matrix: row index out of range");
		return col_[c].at(r);
	}

	void set(int r, int c, const Rational& v) {
		check_col(c);
		if (r < 0 || r >= rows_)
			throw DomainError("Matrix: row index out of range");
		std::vector<SparseVec::Entry> entries(col_[c].entries());
		bool found = false;
		for (auto& [i, x] : entries)
			if (i == r) {
				x = v;
				found = true;
			}
		if (!found)
			entries.emplace_back(r, v);
		col_[c] = SparseVec::from_entries(std::move(entries));
	}

	/// Matrix-vector product, sparse in and out.
	SparseVec apply(const SparseVec& v) const {
		SparseVec out;
		for (const auto& [i, c] : v.entries()) {
			check_col(i);
			out.axpy(c, col_[i]);
		}
		return out;
	}

	Matrix mul(const Matrix& b) const {
		if (cols_ != b.rows_)
			throw DomainError("Matrix mul: shape mismatch");
		Matrix r(rows_, b.cols_);
		for (int k = 0; k < b.cols_; ++k)
			r.col_[k] = apply(b.col_[k]);
		return r;
	}

	Matrix operator*(const Matrix& b) const { return mul(b); }

	Matrix add_scaled(const Rational& a, const Matrix& b) const {
		if (rows_ != b.rows_ || cols_ != b.cols_)
			throw DomainError("Matrix add: shape mismatch");
		Matrix r = *this;
		for (int k = 0; k < cols_; ++k)
			r.col_[k].axpy(a, b.col_[k]);
		return r;
	}

	Matrix operator+(const Matrix& b) const { return add_scaled(Rational(1), b); }
	Matrix operator-(const Matrix& b) const { return add_scaled(Rational(-1), b); }

	Matrix scaled(const Rational& a) const {
		Matrix r = *this;
		for (auto& c : r.col_)
			c.scale(a);
		return r;
	}

	/// [A, B] = AB - BA
	Matrix commutator(const Matrix& b) const {
		return mul(b) - b.mul(*this);
	}

	bool is_zero() const {
		for (const auto& c : col_)
			if (!c.is_zero())
				return false;
		return true;
	}

	int nnz() const {
		int n = 0;
		for (const auto& c : col_)
			n += c.nnz();
		return n;
	}

	/// Zero out all columns except [begin, end) and keep only rows in
	/// [rbegin, rend): the block projection p_rows o M o p_cols.
	Matrix block(int rbegin, int rend, int cbegin, int cend) const {
		Matrix r(rows_, cols_);
		for (int k = cbegin; k < cend; ++k) {
			std::vector<SparseVec::Entry> kept;
			for (const auto& [i, c] : col_[k].entries())
				if (i >= rbegin && i < rend)
					kept.emplace_back(i, c);
			r.col_[k] = SparseVec::from_entries(std::move(kept));
		}
		return r;
	}

	/// Row-major flattening: entry (r, c) lands at index r * cols + c.
	SparseVec vectorize_row_major() const {
		std::vector<SparseVec::Entry> entries;
		for (int k = 0; k < cols_; ++k)
			for (const auto& [r, c] : col_[k].entries())
				entries.emplace_back(r * cols_ + k, c);
		return SparseVec::from_entries(std::move(entries));
	}

	static Matrix unvectorize_row_major(const SparseVec& v, int n) {
		Matrix m(n, n);
		for (const auto& [f, c] : v.entries()) {
			if (f < 0 || f >= n * n)
				throw DomainError("Matrix: flat index out of range");
			m.col_[f % n].push(f / n, c);
		}
		// entries arrive in flat order, which is row-major; per column the
		// rows are ascending, but push() already enforces that
		return m;
	}

	std::vector<SparseVec> sparse_rows() const {
		std::vector<std::vector<SparseVec::Entry>> buckets(rows_);
		for (int k = 0; k < cols_; ++k)
			for (const auto& [r, c] : col_[k].entries())
				buckets[r].emplace_back(k, c);
		std::vector<SparseVec> rows;
		rows.reserve(rows_);
		for (auto& b : buckets)
			rows.push_back(SparseVec::from_entries(std::move(b)));
		return rows;
	}

	static Matrix from_sparse_rows(int rows, int cols, const std::vector<SparseVec>& r) {
		Matrix m(rows, cols);
		std::vector<std::vector<SparseVec::Entry>> buckets(cols);
		for (int i = 0; i < static_cast<int>(r.size()); ++i)
			for (const auto& [k, c] : r[i].entries())
				buckets[k].emplace_back(i, c);
		for (int k = 0; k < cols; ++k)
			m.col_[k] = SparseVec::from_entries(std::move(buckets[k]));
		return m;
	}

	friend bool operator==(const Matrix& a, const Matrix& b) {
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
	}

private:
	void check_col(int c) const {
		if (c < 0 || c >= cols_)
			throw DomainError("Matrix: column index out of range");
	}

	int rows_, cols_;
	std::vector<SparseVec> col_;
};

struct ReduceResult {
	Matrix rref;
	int rank;
};

/// Unique reduced row echelon form of m; rank = number of nonzero rows.
inline ReduceResult reduce(const Matrix& m) {
	RowReducer red(m.cols());
	for (auto& r : m.sparse_rows())
		red.add_row(std::move(r));
	red.finalize();
	return ReduceResult{Matrix::from_sparse_rows(m.rows(), m.cols(), red.rows()),
	                    red.rank()};
}

/// Canonical basis of {v : m v = 0}.
inline Subspace nullspace(const Matrix& m) {
	RowReducer red(m.cols());
	for (auto& r : m.sparse_rows())
		red.add_row(std::move(r));
	red.finalize();
	return Subspace::span(m.cols(), red.nullspace_basis());
}

inline Subspace column_space(const Matrix& m) {
	std::vector<SparseVec> cols;
	cols.reserve(m.cols());
	for (int k = 0; k < m.cols(); ++k)
		cols.push_back(m.col(k));
	return Subspace::span(m.rows(), cols);
}

inline Matrix inverse(const Matrix& m) {
	if (m.rows() != m.cols())
		throw DomainError("Matrix inverse: not square");
	int n = m.rows();
	RowReducer red(2 * n);
	auto rows = m.sparse_rows();
	for (int i = 0; i < n; ++i) {
		rows[i].push(n + i, Rational(1));
		red.add_row(std::move(rows[i]));
	}
	red.finalize();
	// m is invertible iff the left block owns all pivots of [M | I]
	auto piv = red.pivot_cols();
	for (int i = 0; i < n; ++i)
		if (i >= static_cast<int>(piv.size()) || piv[i] != i)
			throw DomainError("Matrix inverse: singular matrix");
	// then the right half of the reduced form is the inverse
	std::vector<SparseVec> inv_rows(n);
	for (int i = 0; i < n; ++i) {
		std::vector<SparseVec::Entry> entries;
		for (const auto& [c, v] : red.rows()[i].entries())
			if (c >= n)
				entries.emplace_back(c - n, v);
		inv_rows[i] = SparseVec::from_entries(std::move(entries));
	}
	return Matrix::from_sparse_rows(n, n, inv_rows);
}

/// Linear map with kernel exactly s: v maps to its residual modulo s.
inline Matrix residual_matrix(const Subspace& s) {
	int n = s.ambient_dim();
	Matrix m(n, n);
	for (int k = 0; k < n; ++k)
		m.set_col(k, s.residual(SparseVec::unit(k)));
	return m;
}

/// Least r >= 1 with m^r = 0, or nullopt if m is not nilpotent.
/// A nilpotent n x n matrix has index at most n.
inline std::optional<int> nilpotency_index(const Matrix& m) {
	if (m.rows() != m.cols())
		throw DomainError("nilpotency_index: not square");
	Matrix p = m;
	for (int r = 1; r <= m.rows(); ++r) {
		if (p.is_zero())
			return r;
		p = p.mul(m);
	}
	return std::nullopt;
}

/// m^k via repeated squaring; k >= 0.
inline Matrix matrix_power(const Matrix& m, int k) {
	if (m.rows() != m.cols())
		throw DomainError("matrix_power: not square");
	if (k < 0)
		throw DomainError("matrix_power: negative exponent");
	Matrix result = Matrix::identity(m.rows());
	Matrix base = m;
	while (k > 0) {
		if (k & 1)
			result = result.mul(base);
		k >>= 1;
		if (k > 0)
			base = base.mul(base);
	}
	return result;
}

} // namespace lienil
