#pragma once

#include <map>
#include <vector>

#include "lienil/sparse_vec.hpp"

namespace lienil {

/// Incremental exact Gaussian elimination over sparse rational rows.
///
/// Rows are reduced forward against the current pivots as they arrive;
/// dependent rows are discarded, so memory stays proportional to the rank.
/// finalize() back-substitutes to the (unique) reduced row echelon form of
/// the accumulated row space, with rows sorted by pivot column.
class RowReducer {
public:
	explicit RowReducer(int cols) : cols_(cols) {}

	int cols() const { return cols_; }
	int rank() const { return static_cast<int>(rows_.size()); }

	/// Returns true if the row was independent of the span so far.
	bool add_row(SparseVec r) {
		forward_reduce(r);
		if (r.is_zero())
			return false;
		Rational inv = Rational(1) / r.lead_coeff();
		r.scale(inv);
		pivot_row_.emplace(r.lead(), static_cast<int>(rows_.size()));
		rows_.push_back(std::move(r));
		finalized_ = false;
		return true;
	}

	/// Forward-reduces a copy of v against the pivots; zero iff v lies in
	/// the current row space.
	SparseVec residual(SparseVec v) const {
		forward_reduce(v);
		return v;
	}

	bool contains(const SparseVec& v) const { return residual(v).is_zero(); }

	/// Back-substitute to full reduced row echelon form and sort rows by
	/// pivot column. Idempotent.
	void finalize() {
		if (finalized_)
			return;
		// Right-to-left: clearing a pivot column can only touch entries at
		// columns to its right, which are already clean.
		for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
			const auto& [col, idx] = *it;
			for (auto& [c2, i2] : pivot_row_) {
				if (i2 == idx)
					continue;
				Rational coeff = rows_[i2].at(col);
				if (!coeff.is_zero())
					rows_[i2].axpy(-coeff, rows_[idx]);
			}
		}
		std::vector<SparseVec> sorted;
		sorted.reserve(rows_.size());
		std::map<int, int> remap;
		for (auto& [col, idx] : pivot_row_) {
			remap[col] = static_cast<int>(sorted.size());
			sorted.push_back(std::move(rows_[idx]));
		}
		rows_ = std::move(sorted);
		pivot_row_ = std::move(remap);
		finalized_ = true;
	}

	/// RREF rows in pivot order. Requires finalize().
	const std::vector<SparseVec>& rows() const {
		if (!finalized_)
			throw InternalError("RowReducer: rows() before finalize()");
		return rows_;
	}

	std::vector<int> pivot_cols() const {
		std::vector<int> p;
		p.reserve(pivot_row_.size());
		for (auto& [col, idx] : pivot_row_)
			p.push_back(col);
		return p;
	}

	/// Canonical basis of {x : Rx = 0} where R is the accumulated row space,
	/// one vector per free column. Requires finalize(). The result is not
	/// itself in RREF; callers canonicalize.
	std::vector<SparseVec> nullspace_basis() const {
		if (!finalized_)
			throw InternalError("RowReducer: nullspace_basis() before finalize()");
		std::vector<SparseVec> basis;
		auto piv = pivot_row_.begin();
		for (int f = 0; f < cols_; ++f) {
			if (piv != pivot_row_.end() && piv->first == f) {
				++piv;
				continue;
			}
			std::vector<SparseVec::Entry> entries;
			entries.emplace_back(f, Rational(1));
			for (auto& [col, idx] : pivot_row_) {
				Rational c = rows_[idx].at(f);
				if (!c.is_zero())
					entries.emplace_back(col, -c);
			}
			basis.push_back(SparseVec::from_entries(std::move(entries)));
		}
		return basis;
	}

private:
	void forward_reduce(SparseVec& r) const {
		while (!r.is_zero()) {
			auto it = pivot_row_.find(r.lead());
			if (it == pivot_row_.end())
				return;
			r.axpy(-r.lead_coeff(), rows_[it->second]);
		}
	}

	int cols_;
	bool finalized_ = true;
	std::vector<SparseVec> rows_;
	std::map<int, int> pivot_row_;
};

} // namespace lienil
