#pragma once

#include <vector>

#include "lienil/row_reducer.hpp"

namespace lienil {

/// Subspace of Q^n, stored as the reduced row echelon basis of its span.
/// The representation is canonical: equal subspaces compare equal
/// entry-for-entry regardless of the spanning sets they were built from.
class Subspace {
public:
	static Subspace zero(int ambient) { return Subspace(ambient, {}); }

	static Subspace full(int ambient) {
		std::vector<SparseVec> rows;
		rows.reserve(ambient);
		for (int i = 0; i < ambient; ++i)
			rows.push_back(SparseVec::unit(i));
		return Subspace(ambient, std::move(rows));
	}

	static Subspace span(int ambient, const std::vector<SparseVec>& vecs) {
		RowReducer red(ambient);
		for (const auto& v : vecs) {
			check_bounds(v, ambient);
			red.add_row(v);
		}
		red.finalize();
		return Subspace(ambient, red.rows());
	}

	static Subspace from_reducer(RowReducer& red) {
		red.finalize();
		return Subspace(red.cols(), red.rows());
	}

	int ambient_dim() const { return ambient_; }
	int dim() const { return static_cast<int>(rows_.size()); }

	const std::vector<SparseVec>& basis() const { return rows_; }

	std::vector<int> pivots() const {
		std::vector<int> p;
		p.reserve(rows_.size());
		for (const auto& r : rows_)
			p.push_back(r.lead());
		return p;
	}

	SparseVec residual(SparseVec v) const {
		// One pass suffices: in RREF every pivot column is zero in all
		// other rows, so each subtraction cannot reintroduce a pivot.
		for (const auto& row : rows_) {
			if (v.is_zero())
				break;
			Rational c = v.at(row.lead());
			if (!c.is_zero())
				v.axpy(-c, row);
		}
		return v;
	}

	bool contains(const SparseVec& v) const { return residual(v).is_zero(); }

	bool contains(const Subspace& other) const {
		if (other.ambient_ != ambient_)
			throw DomainError("Subspace: ambient dimension mismatch");
		for (const auto& r : other.rows_)
			if (!contains(r))
				return false;
		return true;
	}

	/// Coordinates of v in this basis; throws if v is outside the subspace.
	SparseVec coordinates(const SparseVec& v) const {
		SparseVec coords;
		SparseVec rest = v;
		for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
			Rational c = rest.at(rows_[i].lead());
			if (!c.is_zero()) {
				coords.push(i, c);
				rest.axpy(-c, rows_[i]);
			}
		}
		if (!rest.is_zero())
			throw DomainError("Subspace: vector outside subspace has no coordinates");
		return coords;
	}

	friend bool operator==(const Subspace& a, const Subspace& b) {
		return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
	}

private:
	Subspace(int ambient, std::vector<SparseVec> rows)
	    : ambient_(ambient), rows_(std::move(rows)) {}

	static void check_bounds(const SparseVec& v, int ambient) {
		if (!v.is_zero() && v.entries().back().first >= ambient)
			throw DomainError("Subspace: vector exceeds ambient dimension");
	}

	int ambient_;
	std::vector<SparseVec> rows_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim())
		throw DomainError("Subspace sum: ambient dimension mismatch");
	RowReducer red(a.ambient_dim());
	for (const auto& r : a.basis())
		red.add_row(r);
	for (const auto& r : b.basis())
		red.add_row(r);
	return Subspace::from_reducer(red);
}

/// Exact intersection via the kernel of the coefficient pairing: solve
/// sum_i x_i a_i - sum_j y_j b_j = 0 and read off the a-part.
inline Subspace intersection(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim())
		throw DomainError("Subspace intersection: ambient dimension mismatch");
	int p = a.dim(), q = b.dim();
	// rows of the transposed stacked system, one per ambient coordinate
	std::vector<SparseVec> coord_rows(a.ambient_dim());
	std::vector<std::vector<SparseVec::Entry>> buckets(a.ambient_dim());
	for (int i = 0; i < p; ++i)
		for (const auto& [m, c] : a.basis()[i].entries())
			buckets[m].emplace_back(i, c);
	for (int j = 0; j < q; ++j)
		for (const auto& [m, c] : b.basis()[j].entries())
			buckets[m].emplace_back(p + j, -c);
	RowReducer red(p + q);
	for (auto& bucket : buckets)
		if (!bucket.empty())
			red.add_row(SparseVec::from_entries(std::move(bucket)));
	red.finalize();
	std::vector<SparseVec> result;
	for (const auto& k : red.nullspace_basis()) {
		SparseVec v;
		for (const auto& [i, c] : k.entries())
			if (i < p)
				v.axpy(c, a.basis()[i]);
		result.push_back(std::move(v));
	}
	return Subspace::span(a.ambient_dim(), result);
}

struct SubspaceRelation {
	Subspace sum;
	Subspace intersection;
	bool a_contains_b;
	bool b_contains_a;
};

inline SubspaceRelation subspace_relate(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim())
		throw DomainError("subspace_relate: ambient dimension mismatch");
	SubspaceRelation rel{sum(a, b), intersection(a, b), a.contains(b), b.contains(a)};
	// containment flags must be consistent with the intersection dimension
	if (rel.a_contains_b != (rel.intersection.dim() == b.dim()) ||
	    rel.b_contains_a != (rel.intersection.dim() == a.dim()))
		throw InternalError("subspace_relate: containment flags inconsistent with intersection");
	return rel;
}

} // namespace lienil
