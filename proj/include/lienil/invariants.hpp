#pragma once

#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/matrix.hpp"

namespace lienil {

/// Classical invariants of a nilpotent Lie algebra.
struct AlgebraInvariants {
	Subspace center;
	/// C^0 g = g, C^1 g = [g, g], C^{k+1} g = [g, C^k g]; last entry is zero.
	std::vector<Subspace> lower_central;
	/// Smallest k with C^k g = 0.
	int nilindex;
	/// Basis indices (0-based, ascending) whose classes form a basis of g/C^1 g.
	std::vector<int> generator_indices;
	/// T = {v : [v, g] in Z(g)}.
	Subspace transporter;

	const Subspace& derived() const { return lower_central[1]; }

	std::vector<int> lower_central_dims() const {
		std::vector<int> d;
		d.reserve(lower_central.size());
		for (const auto& s : lower_central)
			d.push_back(s.dim());
		return d;
	}
};

/// span{[x, s] : x in g, s in S}
inline Subspace bracket_image(const LieAlgebra& g, const Subspace& s) {
	RowReducer red(g.dim());
	for (const auto& w : s.basis())
		for (int i = 0; i < g.dim(); ++i) {
			SparseVec v;
			for (const auto& [j, c] : w.entries())
				v.axpy(c, g.bracket_basis(i, j));
			if (!v.is_zero())
				red.add_row(std::move(v));
		}
	return Subspace::from_reducer(red);
}

struct SeriesResult {
	std::vector<Subspace> terms; // C^0, C^1, ...; last entry zero or stable
	bool reaches_zero;
};

/// Lower central series, stopping at zero or at the first stable term.
inline SeriesResult lower_central_series(const LieAlgebra& g) {
	SeriesResult r;
	r.terms.push_back(Subspace::full(g.dim()));
	for (;;) {
		Subspace next = bracket_image(g, r.terms.back());
		if (!r.terms.back().contains(next))
			throw InternalError("lower_central_series: series not descending");
		if (next.dim() == 0) {
			r.terms.push_back(std::move(next));
			r.reaches_zero = true;
			return r;
		}
		if (next.dim() == r.terms.back().dim()) {
			r.terms.push_back(std::move(next));
			r.reaches_zero = false;
			return r;
		}
		r.terms.push_back(std::move(next));
	}
}

inline Subspace center(const LieAlgebra& g) {
	int n = g.dim();
	// stacked rows of all ad maps v -> [v, X_j], one row per (j, coordinate)
	std::map<std::pair<int, int>, std::vector<SparseVec::Entry>> rows;
	for (const auto& [pair, target] : g.table()) {
		const auto& [a, b] = pair;
		for (const auto& [m, c] : target.entries()) {
			rows[{b, m}].emplace_back(a, c);
			rows[{a, m}].emplace_back(b, -c);
		}
	}
	RowReducer red(n);
	for (auto& [key, entries] : rows)
		red.add_row(SparseVec::from_entries(std::move(entries)));
	red.finalize();
	return Subspace::span(n, red.nullspace_basis());
}

/// T = {v : [v, X_j] in Z(g) for all j}, via the residual map modulo Z.
inline Subspace transporter(const LieAlgebra& g) {
	int n = g.dim();
	Subspace z = center(g);
	std::map<std::pair<int, int>, std::vector<SparseVec::Entry>> rows;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			if (i == j)
				continue;
			SparseVec res = z.residual(g.bracket_basis(i, j));
			for (const auto& [m, c] : res.entries())
				rows[{j, m}].emplace_back(i, c);
		}
	RowReducer red(n);
	for (auto& [key, entries] : rows)
		red.add_row(SparseVec::from_entries(std::move(entries)));
	red.finalize();
	return Subspace::span(n, red.nullspace_basis());
}

/// Greedy generator choice: ascending basis indices independent modulo C^1 g.
inline std::vector<int> generator_indices(const LieAlgebra& g, const Subspace& derived) {
	RowReducer red(g.dim());
	for (const auto& r : derived.basis())
		red.add_row(r);
	std::vector<int> gens;
	for (int i = 0; i < g.dim(); ++i)
		if (red.add_row(SparseVec::unit(i)))
			gens.push_back(i);
	return gens;
}

inline std::vector<int> generator_indices(const LieAlgebra& g) {
	return generator_indices(g, bracket_image(g, Subspace::full(g.dim())));
}

/// All invariants at once. Requires a valid nilpotent algebra; rejects
/// non-nilpotent input naming the stable series term.
inline AlgebraInvariants invariants(const LieAlgebra& g) {
	require_valid(g, "invariants");
	auto series = lower_central_series(g);
	if (!series.reaches_zero)
		throw DomainError("invariants: not nilpotent, lower central series stabilizes at C^" +
		                  std::to_string(series.terms.size() - 1) + " of dimension " +
		                  std::to_string(series.terms.back().dim()));
	AlgebraInvariants inv{center(g),
	                      series.terms,
	                      static_cast<int>(series.terms.size()) - 1,
	                      generator_indices(g, series.terms[1]),
	                      transporter(g)};
	// the last nonzero series term is central, and T always contains Z
	if (inv.nilindex >= 1 && !inv.center.contains(series.terms[inv.nilindex - 1]))
		throw InternalError("invariants: last nonzero series term is not central");
	if (!inv.transporter.contains(inv.center))
		throw InternalError("invariants: transporter does not contain the center");
	return inv;
}

/// The block subalgebra on basis indices [begin, end). Fails if some bracket
/// inside the block leaves it.
inline LieAlgebra restrict_to_block(const LieAlgebra& g, int begin, int end) {
	if (begin < 0 || end > g.dim() || begin >= end)
		throw DomainError("restrict_to_block: bad range");
	LieAlgebra::Table t;
	for (const auto& [pair, target] : g.table()) {
		const auto& [i, j] = pair;
		bool iin = i >= begin && i < end, jin = j >= begin && j < end;
		if (!iin && !jin)
			continue;
		if (iin != jin)
			continue;
		for (const auto& [m, c] : target.entries())
			if (m < begin || m >= end)
				throw DomainError("restrict_to_block: block is not a subalgebra");
		SparseVec v = target;
		v.shift(-begin);
		t[{i - begin, j - begin}] = std::move(v);
	}
	std::vector<std::string> labels(g.labels().begin() + begin, g.labels().begin() + end);
	return LieAlgebra(end - begin, std::move(t), std::move(labels));
}

/// Embed a subspace of Q^k into Q^ambient at the given offset.
inline Subspace embed(const Subspace& s, int ambient, int offset) {
	std::vector<SparseVec> rows;
	rows.reserve(s.dim());
	for (const auto& r : s.basis())
		rows.push_back(r.shifted(offset));
	return Subspace::span(ambient, rows);
}

} // namespace lienil
