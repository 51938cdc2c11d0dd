#pragma once

#include <optional>
#include <vector>

#include "lienil/invariants.hpp"

namespace lienil {

/// Basis of Der(g) = {D : D[x,y] = [Dx,y] + [x,Dy]}, canonical as the
/// reduced echelon basis of the row-major vectorized solution space.
struct DerivationSpace {
	int algebra_dim;
	std::vector<Matrix> basis;
	Subspace space; // ambient algebra_dim^2, row-major flattening

	int dim() const { return static_cast<int>(basis.size()); }

	bool contains(const Matrix& m) const {
		return space.contains(m.vectorize_row_major());
	}
};

/// Solves the Leibniz system: one equation per basis pair (i < j) and
/// output coordinate m, n^2 unknowns D_{l q} at flat index l*n + q.
/// Identically-zero equations are dropped before elimination.
inline DerivationSpace derivation_space(const LieAlgebra& g) {
	require_valid(g, "derivation_space");
	int n = g.dim();

	// adj_in[j][m] = list of (l, coefficient of X_m in [X_l, X_j])
	std::vector<std::map<int, std::vector<SparseVec::Entry>>> adj_in(n);
	for (const auto& [pair, target] : g.table()) {
		const auto& [a, b] = pair;
		for (const auto& [m, c] : target.entries()) {
			adj_in[b][m].emplace_back(a, c);
			adj_in[a][m].emplace_back(b, -c);
		}
	}

	RowReducer red(n * n);
	std::vector<SparseVec::Entry> row;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			SparseVec bij = g.bracket_basis(i, j);
			auto emit = [&](int m) {
				row.clear();
				for (const auto& [k, c] : bij.entries())
					row.emplace_back(m * n + k, c);
				auto it2 = adj_in[j].find(m);
				if (it2 != adj_in[j].end())
					for (const auto& [l, w] : it2->second)
						row.emplace_back(l * n + i, -w);
				auto it3 = adj_in[i].find(m);
				if (it3 != adj_in[i].end())
					for (const auto& [l, w] : it3->second)
						row.emplace_back(l * n + j, w);
				SparseVec r = SparseVec::accumulate(row);
				if (!r.is_zero())
					red.add_row(std::move(r));
			};
			if (!bij.is_zero()) {
				for (int m = 0; m < n; ++m)
					emit(m);
			} else {
				// only coordinates touched by the ad maps of X_i or X_j
				for (const auto& [m, lst] : adj_in[i])
					emit(m);
				for (const auto& [m, lst] : adj_in[j])
					if (!adj_in[i].count(m))
						emit(m);
			}
		}

	red.finalize();
	Subspace space = Subspace::span(n * n, red.nullspace_basis());
	DerivationSpace d{n, {}, space};
	d.basis.reserve(space.dim());
	for (const auto& r : space.basis())
		d.basis.push_back(Matrix::unvectorize_row_major(r, n));
	return d;
}

/// Characteristic nilpotence report. Route A iterates the derivation orbit
/// g^[1] = Der(g)(g), g^[k] = Der(g)(g^[k-1]); route B takes the lower
/// central series of Der(g) under the commutator. The two must agree.
struct CnlaReport {
	bool is_cnla;
	std::vector<int> orbit_dims;   // dims of g^[1], g^[2], ...; ends 0 or repeats
	std::vector<int> der_lcs_dims; // dim Der, dim C^1 Der, ...; ends 0 or repeats
	std::optional<int> max_derivation_nilpotency_exponent;
	std::optional<Subspace> stable_orbit;
	int derivation_dim;

	/// Smallest m with g^[m] = 0, when characteristically nilpotent.
	std::optional<int> orbit_length() const {
		if (!is_cnla)
			return std::nullopt;
		return static_cast<int>(orbit_dims.size());
	}
};

/// The derivation algebra as an abstract Lie algebra: structure constants of
/// the commutators expanded in the derivation basis. Also verifies closure.
inline LieAlgebra derivation_lie_algebra(const DerivationSpace& der) {
	int d = der.dim();
	LieAlgebra::Table t;
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b) {
			Matrix k = der.basis[a].commutator(der.basis[b]);
			if (k.is_zero())
				continue;
			SparseVec flat = k.vectorize_row_major();
			SparseVec coords = der.space.coordinates(flat); // throws if not closed
			t[{a, b}] = std::move(coords);
		}
	return LieAlgebra(d, std::move(t));
}

inline CnlaReport cnla_check(const LieAlgebra& g, const DerivationSpace& der) {
	if (g.is_abelian())
		throw DomainError("cnla_check: abelian input");
	int n = g.dim();

	CnlaReport rep{};
	rep.derivation_dim = der.dim();

	// Route A: the derivation orbit sequence
	{
		std::vector<SparseVec> cols;
		for (const auto& D : der.basis)
			for (int c = 0; c < n; ++c)
				cols.push_back(D.col(c));
		Subspace current = Subspace::span(n, cols);
		rep.orbit_dims.push_back(current.dim());
		while (current.dim() > 0) {
			std::vector<SparseVec> next_vecs;
			for (const auto& D : der.basis)
				for (const auto& w : current.basis())
					next_vecs.push_back(D.apply(w));
			Subspace next = Subspace::span(n, next_vecs);
			if (!current.contains(next))
				throw InternalError("cnla_check: orbit sequence not descending");
			rep.orbit_dims.push_back(next.dim());
			if (next.dim() == current.dim()) {
				rep.stable_orbit = next;
				break;
			}
			current = std::move(next);
		}
	}
	bool route_a = rep.orbit_dims.back() == 0;

	// Route B: nilpotence of Der(g) as a Lie algebra
	{
		LieAlgebra der_lie = derivation_lie_algebra(der);
		auto series = lower_central_series(der_lie);
		for (const auto& s : series.terms)
			rep.der_lcs_dims.push_back(s.dim());
		bool route_b = series.reaches_zero;
		if (route_a != route_b)
			throw InternalError("cnla_check: orbit route and derivation-series route disagree");
	}

	rep.is_cnla = route_a;

	std::optional<int> max_exp = 0;
	for (const auto& D : der.basis) {
		auto idx = nilpotency_index(D);
		if (!idx) {
			max_exp = std::nullopt;
			break;
		}
		max_exp = std::max(*max_exp, *idx);
	}
	if (der.basis.empty())
		max_exp = std::nullopt;
	rep.max_derivation_nilpotency_exponent = max_exp;
	return rep;
}

inline CnlaReport cnla_check(const LieAlgebra& g) {
	if (g.is_abelian())
		throw DomainError("cnla_check: abelian input");
	// nilpotency is part of the contract
	auto series = lower_central_series(g);
	if (!series.reaches_zero)
		throw DomainError("cnla_check: input is not nilpotent");
	return cnla_check(g, derivation_space(g));
}

} // namespace lienil
