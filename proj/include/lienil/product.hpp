#pragma once

#include <string>
#include <vector>

#include "lienil/cochain.hpp"

namespace lienil {

/// Block bookkeeping for a constructed generator product. Ranges are
/// half-open 0-based intervals partitioning [0, dim) in order g1, g2, g3;
/// generator lists hold absolute indices into the product.
/// The (a, b)-th generator pair owns the g3 vector at offset a * n2 + b.
struct ProductDecomposition {
	int g1_begin, g1_end;
	int g2_begin, g2_end;
	int g3_begin, g3_end;
	std::vector<int> g1_generators;
	std::vector<int> g2_generators;
	int n1, n2;
	bool factors_rebased = false;

	int dim() const { return g3_end; }
	int g3_index(int a, int b) const { return g3_begin + a * n2 + b; }
};

struct Product {
	LieAlgebra algebra;
	ProductDecomposition decomposition;
};

/// True when the derived subalgebra is exactly the coordinate span of the
/// non-generator basis vectors. The construction needs this: the pairing
/// cochain must vanish on everything a bracket can produce.
inline bool has_adapted_basis(const LieAlgebra& g, const AlgebraInvariants& inv) {
	RowReducer nongen(g.dim());
	auto git = inv.generator_indices.begin();
	for (int i = 0; i < g.dim(); ++i) {
		if (git != inv.generator_indices.end() && *git == i)
			++git;
		else
			nongen.add_row(SparseVec::unit(i));
	}
	return Subspace::from_reducer(nongen) == inv.derived();
}

/// Deterministic change of basis to an adapted one: the greedy generators
/// first, then the echelon basis of the derived subalgebra.
inline LieAlgebra adapted_form(const LieAlgebra& g, const AlgebraInvariants& inv) {
	int n = g.dim();
	Matrix p(n, n);
	int col = 0;
	for (int i : inv.generator_indices)
		p.set_col(col++, SparseVec::unit(i));
	for (const auto& r : inv.derived().basis())
		p.set_col(col++, r);
	if (col != n)
		throw InternalError("adapted_form: generators and derived subalgebra do not fill the space");
	Matrix pinv = inverse(p);
	LieAlgebra::Table t;
	for (int a = 0; a < n; ++a)
		for (int b = a + 1; b < n; ++b) {
			SparseVec w = g.bracket(p.col(a), p.col(b));
			if (!w.is_zero())
				t[{a, b}] = pinv.apply(w);
		}
	return LieAlgebra(n, std::move(t));
}

namespace detail {

inline std::vector<std::string> product_labels(const LieAlgebra& g1, const LieAlgebra& g2,
                                               int zcount) {
	std::vector<std::string> labels = g1.labels();
	auto add_unique = [&labels](std::string s) {
		for (;;) {
			bool clash = false;
			for (const auto& l : labels)
				if (l == s) {
					clash = true;
					break;
				}
			if (!clash)
				break;
			s += "'";
		}
		labels.push_back(std::move(s));
	};
	for (const auto& l : g2.labels())
		add_unique(l + "'");
	for (int z = 1; z <= zcount; ++z)
		add_unique("Z" + std::to_string(z));
	return labels;
}

} // namespace detail

/// Central extension of g1 (+) g2 pairing each generator of g1 with each
/// generator of g2 into a new central vector. Both factors must be valid,
/// nilpotent and nonabelian; a factor whose basis is not adapted is
/// deterministically re-based first.
inline Product product_by_generators(const LieAlgebra& g1_in, const LieAlgebra& g2_in) {
	require_valid(g1_in, "product_by_generators");
	require_valid(g2_in, "product_by_generators");
	if (g1_in.is_abelian() || g2_in.is_abelian())
		throw DomainError("product_by_generators: factors must be nonabelian");

	LieAlgebra g1 = g1_in, g2 = g2_in;
	AlgebraInvariants inv1 = invariants(g1), inv2 = invariants(g2);
	bool rebased = false;
	if (!has_adapted_basis(g1, inv1)) {
		g1 = adapted_form(g1, inv1);
		inv1 = invariants(g1);
		rebased = true;
	}
	if (!has_adapted_basis(g2, inv2)) {
		g2 = adapted_form(g2, inv2);
		inv2 = invariants(g2);
		rebased = true;
	}

	int m1 = g1.dim(), m2 = g2.dim();
	int n1 = static_cast<int>(inv1.generator_indices.size());
	int n2 = static_cast<int>(inv2.generator_indices.size());
	int dim = m1 + m2 + n1 * n2;

	LieAlgebra::Table t = g1.table();
	for (const auto& [pair, target] : g2.table())
		t[{pair.first + m1, pair.second + m1}] = target.shifted(m1);
	for (int a = 0; a < n1; ++a)
		for (int b = 0; b < n2; ++b)
			t[{inv1.generator_indices[a], m1 + inv2.generator_indices[b]}] =
			    SparseVec::unit(m1 + m2 + a * n2 + b);

	Product p{LieAlgebra(dim, std::move(t), detail::product_labels(g1, g2, n1 * n2)),
	          ProductDecomposition{0, m1, m1, m1 + m2, m1 + m2, dim, {}, {}, n1, n2, rebased}};
	p.decomposition.g1_generators = inv1.generator_indices;
	for (int b : inv2.generator_indices)
		p.decomposition.g2_generators.push_back(m1 + b);

	// postconditions
	if (!validate(p.algebra).empty())
		throw InternalError("product_by_generators: constructed table violates Jacobi");
	auto pinv = invariants(p.algebra);
	int expected_nilindex = std::max(inv1.nilindex, inv2.nilindex);
	if (pinv.nilindex != expected_nilindex)
		throw InternalError("product_by_generators: nilindex differs from factor maximum");
	// when both centers avoid generator coordinates the center dimension is
	// additive plus the adjoined block
	auto avoids_generators = [](const AlgebraInvariants& inv, int dim_g) {
		RowReducer nongen(dim_g);
		auto git = inv.generator_indices.begin();
		for (int i = 0; i < dim_g; ++i) {
			if (git != inv.generator_indices.end() && *git == i)
				++git;
			else
				nongen.add_row(SparseVec::unit(i));
		}
		return Subspace::from_reducer(nongen).contains(inv.center);
	};
	if (avoids_generators(inv1, m1) && avoids_generators(inv2, m2) &&
	    pinv.center.dim() != inv1.center.dim() + inv2.center.dim() + n1 * n2)
		throw InternalError("product_by_generators: center dimension mismatch");
	return p;
}

struct PowerResult {
	LieAlgebra algebra;
	std::vector<ProductDecomposition> decompositions; // one per fold, n-1 total
};

/// Left-associated iterated product; n = 1 returns g unchanged.
inline PowerResult power(const LieAlgebra& g, int n) {
	if (n < 1)
		throw DomainError("power: exponent must be at least 1");
	PowerResult r{g, {}};
	for (int step = 1; step < n; ++step) {
		Product p = product_by_generators(r.algebra, g);
		r.algebra = std::move(p.algebra);
		r.decompositions.push_back(std::move(p.decomposition));
	}
	return r;
}

/// True iff m is a Lie algebra isomorphism from a to b, i.e. bijective
/// with m[x,y] = [mx,my] on all basis pairs.
inline bool verify_canonical_isomorphism(const LieAlgebra& a, const LieAlgebra& b,
                                         const Matrix& m) {
	if (a.dim() != b.dim() || m.rows() != a.dim() || m.cols() != a.dim())
		throw DomainError("verify_canonical_isomorphism: dimension mismatch");
	if (reduce(m).rank != a.dim())
		throw DomainError("verify_canonical_isomorphism: map is not invertible");
	for (int i = 0; i < a.dim(); ++i)
		for (int j = i + 1; j < a.dim(); ++j) {
			SparseVec lhs = m.apply(a.bracket_basis(i, j));
			SparseVec rhs = b.bracket(m.col(i), m.col(j));
			if (!(lhs == rhs))
				return false;
		}
	return true;
}

/// The canonical map g1 x g2 -> g2 x g1: factor blocks swap and the pair
/// vector for (a, b) maps to minus the pair vector for (b, a). The sign
/// accounts for the reversed bracket order defining the target vector.
inline Matrix commutativity_map(const Product& ab, const Product& ba) {
	const auto& d = ab.decomposition;
	const auto& e = ba.decomposition;
	int n = d.dim();
	if (n != e.dim() || d.n1 != e.n2 || d.n2 != e.n1 ||
	    d.g1_end - d.g1_begin != e.g2_end - e.g2_begin)
		throw DomainError("commutativity_map: decompositions do not match");
	Matrix m(n, n);
	int m1 = d.g1_end - d.g1_begin;
	for (int i = 0; i < m1; ++i)
		m.set_col(d.g1_begin + i, SparseVec::unit(e.g2_begin + i));
	for (int j = 0; j < d.g2_end - d.g2_begin; ++j)
		m.set_col(d.g2_begin + j, SparseVec::unit(e.g1_begin + j));
	for (int a = 0; a < d.n1; ++a)
		for (int b = 0; b < d.n2; ++b)
			m.set_col(d.g3_index(a, b), SparseVec::unit(e.g3_index(b, a)).negated());
	return m;
}

/// The canonical regrouping (g1 x g2) x g3 -> g1 x (g2 x g3). Pure index
/// permutation: every basis vector is tracked by its provenance, pair
/// vectors by the generator pair that created them.
inline Matrix associativity_map(const Product& p12, const Product& p12_3,
                                const Product& p23, const Product& p1_23) {
	const auto& d12 = p12.decomposition;
	const auto& da = p12_3.decomposition;
	const auto& d23 = p23.decomposition;
	const auto& db = p1_23.decomposition;

	int m1 = d12.g1_end - d12.g1_begin;
	int m2 = d12.g2_end - d12.g2_begin;
	int m3 = da.g2_end - da.g2_begin;
	int n1 = d12.n1, n2 = d12.n2;
	int n3 = da.n2;
	if (d23.n1 != n2 || d23.n2 != n3 || db.n1 != n1 || da.n1 != n1 + n2 ||
	    db.n2 != n2 + n3 || da.dim() != db.dim())
		throw DomainError("associativity_map: decompositions do not match");
	// the left product must list its generators as g1's then g2's
	{
		std::vector<int> expect = d12.g1_generators;
		expect.insert(expect.end(), d12.g2_generators.begin(), d12.g2_generators.end());
		if (da.g1_generators != expect)
			throw DomainError("associativity_map: left product generators not aligned");
	}

	int n = da.dim();
	int m12 = m1 + m2 + n1 * n2;
	Matrix m(n, n);
	// g1 block: identity
	for (int i = 0; i < m1; ++i)
		m.set_col(i, SparseVec::unit(i));
	// g2 block: inside the right-hand nested product, right after g1
	for (int j = 0; j < m2; ++j)
		m.set_col(m1 + j, SparseVec::unit(m1 + j));
	// pair vectors of g1 x g2: generator pair (a, b) -> pair (a, b-th of g2-first nested gens)
	int z_b = m1 + (m2 + m3 + n2 * n3); // offset of the outer pair block in b
	for (int a = 0; a < n1; ++a)
		for (int b = 0; b < n2; ++b)
			m.set_col(m1 + m2 + a * n2 + b, SparseVec::unit(z_b + a * (n2 + n3) + b));
	// g3 block
	for (int k = 0; k < m3; ++k)
		m.set_col(m12 + k, SparseVec::unit(m1 + m2 + k));
	// pair vectors of (g1 x g2) x g3: outer pair (c, d)
	for (int c = 0; c < n1 + n2; ++c)
		for (int di = 0; di < n3; ++di) {
			int src = m12 + m3 + c * n3 + di;
			if (c < n1) {
				// (generator c of g1, generator d of g3)
				m.set_col(src, SparseVec::unit(z_b + c * (n2 + n3) + n2 + di));
			} else {
				// (generator c-n1 of g2, generator d of g3): inner pair block of g2 x g3
				m.set_col(src, SparseVec::unit(m1 + m2 + m3 + (c - n1) * n3 + di));
			}
		}
	return m;
}

} // namespace lienil
