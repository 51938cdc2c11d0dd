#pragma once

#include <map>
#include <vector>

#include "lienil/invariants.hpp"

namespace lienil {

/// Vector-valued antisymmetric 2-cochain on a Lie algebra: values on basis
/// pairs (i < j), extended bilinearly. Absent pairs are zero.
struct Cochain2 {
	int source_dim;
	int target_dim;
	std::map<std::pair<int, int>, SparseVec> values;

	SparseVec eval_basis(int i, int j) const {
		if (i == j)
			return {};
		bool flip = i > j;
		auto it = values.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
		if (it == values.end())
			return {};
		return flip ? it->second.negated() : it->second;
	}

	/// c(u, X_k) for a sparse vector u.
	SparseVec eval_with_basis(const SparseVec& u, int k) const {
		SparseVec out;
		for (const auto& [l, w] : u.entries())
			out.axpy(w, eval_basis(l, k));
		return out;
	}
};

/// External direct sum: brackets of g2 shifted past g1, no cross terms.
inline LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
	LieAlgebra::Table t = g1.table();
	int m1 = g1.dim();
	for (const auto& [pair, target] : g2.table())
		t[{pair.first + m1, pair.second + m1}] = target.shifted(m1);
	std::vector<std::string> labels = g1.labels();
	for (const auto& l : g2.labels())
		labels.push_back(l + "'");
	return LieAlgebra(g1.dim() + g2.dim(), std::move(t), std::move(labels));
}

/// The generator-pairing cochain on g1 (+) g2: the a-th generator of g1
/// against the b-th generator of g2 maps to the canonical target vector
/// e_{a*n2+b}; every other basis pair maps to zero.
inline Cochain2 build_generator_cocycle(const LieAlgebra& g1, const LieAlgebra& g2) {
	auto gens1 = generator_indices(g1);
	auto gens2 = generator_indices(g2);
	int n1 = static_cast<int>(gens1.size());
	int n2 = static_cast<int>(gens2.size());
	if (n1 < 2 || n2 < 2)
		throw DomainError("build_generator_cocycle: factors need at least two generators");
	int m1 = g1.dim();
	Cochain2 c{g1.dim() + g2.dim(), n1 * n2, {}};
	for (int a = 0; a < n1; ++a)
		for (int b = 0; b < n2; ++b)
			c.values[{gens1[a], m1 + gens2[b]}] = SparseVec::unit(a * n2 + b);
	return c;
}

struct CocycleViolation {
	int i, j, k;
	SparseVec residual;
};

/// Checks c([x,y],z) + c([y,z],x) + c([z,x],y) = 0 on all basis triples
/// (the closedness condition for trivial coefficients).
inline std::vector<CocycleViolation> two_cocycle_check(const LieAlgebra& g, const Cochain2& c) {
	if (c.source_dim != g.dim())
		throw DomainError("two_cocycle_check: dimension mismatch");
	std::vector<CocycleViolation> out;
	int n = g.dim();
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			SparseVec bij = g.bracket_basis(i, j);
			for (int k = j + 1; k < n; ++k) {
				SparseVec s = c.eval_with_basis(bij, k);
				s.axpy(Rational(1), c.eval_with_basis(g.bracket_basis(j, k), i));
				s.axpy(Rational(1), c.eval_with_basis(g.bracket_basis(k, i), j));
				if (!s.is_zero())
					out.push_back({i, j, k, std::move(s)});
			}
		}
	return out;
}

} // namespace lienil
