#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lienil/invariants.hpp"

namespace lienil {

/// The numbers the growth formulas need: dimension, center and derived
/// dimensions, generator count.
struct AlgebraStats {
	long dim;
	long dim_center;
	long dim_derived;
	long generators;
};

inline AlgebraStats algebra_stats(const LieAlgebra& g) {
	auto inv = invariants(g);
	return {g.dim(), inv.center.dim(), inv.derived().dim(),
	        static_cast<long>(inv.generator_indices.size())};
}

struct PowerStats {
	Rational dim;
	Rational dim_center;
	Rational codim_center;
	Rational noncentral_derived;
	Rational ratio; // codim_center / dim_center
};

/// Closed forms for the n-th iterated product of an algebra with k
/// generators: dim = n^2 k^2 / 2 + (dim g - k^2 / 2) n, and the same shape
/// for the center. All values exact rationals.
inline PowerStats power_stats(const AlgebraStats& s, long n) {
	if (s.generators < 2)
		throw DomainError("power_stats: at least two generators required");
	if (n < 1)
		throw DomainError("power_stats: n must be at least 1");
	Rational half_k2(s.generators * s.generators, 2);
	Rational nn(n);
	PowerStats p;
	p.dim = half_k2 * nn * nn + (Rational(s.dim) - half_k2) * nn;
	p.dim_center = half_k2 * nn * nn + (Rational(s.dim_center) - half_k2) * nn;
	p.codim_center = p.dim - p.dim_center;
	p.noncentral_derived = p.codim_center - Rational(s.generators) * nn;
	if (p.noncentral_derived != nn * Rational(s.dim_derived - s.dim_center))
		throw InternalError("power_stats: non-central count identities disagree");
	if (p.dim_center.is_zero())
		throw DomainError("power_stats: zero center dimension");
	p.ratio = p.codim_center / p.dim_center;
	return p;
}

enum class EpsilonMode { center_ratio, derived_ratio };

struct EpsilonReport {
	long minimal_n;
	Rational ratio_at_minimal;
	/// Set in derived_ratio mode: the sufficient power from the closed-form
	/// bound with N = ceil(1/epsilon); minimal_n never exceeds it.
	std::optional<long> sufficient_bound;
};


/// Smallest n whose n-th power pushes the chosen ratio strictly below
/// epsilon. Both ratios are strictly decreasing in n, so the minimum is
/// found by exact comparison around the algebraic solution.
inline EpsilonReport epsilon_min_n(const AlgebraStats& s, const Rational& eps,
                                   EpsilonMode mode) {
	if (!(eps > Rational(0)))
		throw DomainError("epsilon_min_n: epsilon must be positive");
	if (s.generators < 2 || s.dim_center < 1)
		throw DomainError("epsilon_min_n: need nonabelian stats with nonzero center");

	// ratio(n) = numer / (k^2 n / 2 + z - k^2 / 2) with constant numerator
	Rational numer = mode == EpsilonMode::center_ratio
	                     ? Rational(s.dim - s.dim_center)
	                     : Rational(s.dim_derived - s.dim_center);
	Rational half_k2(s.generators * s.generators, 2);
	auto ratio = [&](long n) {
		return numer / (half_k2 * Rational(n) + Rational(s.dim_center) - half_k2);
	};

	long n;
	if (numer <= Rational(0)) {
		n = 1; // ratio is 0 or negative from the start
	} else {
		// ratio(n) < eps  <=>  n > (numer/eps - z + k^2/2) / (k^2/2)
		Rational threshold = (numer / eps - Rational(s.dim_center) + half_k2) / half_k2;
		n = std::max(1L, threshold.floor().to_long() + 1);
		// exact verification of minimality
		if (!(ratio(n) < eps))
			throw InternalError("epsilon_min_n: computed n does not satisfy the bound");
		if (n > 1 && ratio(n - 1) < eps)
			throw InternalError("epsilon_min_n: computed n is not minimal");
	}

	EpsilonReport rep{n, ratio(n), std::nullopt};
	if (mode == EpsilonMode::derived_ratio) {
		// sufficient bound with the smallest N satisfying 1/N <= eps
		long N = (Rational(1) / eps).ceil().to_long();
		Rational rhs = (Rational(2 * N) / Rational(s.generators * s.generators)) *
		                   Rational(s.dim - s.dim_center - s.generators) -
		               Rational(2 * s.dim_center) /
		                   Rational(s.generators * s.generators) +
		               Rational(1);
		long bound = std::max(1L, rhs.floor().to_long() + 1);
		rep.sufficient_bound = bound;
		if (rep.minimal_n > bound)
			throw InternalError("epsilon_min_n: minimal n exceeds the sufficient bound");
	}
	return rep;
}

struct NecessaryConditions {
	bool passes;
	std::vector<std::string> failures;
	/// Passing is necessary for being a generator product, never sufficient.
	static constexpr const char* caveat =
	    "necessary conditions only; passing does not certify a product";
};

/// dim Z >= 6, dim g/C^1 g >= 4 and dim g >= 10 are forced for any
/// generator product; filiform algebras fail the quotient bound.
inline NecessaryConditions product_necessary_conditions(const LieAlgebra& g) {
	auto inv = invariants(g);
	NecessaryConditions r{true, {}};
	auto fail = [&](std::string msg) {
		r.passes = false;
		r.failures.push_back(std::move(msg));
	};
	if (inv.center.dim() < 6)
		fail("center dimension " + std::to_string(inv.center.dim()) + " < 6");
	long quot = g.dim() - inv.derived().dim();
	if (quot < 4)
		fail("generator count " + std::to_string(quot) + " < 4");
	if (g.dim() < 10)
		fail("dimension " + std::to_string(g.dim()) + " < 10");
	return r;
}

} // namespace lienil
