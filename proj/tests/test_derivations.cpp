#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lienil/catalog.hpp"
#include "lienil/derivations.hpp"

using namespace lienil;

namespace {

// direct Leibniz check, independent of the solver's equation assembly
bool is_derivation(const LieAlgebra& g, const Matrix& d) {
	for (int i = 0; i < g.dim(); ++i)
		for (int j = i + 1; j < g.dim(); ++j) {
			SparseVec lhs = d.apply(g.bracket_basis(i, j));
			SparseVec rhs = g.bracket(d.col(i), SparseVec::unit(j)) +
			                g.bracket(SparseVec::unit(i), d.col(j));
			if (!(lhs == rhs))
				return false;
		}
	return true;
}

Matrix diag(std::vector<long> entries) {
	int n = static_cast<int>(entries.size());
	Matrix m(n, n);
	for (int i = 0; i < n; ++i)
		if (entries[i] != 0)
			m.set(i, i, Rational(entries[i]));
	return m;
}

} // namespace

TEST_CASE("derivations of an abelian algebra form the full matrix space") {
	CHECK(derivation_space(abelian(3)).dim() == 9);
	CHECK(derivation_space(abelian(4)).dim() == 16);
}

TEST_CASE("derivations of the Heisenberg algebra") {
	auto g = heisenberg3();
	auto der = derivation_space(g);
	// hand count: D13 = D23 = 0 and D33 = D11 + D22 leave 6 free entries
	CHECK(der.dim() == 6);
	for (const auto& d : der.basis)
		CHECK(is_derivation(g, d));

	// the grading derivation diag(1, 1, 2) and the shear X1 -> X2
	auto scaling = diag({1, 1, 2});
	REQUIRE(is_derivation(g, scaling));
	CHECK(der.contains(scaling));
	Matrix shear(3, 3);
	shear.set(1, 0, Rational(1));
	REQUIRE(is_derivation(g, shear));
	CHECK(der.contains(shear));
	// not a derivation, not in the span
	auto bad = diag({1, 1, 1});
	CHECK_FALSE(is_derivation(g, bad));
	CHECK_FALSE(der.contains(bad));
}

TEST_CASE("derivation solver result satisfies Leibniz on catalog algebras") {
	for (const char* name : {"dixmier_lister_8", "luks_16", "filiform_L5"}) {
		auto g = catalog_get(name).algebra;
		auto der = derivation_space(g);
		INFO(name << " dim Der = " << der.dim());
		CHECK(der.dim() > 0);
		for (const auto& d : der.basis)
			CHECK(is_derivation(g, d));
	}
}

TEST_CASE("every derivation of Dixmier-Lister maps the algebra into C1") {
	auto g = dixmier_lister8();
	auto inv = invariants(g);
	auto der = derivation_space(g);
	for (const auto& d : der.basis)
		for (int c = 0; c < g.dim(); ++c)
			CHECK(inv.derived().contains(d.col(c)));
}

TEST_CASE("derivations stabilize the center and the derived subalgebra") {
	for (const char* name : {"heisenberg_3", "dixmier_lister_8", "luks_16"}) {
		auto g = catalog_get(name).algebra;
		auto inv = invariants(g);
		auto der = derivation_space(g);
		INFO(name);
		for (const auto& d : der.basis) {
			for (const auto& z : inv.center.basis())
				CHECK(inv.center.contains(d.apply(z)));
			for (const auto& w : inv.derived().basis())
				CHECK(inv.derived().contains(d.apply(w)));
		}
	}
}

TEST_CASE("derivation space is closed under commutators") {
	auto der = derivation_space(dixmier_lister8());
	// derivation_lie_algebra throws if some commutator leaves the span
	auto der_lie = derivation_lie_algebra(der);
	CHECK(der_lie.dim() == der.dim());
	for (int a = 0; a < der.dim(); ++a)
		for (int b = a + 1; b < der.dim(); ++b)
			CHECK(der.contains(der.basis[a].commutator(der.basis[b])));
}

TEST_CASE("cnla_check: Heisenberg is not characteristically nilpotent") {
	auto rep = cnla_check(heisenberg3());
	CHECK_FALSE(rep.is_cnla);
	// the scaling derivation pushes the orbit to the whole algebra forever
	REQUIRE(rep.stable_orbit.has_value());
	CHECK(rep.stable_orbit->dim() == 3);
	CHECK(rep.orbit_dims == std::vector<int>{3, 3});
	CHECK_FALSE(rep.max_derivation_nilpotency_exponent.has_value());
	CHECK_FALSE(rep.orbit_length().has_value());
	CHECK(rep.der_lcs_dims.back() != 0);
}

TEST_CASE("cnla_check: Dixmier-Lister is characteristically nilpotent") {
	auto rep = cnla_check(dixmier_lister8());
	CHECK(rep.is_cnla);
	CHECK(rep.orbit_dims.back() == 0);
	CHECK(rep.der_lcs_dims.back() == 0);
	REQUIRE(rep.max_derivation_nilpotency_exponent.has_value());
	REQUIRE(rep.orbit_length().has_value());
	INFO("orbit length " << *rep.orbit_length());
	// orbit dims are strictly decreasing down to zero
	for (size_t k = 0; k + 1 < rep.orbit_dims.size(); ++k)
		CHECK(rep.orbit_dims[k] > rep.orbit_dims[k + 1]);
}

TEST_CASE("cnla_check: Luks is characteristically nilpotent") {
	auto rep = cnla_check(luks16());
	CHECK(rep.is_cnla);
	REQUIRE(rep.orbit_length().has_value());
}

TEST_CASE("cnla_check rejects abelian and non-nilpotent input") {
	CHECK_THROWS_AS(cnla_check(abelian(4)), DomainError);
	LieAlgebra::Table t;
	t[{0, 1}] = SparseVec::unit(1);
	CHECK_THROWS_AS(cnla_check(LieAlgebra(2, t)), DomainError);
}
