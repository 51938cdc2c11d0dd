#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lienil/catalog.hpp"
#include "lienil/cochain.hpp"

using namespace lienil;

TEST_CASE("generator cocycle on h3 + h3 has exactly the four pair values") {
	auto h = heisenberg3();
	auto c = build_generator_cocycle(h, h);
	CHECK(c.source_dim == 6);
	CHECK(c.target_dim == 4);
	REQUIRE(c.values.size() == 4);
	// (X1, X1') -> e1, (X1, X2') -> e2, (X2, X1') -> e3, (X2, X2') -> e4
	CHECK(c.eval_basis(0, 3) == SparseVec::unit(0));
	CHECK(c.eval_basis(0, 4) == SparseVec::unit(1));
	CHECK(c.eval_basis(1, 3) == SparseVec::unit(2));
	CHECK(c.eval_basis(1, 4) == SparseVec::unit(3));
	// antisymmetry and zero on non-generator pairs
	CHECK(c.eval_basis(3, 0) == SparseVec::unit(0).negated());
	CHECK(c.eval_basis(2, 3).is_zero()); // X3 is not a generator
	CHECK(c.eval_basis(0, 5).is_zero()); // X3' is not a generator
	CHECK(c.eval_basis(0, 1).is_zero()); // internal pair of g1
	CHECK(c.eval_basis(3, 4).is_zero()); // internal pair of g2
}

TEST_CASE("generator cocycle on DL + DL has 16 values into dimension 16") {
	auto dl = dixmier_lister8();
	auto c = build_generator_cocycle(dl, dl);
	CHECK(c.source_dim == 16);
	CHECK(c.target_dim == 16);
	CHECK(c.values.size() == 16);
}

TEST_CASE("generator cocycle requires at least two generators per factor") {
	CHECK_THROWS_AS(build_generator_cocycle(abelian(1), heisenberg3()), DomainError);
}

TEST_CASE("generator cocycle is closed on catalog pairs") {
	std::vector<LieAlgebra> algs = {heisenberg3(), dixmier_lister8(), luks16(),
	                                filiform(5), abelian(3)};
	for (const auto& g1 : algs)
		for (const auto& g2 : algs) {
			if (g1.dim() < 2 || g2.dim() < 2)
				continue;
			auto c = build_generator_cocycle(g1, g2);
			CHECK(two_cocycle_check(direct_sum(g1, g2), c).empty());
		}
}

TEST_CASE("generator cocycle is closed on random central extensions") {
	std::mt19937_64 rng(101);
	std::vector<LieAlgebra> algs;
	for (int i = 0; i < 20; ++i)
		algs.push_back(random_central_extension(rng));
	for (size_t i = 0; i < algs.size(); ++i) {
		const auto& g1 = algs[i];
		const auto& g2 = algs[(i + 1) % algs.size()];
		auto c = build_generator_cocycle(g1, g2);
		CHECK(two_cocycle_check(direct_sum(g1, g2), c).empty());
	}
}

TEST_CASE("a non-closed cochain is caught, with the violating triple") {
	// on L(4) the single value psi(X2, X4) = e1 fails at (X1, X2, X3):
	// the only surviving term is psi([X3,X1], X2) = psi(-X4, X2) = e1
	auto g = filiform(4);
	Cochain2 psi{4, 1, {}};
	psi.values[{1, 3}] = SparseVec::unit(0);
	auto viol = two_cocycle_check(g, psi);
	REQUIRE(viol.size() == 1);
	CHECK(viol[0].i == 0);
	CHECK(viol[0].j == 1);
	CHECK(viol[0].k == 2);
	CHECK(viol[0].residual == SparseVec::unit(0));
}

TEST_CASE("cocycle check rejects dimension mismatch") {
	Cochain2 c{5, 1, {}};
	CHECK_THROWS_AS(two_cocycle_check(filiform(4), c), DomainError);
}

TEST_CASE("the generator cocycle of a non-adapted basis is not closed") {
	// [X1, X2] = X3 + X4: the derived subalgebra is not a coordinate span,
	// and greedy generators pick up X3
	LieAlgebra::Table t;
	t[{0, 1}] = SparseVec::from_entries({{2, Rational(1)}, {3, Rational(1)}});
	LieAlgebra g(4, t);
	auto inv = invariants(g);
	CHECK(inv.generator_indices == std::vector<int>{0, 1, 2});
	auto c = build_generator_cocycle(g, heisenberg3());
	CHECK_FALSE(two_cocycle_check(direct_sum(g, heisenberg3()), c).empty());
}

TEST_CASE("direct sum glues tables with shifted indices") {
	auto s = direct_sum(heisenberg3(), heisenberg3());
	CHECK(s.dim() == 6);
	CHECK(s.bracket_basis(0, 1) == SparseVec::unit(2));
	CHECK(s.bracket_basis(3, 4) == SparseVec::unit(5));
	CHECK(s.bracket_basis(0, 4).is_zero());
	CHECK(validate(s).empty());
}
