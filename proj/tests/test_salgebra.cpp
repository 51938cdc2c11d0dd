#include <catch2/catch_amalgamated.hpp>

#include "lienil/catalog.hpp"
#include "lienil/salgebra.hpp"

using namespace lienil;

TEST_CASE("certificate: Dixmier-Lister via the transporter route") {
	auto cert = s_algebra_certificate(dixmier_lister8());
	CHECK(cert.certified());
	CHECK(cert.route == CertRoute::transporter_in_derived);
	CHECK(cert.transporter_outside_derived.empty());
	CHECK(cert.per_generator.empty());
}

TEST_CASE("certificate: Luks needs the generator conditions") {
	auto cert = s_algebra_certificate(luks16());
	CHECK(cert.certified());
	CHECK(cert.route == CertRoute::prop4);
	// transporter route fails: X4, X5, X6 lie in T but not in C^1
	CHECK(cert.transporter_outside_derived == std::vector<int>{3, 4, 5});

	REQUIRE(cert.per_generator.size() == 6);
	// X1 only via condition 2: [X1, X6] = -[X3, X4] modulo C^2
	const auto& w1 = cert.per_generator.at(0);
	CHECK(w1.condition == 2);
	CHECK(w1.xprime == 5);
	CHECK(w1.y == 2);
	CHECK(w1.yprime == 3);
	CHECK(w1.a == Rational(-1));
	// the others via condition 1, all at depth p = 2
	struct Cond1 {
		int gen, xprime;
	};
	for (auto [gen, xp] : {Cond1{1, 4}, Cond1{2, 5}, Cond1{3, 4}, Cond1{4, 1}, Cond1{5, 2}}) {
		const auto& w = cert.per_generator.at(gen);
		INFO("generator " << gen + 1);
		CHECK(w.condition == 1);
		CHECK(w.xprime == xp);
		CHECK(w.p == 2);
	}
}

TEST_CASE("certificate witnesses re-verify against the law") {
	auto g = luks16();
	auto inv = invariants(g);
	const auto& c2 = inv.lower_central[2];
	auto cert = s_algebra_certificate(g);
	for (const auto& [gen, w] : cert.per_generator) {
		REQUIRE(w.found());
		if (w.condition == 1) {
			CHECK(c2.contains(g.bracket_basis(gen, w.xprime)));
		} else {
			// [X, X'] - a [Y, Y'] lies in C^2, pairs disjoint, a nonzero
			CHECK(w.a != Rational(0));
			CHECK(gen != w.xprime);
			CHECK(w.y != w.yprime);
			CHECK(w.y != gen);
			CHECK(w.y != w.xprime);
			CHECK(w.yprime != gen);
			CHECK(w.yprime != w.xprime);
			SparseVec diff = g.bracket_basis(gen, w.xprime) -
			                 g.bracket_basis(w.y, w.yprime).scaled(w.a);
			CHECK(c2.contains(diff));
		}
	}
}

TEST_CASE("certificate: Heisenberg gets no certificate, with witnesses") {
	auto cert = s_algebra_certificate(heisenberg3());
	CHECK_FALSE(cert.certified());
	CHECK(cert.route == CertRoute::none);
	// both generators sit in T = g outside C^1
	CHECK(cert.transporter_outside_derived == std::vector<int>{0, 1});
	CHECK_FALSE(cert.per_generator.at(0).found());
	CHECK_FALSE(cert.per_generator.at(1).found());
}

TEST_CASE("certificate: filiform L(4) happens to pass the transporter route") {
	auto cert = s_algebra_certificate(filiform(4));
	CHECK(cert.certified());
	CHECK(cert.route == CertRoute::transporter_in_derived);
}

TEST_CASE("certificate rejects abelian input") {
	CHECK_THROWS_AS(s_algebra_certificate(abelian(3)), DomainError);
}

TEST_CASE("prop3_check passes on h3 x h3 and DL x DL") {
	for (const char* name : {"heisenberg_3", "dixmier_lister_8"}) {
		auto g = catalog_get(name).algebra;
		auto p = product_by_generators(g, g);
		auto rep = prop3_check(p.algebra, p.decomposition);
		INFO(name);
		CHECK(rep.pass);
		CHECK_FALSE(rep.per_derivation.empty());
		for (const auto& row : rep.per_derivation)
			CHECK(row.pass);
	}
}

TEST_CASE("corrupted decompositions are rejected, not reported") {
	auto p = product_by_generators(heisenberg3(), heisenberg3());
	auto der = derivation_space(p.algebra);

	auto swapped = p.decomposition;
	std::swap(swapped.g2_begin, swapped.g3_begin);
	std::swap(swapped.g2_end, swapped.g3_end);
	CHECK_THROWS_AS(prop3_check(p.algebra, swapped, der), DomainError);

	auto bad_gens = p.decomposition;
	bad_gens.g1_generators = {0, 2}; // X3 is central, not a generator pair source
	CHECK_THROWS_AS(prop3_check(p.algebra, bad_gens, der), DomainError);

	auto bad_ranges = p.decomposition;
	bad_ranges.g1_end = 2;
	bad_ranges.g2_begin = 2;
	CHECK_THROWS_AS(prop3_check(p.algebra, bad_ranges, der), DomainError);

	// a plain algebra with no product structure at all
	auto dl = dixmier_lister8();
	CHECK_THROWS_AS(prop3_check(dl, p.decomposition, der), DomainError);
}

TEST_CASE("relations_check on DL x DL: everything enforced and green") {
	auto dl = dixmier_lister8();
	auto p = product_by_generators(dl, dl);
	auto der = derivation_space(p.algebra);
	auto cert = s_algebra_certificate(dl);
	auto rep = relations_check(p.algebra, p.decomposition, cert, cert, der);

	CHECK(rep.certified_mode);
	CHECK(rep.pass);
	CHECK(rep.guard_triggers == 0);
	CHECK(rep.basis_count == 184);
	CHECK(rep.sample_count == 4);
	// factor orbit lengths 3 and 3 give the exponent 3 + 2*3 + 2 = 11
	CHECK(rep.factor_orbit_length_1 == 3);
	CHECK(rep.factor_orbit_length_2 == 3);
	REQUIRE(rep.nilpotency_exponent.has_value());
	CHECK(*rep.nilpotency_exponent == 11);
	// observed: the adjoined diagonal block vanishes and every derivation
	// maps the product into its derived subalgebra
	CHECK(rep.all_d33_zero);
	CHECK(rep.all_images_in_derived);
}

TEST_CASE("relations_check on h3 x h3: guards fire, executed checks pass") {
	auto h = heisenberg3();
	auto p = product_by_generators(h, h);
	auto cert = s_algebra_certificate(h);
	REQUIRE_FALSE(cert.certified());
	auto rep = relations_check(p.algebra, p.decomposition, cert, cert);

	CHECK_FALSE(rep.certified_mode);
	CHECK(rep.pass);
	// the off-diagonal hypothesis genuinely fails for some derivations
	CHECK(rep.guard_triggers > 0);
	// factors are not characteristically nilpotent: no exponent bound
	CHECK_FALSE(rep.nilpotency_exponent.has_value());
	int guarded_rows = 0;
	for (const auto& row : rep.per_derivation)
		if (row.guarded)
			++guarded_rows;
	CHECK(guarded_rows == rep.guard_triggers);
}

TEST_CASE("an explicit s-block violation on h3 x h3") {
	// D: X1 -> X1', X3 -> -Z21, Z12 -> X3' is a derivation whose block
	// from g1 to g2 hits a generator
	auto h = heisenberg3();
	auto p = product_by_generators(h, h);
	const auto& d = p.decomposition;
	int n = p.algebra.dim();
	Matrix D(n, n);
	D.set_col(0, SparseVec::unit(d.g2_begin + 0));              // X1 -> X1'
	D.set_col(2, SparseVec::unit(d.g3_index(1, 0)).negated()); // X3 -> -Z21
	D.set_col(d.g3_index(0, 1), SparseVec::unit(d.g2_begin + 2)); // Z12 -> X3'
	auto der = derivation_space(p.algebra);
	REQUIRE(der.contains(D));
	// its g1 -> g2 block does not land in C^1 g2
	auto f = analyze_product(p.algebra, d);
	Matrix d21 = D.block(d.g2_begin, d.g2_end, d.g1_begin, d.g1_end);
	CHECK_FALSE(f.c1g2.contains(d21.col(0)));
}

TEST_CASE("relations_check exercises random combinations deterministically") {
	auto dl = dixmier_lister8();
	auto p = product_by_generators(dl, dl);
	auto der = derivation_space(p.algebra);
	auto cert = s_algebra_certificate(dl);
	auto a = relations_check(p.algebra, p.decomposition, cert, cert, der, 2, 7);
	auto b = relations_check(p.algebra, p.decomposition, cert, cert, der, 2, 7);
	CHECK(a.sample_count == 2);
	CHECK(a.pass == b.pass);
	CHECK(a.guard_triggers == b.guard_triggers);
	REQUIRE(a.per_derivation.size() == b.per_derivation.size());
	for (size_t i = 0; i < a.per_derivation.size(); ++i)
		CHECK(a.per_derivation[i].d33_zero == b.per_derivation[i].d33_zero);
}
