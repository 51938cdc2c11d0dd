#include <catch2/catch_amalgamated.hpp>

#include "lienil/catalog.hpp"
#include "lienil/closed_forms.hpp"
#include "lienil/product.hpp"

using namespace lienil;

TEST_CASE("power_stats reproduces the DL numbers") {
	AlgebraStats dl{8, 2, 4, 4};

	auto n1 = power_stats(dl, 1);
	CHECK(n1.dim == Rational(8));
	CHECK(n1.dim_center == Rational(2));

	auto n2 = power_stats(dl, 2);
	CHECK(n2.dim == Rational(32));
	CHECK(n2.dim_center == Rational(20));
	CHECK(n2.codim_center == Rational(12));
	CHECK(n2.noncentral_derived == Rational(4)); // n (dim C1 - dim Z) = 2 * 2
	CHECK(n2.ratio == Rational(12, 20));

	auto n3 = power_stats(dl, 3);
	CHECK(n3.dim == Rational(72));
	CHECK(n3.dim_center == Rational(54));
	CHECK(n3.codim_center == Rational(18));
	CHECK(n3.noncentral_derived == Rational(6));
}

TEST_CASE("power_stats matches measured invariants for h3 and DL, n = 1..3") {
	for (const char* name : {"heisenberg_3", "dixmier_lister_8"}) {
		auto g = catalog_get(name).algebra;
		auto stats = algebra_stats(g);
		for (int n = 1; n <= 3; ++n) {
			INFO(name << " n=" << n);
			auto predicted = power_stats(stats, n);
			auto measured = power(g, n);
			auto inv = invariants(measured.algebra);
			CHECK(predicted.dim == Rational(measured.algebra.dim()));
			CHECK(predicted.dim_center == Rational(inv.center.dim()));
			CHECK(predicted.codim_center ==
			      Rational(measured.algebra.dim() - inv.center.dim()));
			// measured non-central part of the derived subalgebra
			CHECK(predicted.noncentral_derived ==
			      Rational(inv.derived().dim() - inv.center.dim()));
		}
	}
}

TEST_CASE("power_stats input validation") {
	CHECK_THROWS_AS(power_stats({8, 2, 4, 1}, 2), DomainError);
	CHECK_THROWS_AS(power_stats({8, 2, 4, 4}, 0), DomainError);
}

TEST_CASE("center ratio sequence is strictly decreasing up to n = 100") {
	AlgebraStats dl{8, 2, 4, 4};
	Rational prev = power_stats(dl, 1).ratio;
	for (long n = 2; n <= 100; ++n) {
		Rational cur = power_stats(dl, n).ratio;
		CHECK(cur < prev);
		prev = cur;
	}
	// and dim / dim_center approaches 1 from above
	auto far = power_stats(dl, 100);
	CHECK(far.dim / far.dim_center - Rational(1) < Rational(1, 100));
	CHECK(far.dim > far.dim_center);
}

TEST_CASE("epsilon_min_n: DL center ratio crosses 1/10 at n = 9") {
	AlgebraStats dl{8, 2, 4, 4};
	auto rep = epsilon_min_n(dl, Rational(1, 10), EpsilonMode::center_ratio);
	CHECK(rep.minimal_n == 9);
	// ratio(n) = 6/(8n - 6): 6/58 > 1/10 >= 6/66
	CHECK(rep.ratio_at_minimal == Rational(6, 66));
	CHECK(power_stats(dl, 8).ratio == Rational(6, 58));
	CHECK(power_stats(dl, 8).ratio > Rational(1, 10));
	CHECK_FALSE(rep.sufficient_bound.has_value());
}

TEST_CASE("epsilon_min_n: huge epsilon needs no power at all") {
	AlgebraStats dl{8, 2, 4, 4};
	auto rep = epsilon_min_n(dl, Rational(8), EpsilonMode::center_ratio);
	CHECK(rep.minimal_n == 1);
}

TEST_CASE("epsilon_min_n: derived ratio minimal n meets the sufficient bound") {
	AlgebraStats dl{8, 2, 4, 4};
	// derived ratio of DL powers is 1/(4n - 3)
	for (long N : {5L, 10L, 100L}) {
		auto rep = epsilon_min_n(dl, Rational(1, N), EpsilonMode::derived_ratio);
		REQUIRE(rep.sufficient_bound.has_value());
		CHECK(rep.minimal_n <= *rep.sufficient_bound);
	}
	auto rep10 = epsilon_min_n(dl, Rational(1, 10), EpsilonMode::derived_ratio);
	CHECK(rep10.minimal_n == 4);
	CHECK(*rep10.sufficient_bound == 4);
	auto rep5 = epsilon_min_n(dl, Rational(1, 5), EpsilonMode::derived_ratio);
	CHECK(rep5.minimal_n == 3);
	auto rep100 = epsilon_min_n(dl, Rational(1, 100), EpsilonMode::derived_ratio);
	CHECK(rep100.minimal_n == 26);
}

TEST_CASE("epsilon_min_n consistency with the direct scan") {
	AlgebraStats stats[] = {{8, 2, 4, 4}, {3, 1, 1, 2}, {16, 8, 10, 6}};
	for (const auto& s : stats)
		for (long q : {3L, 7L, 19L, 57L}) {
			Rational eps(1, q);
			for (auto mode : {EpsilonMode::center_ratio, EpsilonMode::derived_ratio}) {
				auto rep = epsilon_min_n(s, eps, mode);
				auto ratio_of = [&](long n) {
					auto p = power_stats(s, n);
					return mode == EpsilonMode::center_ratio
					           ? p.ratio
					           : p.noncentral_derived / p.dim_center;
				};
				long scan = 1;
				while (!(ratio_of(scan) < eps))
					++scan;
				CHECK(rep.minimal_n == scan);
			}
		}
}

TEST_CASE("epsilon_min_n rejects nonpositive epsilon") {
	AlgebraStats dl{8, 2, 4, 4};
	CHECK_THROWS_AS(epsilon_min_n(dl, Rational(0), EpsilonMode::center_ratio), DomainError);
	CHECK_THROWS_AS(epsilon_min_n(dl, Rational(-1, 2), EpsilonMode::center_ratio),
	                DomainError);
}

TEST_CASE("necessary conditions fail on filiform algebras and small algebras") {
	for (int n = 4; n <= 8; ++n) {
		auto r = product_necessary_conditions(filiform(n));
		CHECK_FALSE(r.passes);
		bool quotient_named = false;
		for (const auto& f : r.failures)
			if (f.find("generator count") != std::string::npos)
				quotient_named = true;
		CHECK(quotient_named);
	}
	auto h = product_necessary_conditions(heisenberg3());
	CHECK_FALSE(h.passes);
	bool dim_named = false;
	for (const auto& f : h.failures)
		if (f.find("< 10") != std::string::npos)
			dim_named = true;
	CHECK(dim_named);
}

TEST_CASE("necessary conditions pass on h3 x h3, the smallest product") {
	auto p = product_by_generators(heisenberg3(), heisenberg3());
	REQUIRE(p.algebra.dim() == 10);
	auto r = product_necessary_conditions(p.algebra);
	CHECK(r.passes);
	CHECK(r.failures.empty());
}
