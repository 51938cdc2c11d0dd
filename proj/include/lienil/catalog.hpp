#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <tuple>

#include "lienil/lie_algebra.hpp"

namespace lienil {

struct CatalogExpected {
	std::vector<int> lower_central_dims;
	int center_dim;
	int nilindex;
	std::vector<int> generator_indices; // 0-based
	int transporter_dim;
};

struct CatalogEntry {
	std::string name;
	LieAlgebra algebra;
	std::string provenance;
	std::optional<CatalogExpected> expected;
};

namespace detail {

// 1-based helper: law entries as (i, j, {(target, coeff), ...})
inline LieAlgebra::Table table1(
    std::initializer_list<std::tuple<int, int, std::vector<std::pair<int, Rational>>>> rows) {
	LieAlgebra::Table t;
	for (const auto& [i, j, targets] : rows) {
		std::vector<SparseVec::Entry> e;
		for (const auto& [m, c] : targets)
			e.emplace_back(m - 1, c);
		t[{i - 1, j - 1}] = SparseVec::from_entries(std::move(e));
	}
	return t;
}

} // namespace detail

inline LieAlgebra heisenberg3() {
	return LieAlgebra(3, detail::table1({{1, 2, {{3, 1}}}}));
}

/// The 8-dimensional nilpotent algebra of Dixmier and Lister, the first
/// known algebra all of whose derivations are nilpotent.
inline LieAlgebra dixmier_lister8() {
	return LieAlgebra(8, detail::table1({
	                         {1, 2, {{5, 1}}},
	                         {1, 3, {{6, 1}}},
	                         {1, 4, {{7, 1}}},
	                         {1, 5, {{8, -1}}},
	                         {2, 3, {{8, 1}}},
	                         {2, 4, {{6, 1}}},
	                         {2, 6, {{7, -1}}},
	                         {3, 4, {{5, -1}}},
	                         {3, 5, {{7, -1}}},
	                         {4, 6, {{8, -1}}},
	                     }));
}

/// Luks' 16-dimensional algebra: characteristically nilpotent with a
/// transporter that is not contained in the derived subalgebra.
inline LieAlgebra luks16() {
	return LieAlgebra(16, detail::table1({
	                          {1, 2, {{7, 1}}},
	                          {1, 3, {{8, 1}}},
	                          {1, 4, {{9, 1}}},
	                          {1, 5, {{10, 1}}},
	                          {1, 6, {{13, 1}}},
	                          {1, 7, {{15, 1}}},
	                          {1, 8, {{16, 1}}},
	                          {2, 3, {{11, 1}}},
	                          {2, 4, {{12, 1}}},
	                          {2, 5, {{15, 1}}},
	                          {2, 6, {{14, 1}}},
	                          {2, 7, {{16, -1}}},
	                          {3, 4, {{13, -1}, {15, Rational(-9, 5)}}},
	                          {3, 5, {{14, -1}}},
	                          {3, 6, {{16, -1}}},
	                          {4, 5, {{16, 2}}},
	                      }));
}

inline LieAlgebra abelian(int n) {
	if (n < 1)
		throw DomainError("abelian: dimension must be at least 1");
	return LieAlgebra(n);
}

/// Filiform algebra L(n): [X1, Xi] = X_{i+1} for 2 <= i <= n-1.
inline LieAlgebra filiform(int n) {
	if (n < 3)
		throw DomainError("filiform: dimension must be at least 3");
	LieAlgebra::Table t;
	for (int i = 2; i <= n - 1; ++i)
		t[{0, i - 1}] = SparseVec::unit(i); // X_{i+1}, 0-based
	return LieAlgebra(n, std::move(t));
}

/// Catalog lookup. Fixed names plus the parametrized families
/// "abelian_N" / "abelian_n(N)" and "filiform_LN" / "filiform_L(N)".
inline CatalogEntry catalog_get(const std::string& name) {
	auto parse_n = [&](const std::string& prefix) -> std::optional<int> {
		std::string rest;
		if (name.rfind(prefix, 0) == 0)
			rest = name.substr(prefix.size());
		else
			return std::nullopt;
		if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
			rest = rest.substr(1, rest.size() - 2);
		if (rest.empty())
			return std::nullopt;
		for (char c : rest)
			if (c < '0' || c > '9')
				return std::nullopt;
		if (rest.size() > 5)
			throw DomainError("catalog: dimension out of range in \"" + name + "\"");
		return std::stoi(rest);
	};

	if (name == "heisenberg_3")
		return {name, heisenberg3(), "classical 3-dimensional Heisenberg algebra",
		        CatalogExpected{{3, 1, 0}, 1, 2, {0, 1}, 3}};
	if (name == "dixmier_lister_8")
		return {name, dixmier_lister8(),
		        "Dixmier & Lister (1957), first algebra with all derivations nilpotent",
		        CatalogExpected{{8, 4, 2, 0}, 2, 3, {0, 1, 2, 3}, 4}};
	if (name == "luks_16")
		return {name, luks16(),
		        "Luks (1976), characteristically nilpotent with T not inside [g, g]",
		        CatalogExpected{{16, 10, 2, 0}, 8, 3, {0, 1, 2, 3, 4, 5}, 13}};
	if (auto n = parse_n("abelian_n"))
		return {name, abelian(*n), "abelian algebra", std::nullopt};
	if (auto n = parse_n("abelian_"))
		return {name, abelian(*n), "abelian algebra", std::nullopt};
	if (auto n = parse_n("filiform_L"))
		return {name, filiform(*n), "filiform algebra of maximal nilindex", std::nullopt};
	throw DomainError("catalog: unknown algebra name \"" + name + "\"");
}

inline std::vector<std::string> catalog_names() {
	return {"heisenberg_3", "dixmier_lister_8", "luks_16", "abelian_<n>", "filiform_L<n>"};
}

/// Random nonabelian two-step nilpotent algebra: a central extension of an
/// abelian algebra by single-coordinate cocycle values. Every extension
/// coordinate is hit, so the derived subalgebra is spanned by basis vectors
/// and the generator set stays adapted.
inline LieAlgebra random_central_extension(std::mt19937_64& rng) {
	std::uniform_int_distribution<int> adist(2, 5);
	int a = adist(rng);
	int max_pairs = a * (a - 1) / 2;
	std::uniform_int_distribution<int> cdist(1, std::min(4, max_pairs));
	int c = cdist(rng);

	std::vector<std::pair<int, int>> pairs;
	for (int i = 0; i < a; ++i)
		for (int j = i + 1; j < a; ++j)
			pairs.emplace_back(i, j);
	std::shuffle(pairs.begin(), pairs.end(), rng);

	auto coeff = [&rng]() {
		std::uniform_int_distribution<int> num(1, 3), den(1, 2), sign(0, 1);
		Rational q(num(rng), den(rng));
		return sign(rng) ? q : -q;
	};

	LieAlgebra::Table t;
	for (int target = 0; target < c; ++target)
		t[pairs[target]] = SparseVec::unit(a + target).scaled(coeff());
	// a few extra pairs aimed at already-used targets
	std::uniform_int_distribution<int> tdist(0, c - 1);
	std::uniform_int_distribution<int> extra(0, 2);
	for (int k = c; k < static_cast<int>(pairs.size()); ++k)
		if (extra(rng) == 0)
			t[pairs[k]] = SparseVec::unit(a + tdist(rng)).scaled(coeff());
	return LieAlgebra(a + c, std::move(t));
}

} // namespace lienil
