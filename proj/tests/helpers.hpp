#pragma once

#include <random>
#include <vector>

#include "lienil/matrix.hpp"

namespace testutil {

using lienil::Matrix;
using lienil::Rational;
using lienil::SparseVec;

inline Rational random_small_rational(std::mt19937_64& rng, bool allow_zero = true) {
	std::uniform_int_distribution<int> num(-4, 4);
	std::uniform_int_distribution<int> den(1, 3);
	int n = num(rng);
	if (!allow_zero)
		while (n == 0)
			n = num(rng);
	return Rational(n, den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density = 0.5) {
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	Matrix m(rows, cols);
	for (int c = 0; c < cols; ++c) {
		std::vector<SparseVec::Entry> entries;
		for (int r = 0; r < rows; ++r)
			if (coin(rng) < density) {
				Rational v = random_small_rational(rng);
				if (!v.is_zero())
					entries.emplace_back(r, v);
			}
		m.set_col(c, SparseVec::from_entries(std::move(entries)));
	}
	return m;
}

} // namespace testutil
