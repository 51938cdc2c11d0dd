#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lienil/sparse_vec.hpp"

namespace lienil {

struct JacobiViolation {
	int i, j, k; // 0-based basis indices, i < j < k
	SparseVec residual;
};

/// Finite-dimensional Lie algebra given by structure constants over Q.
///
/// Brackets are stored for index pairs (i, j) with i < j only; antisymmetry
/// is implicit and diagonal brackets are zero. Absent pairs mean zero.
/// Instances are immutable after construction. Construction checks index
/// bounds; the Jacobi identity is checked separately by validate().
class LieAlgebra {
public:
	using Table = std::map<std::pair<int, int>, SparseVec>;

	explicit LieAlgebra(int dim, Table brackets = {}, std::vector<std::string> labels = {})
	    : dim_(dim), table_(std::move(brackets)), labels_(std::move(labels)) {
		if (dim <= 0)
			throw DomainError("LieAlgebra: dimension must be positive");
		for (auto it = table_.begin(); it != table_.end();) {
			const auto& [i, j] = it->first;
			if (i < 0 || j >= dim_ || i >= j)
				throw DomainError("LieAlgebra: bad bracket pair (" + std::to_string(i + 1) +
				                  ", " + std::to_string(j + 1) + ")");
			if (!it->second.is_zero() && it->second.entries().back().first >= dim_)
				throw DomainError("LieAlgebra: bracket target out of range in pair (" +
				                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
			if (it->second.is_zero())
				it = table_.erase(it);
			else
				++it;
		}
		if (labels_.empty()) {
			labels_.reserve(dim_);
			for (int i = 1; i <= dim_; ++i)
				labels_.push_back("X" + std::to_string(i));
		}
		if (static_cast<int>(labels_.size()) != dim_)
			throw DomainError("LieAlgebra: label count does not match dimension");
	}

	int dim() const { return dim_; }
	const std::vector<std::string>& labels() const { return labels_; }
	const Table& table() const { return table_; }

	bool is_abelian() const { return table_.empty(); }

	/// [X_i, X_j] with the sign convention for any index order.
	SparseVec bracket_basis(int i, int j) const {
		check_index(i);
		check_index(j);
		if (i == j)
			return {};
		bool flip = i > j;
		auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
		if (it == table_.end())
			return {};
		return flip ? it->second.negated() : it->second;
	}

	/// Bilinear antisymmetric extension of the structure-constant table.
	SparseVec bracket(const SparseVec& u, const SparseVec& v) const {
		SparseVec out;
		for (const auto& [pair, target] : table_) {
			const auto& [i, j] = pair;
			Rational c = u.at(i) * v.at(j) - u.at(j) * v.at(i);
			if (!c.is_zero())
				out.axpy(c, target);
		}
		return out;
	}

	std::vector<Rational> bracket(const std::vector<Rational>& u,
	                              const std::vector<Rational>& v) const {
		if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
			throw DomainError("LieAlgebra bracket: vector length mismatch");
		return bracket(SparseVec::from_dense(u), SparseVec::from_dense(v)).dense(dim_);
	}

	friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
		return a.dim_ == b.dim_ && a.table_ == b.table_ && a.labels_ == b.labels_;
	}

private:
	void check_index(int i) const {
		if (i < 0 || i >= dim_)
			throw DomainError("LieAlgebra: basis index out of range");
	}

	int dim_;
	Table table_;
	std::vector<std::string> labels_;
};

/// All Jacobi violations [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] != 0
/// over basis triples i < j < k. Empty iff the table defines a Lie algebra.
inline std::vector<JacobiViolation> validate(const LieAlgebra& g) {
	std::vector<JacobiViolation> out;
	int n = g.dim();
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			SparseVec bij = g.bracket_basis(i, j);
			for (int k = j + 1; k < n; ++k) {
				SparseVec s;
				SparseVec bjk = g.bracket_basis(j, k);
				SparseVec bki = g.bracket_basis(k, i);
				for (const auto& [l, c] : bij.entries())
					s.axpy(c, g.bracket_basis(l, k));
				for (const auto& [l, c] : bjk.entries())
					s.axpy(c, g.bracket_basis(l, i));
				for (const auto& [l, c] : bki.entries())
					s.axpy(c, g.bracket_basis(l, j));
				if (!s.is_zero())
					out.push_back({i, j, k, std::move(s)});
			}
		}
	return out;
}

inline void require_valid(const LieAlgebra& g, const std::string& who) {
	auto v = validate(g);
	if (!v.empty())
		throw DomainError(who + ": Jacobi identity fails at triple (" +
		                  std::to_string(v[0].i + 1) + ", " + std::to_string(v[0].j + 1) +
		                  ", " + std::to_string(v[0].k + 1) + ")");
}

} // namespace lienil
