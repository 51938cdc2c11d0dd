#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "lienil/rational.hpp"

namespace lienil {

/// Sparse coordinate vector: (index, coefficient) pairs with strictly
/// ascending 0-based indices and no explicit zeros.
class SparseVec {
public:
	using Entry = std::pair<int, Rational>;

	SparseVec() = default;

	static SparseVec unit(int i) {
		SparseVec v;
		v.e_.emplace_back(i, Rational(1));
		return v;
	}

	static SparseVec from_entries(std::vector<Entry> entries) {
		std::sort(entries.begin(), entries.end(),
		          [](const Entry& a, const Entry& b) { return a.first < b.first; });
		SparseVec v;
		for (auto& [i, c] : entries) {
			if (c.is_zero())
				continue;
			if (!v.e_.empty() && v.e_.back().first == i)
				throw DomainError("SparseVec: duplicate index in entry list");
			v.e_.emplace_back(i, std::move(c));
		}
		return v;
	}

	/// Like from_entries but sums coefficients at repeated indices.
	static SparseVec accumulate(std::vector<Entry> entries) {
		std::sort(entries.begin(), entries.end(),
		          [](const Entry& a, const Entry& b) { return a.first < b.first; });
		SparseVec v;
		for (auto& [i, c] : entries) {
			if (!v.e_.empty() && v.e_.back().first == i) {
				v.e_.back().second += c;
				if (v.e_.back().second.is_zero())
					v.e_.pop_back();
			} else if (!c.is_zero()) {
				v.e_.emplace_back(i, std::move(c));
			}
		}
		return v;
	}

	static SparseVec from_dense(const std::vector<Rational>& d) {
		SparseVec v;
		for (int i = 0; i < static_cast<int>(d.size()); ++i)
			if (!d[i].is_zero())
				v.e_.emplace_back(i, d[i]);
		return v;
	}

	std::vector<Rational> dense(int n) const {
		std::vector<Rational> d(n);
		for (auto& [i, c] : e_)
			d[i] = c;
		return d;
	}

	bool is_zero() const { return e_.empty(); }
	int nnz() const { return static_cast<int>(e_.size()); }

	int lead() const { return e_.front().first; }
	const Rational& lead_coeff() const { return e_.front().second; }

	Rational at(int i) const {
		auto it = std::lower_bound(e_.begin(), e_.end(), i,
		                           [](const Entry& a, int b) { return a.first < b; });
		if (it != e_.end() && it->first == i)
			return it->second;
		return Rational();
	}

	const std::vector<Entry>& entries() const { return e_; }

	void push(int i, Rational c) {
		if (c.is_zero())
			return;
		if (!e_.empty() && e_.back().first >= i)
			throw DomainError("SparseVec: push out of order");
		e_.emplace_back(i, std::move(c));
	}

	/// *this += a * other
	void axpy(const Rational& a, const SparseVec& other) {
		if (a.is_zero() || other.is_zero())
			return;
		std::vector<Entry> merged;
		merged.reserve(e_.size() + other.e_.size());
		size_t p = 0, q = 0;
		while (p < e_.size() || q < other.e_.size()) {
			if (q == other.e_.size() ||
			    (p < e_.size() && e_[p].first < other.e_[q].first)) {
				merged.push_back(std::move(e_[p++]));
			} else if (p == e_.size() || e_[p].first > other.e_[q].first) {
				merged.emplace_back(other.e_[q].first, a * other.e_[q].second);
				if (merged.back().second.is_zero())
					merged.pop_back();
				++q;
			} else {
				Rational c = std::move(e_[p].second);
				c += a * other.e_[q].second;
				if (!c.is_zero())
					merged.emplace_back(e_[p].first, std::move(c));
				++p;
				++q;
			}
		}
		e_ = std::move(merged);
	}

	void scale(const Rational& a) {
		if (a.is_zero()) {
			e_.clear();
			return;
		}
		for (auto& [i, c] : e_)
			c *= a;
	}

	SparseVec scaled(const Rational& a) const {
		SparseVec v = *this;
		v.scale(a);
		return v;
	}

	SparseVec negated() const { return scaled(Rational(-1)); }

	void shift(int offset) {
		for (auto& [i, c] : e_)
			i += offset;
	}

	SparseVec shifted(int offset) const {
		SparseVec v = *this;
		v.shift(offset);
		return v;
	}

	friend bool operator==(const SparseVec& a, const SparseVec& b) {
		return a.e_ == b.e_;
	}

private:
	std::vector<Entry> e_;
};

inline SparseVec operator+(const SparseVec& a, const SparseVec& b) {
	SparseVec r = a;
	r.axpy(Rational(1), b);
	return r;
}

inline SparseVec operator-(const SparseVec& a, const SparseVec& b) {
	SparseVec r = a;
	r.axpy(Rational(-1), b);
	return r;
}

} // namespace lienil
