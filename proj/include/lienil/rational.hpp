#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "lienil/error.hpp"

namespace lienil {

/// Exact rational scalar. Always stored in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Serializes as "p/q" or "p" with the sign on the
/// numerator.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den) {
		if (den == 0)
			throw DomainError("Rational: zero denominator");
		v_ = mpq_class(num, den);
		v_.canonicalize();
	}

	/// Strict parse of "p" or "p/q": decimal digits, optional leading '-' on
	/// the numerator only, no whitespace, nonzero denominator.
	static Rational parse(const std::string& s) {
		auto fail = [&]() -> Rational {
			throw ParseError("not a rational literal: \"" + s + "\"");
		};
		auto digits = [](const std::string& t, size_t from) {
			if (from >= t.size())
				return false;
			for (size_t i = from; i < t.size(); ++i)
				if (t[i] < '0' || t[i] > '9')
					return false;
			return true;
		};
		auto slash = s.find('/');
		std::string num = s.substr(0, slash);
		if (num.empty())
			return fail();
		if (!digits(num, num[0] == '-' ? 1 : 0))
			return fail();
		Rational r;
		if (slash == std::string::npos) {
			r.v_ = mpq_class(mpz_class(num, 10));
		} else {
			std::string den = s.substr(slash + 1);
			if (!digits(den, 0))
				return fail();
			mpz_class d(den, 10);
			if (d == 0)
				throw ParseError("zero denominator in rational literal: \"" + s + "\"");
			r.v_ = mpq_class(mpz_class(num, 10), d);
			r.v_.canonicalize();
		}
		return r;
	}

	std::string str() const {
		return v_.get_str();
	}

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	int sign() const { return sgn(v_); }
	bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 1) == 0; }

	/// largest integer <= value
	Rational floor() const {
		mpz_class q;
		mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
		Rational r;
		r.v_ = mpq_class(q);
		return r;
	}

	Rational ceil() const {
		Rational f = floor();
		return f == *this ? f : f + Rational(1);
	}

	/// exact conversion; requires an integral value that fits in long
	long to_long() const {
		if (!is_integer())
			throw DomainError("Rational: to_long on non-integer " + str());
		mpz_class num(mpq_numref(v_.get_mpq_t()));
		if (!num.fits_slong_p())
			throw DomainError("Rational: value out of long range: " + str());
		return num.get_si();
	}

	Rational operator-() const {
		Rational r;
		r.v_ = -v_;
		return r;
	}

	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
	Rational& operator/=(const Rational& o) {
		if (o.is_zero())
			throw DomainError("Rational: division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

	friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
		return os << r.v_;
	}

private:
	mpq_class v_;
};

} // namespace lienil
