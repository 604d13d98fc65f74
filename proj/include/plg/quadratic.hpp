#pragma once

// Elements a + b*sqrt(d) of a real quadratic field Q(sqrt d), d squarefree > 1.
//
// Some canonical normalizations (e.g. 2B^2 + 6C^2 = 3) have no rational points;
// those entries are evaluated exactly over Q(sqrt d) instead. A value with b = 0
// is field-agnostic and combines with any d. Mixing two different radicals in one
// expression is an error, never a silent approximation.

#include "plg/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plg {

struct MixedRadicalError : std::logic_error {
	using std::logic_error::logic_error;
};

class Quadratic {
public:
	Quadratic() = default;
	Quadratic(int n) : a_(n) {}
	Quadratic(long n) : a_(n) {}
	Quadratic(const Rational& a) : a_(a) {}
	Quadratic(const Rational& a, const Rational& b, long d);

	// sqrt(d) for squarefree d >= 2.
	static Quadratic sqrt_of(long d);
	// "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)", "sqrt(d)".
	static Quadratic parse(std::string_view s);

	const Rational& rational_part() const { return a_; }
	const Rational& radical_coeff() const { return b_; }
	long radicand() const { return d_; }
	bool is_rational() const { return b_.is_zero(); }
	std::optional<Rational> to_rational() const;
	bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
	// Exact sign of the real number a + b*sqrt(d).
	int sign() const;
	std::string str() const;

	Quadratic& operator+=(const Quadratic& o);
	Quadratic& operator-=(const Quadratic& o);
	Quadratic& operator*=(const Quadratic& o);
	Quadratic& operator/=(const Quadratic& o);

	friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
	friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
	friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
	friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
	friend Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a_, -x.b_, x.d_); }
	friend bool operator==(const Quadratic& x, const Quadratic& y)
	{
		return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
	}

private:
	long merge(const Quadratic& o) const;

	Rational a_, b_;
	long d_ = 0; // 0 iff b_ == 0
};

inline bool is_zero(const Quadratic& x) { return x.is_zero(); }
inline std::string to_string(const Quadratic& x) { return x.str(); }

} // namespace plg
