#pragma once

// Exact rational scalar. Always canonical (lowest terms, den > 0).
//
// Values whose numerator and denominator fit in [-(2^63 - 1), 2^63 - 1] are
// stored inline; anything larger is held in a GMP rational. The split is
// canonical too (a GMP value never fits inline), so equality compares
// representations directly. Inline arithmetic runs in 128 bits and promotes on
// overflow.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace plg {

class Rational {
public:
	Rational() = default;
	Rational(int n) : n_(n) {}
	Rational(long n) : n_(n) { promote_if_min(); }
	Rational(long long n) : n_(static_cast<std::int64_t>(n)) { promote_if_min(); }
	Rational(long num, long den);
	explicit Rational(mpq_class q)
	{
		q.canonicalize();
		assign(q);
	}

	Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
	Rational(Rational&&) noexcept = default;
	Rational& operator=(const Rational& o)
	{
		if (this != &o) {
			n_ = o.n_;
			d_ = o.d_;
			big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
		}
		return *this;
	}
	Rational& operator=(Rational&&) noexcept = default;

	// Accepts "p", "p/q", "-p/q" with arbitrary-size integers.
	static Rational parse(std::string_view s);

	mpq_class to_mpq() const;
	std::string str() const;
	std::string num_str() const;
	std::string den_str() const;

	bool is_zero() const { return !big_ && n_ == 0; }
	int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
	bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

	Rational& operator+=(const Rational& o)
	{
		if (!big_ && !o.big_) {
			if (d_ == 1 && o.d_ == 1)
				return set(__int128(n_) + o.n_, 1);
			return set(__int128(n_) * o.d_ + __int128(o.n_) * d_, __int128(d_) * o.d_);
		}
		return assign(to_mpq() + o.to_mpq());
	}
	Rational& operator-=(const Rational& o)
	{
		if (!big_ && !o.big_) {
			if (d_ == 1 && o.d_ == 1)
				return set(__int128(n_) - o.n_, 1);
			return set(__int128(n_) * o.d_ - __int128(o.n_) * d_, __int128(d_) * o.d_);
		}
		return assign(to_mpq() - o.to_mpq());
	}
	Rational& operator*=(const Rational& o)
	{
		if (!big_ && !o.big_)
			return set(__int128(n_) * o.n_, __int128(d_) * o.d_);
		return assign(to_mpq() * o.to_mpq());
	}
	Rational& operator/=(const Rational& o);

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
	friend Rational operator-(const Rational& a)
	{
		if (!a.big_) {
			Rational r;
			r.n_ = -a.n_;
			r.d_ = a.d_;
			return r;
		}
		Rational r;
		r.assign(-*a.big_);
		return r;
	}

	friend bool operator==(const Rational& a, const Rational& b)
	{
		if (!a.big_ && !b.big_)
			return a.n_ == b.n_ && a.d_ == b.d_;
		if (a.big_ && b.big_)
			return *a.big_ == *b.big_;
		return false;
	}
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
	// Canonicalizes n/d (d > 0) and stores it inline or promotes.
	Rational& set(__int128 n, __int128 d);
	Rational& assign(const mpq_class& q);
	void promote_if_min();

	std::int64_t n_ = 0, d_ = 1;
	std::unique_ptr<mpq_class> big_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }
Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace plg
