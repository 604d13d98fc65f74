#include "plg/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace plg {

namespace {

constexpr __int128 inline_max = INT64_MAX;

bool fits(__int128 x) { return x >= -inline_max && x <= inline_max; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b)
{
	while (b) {
		if ((a >> 64) == 0 && (b >> 64) == 0)
			return std::gcd(std::uint64_t(a), std::uint64_t(b));
		a %= b;
		std::swap(a, b);
	}
	return a;
}

mpz_class to_mpz(__int128 x)
{
	const bool neg = x < 0;
	unsigned __int128 m = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
	const std::uint64_t words[2] = {std::uint64_t(m), std::uint64_t(m >> 64)};
	mpz_class z;
	mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
	return neg ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	if (den < 0)
		set(-__int128(num), -__int128(den));
	else
		set(num, den);
}

Rational& Rational::set(__int128 n, __int128 d)
{
	if (n == 0) {
		n_ = 0;
		d_ = 1;
		big_.reset();
		return *this;
	}
	const unsigned __int128 g = gcd128(n < 0 ? -static_cast<unsigned __int128>(n) : n, d);
	if (g != 1) {
		n /= static_cast<__int128>(g);
		d /= static_cast<__int128>(g);
	}
	if (fits(n) && fits(d)) {
		n_ = std::int64_t(n);
		d_ = std::int64_t(d);
		big_.reset();
		return *this;
	}
	mpq_class q(to_mpz(n), to_mpz(d));
	return assign(q);
}

Rational& Rational::assign(const mpq_class& q)
{
	const mpz_class& num = q.get_num();
	const mpz_class& den = q.get_den();
	if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != INT64_MIN) {
		n_ = num.get_si();
		d_ = den.get_si();
		big_.reset();
	} else {
		big_ = std::make_unique<mpq_class>(q);
	}
	return *this;
}

void Rational::promote_if_min()
{
	if (n_ == INT64_MIN) {
		big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(n_)));
		n_ = 0;
	}
}

mpq_class Rational::to_mpq() const
{
	if (big_)
		return *big_;
	mpq_class q;
	mpq_set_si(q.get_mpq_t(), n_, static_cast<unsigned long>(d_));
	return q;
}

Rational& Rational::operator/=(const Rational& o)
{
	if (o.is_zero())
		throw std::domain_error("rational division by zero");
	if (!big_ && !o.big_) {
		__int128 n = __int128(n_) * o.d_, d = __int128(d_) * o.n_;
		return d < 0 ? set(-n, -d) : set(n, d);
	}
	return assign(to_mpq() / o.to_mpq());
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
	int c;
	if (!a.big_ && !b.big_) {
		const __int128 l = __int128(a.n_) * b.d_, r = __int128(b.n_) * a.d_;
		c = (l > r) - (l < r);
	} else {
		c = cmp(a.to_mpq(), b.to_mpq());
	}
	return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view s)
{
	std::string text(s);
	auto bad = [&] { return std::invalid_argument("not a rational: '" + text + "'"); };
	if (text.empty())
		throw bad();
	auto valid_int = [](std::string_view d) {
		std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
		if (i == d.size())
			return false;
		for (; i < d.size(); ++i)
			if (d[i] < '0' || d[i] > '9')
				return false;
		return true;
	};
	auto slash = text.find('/');
	std::string num = text.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
	if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
		throw bad();
	if (num[0] == '+')
		num.erase(0, 1);
	mpz_class n(num, 10), d(den, 10);
	if (d == 0)
		throw std::domain_error("rational with zero denominator: '" + text + "'");
	return Rational(mpq_class(n, d));
}

std::string Rational::num_str() const
{
	return big_ ? big_->get_num().get_str() : std::to_string(n_);
}

std::string Rational::den_str() const
{
	return big_ ? big_->get_den().get_str() : std::to_string(d_);
}

std::string Rational::str() const
{
	if (is_integer())
		return num_str();
	return num_str() + "/" + den_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

} // namespace plg
