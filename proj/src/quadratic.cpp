#include "plg/quadratic.hpp"

namespace plg {

namespace {

bool squarefree(long d)
{
	if (d < 2)
		return false;
	for (long p = 2; p * p <= d; ++p)
		if (d % (p * p) == 0)
			return false;
	return true;
}

} // namespace

Quadratic::Quadratic(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d)
{
	if (b_.is_zero()) {
		d_ = 0;
		return;
	}
	if (!squarefree(d_))
		throw std::invalid_argument("radicand must be squarefree and >= 2, got " + std::to_string(d));
}

Quadratic Quadratic::sqrt_of(long d) { return Quadratic(Rational(0), Rational(1), d); }

long Quadratic::merge(const Quadratic& o) const
{
	if (b_.is_zero())
		return o.d_;
	if (o.b_.is_zero() || d_ == o.d_)
		return d_;
	throw MixedRadicalError("cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" +
	                        std::to_string(o.d_) + ")");
}

Quadratic& Quadratic::operator+=(const Quadratic& o)
{
	long d = merge(o);
	*this = Quadratic(a_ + o.a_, b_ + o.b_, d);
	return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o)
{
	long d = merge(o);
	*this = Quadratic(a_ - o.a_, b_ - o.b_, d);
	return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o)
{
	long d = merge(o);
	Rational a = a_ * o.a_;
	if (d != 0)
		a += Rational(d) * b_ * o.b_;
	*this = Quadratic(a, a_ * o.b_ + b_ * o.a_, d);
	return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o)
{
	if (o.is_zero())
		throw std::domain_error("quadratic division by zero");
	long d = merge(o);
	// 1/(x + y r) = (x - y r)/(x^2 - d y^2); the norm is nonzero since r is irrational.
	Rational norm = o.a_ * o.a_ - (d != 0 ? Rational(d) * o.b_ * o.b_ : Rational(0));
	Quadratic conj(o.a_ / norm, -o.b_ / norm, d);
	return *this *= conj;
}

std::optional<Rational> Quadratic::to_rational() const
{
	if (!b_.is_zero())
		return std::nullopt;
	return a_;
}

int Quadratic::sign() const
{
	int sa = a_.sign(), sb = b_.sign();
	if (sb == 0)
		return sa;
	if (sa == 0 || sa == sb)
		return sb;
	// Opposite signs: compare a^2 with d b^2.
	Rational lhs = a_ * a_, rhs = Rational(d_) * b_ * b_;
	return lhs > rhs ? sa : sb;
}

std::string Quadratic::str() const
{
	if (b_.is_zero())
		return a_.str();
	std::string rad = "sqrt(" + std::to_string(d_) + ")";
	std::string coeff = b_ == Rational(1) ? rad : b_ == Rational(-1) ? "-" + rad : b_.str() + "*" + rad;
	if (a_.is_zero())
		return coeff;
	return a_.str() + (b_.sign() > 0 ? "+" : "") + coeff;
}

Quadratic Quadratic::parse(std::string_view s)
{
	std::string text(s);
	auto pos = text.find("sqrt(");
	if (pos == std::string::npos)
		return Quadratic(Rational::parse(text));
	auto close = text.find(')', pos);
	if (close == std::string::npos || close + 1 != text.size())
		throw std::invalid_argument("malformed quadratic: '" + text + "'");
	long d = std::stol(text.substr(pos + 5, close - pos - 5));
	// Split "[a](+|-)[b*]sqrt(d)" at the sign introducing the radical term.
	std::string head = text.substr(0, pos);
	Rational b(1);
	if (!head.empty() && head.back() == '*') {
		head.pop_back();
		std::size_t k = head.size();
		while (k > 0 && head[k - 1] != '+' && head[k - 1] != '-')
			--k;
		if (k > 0)
			--k;
		b = Rational::parse(head.substr(k));
		head = head.substr(0, k);
	} else if (!head.empty() && (head.back() == '+' || head.back() == '-')) {
		if (head.back() == '-')
			b = Rational(-1);
		head.pop_back();
	}
	if (!head.empty() && head.back() == '+')
		head.pop_back();
	Rational a = head.empty() ? Rational(0) : Rational::parse(head);
	return Quadratic(a, b, d);
}

} // namespace plg
