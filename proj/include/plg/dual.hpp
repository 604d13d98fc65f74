#pragma once

// First-order dual numbers v + d*eps, eps^2 = 0, over an exact field T.
// Dual<Dual<T>> carries mixed second derivatives (eps1*eps2 term in d.d).

#include <concepts>
#include <stdexcept>
#include <string>

namespace plg {

template <class T>
struct Dual {
	T v{};
	T d{};

	Dual() = default;
	Dual(const T& value, const T& deriv) : v(value), d(deriv) {}
	// Constants embed with zero derivative. Anything T itself accepts (ints,
	// rationals, lower-level duals) is accepted here.
	template <class U>
		requires std::constructible_from<T, const U&> && (!std::same_as<std::remove_cvref_t<U>, Dual>)
	Dual(const U& value) : v(value), d(0) {}

	static Dual variable(const T& value) { return Dual(value, T(1)); }

	Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
	Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
	Dual& operator*=(const Dual& o)
	{
		d = v * o.d + d * o.v;
		v *= o.v;
		return *this;
	}
	Dual& operator/=(const Dual& o)
	{
		if (is_zero(o.v))
			throw std::domain_error("dual division by a value with zero real part");
		d = (d * o.v - v * o.d) / (o.v * o.v);
		v /= o.v;
		return *this;
	}

	friend Dual operator+(Dual a, const Dual& b) { return a += b; }
	friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
	friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
	friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
	friend Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
	friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

template <class T>
bool is_zero(const Dual<T>& x)
{
	return is_zero(x.v) && is_zero(x.d);
}

template <class T>
std::string to_string(const Dual<T>& x)
{
	return "(" + to_string(x.v) + " + " + to_string(x.d) + " eps)";
}

// Strips derivative layers down to the base field.
template <class T>
struct BaseField {
	using type = T;
};
template <class T>
struct BaseField<Dual<T>> {
	using type = typename BaseField<T>::type;
};

} // namespace plg
