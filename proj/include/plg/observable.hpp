#pragma once

// Polynomial observables in the 16 group coordinates
//   t, a1..a3, v1..v3, R11..R33.

#include "plg/group.hpp"
#include "plg/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plg {

struct UnsupportedObservable : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

class Observable {
public:
	using Exponents = std::array<std::uint8_t, 16>;

	Observable() = default;
	static Observable constant(const Rational& c);
	static Observable coordinate(int index);
	static Observable coordinate(std::string_view name);
	// Sums of products of coordinates, rational constants and nonnegative integer
	// powers, e.g. "a1^2*t - 3/2*R12 + 1". Anything else is unsupported.
	static Observable parse(std::string_view text);

	static const std::array<std::string, 16>& coordinate_names();
	static int coordinate_index(std::string_view name); // throws UnsupportedObservable

	// Coordinate index when the observable is exactly one coordinate.
	std::optional<int> as_coordinate() const;
	std::string str() const;
	bool is_zero() const { return terms_.empty(); }

	Observable& operator+=(const Observable& o);
	Observable& operator*=(const Observable& o);
	friend Observable operator+(Observable a, const Observable& b) { return a += b; }
	friend Observable operator*(Observable a, const Observable& b) { return a *= b; }
	friend Observable operator-(const Observable& a);
	friend Observable operator-(const Observable& a, const Observable& b) { return a + (-b); }

	template <class T>
	T evaluate(const std::array<T, 16>& x) const
	{
		T sum(0);
		for (const auto& [exps, coeff] : terms_) {
			T term(coeff);
			for (int i = 0; i < 16; ++i)
				for (int p = 0; p < exps[i]; ++p)
					term *= x[i];
			sum += term;
		}
		return sum;
	}

	template <class T>
	T operator()(const GroupElement<T>& g) const
	{
		return evaluate(coordinates(g));
	}

	const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
	void add_term(const Exponents& e, const Rational& c);
	std::map<Exponents, Rational> terms_;
};

} // namespace plg
