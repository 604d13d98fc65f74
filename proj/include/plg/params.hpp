#pragma once

// Free parameters of the general solution of the cocycle condition.
// sigma and chi are traceless by convention; rho carries the trace part.

#include "plg/linalg.hpp"
#include "plg/quadratic.hpp"
#include "plg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plg {

template <class T>
struct EtaParameters {
	Vec3<T> alpha = zero3<T>();
	T beta{0};
	Vec3<T> gamma = zero3<T>();
	Vec3<T> phi = zero3<T>();
	Vec3<T> lambda = zero3<T>();
	T v_param{0};
	Vec3<T> xi = zero3<T>();
	T theta{0};
	T rho{0};
	Mat3<T> sigma = zero33<T>();
	Mat3<T> chi = zero33<T>();
	Mat3<T> omega = zero33<T>();
	Vec3<T> n = zero3<T>();

	friend bool operator==(const EtaParameters&, const EtaParameters&) = default;

	bool normalized() const { return is_zero(trace(sigma)) && is_zero(trace(chi)); }

	template <class U>
	EtaParameters<U> as() const
	{
		EtaParameters<U> p;
		p.alpha = convert<U>(alpha);
		p.beta = U(beta);
		p.gamma = convert<U>(gamma);
		p.phi = convert<U>(phi);
		p.lambda = convert<U>(lambda);
		p.v_param = U(v_param);
		p.xi = convert<U>(xi);
		p.theta = U(theta);
		p.rho = U(rho);
		p.sigma = convert<U>(sigma);
		p.chi = convert<U>(chi);
		p.omega = convert<U>(omega);
		p.n = convert<U>(n);
		return p;
	}

	// Visits every scalar slot with a stable name, e.g. "sigma[1][2]".
	template <class F>
	void for_each_scalar(F&& f) { visit(*this, f); }
	template <class F>
	void for_each_scalar(F&& f) const { visit(*this, f); }

private:
	template <class Self, class F>
	static void visit(Self& p, F& f)
	{
		auto v3 = [&](const char* name, auto& x) {
			for (int i = 0; i < 3; ++i)
				f(std::string(name) + "[" + std::to_string(i + 1) + "]", x[i]);
		};
		auto m3 = [&](const char* name, auto& m) {
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					f(std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", m[i][j]);
		};
		v3("alpha", p.alpha);
		f(std::string("beta"), p.beta);
		v3("gamma", p.gamma);
		v3("phi", p.phi);
		v3("lambda", p.lambda);
		f(std::string("v_param"), p.v_param);
		v3("xi", p.xi);
		f(std::string("theta"), p.theta);
		f(std::string("rho"), p.rho);
		m3("sigma", p.sigma);
		m3("chi", p.chi);
		m3("omega", p.omega);
		v3("n", p.n);
	}
};

// Number of scalar slots (49).
inline constexpr int eta_parameter_count = 49;

template <class T>
EtaParameters<T> operator+(EtaParameters<T> a, const EtaParameters<T>& b)
{
	std::vector<T> flat;
	b.for_each_scalar([&](const std::string&, const T& x) { flat.push_back(x); });
	std::size_t i = 0;
	a.for_each_scalar([&](const std::string&, T& x) { x += flat[i++]; });
	return a;
}

// Unit vector in the parameter space: slot k (ordering of for_each_scalar) = 1.
template <class T>
EtaParameters<T> one_hot_parameters(int k)
{
	EtaParameters<T> p;
	int i = 0;
	p.for_each_scalar([&](const std::string&, T& x) {
		if (i++ == k)
			x = T(1);
	});
	return p;
}

class Rng;
// Random parameters with bounded rational entries; sigma, chi traceless.
EtaParameters<Rational> random_parameters(Rng& rng, long bound, bool with_n = true);

// Every entry rational? Then the cheaper exact field can be used.
std::optional<EtaParameters<Rational>> rational_parameters(const EtaParameters<Quadratic>& p);

} // namespace plg
