#pragma once

// The Galilei group: points (t, a, v, R) with R a rotation.
//
// Basis order of the Lie algebra, used by every module:
//   0 H, 1..3 P_i, 4..6 K_i, 7..9 J_i.
//
// One-parameter curves through the identity, s -> exp(s X):
//   H   -> (-s, 0, 0, I)
//   P_i -> (0, s e_i, 0, I)
//   K_i -> (0, 0, s e_i, I)
//   J_i -> (0, 0, 0, cayley(s e_i / 2))
// Only first-order jets of these curves are ever used, so the Cayley curve
// replaces the exponential for J_i and everything stays rational.

#include "plg/dual.hpp"
#include "plg/linalg.hpp"
#include "plg/rational.hpp"
#include "plg/rng.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace plg {

namespace basis {
inline constexpr int H = 0;
inline constexpr int P = 1;
inline constexpr int K = 4;
inline constexpr int J = 7;
inline constexpr int dim = 10;
const std::array<std::string, 10>& names();
int index_of(const std::string& name); // throws on unknown name
} // namespace basis

template <class T>
struct GroupElement {
	T t{};
	Vec3<T> a = zero3<T>();
	Vec3<T> v = zero3<T>();
	Mat3<T> R = identity3<T>();

	friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

template <class T>
GroupElement<T> identity_element()
{
	return GroupElement<T>{T(0), zero3<T>(), zero3<T>(), identity3<T>()};
}

// g1 g2 = (t1 + t2, a1 + R1 a2 + v1 t2, v1 + R1 v2, R1 R2).
template <class T>
GroupElement<T> compose(const GroupElement<T>& g1, const GroupElement<T>& g2)
{
	GroupElement<T> r;
	r.t = g1.t + g2.t;
	r.a = g1.a + matvec(g1.R, g2.a) + scale(g2.t, g1.v);
	r.v = g1.v + matvec(g1.R, g2.v);
	r.R = matmul(g1.R, g2.R);
	return r;
}

// g^-1 = (-t, -R^T (a - t v), -R^T v, R^T).
template <class T>
GroupElement<T> inverse(const GroupElement<T>& g)
{
	Mat3<T> rt = transpose(g.R);
	GroupElement<T> r;
	r.t = -g.t;
	r.a = -matvec(rt, g.a - scale(g.t, g.v));
	r.v = -matvec(rt, g.v);
	r.R = rt;
	return r;
}

// (I - S)(I + S)^-1 with S = skew(s).
template <class T>
Mat3<T> cayley_rotation(const Vec3<T>& s)
{
	Mat3<T> S = skew(s);
	Mat3<T> I = identity3<T>();
	return matmul(I - S, inverse(I + S));
}

template <class T>
GroupElement<T> one_parameter(int k, const T& s)
{
	if (k < 0 || k >= basis::dim)
		throw std::out_of_range("basis index out of range");
	GroupElement<T> g = identity_element<T>();
	if (k == basis::H) {
		g.t = -s;
	} else if (k < basis::K) {
		g.a[k - basis::P] = s;
	} else if (k < basis::J) {
		g.v[k - basis::K] = s;
	} else {
		Vec3<T> w = zero3<T>();
		w[k - basis::J] = s / T(2);
		g.R = cayley_rotation(w);
	}
	return g;
}

template <class U, class T>
GroupElement<U> lift(const GroupElement<T>& g)
{
	return GroupElement<U>{U(g.t), convert<U>(g.a), convert<U>(g.v), convert<U>(g.R)};
}

// Algebra coordinates of the velocity of a curve through the identity, given
// as a first-order jet: H = -dt, P = da, K = dv, J = -(dR_32, dR_13, dR_21).
template <class T>
std::array<T, 10> tangent_coordinates(const GroupElement<Dual<T>>& jet)
{
	std::array<T, 10> x;
	x[basis::H] = -jet.t.d;
	for (int i = 0; i < 3; ++i) {
		x[basis::P + i] = jet.a[i].d;
		x[basis::K + i] = jet.v[i].d;
	}
	x[basis::J + 0] = -jet.R[2][1].d;
	x[basis::J + 1] = -jet.R[0][2].d;
	x[basis::J + 2] = -jet.R[1][0].d;
	return x;
}

template <class T>
bool is_rotation(const Mat3<T>& R)
{
	Mat3<T> p = matmul(transpose(R), R);
	Mat3<T> I = identity3<T>();
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			if (!(p[i][j] == I[i][j]))
				return false;
	return det(R) == T(1);
}

GroupElement<Rational> sample_group_element(Rng& rng, long bound);

// The 16 coordinates t, a1..a3, v1..v3, R11..R33 (row major).
template <class T>
std::array<T, 16> coordinates(const GroupElement<T>& g)
{
	std::array<T, 16> c;
	c[0] = g.t;
	for (int i = 0; i < 3; ++i) {
		c[1 + i] = g.a[i];
		c[4 + i] = g.v[i];
		for (int j = 0; j < 3; ++j)
			c[7 + 3 * i + j] = g.R[i][j];
	}
	return c;
}

} // namespace plg
