#pragma once

// Lie algebra of the Galilei group: structure constants, bracket, adjoint
// action (by exact conjugation of curve jets) and right-invariant derivatives.

#include "plg/group.hpp"

#include <array>
#include <functional>

namespace plg {

template <class T>
using AlgebraVector = std::array<T, 10>;

// c[i][j][k]: [X_i, X_j] = c[i][j][k] X_k.
template <class T>
struct StructureConstants {
	std::array<std::array<std::array<T, 10>, 10>, 10> c;

	StructureConstants()
	{
		for (auto& a : c)
			for (auto& b : a)
				b.fill(T(0));
	}
};

// [J_i,J_j] = e_ijk J_k, [J_i,K_j] = e_ijk K_k, [J_i,P_j] = e_ijk P_k, [K_i,H] = P_i.
template <class T>
StructureConstants<T> galilei_structure_constants()
{
	using namespace basis;
	StructureConstants<T> s;
	for (int i = 0; i < 3; ++i) {
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				if (int e = eps(i, j, k)) {
					s.c[J + i][J + j][J + k] = T(e);
					s.c[J + i][K + j][K + k] = T(e);
					s.c[K + j][J + i][K + k] = T(-e);
					s.c[J + i][P + j][P + k] = T(e);
					s.c[P + j][J + i][P + k] = T(-e);
				}
		s.c[K + i][H][P + i] = T(1);
		s.c[H][K + i][P + i] = T(-1);
	}
	return s;
}

template <class T>
AlgebraVector<T> algebra_bracket(const StructureConstants<T>& s, const AlgebraVector<T>& x, const AlgebraVector<T>& y)
{
	AlgebraVector<T> r;
	r.fill(T(0));
	for (int i = 0; i < 10; ++i) {
		if (is_zero(x[i]))
			continue;
		for (int j = 0; j < 10; ++j) {
			if (is_zero(y[j]))
				continue;
			T xy = x[i] * y[j];
			for (int k = 0; k < 10; ++k)
				if (!is_zero(s.c[i][j][k]))
					r[k] += xy * s.c[i][j][k];
		}
	}
	return r;
}

template <class T>
AlgebraVector<T> algebra_bracket(const AlgebraVector<T>& x, const AlgebraVector<T>& y)
{
	static const StructureConstants<T> s = galilei_structure_constants<T>();
	return algebra_bracket(s, x, y);
}

template <class T>
AlgebraVector<T> basis_vector(int k)
{
	AlgebraVector<T> x;
	x.fill(T(0));
	x[k] = T(1);
	return x;
}

// Matrix of ad_X = [X, .]: (ad_X)[k][j] = x_i c[i][j][k].
template <class T>
Mat10<T> ad_matrix(const StructureConstants<T>& s, const AlgebraVector<T>& x)
{
	Mat10<T> m = zero10<T>();
	for (int i = 0; i < 10; ++i) {
		if (is_zero(x[i]))
			continue;
		for (int j = 0; j < 10; ++j)
			for (int k = 0; k < 10; ++k)
				if (!is_zero(s.c[i][j][k]))
					m[k][j] += x[i] * s.c[i][j][k];
	}
	return m;
}

// Column k = coordinates of d/ds (g exp(s X_k) g^-1) at s = 0.
template <class T>
Mat10<T> adjoint(const GroupElement<T>& g)
{
	using D = Dual<T>;
	GroupElement<D> gd = lift<D>(g);
	GroupElement<D> gi = lift<D>(inverse(g));
	Mat10<T> m;
	for (int k = 0; k < 10; ++k) {
		GroupElement<D> jet = compose(compose(gd, one_parameter<D>(k, D::variable(T(0)))), gi);
		auto col = tangent_coordinates(jet);
		for (int i = 0; i < 10; ++i)
			m[i][k] = col[i];
	}
	return m;
}

template <class T>
AlgebraVector<T> apply(const Mat10<T>& m, const AlgebraVector<T>& x)
{
	AlgebraVector<T> r;
	r.fill(T(0));
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			if (!is_zero(x[j]))
				r[i] += m[i][j] * x[j];
	return r;
}

// Generic directional derivative d/ds f(curve(s)) at s = 0, where the curve is
// supplied as a function of a dual parameter.
template <class T, class F, class C>
T directional_derivative(F&& f, C&& curve)
{
	Dual<T> s = Dual<T>::variable(T(0));
	Dual<T> value = f(curve(s));
	return value.d;
}

// d/ds f(exp(s X_k) g) at s = 0.
template <class T, class F>
T basis_derivative(int k, F&& f, const GroupElement<T>& g)
{
	using D = Dual<T>;
	GroupElement<D> gd = lift<D>(g);
	return directional_derivative<T>(f, [&](const D& s) { return compose(one_parameter<D>(k, s), gd); });
}

// d/ds f(exp(s x) g) at s = 0, by linearity in x.
template <class T, class F>
T right_invariant_derivative(const AlgebraVector<T>& x, F&& f, const GroupElement<T>& g)
{
	T r(0);
	for (int k = 0; k < 10; ++k)
		if (!is_zero(x[k]))
			r += x[k] * basis_derivative<T>(k, f, g);
	return r;
}

} // namespace plg
