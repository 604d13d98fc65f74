#pragma once

// Action of the automorphism group of the Galilei algebra on EtaParameters:
// inner automorphisms by boosts, space translations, time translations and
// rotations, plus the two outer dilations of the space and time units.
//
// Transcription::printed reproduces the displayed formulas verbatim (the
// boost's unbound velocity index is summed). The corrected boost and space
// translation formulas differ only in terms proportional to n.

#include "plg/bialgebra.hpp"
#include "plg/params.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace plg {

template <class T>
EtaParameters<T> act_boost(const EtaParameters<T>& p, const Vec3<T>& v, Transcription tr = Transcription::corrected)
{
	using detail::kd;
	const bool fix = tr == Transcription::corrected;
	const T half = T(1) / T(2), third = T(1) / T(3);
	const T vn = dot(v, p.n), av = dot(p.alpha, v);
	EtaParameters<T> q = p;
	q.gamma = p.gamma - scale(p.beta, v) + cross(v, p.alpha);
	{
		Vec3<T> phv = cross(p.phi, v); // e_kil phi_i v_l
		T vsum = v[0] + v[1] + v[2];
		Vec3<T> phs = cross(p.phi, Vec3<T>{vsum, vsum, vsum});
		q.lambda = p.lambda - scale(p.v_param, v) - scale(half, fix ? phv : phs);
	}
	q.xi = p.xi - matvec(p.omega, v) + scale(fix ? vn : -vn, v);
	q.rho = p.rho - third * av;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			T nterm = v[i] * p.n[j] + vn * kd<T>(i, j);
			q.omega[i][j] = fix ? p.omega[i][j] - nterm : p.omega[i][j] + nterm;
		}
	for (int i = 0; i < 3; ++i)
		for (int a = 0; a < 3; ++a) {
			T s = p.sigma[i][a] + p.alpha[a] * v[i] - third * av * kd<T>(a, i);
			for (int l = 0; l < 3; ++l)
				if (int e = eps(i, a, l))
					s += T(e) * p.beta * v[l];
			q.sigma[i][a] = s;
		}
	T tr_part = dot(v, p.gamma);
	for (int l = 0; l < 3; ++l)
		for (int n = 0; n < 3; ++n)
			for (int m = 0; m < 3; ++m)
				if (int e = eps(l, n, m))
					tr_part += T(e) * p.sigma[n][l] * v[m];
	const Vec3<T> va = cross(v, p.alpha); // e_bnm v_n alpha_m
	const Vec3<T> sv = matvec(transpose(p.sigma), v); // sigma_nk v_n
	for (int a = 0; a < 3; ++a)
		for (int b = 0; b < 3; ++b) {
			T c = p.chi[a][b] + v[a] * p.gamma[b] + va[b] * v[a] - third * tr_part * kd<T>(a, b);
			for (int k = 0; k < 3; ++k)
				if (int e = eps(a, b, k))
					c -= T(e) * (half * sv[k] + p.rho * v[k]);
			for (int l = 0; l < 3; ++l)
				for (int m = 0; m < 3; ++m) {
					if (int e = eps(a, l, m))
						c -= half * T(e) * p.sigma[b][l] * v[m];
					if (int e = eps(b, l, m))
						c -= half * T(e) * p.sigma[a][l] * v[m];
				}
			q.chi[a][b] = c;
		}
	return q;
}

template <class T>
EtaParameters<T> act_space_translation(const EtaParameters<T>& p, const Vec3<T>& a,
                                       Transcription tr = Transcription::corrected)
{
	using detail::kd;
	const bool fix = tr == Transcription::corrected;
	const T half = T(1) / T(2);
	const T an = dot(a, p.n), a2 = dot(a, a);
	EtaParameters<T> q = p;
	q.phi = p.phi - scale(p.beta, a) - cross(p.alpha, a);
	if (!fix)
		q.gamma = p.gamma - scale(T(2), cross(p.n, a)); // e_knm a_m n_n = (n x a)_k
	Vec3<T> sa = matvec(transpose(p.sigma), a); // sigma_nk a_n
	q.lambda = p.lambda - scale(half, sa) - scale(p.rho, a) +
	           (fix ? scale(an, a) : -(scale(a2, p.n) + scale(an, p.n)));
	q.rho = p.rho - T(4) / T(3) * an;
	for (int x = 0; x < 3; ++x)
		for (int y = 0; y < 3; ++y)
			q.sigma[x][y] = p.sigma[x][y] + T(2) / T(3) * an * kd<T>(x, y) - T(2) * p.n[x] * a[y];
	const Vec3<T> oa = matvec(p.omega, a); // omega_nk a_k
	T tr_part(0);
	for (int m = 0; m < 3; ++m)
		for (int n = 0; n < 3; ++n)
			for (int k = 0; k < 3; ++k)
				if (int e = eps(m, n, k))
					tr_part += T(e) * p.omega[m][n] * a[k];
	for (int x = 0; x < 3; ++x)
		for (int y = 0; y < 3; ++y) {
			T c = p.chi[x][y] + T(2) / T(3) * tr_part * kd<T>(x, y);
			for (int n = 0; n < 3; ++n)
				if (int e = eps(x, y, n))
					c -= T(e) * oa[n];
			for (int m = 0; m < 3; ++m)
				for (int k = 0; k < 3; ++k) {
					if (int e = eps(x, m, k))
						c += T(e) * p.omega[m][y] * a[k];
					if (int e = eps(y, m, k))
						c += T(e) * p.omega[m][x] * a[k];
				}
			q.chi[x][y] = c;
		}
	return q;
}

template <class T>
EtaParameters<T> act_time_translation(const EtaParameters<T>& p, const T& t)
{
	using detail::kd;
	const T onn = trace(p.omega);
	EtaParameters<T> q = p;
	q.phi = p.phi + scale(t, p.gamma);
	// e_imn chi_nm = -axial(chi)_i
	q.lambda = p.lambda + scale(t / T(2), axial(p.chi)) + scale(t * t, p.xi);
	q.rho = p.rho + t * onn / T(3);
	for (int x = 0; x < 3; ++x)
		for (int y = 0; y < 3; ++y) {
			q.sigma[x][y] = p.sigma[x][y] + T(2) * t * p.omega[y][x] - T(2) / T(3) * t * onn * kd<T>(x, y);
			T c = p.chi[x][y];
			for (int k = 0; k < 3; ++k)
				if (int e = eps(x, y, k))
					c += T(2 * e) * t * p.xi[k];
			q.chi[x][y] = c;
		}
	return q;
}

// Vectors map by R, matrices by R M R^T, scalars are invariant.
template <class T>
EtaParameters<T> act_rotation(const EtaParameters<T>& p, const Mat3<T>& R)
{
	if (!is_rotation(R))
		throw std::invalid_argument("rotation matrix is not orthogonal with determinant 1");
	auto m = [&](const Mat3<T>& x) { return matmul(matmul(R, x), transpose(R)); };
	EtaParameters<T> q = p;
	q.alpha = matvec(R, p.alpha);
	q.gamma = matvec(R, p.gamma);
	q.phi = matvec(R, p.phi);
	q.lambda = matvec(R, p.lambda);
	q.xi = matvec(R, p.xi);
	q.n = matvec(R, p.n);
	q.sigma = m(p.sigma);
	q.chi = m(p.chi);
	q.omega = m(p.omega);
	return q;
}

// Units rescaled by a (space) and b (time).
template <class T>
EtaParameters<T> act_scaling(const EtaParameters<T>& p, const T& a, const T& b)
{
	if (is_zero(a) || is_zero(b))
		throw std::invalid_argument("scaling factors must be nonzero");
	const T one(1);
	EtaParameters<T> q = p;
	q.alpha = scale(one / b, p.alpha);
	q.beta = p.beta / b;
	q.gamma = scale(one / a, p.gamma);
	q.phi = scale(one / (a * b), p.phi);
	q.lambda = scale(one / (a * a), p.lambda);
	q.v_param = p.v_param / (a * b);
	q.xi = scale(b * b / (a * a), p.xi);
	q.theta = p.theta * b * b / (a * a);
	q.rho = p.rho / a;
	q.sigma = scale(one / a, p.sigma);
	q.chi = scale(b / (a * a), p.chi);
	q.omega = scale(b / a, p.omega);
	return q;
}

enum class AutomorphismKind { boost, space_translation, time_translation, rotation, scaling };

template <class T>
struct Automorphism {
	AutomorphismKind kind = AutomorphismKind::boost;
	Vec3<T> vec = zero3<T>(); // boost velocity or translation vector
	T t{0};                   // time translation
	Mat3<T> R = identity3<T>();
	T a{1}, b{1};             // scaling

	static Automorphism boost(const Vec3<T>& v) { return {AutomorphismKind::boost, v}; }
	static Automorphism space_translation(const Vec3<T>& a)
	{
		return {AutomorphismKind::space_translation, a};
	}
	static Automorphism time_translation(const T& t)
	{
		Automorphism x;
		x.kind = AutomorphismKind::time_translation;
		x.t = t;
		return x;
	}
	static Automorphism rotation(const Mat3<T>& R)
	{
		Automorphism x;
		x.kind = AutomorphismKind::rotation;
		x.R = R;
		return x;
	}
	static Automorphism scaling(const T& a, const T& b)
	{
		if (is_zero(a) || is_zero(b))
			throw std::invalid_argument("scaling factors must be nonzero");
		Automorphism x;
		x.kind = AutomorphismKind::scaling;
		x.a = a;
		x.b = b;
		return x;
	}

	template <class U>
	Automorphism<U> as() const
	{
		Automorphism<U> x;
		x.kind = kind;
		x.vec = convert<U>(vec);
		x.t = U(t);
		x.R = convert<U>(R);
		x.a = U(a);
		x.b = U(b);
		return x;
	}
};

template <class T>
using AutomorphismWord = std::vector<Automorphism<T>>;

template <class T>
EtaParameters<T> apply(const EtaParameters<T>& p, const Automorphism<T>& x, Transcription tr = Transcription::corrected)
{
	switch (x.kind) {
	case AutomorphismKind::boost: return act_boost(p, x.vec, tr);
	case AutomorphismKind::space_translation: return act_space_translation(p, x.vec, tr);
	case AutomorphismKind::time_translation: return act_time_translation(p, x.t);
	case AutomorphismKind::rotation: return act_rotation(p, x.R);
	case AutomorphismKind::scaling: return act_scaling(p, x.a, x.b);
	}
	throw std::logic_error("unknown automorphism kind");
}

// Letters act left to right: the first letter is applied first.
template <class T>
EtaParameters<T> apply_word(EtaParameters<T> p, const AutomorphismWord<T>& w, Transcription tr = Transcription::corrected)
{
	for (const auto& x : w)
		p = apply(p, x, tr);
	return p;
}

template <class T>
bool verify_equivalence(const EtaParameters<T>& p1, const EtaParameters<T>& p2, const AutomorphismWord<T>& w)
{
	return apply_word(p1, w) == p2;
}

} // namespace plg
