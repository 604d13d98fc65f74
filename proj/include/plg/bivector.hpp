#pragma once

// Elements of the second exterior power of the algebra, in the block form
//
//   Psi_i H^J_i + Phi_i H^P_i + Gamma_i H^K_i + Lambda_i e_ijk P_j^P_k
//   + Upsilon_ij P_i^K_j + Sigma_ij P_i^J_j + Xi_i e_ijk K_j^K_k
//   + Omega_ij K_i^J_j + Pi_i e_ijk J_j^J_k
//
// with X^Y = X (x) Y - Y (x) X. The matrix form M has M[a][b] = coefficient of
// X_a (x) X_b, so c X_a^X_b contributes +c at [a][b] and -c at [b][a]. Both
// forms carry the same information; from_matrix is exact on antisymmetric input.

#include "plg/group.hpp"
#include "plg/linalg.hpp"

#include <string>

namespace plg {

template <class T>
struct GalileiBivector {
	Vec3<T> Psi = zero3<T>();
	Vec3<T> Phi = zero3<T>();
	Vec3<T> Gamma = zero3<T>();
	Vec3<T> Lambda = zero3<T>();
	Mat3<T> Upsilon = zero33<T>();
	Mat3<T> Sigma = zero33<T>();
	Vec3<T> Xi = zero3<T>();
	Mat3<T> Omega = zero33<T>();
	Vec3<T> Pi = zero3<T>();

	friend bool operator==(const GalileiBivector&, const GalileiBivector&) = default;
};

template <class T>
bool is_zero(const GalileiBivector<T>& b)
{
	return all_zero(b.Psi) && all_zero(b.Phi) && all_zero(b.Gamma) && all_zero(b.Lambda) &&
	       all_zero(b.Upsilon) && all_zero(b.Sigma) && all_zero(b.Xi) && all_zero(b.Omega) && all_zero(b.Pi);
}

template <class T>
void add_wedge(Mat10<T>& m, int a, int b, const T& c)
{
	m[a][b] += c;
	m[b][a] -= c;
}

template <class T>
Mat10<T> to_matrix(const GalileiBivector<T>& x)
{
	using namespace basis;
	Mat10<T> m = zero10<T>();
	for (int i = 0; i < 3; ++i) {
		add_wedge(m, H, J + i, x.Psi[i]);
		add_wedge(m, H, P + i, x.Phi[i]);
		add_wedge(m, H, K + i, x.Gamma[i]);
		for (int j = 0; j < 3; ++j) {
			add_wedge(m, P + i, K + j, x.Upsilon[i][j]);
			add_wedge(m, P + i, J + j, x.Sigma[i][j]);
			add_wedge(m, K + i, J + j, x.Omega[i][j]);
		}
		// e_ijk X_j^X_k = 2 X_(i+1)^X_(i+2)
		int j = (i + 1) % 3, k = (i + 2) % 3;
		add_wedge(m, P + j, P + k, T(2) * x.Lambda[i]);
		add_wedge(m, K + j, K + k, T(2) * x.Xi[i]);
		add_wedge(m, J + j, J + k, T(2) * x.Pi[i]);
	}
	return m;
}

template <class T>
GalileiBivector<T> from_matrix(const Mat10<T>& m)
{
	using namespace basis;
	GalileiBivector<T> x;
	for (int i = 0; i < 3; ++i) {
		x.Psi[i] = m[H][J + i];
		x.Phi[i] = m[H][P + i];
		x.Gamma[i] = m[H][K + i];
		for (int j = 0; j < 3; ++j) {
			x.Upsilon[i][j] = m[P + i][K + j];
			x.Sigma[i][j] = m[P + i][J + j];
			x.Omega[i][j] = m[K + i][J + j];
		}
		int j = (i + 1) % 3, k = (i + 2) % 3;
		x.Lambda[i] = m[P + j][P + k] / T(2);
		x.Xi[i] = m[K + j][K + k] / T(2);
		x.Pi[i] = m[J + j][J + k] / T(2);
	}
	return x;
}

template <class T>
bool is_antisymmetric(const Mat10<T>& m)
{
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			if (!(m[i][j] == -m[j][i]))
				return false;
	return true;
}

template <class T>
GalileiBivector<T> operator-(const GalileiBivector<T>& a, const GalileiBivector<T>& b)
{
	return from_matrix(to_matrix(a) - to_matrix(b));
}

template <class T>
GalileiBivector<T> operator+(const GalileiBivector<T>& a, const GalileiBivector<T>& b)
{
	return from_matrix(to_matrix(a) + to_matrix(b));
}

// "Block[index]" of the first nonzero component, or "" when zero.
template <class T>
std::string first_nonzero_component(const GalileiBivector<T>& b)
{
	auto vec = [](const char* name, const Vec3<T>& v) -> std::string {
		for (int i = 0; i < 3; ++i)
			if (!is_zero(v[i]))
				return std::string(name) + "[" + std::to_string(i + 1) + "]";
		return "";
	};
	auto mat = [](const char* name, const Mat3<T>& m) -> std::string {
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				if (!is_zero(m[i][j]))
					return std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
		return "";
	};
	for (std::string s : {vec("Psi", b.Psi), vec("Phi", b.Phi), vec("Gamma", b.Gamma), vec("Lambda", b.Lambda),
	                      mat("Upsilon", b.Upsilon), mat("Sigma", b.Sigma), vec("Xi", b.Xi), mat("Omega", b.Omega),
	                      vec("Pi", b.Pi)})
		if (!s.empty())
			return s;
	return "";
}

} // namespace plg
