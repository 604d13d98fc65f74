#pragma once

// Fixed-size vectors and matrices over an exact scalar type.

#include <array>
#include <cstddef>

namespace plg {

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<Vec3<T>, 3>;
template <class T>
using Mat10 = std::array<std::array<T, 10>, 10>;

// Levi-Civita symbol.
constexpr int eps(int i, int j, int k)
{
	if (i == j || j == k || i == k)
		return 0;
	return ((j - i + 3) % 3 == 1) ? 1 : -1;
}
constexpr int kron(int i, int j) { return i == j ? 1 : 0; }

template <class T>
Vec3<T> zero3()
{
	return {T(0), T(0), T(0)};
}

template <class T>
Mat3<T> zero33()
{
	return {zero3<T>(), zero3<T>(), zero3<T>()};
}

template <class T>
Mat3<T> identity3()
{
	Mat3<T> m = zero33<T>();
	for (int i = 0; i < 3; ++i)
		m[i][i] = T(1);
	return m;
}

template <class T>
Mat10<T> zero10()
{
	Mat10<T> m;
	for (auto& row : m)
		row.fill(T(0));
	return m;
}

template <class T>
Mat10<T> identity10()
{
	Mat10<T> m = zero10<T>();
	for (int i = 0; i < 10; ++i)
		m[i][i] = T(1);
	return m;
}

template <class T>
Vec3<T> unit3(int i)
{
	Vec3<T> e = zero3<T>();
	e[i] = T(1);
	return e;
}

template <class T>
Vec3<T> operator+(const Vec3<T>& x, const Vec3<T>& y)
{
	return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& x, const Vec3<T>& y)
{
	return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& x)
{
	return {-x[0], -x[1], -x[2]};
}

template <class T>
Vec3<T> scale(const T& c, const Vec3<T>& x)
{
	return {c * x[0], c * x[1], c * x[2]};
}

template <class T>
T dot(const Vec3<T>& x, const Vec3<T>& y)
{
	return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& x, const Vec3<T>& y)
{
	return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <class T>
Vec3<T> matvec(const Mat3<T>& m, const Vec3<T>& x)
{
	Vec3<T> r;
	for (int i = 0; i < 3; ++i)
		r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
	return r;
}

template <class T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
	return r;
}

template <class T>
Mat3<T> transpose(const Mat3<T>& a)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			r[i][j] = a[j][i];
	return r;
}

template <class T>
Mat3<T> operator+(const Mat3<T>& a, const Mat3<T>& b)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		r[i] = a[i] + b[i];
	return r;
}

template <class T>
Mat3<T> operator-(const Mat3<T>& a, const Mat3<T>& b)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		r[i] = a[i] - b[i];
	return r;
}

template <class T>
Mat3<T> scale(const T& c, const Mat3<T>& a)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		r[i] = scale(c, a[i]);
	return r;
}

template <class T>
T trace(const Mat3<T>& a)
{
	return a[0][0] + a[1][1] + a[2][2];
}

template <class T>
T det(const Mat3<T>& m)
{
	return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
	       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
	       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
Mat3<T> inverse(const Mat3<T>& m)
{
	T d = det(m);
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, e = (i + 2) % 3;
			r[i][j] = (m[a][c] * m[b][e] - m[a][e] * m[b][c]) / d;
		}
	return r;
}

// S x = s cross x.
template <class T>
Mat3<T> skew(const Vec3<T>& s)
{
	return {Vec3<T>{T(0), -s[2], s[1]}, Vec3<T>{s[2], T(0), -s[0]}, Vec3<T>{-s[1], s[0], T(0)}};
}

// Axial vector u_i = eps_ijk m_jk.
template <class T>
Vec3<T> axial(const Mat3<T>& m)
{
	Vec3<T> u = zero3<T>();
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				if (int e = eps(i, j, k))
					u[i] += T(e) * m[j][k];
	return u;
}

template <class T>
Mat3<T> outer(const Vec3<T>& x, const Vec3<T>& y)
{
	Mat3<T> r;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			r[i][j] = x[i] * y[j];
	return r;
}

template <class T>
Mat10<T> matmul(const Mat10<T>& a, const Mat10<T>& b)
{
	Mat10<T> r = zero10<T>();
	for (int i = 0; i < 10; ++i)
		for (int k = 0; k < 10; ++k) {
			if (is_zero(a[i][k]))
				continue;
			for (int j = 0; j < 10; ++j)
				r[i][j] += a[i][k] * b[k][j];
		}
	return r;
}

template <class T>
Mat10<T> transpose(const Mat10<T>& a)
{
	Mat10<T> r;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			r[i][j] = a[j][i];
	return r;
}

template <class T>
Mat10<T> operator+(const Mat10<T>& a, const Mat10<T>& b)
{
	Mat10<T> r;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			r[i][j] = a[i][j] + b[i][j];
	return r;
}

template <class T>
Mat10<T> operator-(const Mat10<T>& a, const Mat10<T>& b)
{
	Mat10<T> r;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			r[i][j] = a[i][j] - b[i][j];
	return r;
}

// A M A^T: the action on antisymmetric 2-tensors.
template <class T>
Mat10<T> congruence(const Mat10<T>& a, const Mat10<T>& m)
{
	return matmul(matmul(a, m), transpose(a));
}

template <class T, std::size_t N>
bool all_zero(const std::array<T, N>& xs);

template <class T>
bool all_zero_elem(const T& x)
{
	return is_zero(x);
}

template <class T, std::size_t N>
bool all_zero_elem(const std::array<T, N>& x)
{
	return all_zero(x);
}

template <class T, std::size_t N>
bool all_zero(const std::array<T, N>& xs)
{
	for (const auto& x : xs)
		if (!all_zero_elem(x))
			return false;
	return true;
}

template <class U, class T>
Vec3<U> convert(const Vec3<T>& x)
{
	return {U(x[0]), U(x[1]), U(x[2])};
}

template <class U, class T>
Mat3<U> convert(const Mat3<T>& m)
{
	return {convert<U>(m[0]), convert<U>(m[1]), convert<U>(m[2])};
}

} // namespace plg
