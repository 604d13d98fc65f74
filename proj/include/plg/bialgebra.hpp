#pragma once

// The tangent Lie bialgebra: cobracket delta, the dual structure constants,
// the bialgebra identities, and the constraint-family classifier.
//
// A cobracket is stored as ten antisymmetric 10x10 matrices M_s with
// M_s[a][b] = coefficient of X_a (x) X_b in delta(X_s). The dual constants are
// their transpose pairing: c[i][j][k] = M_k[i][j], i.e.
// [X~_i, X~_j] = c[i][j][k] X~_k.

#include "plg/algebra.hpp"
#include "plg/bivector.hpp"
#include "plg/eta.hpp"
#include "plg/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace plg {

template <class T>
using Cobracket = std::array<Mat10<T>, 10>;

template <class T>
using DualStructureConstants = StructureConstants<T>;

// Which transcription of the closed formulas to use. `printed` keeps the
// transcribed indices; where an index is bound nowhere it is summed over 1..3.
enum class Transcription { corrected, printed };

template <class T>
Cobracket<T> cobracket_closed(const EtaParameters<T>& p, Transcription tr = Transcription::corrected)
{
	using namespace basis;
	using detail::kd;
	const bool fix = tr == Transcription::corrected;
	const T half = T(1) / T(2);
	const T snn = trace(p.sigma), onn = trace(p.omega);
	auto e = [](int i, int j, int k) { return T(eps(i, j, k)); };
	Cobracket<T> D;
	for (auto& m : D)
		m = zero10<T>();

	{
		Mat10<T>& M = D[H];
		for (int i = 0; i < 3; ++i) {
			add_wedge(M, H, P + i, p.gamma[i]);
			for (int j = 0; j < 3; ++j) {
				// 1/2 (chi_jk - chi_kj) P_j ^ P_k  (transcribed with the opposite sign)
				T c = half * (p.chi[j][i] - p.chi[i][j]);
				add_wedge(M, P + j, P + i, fix ? c : -c);
				T xi(0);
				for (int k = 0; k < 3; ++k)
					xi += e(i, j, k) * p.xi[k];
				add_wedge(M, P + i, K + j, T(2) * xi - p.theta * kd<T>(i, j));
				add_wedge(M, P + i, J + j, T(2) * p.omega[j][i] - onn * kd<T>(j, i));
			}
		}
	}
	for (int s = 0; s < 3; ++s) {
		Mat10<T>& M = D[P + s];
		for (int i = 0; i < 3; ++i) {
			T ba = p.beta * kd<T>(i, s);
			for (int k = 0; k < 3; ++k)
				ba += e(i, k, s) * p.alpha[k];
			add_wedge(M, H, P + i, ba);
			for (int j = 0; j < 3; ++j) {
				for (int k = 0; k < 3; ++k)
					if (eps(i, j, k))
						add_wedge(M, P + j, P + k,
						          e(i, j, k) * ((p.rho - half * snn) * kd<T>(i, s) + half * p.sigma[s][i]));
				T up(0);
				for (int l = 0; l < 3; ++l)
					up += T(2) * e(l, i, s) * p.omega[l][j];
				add_wedge(M, P + i, K + j, up - e(j, i, s) * onn);
				add_wedge(M, P + i, J + j, T(2) * (p.n[i] * kd<T>(s, j) - p.n[s] * kd<T>(i, j)));
			}
		}
	}
	for (int s = 0; s < 3; ++s) {
		Mat10<T>& M = D[K + s];
		for (int i = 0; i < 3; ++i) {
			T ba = p.beta * kd<T>(i, s);
			for (int k = 0; k < 3; ++k)
				ba += e(i, k, s) * p.alpha[k];
			// H ^ K_i (transcribed as H ^ P_i)
			add_wedge(M, H, (fix ? K : P) + i, ba);
			for (int j = 0; j < 3; ++j) {
				T up = p.rho * e(i, j, s) - p.gamma[j] * kd<T>(i, s);
				for (int k = 0; k < 3; ++k)
					up -= e(k, j, s) * p.sigma[i][k];
				add_wedge(M, P + i, K + j, up);
				add_wedge(M, P + i, J + j, -(p.beta * e(i, j, s) + p.alpha[j] * kd<T>(i, s)));
				add_wedge(M, P + i, P + j,
				          p.v_param * e(s, i, j) - half * (p.phi[j] * kd<T>(i, s) - p.phi[i] * kd<T>(j, s)));
				for (int k = 0; k < 3; ++k)
					if (eps(i, j, k))
						add_wedge(M, K + j, K + k, e(i, j, k) * p.omega[i][s]);
				add_wedge(M, K + i, J + j, T(2) * (p.n[i] * kd<T>(s, j) - p.n[s] * kd<T>(i, j)));
			}
		}
	}
	T xi_sum = p.xi[0] + p.xi[1] + p.xi[2];
	for (int s = 0; s < 3; ++s) {
		Mat10<T>& M = D[J + s];
		for (int i = 0; i < 3; ++i) {
			T a(0), f(0), g(0);
			for (int j = 0; j < 3; ++j) {
				a += e(s, i, j) * p.alpha[j];
				f += e(s, i, j) * p.phi[j];
				g += e(i, j, s) * p.gamma[j];
			}
			add_wedge(M, H, J + i, a);
			add_wedge(M, H, P + i, f);
			add_wedge(M, H, K + i, g);
			for (int j = 0; j < 3; ++j) {
				add_wedge(M, P + i, P + j, p.lambda[i] * kd<T>(j, s) - p.lambda[j] * kd<T>(i, s));
				T up(0), sg(0), om(0);
				for (int k = 0; k < 3; ++k) {
					// e_sik chi_kj is transcribed with a matrix "lambda" that does not exist.
					if (fix)
						up += e(s, i, k) * p.chi[k][j];
					up += e(s, j, k) * p.chi[i][k];
					sg += e(s, i, k) * p.sigma[k][j] + e(s, j, k) * p.sigma[i][k];
					om += e(s, i, k) * p.omega[j][k] + e(s, j, k) * p.omega[k][i];
				}
				add_wedge(M, P + i, K + j, up);
				add_wedge(M, P + i, J + j, sg);
				add_wedge(M, K + i, J + j, T(2) * om);
				T xk = fix ? p.xi[i] * kd<T>(j, s) - p.xi[j] * kd<T>(i, s)
				           : xi_sum * kd<T>(j, s) - p.xi[j] * kd<T>(i, s);
				add_wedge(M, K + i, K + j, xk);
			}
			add_wedge(M, J + i, J + s, T(2) * p.n[i]);
		}
	}
	return D;
}

// delta(X_s) = d/de eta(exp(e X_s)) at e = 0, by dual numbers.
template <class T>
Mat10<T> cobracket_numeric(const EtaParameters<T>& p, int s, EtaModel model = EtaModel::corrected)
{
	using D = Dual<T>;
	GroupElement<D> g = one_parameter<D>(s, D::variable(T(0)));
	Mat10<D> m = to_matrix(eval_eta(p, g, model));
	Mat10<T> r;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			r[i][j] = m[i][j].d;
	return r;
}

template <class T>
Cobracket<T> cobracket_numeric(const EtaParameters<T>& p, EtaModel model = EtaModel::corrected)
{
	Cobracket<T> d;
	for (int s = 0; s < 10; ++s)
		d[s] = cobracket_numeric(p, s, model);
	return d;
}

template <class T>
DualStructureConstants<T> dual_from_cobracket(const Cobracket<T>& d)
{
	DualStructureConstants<T> c;
	for (int k = 0; k < 10; ++k)
		for (int i = 0; i < 10; ++i)
			for (int j = 0; j < 10; ++j)
				c.c[i][j][k] = d[k][i][j];
	return c;
}

// The dual brackets as displayed: each [X~_a, X~_b] written out directly.
template <class T>
DualStructureConstants<T> dual_structure_constants(const EtaParameters<T>& p,
                                                   Transcription tr = Transcription::corrected)
{
	using namespace basis;
	using detail::kd;
	const bool fix = tr == Transcription::corrected;
	const T half = T(1) / T(2);
	const T snn = trace(p.sigma), onn = trace(p.omega);
	auto e = [](int i, int j, int k) { return T(eps(i, j, k)); };
	DualStructureConstants<T> c;
	auto add = [&](int i, int j, int k, const T& val) {
		c.c[i][j][k] += val;
		c.c[j][i][k] -= val;
	};
	for (int k = 0; k < 3; ++k) {
		add(H, P + k, H, p.gamma[k]);
		for (int i = 0; i < 3; ++i) {
			T al(0), ph(0), ga(0);
			for (int l = 0; l < 3; ++l) {
				al += e(i, k, l) * p.alpha[l];
				ph += e(i, k, l) * p.phi[l];
				ga += e(i, k, l) * p.gamma[l];
			}
			add(H, J + k, J + i, al);
			add(H, P + k, P + i, p.beta * kd<T>(i, k) + al);
			add(H, P + k, J + i, ph);
			add(H, K + k, K + i, p.beta * kd<T>(i, k) + al);
			add(H, K + k, J + i, ga);
		}
	}
	for (int k = 0; k < 3; ++k)
		for (int l = 0; l < 3; ++l)
			for (int i = 0; i < 3; ++i) {
				add(K + k, J + l, K + i, T(2) * (p.n[k] * kd<T>(l, i) - p.n[i] * kd<T>(k, l)));
				T om(0);
				for (int n = 0; n < 3; ++n)
					om += e(i, k, n) * p.omega[l][n] + e(i, l, n) * p.omega[n][k];
				add(K + k, J + l, J + i, T(2) * om);
			}
	for (int l = 0; l < 3; ++l)
		for (int m = l + 1; m < 3; ++m) {
			add(P + l, P + m, H, p.chi[l][m] - p.chi[m][l]);
			for (int i = 0; i < 3; ++i) {
				T s(0);
				for (int k = 0; k < 3; ++k)
					s += e(k, l, m) * (p.rho * kd<T>(k, i) + half * (p.sigma[i][k] - snn * kd<T>(i, k)));
				add(P + l, P + m, P + i, T(2) * s);
				add(P + l, P + m, K + i,
				    T(2) * (p.v_param * e(i, l, m) + half * (p.phi[l] * kd<T>(i, m) - p.phi[m] * kd<T>(l, i))));
				// 2 (lambda_l delta_im - lambda_m delta_il); transcribed with delta_ik, k unbound.
				T lam_m = fix ? p.lambda[m] * kd<T>(i, l) : p.lambda[m];
				add(P + l, P + m, J + i, T(2) * (p.lambda[l] * kd<T>(i, m) - lam_m));
			}
		}
	for (int k = 0; k < 3; ++k)
		for (int l = 0; l < 3; ++l) {
			T xi(0);
			for (int n = 0; n < 3; ++n)
				xi += p.xi[n] * e(n, k, l);
			add(P + k, K + l, H, T(2) * xi - p.theta * kd<T>(k, l));
			for (int i = 0; i < 3; ++i) {
				T a = -onn * e(l, k, i), b = p.rho * e(k, l, i) - kd<T>(k, i) * p.gamma[l], d(0);
				for (int n = 0; n < 3; ++n) {
					a += T(2) * e(n, k, i) * p.omega[n][l];
					b -= e(l, i, n) * p.sigma[k][n];
					d += e(i, k, n) * p.chi[n][l] + e(i, l, n) * p.chi[k][n];
				}
				add(P + k, K + l, P + i, a);
				add(P + k, K + l, K + i, b);
				add(P + k, K + l, J + i, d);
			}
			// (2 omega_lk - omega_nn delta_lk) H~; transcribed as 2 omega_ik with i unbound.
			T om = fix ? T(2) * p.omega[l][k] : T(2) * (p.omega[0][k] + p.omega[1][k] + p.omega[2][k]);
			add(P + k, J + l, H, om - onn * kd<T>(l, k));
			for (int i = 0; i < 3; ++i) {
				add(P + k, J + l, P + i, T(2) * (p.n[k] * kd<T>(l, i) - p.n[i] * kd<T>(k, l)));
				add(P + k, J + l, K + i, -(p.beta * e(k, l, i) + p.alpha[l] * kd<T>(k, i)));
				T s(0);
				for (int n = 0; n < 3; ++n)
					s += e(i, k, n) * p.sigma[n][l] + e(i, l, n) * p.sigma[k][n];
				add(P + k, J + l, J + i, s);
			}
		}
	for (int m = 0; m < 3; ++m)
		for (int n = m + 1; n < 3; ++n)
			for (int i = 0; i < 3; ++i) {
				T s(0);
				for (int k = 0; k < 3; ++k)
					s += e(k, m, n) * p.omega[k][i];
				add(K + m, K + n, K + i, T(2) * s);
				add(K + m, K + n, J + i, T(2) * (p.xi[m] * kd<T>(n, i) - p.xi[n] * kd<T>(m, i)));
			}
	for (int k = 0; k < 3; ++k)
		for (int l = k + 1; l < 3; ++l)
			for (int i = 0; i < 3; ++i)
				add(J + k, J + l, J + i, T(2) * (p.n[k] * kd<T>(l, i) - p.n[l] * kd<T>(k, i)));
	return c;
}

template <class T>
bool is_zero(const StructureConstants<T>& c)
{
	return all_zero(c.c);
}

template <class T>
StructureConstants<T> operator-(const StructureConstants<T>& a, const StructureConstants<T>& b)
{
	StructureConstants<T> r;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			for (int k = 0; k < 10; ++k)
				r.c[i][j][k] = a.c[i][j][k] - b.c[i][j][k];
	return r;
}

// A nonzero residual entry with its indices, for reports.
template <class T>
struct ResidualEntry {
	std::array<int, 4> index{-1, -1, -1, -1};
	T value{};
};

// Jacobi tensor sum_m c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l over all
// 120 unordered basis triples and every l. Returns the first nonzero entry.
template <class T>
std::optional<ResidualEntry<T>> check_dual_jacobi(const StructureConstants<T>& c)
{
	for (int i = 0; i < 10; ++i)
		for (int j = i + 1; j < 10; ++j)
			for (int k = j + 1; k < 10; ++k)
				for (int l = 0; l < 10; ++l) {
					T s(0);
					for (int m = 0; m < 10; ++m) {
						if (!is_zero(c.c[i][j][m]))
							s += c.c[i][j][m] * c.c[m][k][l];
						if (!is_zero(c.c[j][k][m]))
							s += c.c[j][k][m] * c.c[m][i][l];
						if (!is_zero(c.c[k][i][m]))
							s += c.c[k][i][m] * c.c[m][j][l];
					}
					if (!is_zero(s))
						return ResidualEntry<T>{{i, j, k, l}, s};
				}
	return std::nullopt;
}

// Infinitesimal cocycle condition for every basis pair (X, Y):
//   delta([X,Y]) - X.delta(Y) + Y.delta(X),  X.M = ad_X M + M ad_X^T.
template <class T>
std::optional<ResidualEntry<T>> check_cocycle_condition(const Cobracket<T>& d)
{
	static const StructureConstants<T> sc = galilei_structure_constants<T>();
	std::array<Mat10<T>, 10> ad;
	for (int x = 0; x < 10; ++x)
		ad[x] = ad_matrix(sc, basis_vector<T>(x));
	auto act = [&](int x, const Mat10<T>& m) { return matmul(ad[x], m) + matmul(m, transpose(ad[x])); };
	for (int x = 0; x < 10; ++x)
		for (int y = x + 1; y < 10; ++y) {
			Mat10<T> lhs = zero10<T>();
			for (int k = 0; k < 10; ++k)
				if (!is_zero(sc.c[x][y][k]))
					for (int a = 0; a < 10; ++a)
						for (int b = 0; b < 10; ++b)
							lhs[a][b] += sc.c[x][y][k] * d[k][a][b];
			Mat10<T> r = lhs - act(x, d[y]) + act(y, d[x]);
			for (int a = 0; a < 10; ++a)
				for (int b = 0; b < 10; ++b)
					if (!is_zero(r[a][b]))
						return ResidualEntry<T>{{x, y, a, b}, r[a][b]};
		}
	return std::nullopt;
}

// Cyclic sum of (delta (x) id) delta(X_s) in G (x) G (x) G, for every s.
template <class T>
std::optional<ResidualEntry<T>> check_cojacobi(const Cobracket<T>& d)
{
	for (int s = 0; s < 10; ++s) {
		// U[a][b][j] = sum_i M_s[i][j] M_i[a][b]
		Tensor3<T> U;
		for (int a = 0; a < 10; ++a)
			for (int b = 0; b < 10; ++b)
				for (int j = 0; j < 10; ++j) {
					T x(0);
					for (int i = 0; i < 10; ++i)
						if (!is_zero(d[s][i][j]) && !is_zero(d[i][a][b]))
							x += d[s][i][j] * d[i][a][b];
					U[a][b][j] = x;
				}
		for (int a = 0; a < 10; ++a)
			for (int b = 0; b < 10; ++b)
				for (int j = 0; j < 10; ++j) {
					T x = U[a][b][j] + U[b][j][a] + U[j][a][b];
					if (!is_zero(x))
						return ResidualEntry<T>{{s, a, b, j}, x};
				}
	}
	return std::nullopt;
}

// ---- constraint families -------------------------------------------------

struct Classification {
	std::optional<char> family;   // first match in the order a..f
	std::vector<char> matches;    // every family whose conditions hold
	std::string diagnostic;
};

namespace detail {

template <class T>
Mat3<T> sym_part(const Mat3<T>& m)
{
	return scale(T(1) / T(2), m + transpose(m));
}

template <class T>
Mat3<T> antisym_part(const Mat3<T>& m)
{
	return scale(T(1) / T(2), m - transpose(m));
}

template <class T>
bool equal(const Mat3<T>& a, const Mat3<T>& b)
{
	return all_zero(a - b);
}

template <class T>
bool equal(const Vec3<T>& a, const Vec3<T>& b)
{
	return all_zero(a - b);
}

} // namespace detail

template <class T>
Classification classify_constraint_family(const EtaParameters<T>& p)
{
	using namespace detail;
	Classification out;
	if (!all_zero(p.n)) {
		out.diagnostic = "n != 0: no constraint family applies";
		return out;
	}
	const Mat3<T> I = identity3<T>();
	const bool al0 = all_zero(p.alpha), be0 = is_zero(p.beta), xi0 = all_zero(p.xi), om0 = all_zero(p.omega);
	const T a2 = dot(p.alpha, p.alpha);

	auto fam_a = [&] { return !be0 && xi0 && om0; };
	auto fam_b = [&] {
		if (al0 || !be0)
			return false;
		T W = trace(p.omega) / (T(2) * a2);
		if (is_zero(W))
			return false;
		Mat3<T> expect = scale(W, scale(a2, I) - outer(p.alpha, p.alpha));
		if (!equal(p.omega, expect))
			return false;
		// xi = x alpha - W (alpha x gamma); the plus sign fails the H, J, K Jacobi identities.
		return all_zero(cross(p.xi + scale(W, cross(p.alpha, p.gamma)), p.alpha));
	};
	auto fam_c = [&] {
		if (!al0 || !be0)
			return false;
		Mat3<T> S = sym_part(p.omega);
		Vec3<T> ax = axial(antisym_part(p.omega));
		if (!all_zero(S)) {
			T W = trace(S) / T(2);
			if (is_zero(W))
				return false;
			Mat3<T> M = I - scale(T(1) / W, S);
			return equal(matmul(M, M), M) && trace(M) == T(1) && equal(matvec(M, ax), ax) &&
			       equal(matvec(M, p.gamma), p.gamma);
		}
		if (!all_zero(ax))
			return all_zero(cross(p.gamma, ax));
		return true;
	};
	auto fam_d = [&] {
		if (al0 || !be0)
			return false;
		T W = p.omega[0][0];
		if (is_zero(W) || !equal(p.omega, scale(W, I)))
			return false;
		return equal(p.gamma, scale(T(1) / W, cross(p.alpha, p.xi)));
	};
	auto fam_e = [&] {
		return !al0 && be0 && om0 && all_zero(cross(p.alpha, p.xi)) && is_zero(dot(p.gamma, p.alpha));
	};
	auto fam_f = [&] {
		if (!al0 || !be0)
			return false;
		T W = p.omega[0][0];
		return equal(p.omega, scale(W, I)) && all_zero(p.gamma);
	};
	const std::pair<char, bool> tests[] = {{'a', fam_a()}, {'b', fam_b()}, {'c', fam_c()},
	                                       {'d', fam_d()}, {'e', fam_e()}, {'f', fam_f()}};
	for (auto [name, ok] : tests)
		if (ok)
			out.matches.push_back(name);
	if (!out.matches.empty()) {
		out.family = out.matches.front();
		out.diagnostic = "matches:";
		for (char m : out.matches)
			out.diagnostic += std::string(" ") + m;
	} else {
		out.diagnostic = "no constraint family matches";
	}
	return out;
}

} // namespace plg
