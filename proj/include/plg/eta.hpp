#pragma once

// The multiplicative bivector eta(g) of the general cocycle solution, and
// pointwise checks of the cocycle condition, the subgroup closed forms and the
// group-level Jacobi identity.
//
// EtaModel::corrected is the evaluator that satisfies the cocycle identity
// exactly. EtaModel::printed keeps the five transcribed terms that break it
// (listed in docs/CORRECTIONS.md). EtaModel::constant_psi replaces Psi by the
// constant alpha and exists only as a negative control.

#include "plg/algebra.hpp"
#include "plg/bivector.hpp"
#include "plg/group.hpp"
#include "plg/params.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace plg {

enum class EtaModel { corrected, printed, constant_psi };

namespace detail {

template <class T>
T kd(int i, int j)
{
	return i == j ? T(1) : T(0);
}

} // namespace detail

template <class T, class B>
GalileiBivector<T> eval_eta(const EtaParameters<B>& pb, const GroupElement<T>& g, EtaModel model = EtaModel::corrected)
{
	using detail::kd;
	const EtaParameters<T> p = pb.template as<T>();
	const bool fixed = model != EtaModel::printed;
	const T& t = g.t;
	const Vec3<T>& a = g.a;
	const Vec3<T>& v = g.v;
	const Mat3<T>& R = g.R;
	const T half = T(1) / T(2);

	const T snn = trace(p.sigma);
	const T onn = trace(p.omega);
	const T v2 = dot(v, v);
	const T av = dot(a, v);
	const Vec3<T> x = a - scale(t, v); // a - v t
	const Vec3<T> Ra = matvec(R, p.alpha);
	const Vec3<T> Rg = matvec(R, p.gamma);
	const Vec3<T> Rphi = matvec(R, p.phi);
	const Vec3<T> Rxi = matvec(R, p.xi);
	const Mat3<T> RT = transpose(R);
	const Vec3<T> RTv = matvec(RT, v); // (R_mk v_m)_k
	const Vec3<T> RTa = matvec(RT, a);
	const T nRv = dot(p.n, RTv);       // n_k R_mk v_m
	const T nRa = dot(p.n, RTa);
	const Vec3<T> Rn = matvec(R, p.n);
	const T alRv = dot(Ra, v);         // alpha_j R_kj v_k

	// (R_ij - delta_ij) c_j
	auto rot1 = [&](const Vec3<T>& c) { return matvec(R, c) - c; };
	// (R_ik R_jl - delta_ik delta_jl) c_kl
	auto rot2 = [&](const Mat3<T>& c) { return matmul(matmul(R, c), RT) - c; };
	auto ecross = [&](const Vec3<T>& u, const Vec3<T>& w) { return cross(u, w); }; // e_ijk u_j w_k

	GalileiBivector<T> e;

	e.Psi = model == EtaModel::constant_psi ? p.alpha : rot1(p.alpha);

	{
		Vec3<T> axv = ecross(Ra, x);
		for (int i = 0; i < 3; ++i)
			e.Phi[i] = p.beta * x[i] - Rg[i] * t + axv[i];
		e.Phi = e.Phi + rot1(p.phi);
	}

	{
		Vec3<T> av_ = ecross(Ra, v);
		Vec3<T> r = rot1(p.gamma);
		for (int i = 0; i < 3; ++i)
			e.Gamma[i] = r[i] + p.beta * v[i] + av_[i];
	}

	{
		Vec3<T> r = rot1(p.lambda);
		Vec3<T> axv = ecross(a, v);
		Vec3<T> phv = ecross(Rphi, v);
		Vec3<T> gv = ecross(Rg, v);
		Vec3<T> chi_ax = matvec(R, axial(p.chi)); // e_jkl chi_kl R_ij
		Mat3<T> RoRT = matmul(matmul(R, p.omega), RT); // omega_jl R_ij R_kl
		Vec3<T> om_term = matvec(RoRT, fixed ? x : a);
		// sigma_lj R_ij R_kl (a_k - v_k t): (R sigma^T R^T x)_i
		Vec3<T> sig_term;
		if (fixed) {
			sig_term = matvec(matmul(matmul(R, transpose(p.sigma)), RT), x);
		} else {
			// Dangling index summed: (sum_j sigma_ij R_ij) (sum_kl R_kl x_k).
			T rx(0);
			for (int k = 0; k < 3; ++k)
				for (int l = 0; l < 3; ++l)
					rx += R[k][l] * x[k];
			for (int i = 0; i < 3; ++i) {
				T s(0);
				for (int j = 0; j < 3; ++j)
					s += p.sigma[i][j] * R[i][j];
				sig_term[i] = s * rx;
			}
		}
		for (int i = 0; i < 3; ++i) {
			T y = r[i] + (p.rho - half * snn) * x[i];
			y += half * p.beta * axv[i];
			y += half * phv[i];
			y -= half * Ra[i] * (av - v2 * t);
			y += half * alRv * x[i];
			y += Rxi[i] * t * t;
			y -= half * gv[i] * t;
			y -= half * chi_ax[i] * t;
			y -= om_term[i] * t;
			y += p.v_param * v[i];
			y += half * sig_term[i];
			T vv = fixed ? v[i] * t * t : T(2) * v[i] * t;
			for (int m = 0; m < 3; ++m) {
				y += Rn[m] * (a[i] * a[m] + v[m] * vv); // n_k R_mk = (R n)_m
			}
			y -= (nRa * v[i] + a[i] * nRv) * t;
			e.Lambda[i] = y;
		}
	}

	{
		Mat3<T> r = rot2(p.chi);
		Mat3<T> RsRT = matmul(matmul(R, p.sigma), RT); // sigma_ns R_in R_ls
		Mat3<T> RoRT = matmul(matmul(R, p.omega), RT);
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				T y = r[i][j] + kd<T>(i, j) * (p.theta * t - half * p.beta * v2);
				for (int k = 0; k < 3; ++k)
					for (int l = 0; l < 3; ++l) {
						int ejkl = eps(j, k, l);
						if (ejkl) {
							y += T(ejkl) * Ra[l] * v[k] * v[i];
							y -= T(ejkl) * RsRT[i][l] * v[k];
						}
					}
				y -= Rg[j] * v[i];
				for (int k = 0; k < 3; ++k) {
					int eijk = eps(i, j, k);
					if (eijk) {
						y -= T(2 * eijk) * Rxi[k] * t;
						y += T(eijk) * (p.rho * v[k] + onn * a[k]);
					}
				}
				// 2 omega_ns (e_ikl R_js R_ln a_k - e_ijl R_ks R_ln v_k t)
				// (R omega R^T)[l][j] = R_ln omega_ns R_js
				for (int k = 0; k < 3; ++k)
					for (int l = 0; l < 3; ++l) {
						if (int e1 = eps(i, k, l))
							y += T(2 * e1) * RoRT[l][j] * a[k];
						if (int e2 = eps(i, j, l))
							y -= T(2 * e2) * RoRT[l][k] * v[k] * t;
					}
				// 2 n_l (R_jl v_k - R_ml v_m delta_jk) e_kin a_n  (printed: delta_ik)
				for (int k = 0; k < 3; ++k) {
					T coeff = Rn[j] * v[k] - nRv * (fixed ? kd<T>(j, k) : kd<T>(i, k));
					if (is_zero(coeff))
						continue;
					for (int n = 0; n < 3; ++n)
						if (int ekin = eps(k, i, n))
							y += T(2 * ekin) * coeff * a[n];
				}
				// -2 n_k v_s v_m R_mk e_sij t
				for (int s = 0; s < 3; ++s)
					if (int esij = eps(s, i, j))
						y -= T(2 * esij) * v[s] * nRv * t;
				if (!fixed) {
					// omega_lk R_nk R_il v_n t^2, transcribed with its free index j missing.
					y += (RoRT[i][0] * v[0] + RoRT[i][1] * v[1] + RoRT[i][2] * v[2]) * t * t;
				}
				e.Upsilon[i][j] = y;
			}
	}

	{
		Mat3<T> r = rot2(p.sigma);
		Mat3<T> RoTRT = matmul(matmul(R, transpose(p.omega)), RT); // omega_lk R_ik R_jl
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				T y = r[i][j] - Ra[j] * v[i] - T(2) * RoTRT[i][j] * t + onn * kd<T>(i, j) * t;
				for (int k = 0; k < 3; ++k)
					if (int eijk = eps(i, j, k))
						y -= T(eijk) * p.beta * v[k];
				y += T(2) * (Rn[i] * a[j] - nRa * kd<T>(i, j) - Rn[i] * v[j] * t + nRv * kd<T>(i, j) * t);
				e.Sigma[i][j] = y;
			}
	}

	{
		Vec3<T> r = rot1(p.xi);
		Vec3<T> om = matvec(matmul(matmul(R, p.omega), RT), v); // omega_jl R_ij R_kl v_k
		for (int i = 0; i < 3; ++i)
			e.Xi[i] = r[i] + om[i] + nRv * v[i];
	}

	{
		Mat3<T> r = rot2(transpose(p.omega)); // (R_ik R_jl - dd) omega_lk
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				e.Omega[i][j] = T(2) * r[i][j] + T(2) * (Rn[i] * v[j] - nRv * kd<T>(i, j));
	}

	e.Pi = rot1(p.n);
	return e;
}

// eta(g1 g2) - eta(g1) - Ad(g1) eta(g2) Ad(g1)^T in matrix form.
template <class T, class B>
Mat10<T> cocycle_residual(const EtaParameters<B>& p, const GroupElement<T>& g1, const GroupElement<T>& g2,
                          EtaModel model = EtaModel::corrected)
{
	Mat10<T> lhs = to_matrix(eval_eta(p, compose(g1, g2), model));
	Mat10<T> e1 = to_matrix(eval_eta(p, g1, model));
	Mat10<T> e2 = congruence(adjoint(g1), to_matrix(eval_eta(p, g2, model)));
	return lhs - e1 - e2;
}

template <class T, class B>
GalileiBivector<T> check_cocycle(const EtaParameters<B>& p, const GroupElement<T>& g1, const GroupElement<T>& g2,
                                 EtaModel model = EtaModel::corrected)
{
	return from_matrix(cocycle_residual(p, g1, g2, model));
}

enum class Subgroup { time, space, boost, rotation };

struct SubgroupMismatch {
	bool ok = true;
	std::string block; // e.g. "Upsilon[1][2]" of the first disagreement
};

namespace detail {

template <class T>
bool in_subgroup(const GroupElement<T>& g, Subgroup s)
{
	bool t0 = is_zero(g.t), a0 = all_zero(g.a), v0 = all_zero(g.v);
	bool r0 = g.R == identity3<T>();
	switch (s) {
	case Subgroup::time: return a0 && v0 && r0;
	case Subgroup::space: return t0 && v0 && r0;
	case Subgroup::boost: return t0 && a0 && r0;
	case Subgroup::rotation: return t0 && a0 && v0;
	}
	return false;
}

// d/ds eta(curve(s)) at s = 0 for the subgroup curve through e along e_k
// (time: k ignored).
template <class T, class B>
GalileiBivector<T> subgroup_jet(const EtaParameters<B>& p, Subgroup s, int k, EtaModel model)
{
	using D = Dual<T>;
	GroupElement<D> g = identity_element<D>();
	D eps1 = D::variable(T(0));
	if (s == Subgroup::time)
		g.t = eps1;
	else if (s == Subgroup::space)
		g.a[k] = eps1;
	else
		g.v[k] = eps1;
	GalileiBivector<D> e = eval_eta(p, g, model);
	GalileiBivector<T> d;
	auto v3 = [](Vec3<T>& out, const Vec3<D>& in) {
		for (int i = 0; i < 3; ++i)
			out[i] = in[i].d;
	};
	auto m3 = [](Mat3<T>& out, const Mat3<D>& in) {
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				out[i][j] = in[i][j].d;
	};
	v3(d.Psi, e.Psi);
	v3(d.Phi, e.Phi);
	v3(d.Gamma, e.Gamma);
	v3(d.Lambda, e.Lambda);
	m3(d.Upsilon, e.Upsilon);
	m3(d.Sigma, e.Sigma);
	v3(d.Xi, e.Xi);
	m3(d.Omega, e.Omega);
	v3(d.Pi, e.Pi);
	return d;
}

} // namespace detail

// Compares eta restricted to a one-parameter-family subgroup with the closed
// polynomial (or rotation-tensor) form of the subgroup cocycle solutions. For
// translations and boosts the constants are the first-order jets of eta at e;
// for rotations they are read from p. Throws std::invalid_argument when g is
// not in the subgroup.
template <class T, class B>
SubgroupMismatch check_subgroup_solution(const EtaParameters<B>& pb, Subgroup s, const GroupElement<T>& g,
                                         EtaModel model = EtaModel::corrected)
{
	using detail::kd;
	if (!detail::in_subgroup(g, s))
		throw std::invalid_argument("group element is not in the requested subgroup");
	const EtaParameters<T> p = pb.template as<T>();
	const GalileiBivector<T> e = eval_eta(pb, g, model);
	GalileiBivector<T> f; // expected closed form
	const T half = T(1) / T(2), quarter = T(1) / T(4);

	if (s == Subgroup::rotation) {
		const Mat3<T>& R = g.R;
		auto r1 = [&](const Vec3<T>& c) { return matvec(R, c) - c; };
		auto r2 = [&](const Mat3<T>& c) { return matmul(matmul(R, c), transpose(R)) - c; };
		f.Psi = r1(p.alpha);
		f.Phi = r1(p.phi);
		f.Gamma = r1(p.gamma);
		f.Lambda = r1(p.lambda);
		f.Upsilon = r2(p.chi);
		f.Sigma = r2(p.sigma);
		f.Xi = r1(p.xi);
		f.Omega = r2(scale(T(2), transpose(p.omega)));
		f.Pi = r1(p.n);
	} else if (s == Subgroup::time) {
		const T& t = g.t;
		GalileiBivector<T> c = detail::subgroup_jet<T>(pb, s, 0, model);
		Vec3<T> xax = axial(c.Upsilon); // e_imn x_mn
		for (int i = 0; i < 3; ++i) {
			f.Psi[i] = c.Psi[i] * t;
			f.Phi[i] = c.Phi[i] * t - half * c.Gamma[i] * t * t;
			f.Gamma[i] = c.Gamma[i] * t;
			f.Lambda[i] = c.Lambda[i] * t - quarter * xax[i] * t * t + c.Xi[i] * t * t * t / T(3);
			f.Xi[i] = c.Xi[i] * t;
			f.Pi[i] = c.Pi[i] * t;
			for (int j = 0; j < 3; ++j) {
				T w(0);
				for (int k = 0; k < 3; ++k)
					if (int e3 = eps(i, j, k))
						w += T(e3) * c.Xi[k];
				f.Upsilon[i][j] = c.Upsilon[i][j] * t - w * t * t;
				f.Sigma[i][j] = c.Sigma[i][j] * t - half * c.Omega[i][j] * t * t;
				f.Omega[i][j] = c.Omega[i][j] * t;
			}
		}
	} else {
		const bool boost = s == Subgroup::boost;
		const Vec3<T>& x = boost ? g.v : g.a;
		std::array<GalileiBivector<T>, 3> L;
		for (int k = 0; k < 3; ++k)
			L[k] = detail::subgroup_jet<T>(pb, s, k, model);
		// Traced linear coefficient of the block carrying the 3-index constant
		// (Omega for boosts, Sigma for translations), and its traceless part.
		auto lin3 = [&](int i, int j, int k) { return boost ? L[k].Omega[i][j] : L[k].Sigma[i][j]; };
		Vec3<T> ev = zero3<T>();
		for (int k = 0; k < 3; ++k)
			for (int i = 0; i < 3; ++i)
				ev[k] += lin3(i, i, k);
		auto e3 = [&](int i, int j, int k) {
			return boost ? lin3(i, j, k) - half * (ev[k] * kd<T>(j, i) - ev[i] * kd<T>(j, k))
			             : lin3(i, j, k) - half * (ev[k] * kd<T>(i, j) - ev[i] * kd<T>(j, k));
		};
		// The 3-index constant must satisfy e_ijk = e_kji and e_iik = 0.
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				for (int k = 0; k < 3; ++k) {
					if (!(e3(i, j, k) == e3(k, j, i)))
						return {false, "symmetry of the 3-index constant"};
					if (i == j && !is_zero(e3(i, i, k)))
						return {false, "trace of the 3-index constant"};
				}
		auto lin = [&](auto get) {
			// sum_k get(L[k]) x_k for a component accessor
			T r(0);
			for (int k = 0; k < 3; ++k)
				r += get(L[k]) * x[k];
			return r;
		};
		if (boost) {
			// a_ij = Gamma_i'(e_j)
			auto A = [&](int i, int j) { return L[j].Gamma[i]; };
			for (int i = 0; i < 3; ++i) {
				f.Psi[i] = T(0);
				f.Phi[i] = T(0);
				f.Pi[i] = T(0);
				f.Gamma[i] = lin([&](const GalileiBivector<T>& b) { return b.Gamma[i]; });
				f.Lambda[i] = lin([&](const GalileiBivector<T>& b) { return b.Lambda[i]; });
				T xi = lin([&](const GalileiBivector<T>& b) { return b.Xi[i]; });
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k)
						xi += (quarter * e3(j, i, k) - (ev[j] * kd<T>(i, k) + ev[k] * kd<T>(i, j)) / T(8)) * x[j] * x[k];
				f.Xi[i] = xi;
				for (int j = 0; j < 3; ++j) {
					T up = lin([&](const GalileiBivector<T>& b) { return b.Upsilon[i][j]; });
					T sg(0), om(0);
					for (int k = 0; k < 3; ++k) {
						T ax(0); // e_inm a_nm
						for (int n = 0; n < 3; ++n)
							for (int m = 0; m < 3; ++m)
								if (int ee = eps(i, n, m))
									ax += T(ee) * A(n, m);
						T c = half * kd<T>(j, k) * ax;
						for (int n = 0; n < 3; ++n)
							if (int ee = eps(i, j, n))
								c -= T(ee) * A(k, n);
						sg += c * x[k];
						om += (e3(i, j, k) + half * (ev[k] * kd<T>(j, i) - ev[i] * kd<T>(j, k))) * x[k];
						for (int l = 0; l < 3; ++l) {
							T q = kd<T>(i, k) * A(j, l) + kd<T>(j, i) * A(l, k) - A(l, j) * kd<T>(k, i);
							T ee2(0);
							for (int n = 0; n < 3; ++n)
								for (int m = 0; m < 3; ++m)
									if (int e1 = eps(j, k, l))
										if (int e2 = eps(i, n, m))
											ee2 += T(e1 * e2) * A(n, m);
							q += half * ee2;
							up -= half * q * x[k] * x[l];
						}
					}
					f.Upsilon[i][j] = up;
					f.Sigma[i][j] = sg;
					f.Omega[i][j] = om;
				}
			}
		} else {
			for (int i = 0; i < 3; ++i) {
				f.Psi[i] = T(0);
				f.Pi[i] = T(0);
				f.Phi[i] = lin([&](const GalileiBivector<T>& b) { return b.Phi[i]; });
				f.Gamma[i] = lin([&](const GalileiBivector<T>& b) { return b.Gamma[i]; });
				f.Xi[i] = lin([&](const GalileiBivector<T>& b) { return b.Xi[i]; });
				T la = lin([&](const GalileiBivector<T>& b) { return b.Lambda[i]; });
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k)
						la += quarter * (e3(j, i, k) - half * (ev[j] * kd<T>(i, k) + ev[k] * kd<T>(i, j))) * x[j] * x[k];
				f.Lambda[i] = la;
				for (int j = 0; j < 3; ++j) {
					f.Upsilon[i][j] = lin([&](const GalileiBivector<T>& b) { return b.Upsilon[i][j]; });
					f.Omega[i][j] = T(0);
					T sg(0);
					for (int k = 0; k < 3; ++k)
						sg += (e3(i, j, k) + half * (ev[k] * kd<T>(i, j) - ev[i] * kd<T>(j, k))) * x[k];
					f.Sigma[i][j] = sg;
				}
			}
		}
	}

	std::string where = first_nonzero_component(e - f);
	if (!where.empty())
		return {false, where};
	return {};
}

// Group-level Jacobi tensor E[i][j][k] (zero iff the bracket defined by eta
// satisfies the Jacobi identity at g). The structure-constant terms enter with
// `sign` (+1 for the field-commutator constants; -1 is the transcribed form).
template <class T>
using Tensor3 = std::array<std::array<std::array<T, 10>, 10>, 10>;

template <class T, class B>
Tensor3<T> eta_jacobi_residual(const EtaParameters<B>& p, const GroupElement<T>& g, int sign = +1,
                               EtaModel model = EtaModel::corrected)
{
	using D = Dual<T>;
	static const StructureConstants<T> sc = galilei_structure_constants<T>();
	const Mat10<T> eta = to_matrix(eval_eta(p, g, model));
	// dEta[l] = X_l eta at g
	std::array<Mat10<T>, 10> dEta;
	const GroupElement<D> gd = lift<D>(g);
	for (int l = 0; l < 10; ++l) {
		GroupElement<D> curve = compose(one_parameter<D>(l, D::variable(T(0))), gd);
		Mat10<D> m = to_matrix(eval_eta(p, curve, model));
		for (int i = 0; i < 10; ++i)
			for (int j = 0; j < 10; ++j)
				dEta[l][i][j] = m[i][j].d;
	}
	// ce[l][p][k] = sum of c_lp^k; precompute Q^j[i][k] = sum_{l,p} c_lp^j eta^{il} eta^{pk}
	Tensor3<T> Q; // Q[j][i][k]
	for (int j = 0; j < 10; ++j)
		for (int i = 0; i < 10; ++i)
			for (int k = 0; k < 10; ++k) {
				T s(0);
				for (int l = 0; l < 10; ++l) {
					if (is_zero(eta[i][l]))
						continue;
					for (int q = 0; q < 10; ++q)
						if (!is_zero(sc.c[l][q][j]))
							s += sc.c[l][q][j] * eta[i][l] * eta[q][k];
				}
				Q[j][i][k] = s;
			}
	const T sg(sign);
	Tensor3<T> E;
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			for (int k = 0; k < 10; ++k) {
				T s(0);
				for (int l = 0; l < 10; ++l) {
					if (!is_zero(eta[i][l]))
						s += eta[i][l] * dEta[l][j][k];
					if (!is_zero(eta[k][l]))
						s += eta[k][l] * dEta[l][i][j];
					if (!is_zero(eta[j][l]))
						s += eta[j][l] * dEta[l][k][i];
				}
				s += sg * (Q[j][i][k] + Q[i][k][j] + Q[k][j][i]);
				E[i][j][k] = s;
			}
	return E;
}

template <class T>
bool is_zero(const Tensor3<T>& e)
{
	return all_zero(e);
}

} // namespace plg
