#pragma once

// Poisson brackets of functions on the group.
//
// Oracle: {f, h}(g) = -sum_ij eta^ij(g) (X_i f)(g) (X_j h)(g), where X_i f is the
// derivative of f along s -> exp(s X_i) g and eta^ij is the matrix form of eta.
// Closed form: the coordinate brackets written through the blocks of eta(g);
// valid when the J^J block vanishes identically, which holds for n = 0.

#include "plg/algebra.hpp"
#include "plg/bialgebra.hpp"
#include "plg/eta.hpp"
#include "plg/observable.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plg {

struct ClosedFormInapplicable : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

inline constexpr int coordinate_count = 16;

template <class T>
struct BracketTable {
	std::array<std::array<T, coordinate_count>, coordinate_count> value{};

	const T& operator()(int x, int y) const { return value[x][y]; }
	T& operator()(int x, int y) { return value[x][y]; }
	friend bool operator==(const BracketTable&, const BracketTable&) = default;
};

template <class T>
bool is_antisymmetric(const BracketTable<T>& b)
{
	for (int i = 0; i < coordinate_count; ++i)
		for (int j = 0; j < coordinate_count; ++j)
			if (!(b(i, j) == -b(j, i)))
				return false;
	return true;
}

namespace detail {

// d[k][c] = X_k applied to coordinate c at g.
template <class T>
std::array<std::array<T, coordinate_count>, 10> coordinate_derivatives(const GroupElement<T>& g)
{
	using D = Dual<T>;
	const GroupElement<D> gd = lift<D>(g);
	std::array<std::array<T, coordinate_count>, 10> d;
	for (int k = 0; k < 10; ++k) {
		const auto c = coordinates(compose(one_parameter<D>(k, D::variable(T(0))), gd));
		for (int i = 0; i < coordinate_count; ++i)
			d[k][i] = c[i].d;
	}
	return d;
}

template <class T, class F>
std::array<T, 10> derivatives(F&& f, const GroupElement<T>& g)
{
	std::array<T, 10> x;
	for (int k = 0; k < 10; ++k)
		x[k] = basis_derivative<T>(k, f, g);
	return x;
}

template <class T>
T contract(const Mat10<T>& m, const std::array<T, 10>& x, const std::array<T, 10>& y)
{
	T s(0);
	for (int i = 0; i < 10; ++i) {
		if (is_zero(x[i]))
			continue;
		for (int j = 0; j < 10; ++j)
			if (!is_zero(y[j]) && !is_zero(m[i][j]))
				s += m[i][j] * x[i] * y[j];
	}
	return -s;
}

} // namespace detail

template <class T, class B>
T bracket_oracle(const Observable& f, const Observable& h, const EtaParameters<B>& p, const GroupElement<T>& g,
                 EtaModel model = EtaModel::corrected)
{
	const Mat10<T> m = to_matrix(eval_eta(p, g, model));
	auto of = [&](const auto& x) { return f(x); };
	auto oh = [&](const auto& x) { return h(x); };
	return detail::contract(m, detail::derivatives<T>(of, g), detail::derivatives<T>(oh, g));
}

// All coordinate pairs through the oracle.
template <class T, class B>
BracketTable<T> bracket_table_oracle(const EtaParameters<B>& p, const GroupElement<T>& g,
                                     EtaModel model = EtaModel::corrected)
{
	const Mat10<T> m = to_matrix(eval_eta(p, g, model));
	const auto d = detail::coordinate_derivatives(g);
	BracketTable<T> b;
	for (int x = 0; x < coordinate_count; ++x)
		for (int y = 0; y < coordinate_count; ++y) {
			std::array<T, 10> dx, dy;
			for (int k = 0; k < 10; ++k) {
				dx[k] = d[k][x];
				dy[k] = d[k][y];
			}
			b(x, y) = detail::contract(m, dx, dy);
		}
	return b;
}

namespace detail {

template <class T, class B>
T closed_entry(const EtaParameters<B>& p, const GroupElement<T>& g, const GalileiBivector<T>& e, int x, int y,
               Transcription tr)
{
	enum Kind { t_, a_, v_, r_ };
	auto kind = [](int c) { return c == 0 ? t_ : c < 4 ? a_ : c < 7 ? v_ : r_; };
	Kind kx = kind(x), ky = kind(y);
	// Order the pair as t < a < v < R, flipping the sign if needed; {v, a} comes from {a, v}.
	if (kx > ky || (kx == ky && x > y))
		return -closed_entry(p, g, e, y, x, tr);

	const Vec3<T>& a = g.a;
	const Vec3<T>& v = g.v;
	const Mat3<T>& R = g.R;
	const T& t = g.t;
	auto ijk = [](int i, int j, int k) { return eps(i, j, k); };

	// sum_jl eps_bjl R_lc M_j  for a vector M
	auto rot_term = [&](int b, int c, auto&& Mj) {
		T s(0);
		for (int j = 0; j < 3; ++j)
			for (int l = 0; l < 3; ++l)
				if (int s_ = ijk(b, j, l))
					s += T(s_) * R[l][c] * Mj(j);
		return s;
	};
	// sum_jl eps_bjl w_l M_j
	auto vec_term = [&](int b, const Vec3<T>& w, auto&& Mj) {
		T s(0);
		for (int j = 0; j < 3; ++j)
			for (int l = 0; l < 3; ++l)
				if (int s_ = ijk(b, j, l))
					s += T(s_) * w[l] * Mj(j);
		return s;
	};
	auto eps_vec = [&](int A, int Bi, const Vec3<T>& w) {
		T s(0);
		for (int j = 0; j < 3; ++j)
			if (int s_ = ijk(A, Bi, j))
				s += T(s_) * w[j];
		return s;
	};

	if (kx == r_ && ky == r_)
		return T(0);
	if (kx == t_ && ky == t_)
		return T(0);
	if (ky == r_) {
		const int b = (y - 7) / 3, c = (y - 7) % 3;
		if (kx == t_)
			return -rot_term(b, c, [&](int j) { return e.Psi[j]; });
		const int A = kx == a_ ? x - 1 : x - 4;
		if (kx == v_)
			return rot_term(b, c, [&](int j) { return e.Omega[A][j]; });
		return rot_term(b, c, [&](int j) { return e.Sigma[A][j] + t * e.Omega[A][j]; });
	}
	if (kx == t_ && ky == v_) {
		const int A = y - 4;
		return e.Gamma[A] - vec_term(A, v, [&](int j) { return e.Psi[j]; });
	}
	if (kx == v_ && ky == v_) {
		const int A = x - 4, Bi = y - 4;
		return -T(2) * eps_vec(A, Bi, e.Xi) + vec_term(Bi, v, [&](int j) { return e.Omega[A][j]; }) -
		       vec_term(A, v, [&](int j) { return e.Omega[Bi][j]; });
	}
	if (kx == a_ && ky == v_) {
		const int A = x - 1, Bi = y - 4;
		return -e.Upsilon[A][Bi] + vec_term(Bi, v, [&](int j) { return e.Sigma[A][j]; }) -
		       T(2) * t * eps_vec(A, Bi, e.Xi) + t * vec_term(Bi, v, [&](int j) { return e.Omega[A][j]; }) -
		       vec_term(A, a, [&](int j) { return e.Omega[Bi][j]; });
	}
	if (kx == a_ && ky == a_) {
		const int A = x - 1, Bi = y - 1;
		return -T(2) * eps_vec(A, Bi, e.Lambda) - t * e.Upsilon[A][Bi] + t * e.Upsilon[Bi][A] -
		       T(2) * t * t * eps_vec(A, Bi, e.Xi) + vec_term(Bi, a, [&](int j) { return e.Sigma[A][j]; }) -
		       vec_term(A, a, [&](int j) { return e.Sigma[Bi][j]; }) +
		       t * vec_term(Bi, a, [&](int j) { return e.Omega[A][j]; }) -
		       t * vec_term(A, a, [&](int j) { return e.Omega[Bi][j]; });
	}
	// {t, a_A} = -eps_inA a_n Psi_i + Phi_A + t Gamma_A
	const int A = y - 1;
	const bool fix = tr == Transcription::corrected;
	const Vec3<T> w = fix ? a : convert<T>(p.alpha);
	T s(0);
	for (int i = 0; i < 3; ++i)
		for (int n = 0; n < 3; ++n)
			if (int s_ = ijk(i, n, A))
				s += T(s_) * w[n] * e.Psi[i];
	return -s + e.Phi[A] + (fix ? t * e.Gamma[A] : e.Gamma[A]);
}

template <class B>
void require_closed_form(const EtaParameters<B>& p)
{
	if (!all_zero(p.n))
		throw ClosedFormInapplicable("closed-form brackets need n = 0; use the oracle");
}

} // namespace detail

// Closed form of {x, y} for coordinate indices x, y (t, a1..a3, v1..v3, R11..R33).
// Transcription::printed evaluates {t, a} as displayed: the alpha_n in place of
// a_n and Gamma without the factor t.
template <class T, class B>
T bracket_closed_entry(const EtaParameters<B>& p, const GroupElement<T>& g, int x, int y,
                       Transcription tr = Transcription::corrected)
{
	detail::require_closed_form(p);
	return detail::closed_entry(p, g, eval_eta(p, g), x, y, tr);
}

template <class T, class B>
BracketTable<T> bracket_table_closed(const EtaParameters<B>& p, const GroupElement<T>& g,
                                     Transcription tr = Transcription::corrected)
{
	detail::require_closed_form(p);
	const GalileiBivector<T> e = eval_eta(p, g);
	BracketTable<T> b;
	for (int x = 0; x < coordinate_count; ++x)
		for (int y = x + 1; y < coordinate_count; ++y) {
			b(x, y) = detail::closed_entry(p, g, e, x, y, tr);
			b(y, x) = -b(x, y);
		}
	return b;
}

template <class T>
struct BracketMismatch {
	int x, y;
	T closed, oracle;
};

template <class T>
std::vector<BracketMismatch<T>> compare_tables(const BracketTable<T>& closed, const BracketTable<T>& oracle)
{
	std::vector<BracketMismatch<T>> out;
	for (int x = 0; x < coordinate_count; ++x)
		for (int y = x + 1; y < coordinate_count; ++y)
			if (!(closed(x, y) == oracle(x, y)))
				out.push_back({x, y, closed(x, y), oracle(x, y)});
	return out;
}

// Pointwise Jacobi sum over cyclic permutations of {x, {y, z}} for coordinates.
// The inner bracket table is evaluated once per basis direction at dual-number
// coordinates (closed form when n = 0, oracle otherwise); any triple then costs
// a single contraction.
template <class T>
class BracketJacobi {
public:
	template <class B>
	BracketJacobi(const EtaParameters<B>& p, const GroupElement<T>& g)
	    : m_(to_matrix(eval_eta(p, g))), d_(detail::coordinate_derivatives(g))
	{
		using D = Dual<T>;
		const GroupElement<D> gd = lift<D>(g);
		const bool closed = all_zero(p.n);
		for (int k = 0; k < 10; ++k) {
			const GroupElement<D> gk = compose(one_parameter<D>(k, D::variable(T(0))), gd);
			const BracketTable<D> b = closed ? bracket_table_closed(p, gk) : bracket_table_oracle(p, gk);
			for (int y = 0; y < coordinate_count; ++y)
				for (int z = 0; z < coordinate_count; ++z)
					inner_[k](y, z) = b(y, z).d;
		}
	}

	T operator()(int x, int y, int z) const { return outer(x, y, z) + outer(y, z, x) + outer(z, x, y); }

private:
	T outer(int x, int y, int z) const
	{
		std::array<T, 10> dx, di;
		for (int k = 0; k < 10; ++k) {
			dx[k] = d_[k][x];
			di[k] = inner_[k](y, z);
		}
		return detail::contract(m_, dx, di);
	}

	Mat10<T> m_;
	std::array<std::array<T, coordinate_count>, 10> d_;
	std::array<BracketTable<T>, 10> inner_;
};

// Same sum for polynomial observables; the inner bracket is the oracle over
// nested dual numbers.
template <class T, class B>
T check_bracket_jacobi(const EtaParameters<B>& p, const GroupElement<T>& g, const Observable& f,
                       const Observable& h, const Observable& k)
{
	auto cf = f.as_coordinate(), ch = h.as_coordinate(), ck = k.as_coordinate();
	if (cf && ch && ck)
		return BracketJacobi<T>(p, g)(*cf, *ch, *ck);
	const Mat10<T> m = to_matrix(eval_eta(p, g));
	auto outer = [&](const Observable& x, const Observable& y, const Observable& z) {
		auto ox = [&](const auto& G) { return x(G); };
		auto inner = [&](const auto& G) {
			using U = std::remove_cvref_t<decltype(G.t)>;
			return bracket_oracle<U>(y, z, p, G);
		};
		return detail::contract(m, detail::derivatives<T>(ox, g), detail::derivatives<T>(inner, g));
	};
	return outer(f, h, k) + outer(h, k, f) + outer(k, f, h);
}

// {f h, k} - f {h, k} - h {f, k} at g through the oracle.
template <class T, class B>
T leibniz_residual(const EtaParameters<B>& p, const GroupElement<T>& g, const Observable& f, const Observable& h,
                   const Observable& k)
{
	return bracket_oracle(f * h, k, p, g) - f(g) * bracket_oracle(h, k, p, g) - h(g) * bracket_oracle(f, k, p, g);
}

} // namespace plg
