#include "plg/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plg {

namespace {

using Q = Quadratic;
using V = Vec3<Q>;
using M = Mat3<Q>;

const Q one(1);
const Q third(Rational(1, 3));

const Q& sc(const Assignment& a, const std::string& k) { return std::get<Q>(a.at(k)); }
const V& vc(const Assignment& a, const std::string& k) { return std::get<V>(a.at(k)); }
const M& mt(const Assignment& a, const std::string& k) { return std::get<M>(a.at(k)); }

V along3(const Q& x) { return {Q(0), Q(0), x}; }
const V e3 = along3(one);

Q norm2(const V& x) { return dot(x, x); }

M kron3()
{
	return identity3<Q>();
}

// W (delta - mu mu)
M transverse(const V& mu, const Q& W) { return scale(W, kron3() - outer(mu, mu)); }

// B (mu mu - delta/3) + C eps_ijk mu_k
M axial_traceless(const V& mu, const Q& B, const Q& C)
{
	M m = scale(B, outer(mu, mu) - scale(third, kron3()));
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				if (int e = eps(i, j, k))
					m[i][j] += Q(e) * C * mu[k];
	return m;
}

// -eps_ijk g_k
M minus_eps(const V& g)
{
	M m = zero33<Q>();
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				if (int e = eps(i, j, k))
					m[i][j] -= Q(e) * g[k];
	return m;
}

bool nonzero(const Value& v)
{
	return std::visit(
	    [](const auto& x) {
		    using X = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<X, Q>)
			    return !x.is_zero();
		    else
			    return !all_zero(x);
	    },
	    v);
}

bool symmetric(const M& m)
{
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < i; ++j)
			if (!(m[i][j] == m[j][i]))
				return false;
	return true;
}

// Second intersection of the line base + s u with the quadric x^T F x = base^T F base.
std::vector<Q> quadric_point(Rng& rng, long bound, const std::vector<std::vector<long>>& F, const std::vector<Q>& base)
{
	const std::size_t n = base.size();
	for (;;) {
		std::vector<Q> u(n);
		for (auto& x : u)
			x = Q(rng.rational(bound));
		Q uu(0), bu(0);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				uu += Q(F[i][j]) * u[i] * u[j];
				bu += Q(F[i][j]) * base[i] * u[j];
			}
		if (uu.is_zero())
			continue;
		const Q s = -Q(2) * bu / uu;
		std::vector<Q> x(n);
		for (std::size_t i = 0; i < n; ++i)
			x[i] = base[i] + s * u[i];
		return x;
	}
}

std::vector<std::vector<long>> diag_form(std::initializer_list<long> d)
{
	std::vector<std::vector<long>> f(d.size(), std::vector<long>(d.size(), 0));
	std::size_t i = 0;
	for (long x : d) {
		f[i][i] = x;
		++i;
	}
	return f;
}

// sqrt(k)/m as an exact element.
Q root_over(long k, long m) { return Q::sqrt_of(k) / Q(m); }

V unit_vector(Rng& rng, long bound)
{
	auto x = quadric_point(rng, bound, diag_form({1, 1, 1}), {Q(0), Q(0), one});
	return {x[0], x[1], x[2]};
}

void sample_free(Rng& rng, long bound, const ParamSpec& s, Assignment& a)
{
	switch (s.kind) {
	case ValueKind::scalar: {
		Rational r = s.domain == Domain::nonzero ? rng.nonzero_rational(bound) : rng.rational(bound);
		if (s.domain == Domain::nonnegative && r.sign() < 0)
			r = -r;
		a[s.name] = Q(r);
		return;
	}
	case ValueKind::vector:
		if (s.domain == Domain::unit)
			a[s.name] = unit_vector(rng, bound);
		else
			a[s.name] = convert<Q>(s.domain == Domain::nonzero ? rng.nonzero_vec(bound) : rng.vec(bound));
		return;
	case ValueKind::matrix: {
		M m = convert<Q>(s.domain == Domain::any ? rng.mat(bound) : rng.traceless_mat(bound));
		if (s.domain == Domain::sym_traceless)
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < i; ++j)
					m[i][j] = m[j][i];
		a[s.name] = m;
		return;
	}
	}
}

bool domain_holds(const ParamSpec& s, const Value& v)
{
	switch (s.domain) {
	case Domain::any: return true;
	case Domain::nonzero: return nonzero(v);
	case Domain::nonnegative: return std::get<Q>(v).sign() >= 0;
	case Domain::unit: return norm2(std::get<V>(v)) == one;
	case Domain::traceless: return trace(std::get<M>(v)).is_zero();
	case Domain::sym_traceless: return trace(std::get<M>(v)).is_zero() && symmetric(std::get<M>(v));
	}
	return false;
}

ValueKind kind_of(const Value& v)
{
	return static_cast<ValueKind>(v.index());
}

const char* kind_name(ValueKind k)
{
	switch (k) {
	case ValueKind::scalar: return "scalar";
	case ValueKind::vector: return "vector";
	case ValueKind::matrix: return "matrix";
	}
	return "?";
}

// ---- entry builder --------------------------------------------------------

class Builder {
public:
	Builder(EntryKind kind, std::string group, int row = 0, std::string variant = {}, std::string subcase = {})
	{
		e_.kind = kind;
		e_.group = group;
		e_.row = row;
		e_.variant = variant;
		e_.subcase = std::move(subcase);
		if (kind == EntryKind::family)
			e_.id = group;
		else if (!row)
			e_.id = group + ":" + variant;
		else
			e_.id = group + ":" + std::to_string(row) + (variant.empty() ? "" : ":" + variant);
	}

	Builder& layout(std::string s)
	{
		e_.layout = std::move(s);
		return *this;
	}
	Builder& scalar(std::string name, Domain d = Domain::any) { return add(std::move(name), ValueKind::scalar, d); }
	Builder& vector(std::string name, Domain d = Domain::any) { return add(std::move(name), ValueKind::vector, d); }
	Builder& matrix(std::string name, Domain d = Domain::traceless) { return add(std::move(name), ValueKind::matrix, d); }
	Builder& require(std::string text, std::function<bool(const Assignment&)> f)
	{
		e_.constraints.push_back({std::move(text), std::move(f), false});
		return *this;
	}
	Builder& equation(std::string text, std::function<bool(const Assignment&)> f)
	{
		e_.constraints.push_back({std::move(text), std::move(f), true});
		return *this;
	}
	Builder& joint(std::function<void(Rng&, long, Assignment&)> f)
	{
		e_.joint_sampler = std::move(f);
		return *this;
	}
	Builder& count(int n)
	{
		e_.printed_count = n;
		return *this;
	}
	CatalogEntry build(std::function<void(const Assignment&, EtaParameters<Q>&)> f)
	{
		e_.build = std::move(f);
		return std::move(e_);
	}

private:
	Builder& add(std::string name, ValueKind k, Domain d)
	{
		e_.free.push_back({std::move(name), k, d});
		return *this;
	}
	CatalogEntry e_;
};

// Joint sampler for keys that lie on a quadric x^T F x = base^T F base.
std::function<void(Rng&, long, Assignment&)> on_quadric(std::vector<std::string> keys,
                                                         std::vector<std::vector<long>> F, std::vector<Q> base)
{
	return [keys = std::move(keys), F = std::move(F), base = std::move(base)](Rng& rng, long bound, Assignment& a) {
		auto x = quadric_point(rng, bound, F, base);
		for (std::size_t i = 0; i < keys.size(); ++i)
			a[keys[i]] = x[i];
	};
}

std::function<bool(const Assignment&)> sum_of_squares_is_one(std::string k1, std::string k2)
{
	return [=](const Assignment& a) { return sc(a, k1) * sc(a, k1) + sc(a, k2) * sc(a, k2) == one; };
}

std::function<bool(const Assignment&)> scalar_nonzero(std::string k)
{
	return [=](const Assignment& a) { return !sc(a, k).is_zero(); };
}

// ---- families ------------------------------------------------------------

void add_families(std::vector<CatalogEntry>& out)
{
	const auto F = EntryKind::family;
	out.push_back(Builder(F, "I")
	                  .layout("alpha, beta")
	                  .vector("alpha")
	                  .scalar("beta", Domain::nonzero)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.alpha = vc(a, "alpha");
		                  p.beta = sc(a, "beta");
	                  }));
	auto add_ii_v = [&out](const std::string& id) {
		const bool two = id == "II";
		Builder b(F, id);
		if (two)
			b.layout("alpha, phi=F alpha, lambda=L alpha, v_param=v, omega=W(|alpha|^2 delta - alpha alpha), "
			         "chi=B(alpha alpha - |alpha|^2 delta/3) + 2Wv eps alpha");
		else
			b.layout("alpha, phi=F alpha, lambda=L alpha, v_param=v, chi=B(alpha alpha - |alpha|^2 delta/3)");
		b.vector("alpha", Domain::nonzero).scalar("F").scalar("L").scalar("v");
		if (two)
			b.scalar("W", Domain::nonzero);
		b.scalar("B");
		out.push_back(b.build([two](const Assignment& a, EtaParameters<Q>& p) {
			const V& al = vc(a, "alpha");
			const Q a2 = norm2(al);
			const Q W = two ? sc(a, "W") : Q(0);
			p.alpha = al;
			p.phi = scale(sc(a, "F"), al);
			p.lambda = scale(sc(a, "L"), al);
			p.v_param = sc(a, "v");
			p.omega = scale(W, scale(a2, kron3()) - outer(al, al));
			p.chi = scale(sc(a, "B"), outer(al, al) - scale(a2 * third, kron3()));
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k)
						if (int e = eps(i, j, k))
							p.chi[i][j] += Q(2 * e) * W * p.v_param * al[k];
		}));
	};
	add_ii_v("II");
	out.push_back(Builder(F, "III")
	                  .layout("phi=F mu, lambda=L mu, omega=W(delta - mu mu), chi=B(mu mu - delta/3) + C eps mu")
	                  .scalar("F", Domain::nonzero)
	                  .scalar("L")
	                  .scalar("B")
	                  .scalar("C")
	                  .scalar("W", Domain::nonzero)
	                  .vector("mu", Domain::unit)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  const V& mu = vc(a, "mu");
		                  p.phi = scale(sc(a, "F"), mu);
		                  p.lambda = scale(sc(a, "L"), mu);
		                  p.omega = transverse(mu, sc(a, "W"));
		                  p.chi = axial_traceless(mu, sc(a, "B"), sc(a, "C"));
	                  }));
	out.push_back(Builder(F, "IV")
	                  .layout("lambda=L mu, xi=X mu, theta, omega=W(delta - mu mu), chi=B(mu mu - delta/3) + C eps mu")
	                  .scalar("L")
	                  .scalar("X")
	                  .scalar("theta")
	                  .scalar("W", Domain::nonzero)
	                  .scalar("B")
	                  .scalar("C")
	                  .vector("mu", Domain::unit)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  const V& mu = vc(a, "mu");
		                  p.lambda = scale(sc(a, "L"), mu);
		                  p.xi = scale(sc(a, "X"), mu);
		                  p.theta = sc(a, "theta");
		                  p.omega = transverse(mu, sc(a, "W"));
		                  p.chi = axial_traceless(mu, sc(a, "B"), sc(a, "C"));
	                  }));
	add_ii_v("V");
	out.push_back(Builder(F, "VI")
	                  .layout("lambda, chi (symmetric), theta")
	                  .vector("lambda")
	                  .matrix("chi", Domain::sym_traceless)
	                  .scalar("theta")
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.lambda = vc(a, "lambda");
		                  p.chi = mt(a, "chi");
		                  p.theta = sc(a, "theta");
	                  }));
	out.push_back(Builder(F, "VII")
	                  .layout("phi_i=F eps_imn chi_mn, chi")
	                  .scalar("F", Domain::nonzero)
	                  .matrix("chi")
	                  .require("eps_imn chi_mn != 0", [](const Assignment& a) { return !all_zero(axial(mt(a, "chi"))); })
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.chi = mt(a, "chi");
		                  p.phi = scale(sc(a, "F"), axial(p.chi));
	                  }));
	out.push_back(Builder(F, "VIII")
	                  .layout("phi, lambda=L phi, chi")
	                  .vector("phi", Domain::nonzero)
	                  .scalar("L")
	                  .matrix("chi")
	                  .require("phi_i != F eps_imn chi_mn for every F",
	                           [](const Assignment& a) {
		                           const V ax = axial(mt(a, "chi"));
		                           return all_zero(ax) || !all_zero(cross(vc(a, "phi"), ax));
	                           })
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = vc(a, "phi");
		                  p.lambda = scale(sc(a, "L"), p.phi);
		                  p.chi = mt(a, "chi");
	                  }));
	out.push_back(Builder(F, "IX")
	                  .layout("phi, v_param=v, chi")
	                  .vector("phi")
	                  .scalar("v", Domain::nonzero)
	                  .matrix("chi")
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = vc(a, "phi");
		                  p.v_param = sc(a, "v");
		                  p.chi = mt(a, "chi");
	                  }));
	out.push_back(Builder(F, "X")
	                  .layout("lambda, xi, theta, chi")
	                  .vector("lambda")
	                  .vector("xi", Domain::nonzero)
	                  .scalar("theta")
	                  .matrix("chi")
	                  .equation("eps_abc chi_ab xi_c = 0",
	                            [](const Assignment& a) { return dot(axial(mt(a, "chi")), vc(a, "xi")).is_zero(); })
	                  .joint([](Rng& rng, long bound, Assignment& a) {
		                  // Remove the component of axial(chi) along xi.
		                  const V xi = convert<Q>(rng.nonzero_vec(bound));
		                  M chi = convert<Q>(rng.traceless_mat(bound));
		                  const V ax = axial(chi);
		                  const V d = scale(dot(ax, xi) / norm2(xi), xi); // axial part to remove
		                  chi = chi + scale(Q(Rational(1, 2)), skew(d));   // axial(skew(d)) = -2d
		                  a["xi"] = xi;
		                  a["chi"] = chi;
	                  })
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.lambda = vc(a, "lambda");
		                  p.xi = vc(a, "xi");
		                  p.theta = sc(a, "theta");
		                  p.chi = mt(a, "chi");
	                  }));
	for (const char* id : {"XI", "XII", "XIII", "XIV", "XV", "XVI", "XVII"}) {
		const std::string s = id;
		const bool has_c = s == "XII" || s == "XIII" || s == "XV" || s == "XVI";
		const bool has_l = s == "XI" || s == "XIV" || s == "XVII";
		const bool has_theta = s == "XI" || s == "XII" || s == "XIV";
		const bool has_x = s == "XIV";
		const bool has_v = s == "XIII" || s == "XV";
		const bool has_f = s == "XV" || s == "XVI" || s == "XVII";
		std::string lay = "rho=-S/3, sigma=S(mu mu - delta/3), chi=B(mu mu - delta/3)";
		if (has_c)
			lay += " + C eps mu";
		if (has_l)
			lay += ", lambda=L mu";
		if (has_theta)
			lay += ", theta";
		if (has_x)
			lay += ", xi=X mu";
		if (has_v)
			lay += ", v_param=v";
		if (has_f)
			lay += ", phi=F mu";
		Builder b(F, s);
		b.layout(lay).scalar("S", Domain::nonzero);
		if (has_f)
			b.scalar("F", Domain::nonzero);
		if (has_x)
			b.scalar("X", Domain::nonzero);
		if (has_v)
			b.scalar("v", Domain::nonzero);
		if (has_l)
			b.scalar("L");
		if (has_theta)
			b.scalar("theta");
		b.scalar("B");
		if (has_c)
			b.scalar("C", s == "XII" ? Domain::nonzero : Domain::any);
		b.vector("mu", Domain::unit);
		out.push_back(b.build([=](const Assignment& a, EtaParameters<Q>& p) {
			const V& mu = vc(a, "mu");
			const Q S = sc(a, "S");
			p.rho = -S * third;
			p.sigma = axial_traceless(mu, S, Q(0));
			p.chi = axial_traceless(mu, sc(a, "B"), has_c ? sc(a, "C") : Q(0));
			if (has_l)
				p.lambda = scale(sc(a, "L"), mu);
			if (has_theta)
				p.theta = sc(a, "theta");
			if (has_x)
				p.xi = scale(sc(a, "X"), mu);
			if (has_v)
				p.v_param = sc(a, "v");
			if (has_f)
				p.phi = scale(sc(a, "F"), mu);
		}));
	}
	out.push_back(Builder(F, "XVIII")
	                  .layout("gamma=(0,0,1), lambda=L gamma, xi=X gamma, sigma_ij=-eps_ijk gamma_k")
	                  .scalar("X")
	                  .scalar("L")
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.gamma = e3;
		                  p.lambda = scale(sc(a, "L"), e3);
		                  p.xi = scale(sc(a, "X"), e3);
		                  p.sigma = minus_eps(e3);
	                  }));
}

// ---- canonical entries ---------------------------------------------------

// Group II and III structure: chi = B(e3 e3 - delta/3) + C eps_ij3.
M chi_e3(const Q& B, const Q& C) { return axial_traceless(e3, B, C); }

void group_ii_base(EtaParameters<Q>& p, const Q& W, const Q& B, const Q& C)
{
	p.omega = transverse(e3, W);
	p.chi = chi_e3(B, C);
}

void group_iii_base(EtaParameters<Q>& p, const Q& B, const Q& C)
{
	p.rho = -third;
	p.sigma = axial_traceless(e3, one, Q(0));
	p.chi = chi_e3(B, C);
}

struct Sign {
	const char* tag;
	int value;
};
const Sign pm[] = {{"+", 1}, {"-", -1}};
const Sign pm0[] = {{"+", 1}, {"-", -1}, {"0", 0}};

void add_group_i(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	out.push_back(Builder(C, "I", 1)
	                  .layout("alpha=(0,0,alpha), beta=1")
	                  .scalar("alpha", Domain::nonnegative)
	                  .count(1)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.alpha = along3(sc(a, "alpha"));
		                  p.beta = one;
	                  }));
	out.push_back(Builder(C, "I", 2)
	                  .layout("alpha=(0,0,1), phi=(0,0,1), lambda=(0,0,L), v_param=v")
	                  .scalar("L")
	                  .scalar("v")
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.alpha = e3;
		                  p.phi = e3;
		                  p.lambda = along3(sc(a, "L"));
		                  p.v_param = sc(a, "v");
	                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "I", 3, s.tag)
		                  .layout(std::string("alpha=(0,0,1), lambda=(0,0,") + s.tag + "1), v_param=v")
		                  .scalar("v")
		                  .count(1)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.alpha = e3;
			                  p.lambda = along3(Q(s.value));
			                  p.v_param = sc(a, "v");
		                  }));
	out.push_back(Builder(C, "I", 4).layout("alpha=(0,0,1), v_param=1").count(0).build([](const Assignment&, EtaParameters<Q>& p) {
		p.alpha = e3;
		p.v_param = one;
	}));
	out.push_back(Builder(C, "I", 5).layout("alpha=(0,0,1)").count(0).build([](const Assignment&, EtaParameters<Q>& p) {
		p.alpha = e3;
	}));
	for (auto s : pm)
		out.push_back(Builder(C, "I", 6, s.tag)
		                  .layout(std::string("phi=(0,0,1), lambda=(0,0,") + s.tag + "1)")
		                  .count(0)
		                  .build([s](const Assignment&, EtaParameters<Q>& p) {
			                  p.phi = e3;
			                  p.lambda = along3(Q(s.value));
		                  }));
	out.push_back(Builder(C, "I", 7).layout("phi=(0,0,1)").count(0).build([](const Assignment&, EtaParameters<Q>& p) {
		p.phi = e3;
	}));
	out.push_back(Builder(C, "I", 8).layout("phi=(0,0,1), v_param=1").count(0).build([](const Assignment&, EtaParameters<Q>& p) {
		p.phi = e3;
		p.v_param = one;
	}));
	out.push_back(Builder(C, "I", 9)
	                  .layout("lambda=(0,lambda2,lambda3), xi=(0,0,1), theta")
	                  .scalar("lambda2")
	                  .scalar("lambda3")
	                  .scalar("theta")
	                  .equation("lambda2^2 + lambda3^2 = 1", sum_of_squares_is_one("lambda2", "lambda3"))
	                  .joint(on_quadric({"lambda2", "lambda3"}, diag_form({1, 1}), {Q(0), one}))
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.lambda = {Q(0), sc(a, "lambda2"), sc(a, "lambda3")};
		                  p.xi = e3;
		                  p.theta = sc(a, "theta");
	                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "I", 10, s.tag)
		                  .layout(std::string("lambda=(0,0,1), theta=") + s.tag + "1")
		                  .count(0)
		                  .build([s](const Assignment&, EtaParameters<Q>& p) {
			                  p.lambda = e3;
			                  p.theta = Q(s.value);
		                  }));
	out.push_back(Builder(C, "I", 11).layout("lambda=(0,0,1)").count(0).build([](const Assignment&, EtaParameters<Q>& p) {
		p.lambda = e3;
	}));
	out.push_back(Builder(C, "I", 12)
	                  .layout("xi=(0,0,1), theta")
	                  .scalar("theta")
	                  .count(1)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.xi = e3;
		                  p.theta = sc(a, "theta");
	                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "I", 13, s.tag)
		                  .layout(std::string("theta=") + s.tag + "1")
		                  .count(0)
		                  .build([s](const Assignment&, EtaParameters<Q>& p) { p.theta = Q(s.value); }));
	out.push_back(Builder(C, "I", 14).layout("all zero").count(0).build([](const Assignment&, EtaParameters<Q>&) {}));
}

// 2B^2 + 6C^2 = 3 has no rational points; sample on it over Q(sqrt 2).
Builder& bc_quadric(Builder& b)
{
	return b.scalar("B")
	    .scalar("C")
	    .equation("2B^2 + 6C^2 = 3",
	              [](const Assignment& a) {
		              const Q& B = sc(a, "B");
		              const Q& C = sc(a, "C");
		              return Q(2) * B * B + Q(6) * C * C == Q(3);
	              })
	    .joint(on_quadric({"B", "C"}, diag_form({2, 6}), {Q(0), root_over(2, 2)}));
}

void add_group_ii(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	const std::string base = "omega=W(delta - e3 e3), chi=B(e3 e3 - delta/3) + C eps_ij3; ";
	out.push_back(Builder(C, "II", 15)
	                  .layout(base + "alpha=(0,0,1), phi=(0,0,F), lambda=(0,0,L), v_param=v, B, C=2v, W=1")
	                  .scalar("F")
	                  .scalar("L")
	                  .scalar("v")
	                  .scalar("B")
	                  .count(4)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.alpha = e3;
		                  p.phi = along3(sc(a, "F"));
		                  p.lambda = along3(sc(a, "L"));
		                  p.v_param = sc(a, "v");
		                  group_ii_base(p, one, sc(a, "B"), Q(2) * p.v_param);
	                  }));
	out.push_back(Builder(C, "II", 16)
	                  .layout(base + "alpha=(0,0,1), phi=(0,0,F), lambda=(0,0,L), v_param=v, B=1, C=0, W=0")
	                  .scalar("F")
	                  .scalar("L")
	                  .scalar("v")
	                  .count(3)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.alpha = e3;
		                  p.phi = along3(sc(a, "F"));
		                  p.lambda = along3(sc(a, "L"));
		                  p.v_param = sc(a, "v");
		                  group_ii_base(p, Q(0), one, Q(0));
	                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "II", 17, s.tag)
		                  .layout(base + "phi=(0,0," + s.tag + "1), lambda=(0,0,L), B, C, W=1")
		                  .scalar("L")
		                  .scalar("B")
		                  .scalar("C")
		                  .count(3)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.phi = along3(Q(s.value));
			                  p.lambda = along3(sc(a, "L"));
			                  group_ii_base(p, one, sc(a, "B"), sc(a, "C"));
		                  }));
	out.push_back(Builder(C, "II", 18)
	                  .layout(base + "phi, v_param=1, B=0, C=1, W=0")
	                  .vector("phi")
	                  .count(3)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = vc(a, "phi");
		                  p.v_param = one;
		                  group_ii_base(p, Q(0), Q(0), one);
	                  }));
	{
		Builder b(C, "II", 19);
		b.layout(base + "lambda=(0,0,L), xi=(0,0,X), theta, 2B^2 + 6C^2 = 3, W=1").scalar("L").scalar("X").scalar("theta");
		bc_quadric(b).count(4);
		out.push_back(b.build([](const Assignment& a, EtaParameters<Q>& p) {
			p.lambda = along3(sc(a, "L"));
			p.xi = along3(sc(a, "X"));
			p.theta = sc(a, "theta");
			group_ii_base(p, one, sc(a, "B"), sc(a, "C"));
		}));
	}
	for (auto s : pm)
		out.push_back(Builder(C, "II", 20, s.tag)
		                  .layout(base + "lambda=(0,0," + s.tag + "1), xi=(0,0,X), theta, B=0, C=0, W=1")
		                  .scalar("X")
		                  .scalar("theta")
		                  .count(2)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.lambda = along3(Q(s.value));
			                  p.xi = along3(sc(a, "X"));
			                  p.theta = sc(a, "theta");
			                  group_ii_base(p, one, Q(0), Q(0));
		                  }));
	out.push_back(Builder(C, "II", 21)
	                  .layout(base + "xi=(0,0,X), theta, B=0, C=0, W=1")
	                  .scalar("X")
	                  .scalar("theta")
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.xi = along3(sc(a, "X"));
		                  p.theta = sc(a, "theta");
		                  group_ii_base(p, one, Q(0), Q(0));
	                  }));
}

void add_group_iii(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	const std::string base = "rho=-1/3, sigma=e3 e3 - delta/3, chi=B(e3 e3 - delta/3) + C eps_ij3; ";
	out.push_back(Builder(C, "III", 22)
	                  .layout(base + "phi=(0,0,1), lambda=(0,0,L), B, C=0")
	                  .scalar("L")
	                  .scalar("B")
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = e3;
		                  p.lambda = along3(sc(a, "L"));
		                  group_iii_base(p, sc(a, "B"), Q(0));
	                  }));
	out.push_back(Builder(C, "III", 23)
	                  .layout(base + "phi=(0,0,1), v_param=v, B, C=0")
	                  .scalar("v", Domain::nonzero)
	                  .scalar("B")
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = e3;
		                  p.v_param = sc(a, "v");
		                  group_iii_base(p, sc(a, "B"), Q(0));
	                  }));
	out.push_back(Builder(C, "III", 24)
	                  .layout(base + "phi=(0,0,1), v_param=v, B, C")
	                  .scalar("v")
	                  .scalar("B")
	                  .scalar("C", Domain::nonzero)
	                  .count(3)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.phi = e3;
		                  p.v_param = sc(a, "v");
		                  group_iii_base(p, sc(a, "B"), sc(a, "C"));
	                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "III", 25, s.tag)
		                  .layout(base + "lambda=(0,0,L), xi=(0,0," + s.tag + "1), theta, B, C=0")
		                  .scalar("L")
		                  .scalar("theta")
		                  .scalar("B")
		                  .count(3)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.lambda = along3(sc(a, "L"));
			                  p.xi = along3(Q(s.value));
			                  p.theta = sc(a, "theta");
			                  group_iii_base(p, sc(a, "B"), Q(0));
		                  }));
	for (auto s : pm)
		out.push_back(Builder(C, "III", 26, s.tag)
		                  .layout(base + "lambda=(0,0,L), theta=" + s.tag + "1, B, C=0")
		                  .scalar("L")
		                  .scalar("B")
		                  .count(2)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.lambda = along3(sc(a, "L"));
			                  p.theta = Q(s.value);
			                  group_iii_base(p, sc(a, "B"), Q(0));
		                  }));
	for (int b : {1, 0})
		out.push_back(Builder(C, "III", b ? 27 : 28)
		                  .layout(base + "lambda=(0,0,L), B=" + std::to_string(b) + ", C=0")
		                  .scalar("L")
		                  .count(1)
		                  .build([b](const Assignment& a, EtaParameters<Q>& p) {
			                  p.lambda = along3(sc(a, "L"));
			                  group_iii_base(p, Q(b), Q(0));
		                  }));
	out.push_back(Builder(C, "III", 29)
	                  .layout(base + "v_param=1, B, C")
	                  .scalar("B")
	                  .scalar("C")
	                  .count(2)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.v_param = one;
		                  group_iii_base(p, sc(a, "B"), sc(a, "C"));
	                  }));
	{
		Builder b(C, "III", 30);
		b.layout(base + "theta, 2B^2 + 6C^2 = 3, C != 0").scalar("theta");
		bc_quadric(b).require("C != 0", scalar_nonzero("C")).count(2);
		out.push_back(b.build([](const Assignment& a, EtaParameters<Q>& p) {
			p.theta = sc(a, "theta");
			group_iii_base(p, sc(a, "B"), sc(a, "C"));
		}));
	}
}

void add_group_iv(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	const std::string base = "sigma_ij=-eps_ij3; ";
	for (auto s : pm)
		out.push_back(Builder(C, "IV", 31, s.tag)
		                  .layout(base + "gamma=(0,0,1), lambda=(0,0,L), xi=(0,0," + s.tag + "1)")
		                  .scalar("L")
		                  .count(1)
		                  .build([s](const Assignment& a, EtaParameters<Q>& p) {
			                  p.gamma = e3;
			                  p.lambda = along3(sc(a, "L"));
			                  p.xi = along3(Q(s.value));
			                  p.sigma = minus_eps(e3);
		                  }));
	out.push_back(Builder(C, "IV", 32)
	                  .layout(base + "gamma=(0,0,1), lambda=(0,0,L)")
	                  .scalar("L")
	                  .count(1)
	                  .build([](const Assignment& a, EtaParameters<Q>& p) {
		                  p.gamma = e3;
		                  p.lambda = along3(sc(a, "L"));
		                  p.sigma = minus_eps(e3);
	                  }));
}

// ---- chi patterns of groups V-VIII ----------------------------------------
//
// Each pattern names its free chi entries, the normalization sum chi_ij^2 = 1
// as a quadratic form in them, a point on it, and its open conditions.

struct ChiPattern {
	std::string subcase;
	std::string layout;
	std::vector<std::string> keys;
	std::vector<std::vector<long>> form;
	std::vector<Q> base;
	std::vector<std::pair<std::string, std::function<bool(const Assignment&)>>> open;
	std::function<M(const Assignment&)> make;
};

bool distinct_diagonal(const M& m)
{
	return !(m[0][0] == m[1][1]) && !(m[1][1] == m[2][2]) && !(m[0][0] == m[2][2]);
}

ChiPattern pattern(const std::string& sub)
{
	const Q half(Rational(1, 2)), quarter(Rational(1, 4));
	ChiPattern c;
	c.subcase = sub;
	auto s = [](const Assignment& a, const char* k) { return sc(a, k); };
	if (sub == "Va") {
		c.layout = "chi=diag(chi11, chi22, -chi11-chi22)";
		c.keys = {"chi11", "chi22"};
		c.form = {{2, 1}, {1, 2}};
		c.base = {root_over(2, 2), -root_over(2, 2)};
		c.make = [s](const Assignment& a) {
			M m = zero33<Q>();
			m[0][0] = s(a, "chi11");
			m[1][1] = s(a, "chi22");
			m[2][2] = -(m[0][0] + m[1][1]);
			return m;
		};
	} else if (sub == "Vb") {
		c.layout = "chi=diag(chi11, chi11, -2chi11)";
		c.keys = {"chi11"};
		c.form = {{6}};
		c.base = {root_over(6, 6)};
		c.make = [s](const Assignment& a) {
			const Q x = s(a, "chi11");
			M m = zero33<Q>();
			m[0][0] = m[1][1] = x;
			m[2][2] = -Q(2) * x;
			return m;
		};
	} else if (sub == "VIa" || sub == "VIb") {
		const bool a_case = sub == "VIa";
		c.layout = a_case ? "chi=[[-chi22-chi33, chi12, chi13], [chi12, chi22, -chi32], [chi13, chi32, chi33]]"
		                  : "chi=[[-2chi22, chi12, chi13], [chi12, chi22, -chi32], [chi13, chi32, chi22]]";
		if (a_case) {
			c.keys = {"chi22", "chi33", "chi32", "chi12", "chi13"};
			c.form = {{2, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}};
			c.base = {half, -half, half, Q(0), Q(0)};
			c.open.push_back({"chi22 != chi33", [s](const Assignment& a) { return !(s(a, "chi22") == s(a, "chi33")); }});
		} else {
			c.keys = {"chi22", "chi32", "chi12", "chi13"};
			c.form = diag_form({6, 2, 2, 2});
			c.base = {quarter, quarter, half, Q(0)};
		}
		c.open.push_back({"chi32 != 0", scalar_nonzero("chi32")});
		c.make = [s, a_case](const Assignment& a) {
			const Q d2 = s(a, "chi22"), d3 = a_case ? s(a, "chi33") : d2;
			M m = zero33<Q>();
			m[1][1] = d2;
			m[2][2] = d3;
			m[0][0] = -(d2 + d3);
			m[2][1] = s(a, "chi32");
			m[1][2] = -m[2][1];
			m[0][1] = m[1][0] = s(a, "chi12");
			m[0][2] = m[2][0] = s(a, "chi13");
			return m;
		};
	} else if (sub == "VIIa") {
		c.layout = "chi=[[chi11, chi12, chi13], [-chi12, chi22, chi23], [-chi13, -chi23, -chi11-chi22]]";
		c.keys = {"chi11", "chi22", "chi12", "chi13", "chi23"};
		c.form = {{2, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}};
		c.base = {half, -half, Q(0), Q(0), half};
		c.make = [s](const Assignment& a) {
			M m = zero33<Q>();
			m[0][0] = s(a, "chi11");
			m[1][1] = s(a, "chi22");
			m[2][2] = -(m[0][0] + m[1][1]);
			m[0][1] = s(a, "chi12");
			m[0][2] = s(a, "chi13");
			m[1][2] = s(a, "chi23");
			m[1][0] = -m[0][1];
			m[2][0] = -m[0][2];
			m[2][1] = -m[1][2];
			return m;
		};
		c.open.push_back({"chi11, chi22, chi33 pairwise distinct", [c](const Assignment& a) { return distinct_diagonal(c.make(a)); }});
	} else if (sub == "VIIb" || sub == "VIIc") {
		const bool b_case = sub == "VIIb";
		c.layout = b_case ? "chi=[[chi11, chi12, chi13], [-chi12, chi11, 0], [-chi13, 0, -2chi11]]"
		                  : "chi=[[chi11, chi12, 0], [-chi12, chi11, 0], [0, 0, -2chi11]]";
		if (b_case) {
			c.keys = {"chi11", "chi13", "chi12"};
			c.form = diag_form({6, 2, 2});
			c.base = {quarter, half, quarter};
			c.open.push_back({"chi11 = chi22 != chi33", scalar_nonzero("chi11")});
			c.open.push_back({"chi13 != 0", scalar_nonzero("chi13")});
		} else {
			c.keys = {"chi11", "chi12"};
			c.form = diag_form({6, 2});
			c.base = {Q(0), root_over(2, 2)};
		}
		c.make = [s, b_case](const Assignment& a) {
			const Q x = s(a, "chi11");
			M m = zero33<Q>();
			m[0][0] = m[1][1] = x;
			m[2][2] = -Q(2) * x;
			m[0][1] = s(a, "chi12");
			m[1][0] = -m[0][1];
			if (b_case) {
				m[0][2] = s(a, "chi13");
				m[2][0] = -m[0][2];
			}
			return m;
		};
	} else if (sub == "VIIIa" || sub == "VIIIb") {
		const bool a_case = sub == "VIIIa";
		c.layout = a_case ? "chi=[[chi11, chi12, chi13], [-chi12, chi22, chi23], [chi13, chi23, -chi11-chi22]]"
		                  : "chi=[[chi11, chi12, 0], [-chi12, chi11, chi23], [0, chi23, -2chi11]]";
		if (a_case) {
			c.keys = {"chi11", "chi22", "chi13", "chi23", "chi12"};
			c.form = {{2, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}};
			c.base = {half, -half, Q(0), Q(0), half};
			c.open.push_back({"chi11 != chi22", [s](const Assignment& a) { return !(s(a, "chi11") == s(a, "chi22")); }});
		} else {
			c.keys = {"chi11", "chi23", "chi12"};
			c.form = diag_form({6, 2, 2});
			c.base = {quarter, quarter, half};
		}
		c.open.push_back({"chi12 = 1/F != 0", scalar_nonzero("chi12")});
		c.make = [s, a_case](const Assignment& a) {
			M m = zero33<Q>();
			m[0][0] = s(a, "chi11");
			m[1][1] = a_case ? s(a, "chi22") : m[0][0];
			m[2][2] = -(m[0][0] + m[1][1]);
			m[0][1] = s(a, "chi12");
			m[1][0] = -m[0][1];
			m[1][2] = m[2][1] = s(a, "chi23");
			if (a_case)
				m[0][2] = m[2][0] = s(a, "chi13");
			return m;
		};
	}
	if (sub == "Va")
		c.open.push_back({"chi11, chi22, chi33 pairwise distinct", [c](const Assignment& a) { return distinct_diagonal(c.make(a)); }});
	if (sub == "Vb")
		c.open.push_back({"chi11 = chi22 != chi33", scalar_nonzero("chi11")});
	return c;
}

// Registers the chi keys, the normalization and the open conditions; `extra`
// jointly samples further quadric-constrained keys of the row.
Builder& with_chi(Builder& b, const ChiPattern& c, std::function<void(Rng&, long, Assignment&)> extra = {})
{
	for (const auto& k : c.keys)
		b.scalar(k);
	auto make = c.make;
	b.equation("sum chi_ij^2 = 1", [make](const Assignment& a) {
		const M m = make(a);
		Q s(0);
		for (const auto& r : m)
			for (const auto& x : r)
				s += x * x;
		return s == one;
	});
	for (const auto& [text, f] : c.open)
		b.require(text, f);
	auto chi_sampler = on_quadric(c.keys, c.form, c.base);
	b.joint([chi_sampler, extra](Rng& rng, long bound, Assignment& a) {
		chi_sampler(rng, bound, a);
		if (extra)
			extra(rng, bound, a);
	});
	return b;
}

// A unit vector (0, x2, x3) exposed as two scalars.
std::function<void(Rng&, long, Assignment&)> unit_pair(const std::string& k2, const std::string& k3)
{
	return on_quadric({k2, k3}, diag_form({1, 1}), {Q(0), one});
}

void add_groups_v_vi(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	for (const char* sub : {"Va", "Vb", "VIa", "VIb"}) {
		const ChiPattern cp = pattern(sub);
		const std::string s = sub;
		const std::string group = s[1] == 'I' ? "VI" : "V";
		const bool va = s == "Va", vb = s == "Vb", via = s == "VIa";
		const std::string lay = cp.layout + ", sum chi_ij^2 = 1; ";
		auto mk = [&](int row, std::string variant = {}) {
			Builder b(C, group, row, variant, s);
			return b;
		};
		auto chi_of = cp.make;
		// theta row with a unit lambda (33, 36, 39) or lambda=(0,0,+-1) (42).
		if (s != "VIb") {
			const int row = va ? 33 : vb ? 36 : 39;
			Builder b = mk(row);
			if (va) {
				b.layout(lay + "lambda with |lambda| = 1, theta").vector("lambda", Domain::unit);
				with_chi(b, cp);
			} else {
				b.layout(lay + "lambda=(0,lambda2,lambda3), lambda2^2 + lambda3^2 = 1, theta").scalar("lambda2").scalar("lambda3");
				b.equation("lambda2^2 + lambda3^2 = 1", sum_of_squares_is_one("lambda2", "lambda3"));
				with_chi(b, cp, unit_pair("lambda2", "lambda3"));
			}
			b.scalar("theta").count(va ? 4 : vb ? 2 : 6);
			out.push_back(b.build([va, chi_of](const Assignment& a, EtaParameters<Q>& p) {
				p.lambda = va ? vc(a, "lambda") : V{Q(0), sc(a, "lambda2"), sc(a, "lambda3")};
				p.theta = sc(a, "theta");
				p.chi = chi_of(a);
			}));
		} else {
			for (auto sg : pm) {
				Builder b = mk(42, sg.tag);
				b.layout(lay + "lambda=(0,0," + sg.tag + "1), theta");
				with_chi(b, cp);
				b.scalar("theta").count(4);
				out.push_back(b.build([sg, chi_of](const Assignment& a, EtaParameters<Q>& p) {
					p.lambda = along3(Q(sg.value));
					p.theta = sc(a, "theta");
					p.chi = chi_of(a);
				}));
			}
		}
		// lambda free with a unit xi (34, 37, 40) or xi=(0,0,+-1) (43).
		if (s != "VIb") {
			const int row = va ? 34 : vb ? 37 : 40;
			Builder b = mk(row);
			b.vector("lambda");
			if (va) {
				b.layout(lay + "lambda, xi with |xi| = 1, theta").vector("xi", Domain::unit);
				with_chi(b, cp);
			} else {
				b.layout(lay + "lambda, xi=(0,xi2,xi3), xi2^2 + xi3^2 = 1, theta").scalar("xi2").scalar("xi3");
				b.equation("xi2^2 + xi3^2 = 1", sum_of_squares_is_one("xi2", "xi3"));
				with_chi(b, cp, unit_pair("xi2", "xi3"));
			}
			b.scalar("theta").count(va ? 7 : vb ? 5 : 9);
			out.push_back(b.build([va, chi_of](const Assignment& a, EtaParameters<Q>& p) {
				p.lambda = vc(a, "lambda");
				p.xi = va ? vc(a, "xi") : V{Q(0), sc(a, "xi2"), sc(a, "xi3")};
				p.theta = sc(a, "theta");
				p.chi = chi_of(a);
			}));
		} else {
			for (auto sg : pm) {
				Builder b = mk(43, sg.tag);
				b.layout(lay + "lambda, xi=(0,0," + sg.tag + "1), theta").vector("lambda");
				with_chi(b, cp);
				b.scalar("theta").count(7);
				out.push_back(b.build([sg, chi_of](const Assignment& a, EtaParameters<Q>& p) {
					p.lambda = vc(a, "lambda");
					p.xi = along3(Q(sg.value));
					p.theta = sc(a, "theta");
					p.chi = chi_of(a);
				}));
			}
		}
		// phi row with lambda = L phi (35, 38, 41, 44).
		{
			const int row = va ? 35 : vb ? 38 : via ? 41 : 44;
			Builder b = mk(row);
			if (va || via) {
				b.layout(lay + "phi with |phi| = 1, lambda=L phi").vector("phi", Domain::unit);
				with_chi(b, cp);
			} else if (vb) {
				b.layout(lay + "phi=(0,phi2,phi3), phi2^2 + phi3^2 = 1, lambda=L phi").scalar("phi2").scalar("phi3");
				b.equation("phi2^2 + phi3^2 = 1", sum_of_squares_is_one("phi2", "phi3"));
				with_chi(b, cp, unit_pair("phi2", "phi3"));
			} else {
				b.layout(lay + "phi=(F,0,1), lambda=L phi").scalar("F");
				with_chi(b, cp);
			}
			b.scalar("L").count(va ? 4 : vb ? 2 : via ? 7 : 5);
			const int kind = va || via ? 0 : vb ? 1 : 2;
			out.push_back(b.build([kind, chi_of](const Assignment& a, EtaParameters<Q>& p) {
				if (kind == 0)
					p.phi = vc(a, "phi");
				else if (kind == 1)
					p.phi = {Q(0), sc(a, "phi2"), sc(a, "phi3")};
				else
					p.phi = {sc(a, "F"), Q(0), one};
				p.lambda = scale(sc(a, "L"), p.phi);
				p.chi = chi_of(a);
			}));
		}
	}
}

void add_groups_vii_viii(std::vector<CatalogEntry>& out)
{
	const auto C = EntryKind::canonical;
	for (const char* sub : {"VIIa", "VIIb", "VIIc"}) {
		const ChiPattern cp = pattern(sub);
		const std::string s = sub;
		const int row = s == "VIIa" ? 45 : s == "VIIb" ? 47 : 49;
		const int theta_count = s == "VIIa" ? 4 : s == "VIIb" ? 2 : 1;
		const std::string lay = cp.layout + ", sum chi_ij^2 = 1; ";
		auto chi_of = cp.make;
		for (auto sg : pm0) {
			Builder b(C, "VII", row, sg.tag, s);
			b.layout(lay + "theta=" + (sg.value ? std::string(sg.tag) + "1" : std::string("0")));
			with_chi(b, cp).count(theta_count);
			out.push_back(b.build([sg, chi_of](const Assignment& a, EtaParameters<Q>& p) {
				p.theta = Q(sg.value);
				p.chi = chi_of(a);
			}));
		}
		Builder b(C, "VII", row + 1, {}, s);
		const bool c_case = s == "VIIc";
		if (c_case)
			b.layout(lay + "phi=(0,phi2,phi3), v_param=1").scalar("phi2").scalar("phi3");
		else
			b.layout(lay + "phi, v_param=1").vector("phi");
		with_chi(b, cp).count(theta_count + 3 - (c_case ? 1 : 0));
		out.push_back(b.build([c_case, chi_of](const Assignment& a, EtaParameters<Q>& p) {
			p.phi = c_case ? V{Q(0), sc(a, "phi2"), sc(a, "phi3")} : vc(a, "phi");
			p.v_param = one;
			p.chi = chi_of(a);
		}));
	}
	for (const char* sub : {"VIIIa", "VIIIb"}) {
		const ChiPattern cp = pattern(sub);
		const std::string s = sub;
		Builder b(C, "VIII", 0, s == "VIIIa" ? "a" : "b", s);
		b.layout(cp.layout + ", sum chi_ij^2 = 1; phi=(0,0,1)");
		with_chi(b, cp);
		auto chi_of = cp.make;
		out.push_back(b.build([chi_of](const Assignment& a, EtaParameters<Q>& p) {
			p.phi = e3;
			p.chi = chi_of(a);
		}));
	}
}

std::vector<CatalogEntry> make_catalog()
{
	std::vector<CatalogEntry> out;
	add_families(out);
	std::vector<CatalogEntry> rows;
	add_group_i(rows);
	add_group_ii(rows);
	add_group_iii(rows);
	add_group_iv(rows);
	add_groups_v_vi(rows);
	add_groups_vii_viii(rows);
	// Unnumbered rows (VIII:a, VIII:b) come last.
	std::stable_sort(rows.begin(), rows.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
		const int rx = x.row ? x.row : 1000, ry = y.row ? y.row : 1000;
		return rx < ry;
	});
	for (auto& r : rows)
		out.push_back(std::move(r));
	return out;
}

} // namespace

int ParamSpec::dim() const
{
	switch (kind) {
	case ValueKind::scalar: return 1;
	case ValueKind::vector: return domain == Domain::unit ? 2 : 3;
	case ValueKind::matrix: return domain == Domain::any ? 9 : domain == Domain::traceless ? 8 : 5;
	}
	return 0;
}

int CatalogEntry::essential_count() const
{
	int n = 0;
	for (const auto& f : free)
		n += f.dim();
	for (const auto& c : constraints)
		if (c.equation)
			--n;
	return n;
}

EtaParameters<Quadratic> CatalogEntry::assemble(const Assignment& a) const
{
	std::set<std::string> known;
	for (const auto& f : free) {
		known.insert(f.name);
		auto it = a.find(f.name);
		if (it == a.end())
			throw ConstraintError(id + ": missing free parameter '" + f.name + "'");
		if (kind_of(it->second) != f.kind)
			throw ConstraintError(id + ": free parameter '" + f.name + "' must be a " + kind_name(f.kind));
		if (!domain_holds(f, it->second))
			throw ConstraintError(id + ": constraint violated: " + f.name + " " + to_string(f.domain));
	}
	for (const auto& [k, v] : a)
		if (!known.count(k))
			throw ConstraintError(id + ": unknown free parameter '" + k + "'");
	for (const auto& c : constraints)
		if (!c.holds(a))
			throw ConstraintError(id + ": constraint violated: " + c.text);
	EtaParameters<Quadratic> p;
	build(a, p);
	return p;
}

Assignment CatalogEntry::sample(Rng& rng, long bound) const
{
	for (int attempt = 0; attempt < 10000; ++attempt) {
		Assignment a;
		if (joint_sampler)
			joint_sampler(rng, bound, a);
		for (const auto& f : free)
			if (!a.count(f.name))
				sample_free(rng, bound, f, a);
		bool ok = true;
		for (const auto& f : free)
			ok = ok && domain_holds(f, a.at(f.name));
		for (const auto& c : constraints)
			ok = ok && c.holds(a);
		if (ok)
			return a;
	}
	throw std::logic_error(id + ": no admissible sample found");
}

std::string CatalogEntry::constraint_text() const
{
	std::ostringstream os;
	bool first = true;
	for (const auto& f : free)
		if (f.domain != Domain::any) {
			os << (first ? "" : "; ") << f.name << " " << to_string(f.domain);
			first = false;
		}
	for (const auto& c : constraints) {
		os << (first ? "" : "; ") << c.text;
		first = false;
	}
	return os.str();
}

const std::vector<CatalogEntry>& catalog()
{
	static const std::vector<CatalogEntry> c = make_catalog();
	return c;
}

std::vector<const CatalogEntry*> families()
{
	std::vector<const CatalogEntry*> r;
	for (const auto& e : catalog())
		if (e.kind == EntryKind::family)
			r.push_back(&e);
	return r;
}

std::vector<const CatalogEntry*> canonical_entries()
{
	std::vector<const CatalogEntry*> r;
	for (const auto& e : catalog())
		if (e.kind == EntryKind::canonical)
			r.push_back(&e);
	return r;
}

const CatalogEntry& find_entry(const std::string& id)
{
	for (const auto& e : catalog())
		if (e.id == id)
			return e;
	throw std::out_of_range("unknown catalog id '" + id + "'");
}

EtaParameters<Quadratic> family_params(const std::string& family_id, const Assignment& a)
{
	const auto& e = find_entry(family_id);
	if (e.kind != EntryKind::family)
		throw std::out_of_range("'" + family_id + "' is not a family id");
	return e.assemble(a);
}

EtaParameters<Quadratic> canonical_params(const std::string& canonical_id, const Assignment& a)
{
	const auto& e = find_entry(canonical_id);
	if (e.kind != EntryKind::canonical)
		throw std::out_of_range("'" + canonical_id + "' is not a canonical id");
	return e.assemble(a);
}

int printed_row_count()
{
	std::set<int> rows;
	for (const auto* e : canonical_entries())
		if (e->row)
			rows.insert(e->row);
	return static_cast<int>(rows.size());
}

int canonical_entry_count() { return static_cast<int>(canonical_entries().size()); }

std::string to_string(Domain d)
{
	switch (d) {
	case Domain::any: return "arbitrary";
	case Domain::nonzero: return "!= 0";
	case Domain::nonnegative: return ">= 0";
	case Domain::unit: return "has norm 1";
	case Domain::traceless: return "traceless";
	case Domain::sym_traceless: return "symmetric traceless";
	}
	return "?";
}

std::string value_to_string(const Value& v)
{
	return std::visit(
	    [](const auto& x) -> std::string {
		    using X = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<X, Q>)
			    return x.str();
		    else if constexpr (std::is_same_v<X, V>)
			    return "(" + x[0].str() + "," + x[1].str() + "," + x[2].str() + ")";
		    else {
			    std::string s = "[";
			    for (int i = 0; i < 3; ++i)
				    s += std::string(i ? "," : "") + "[" + x[i][0].str() + "," + x[i][1].str() + "," + x[i][2].str() + "]";
			    return s + "]";
		    }
	    },
	    v);
}

} // namespace plg
