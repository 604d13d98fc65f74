#include "plg/params.hpp"

#include "plg/rng.hpp"

namespace plg {

EtaParameters<Rational> random_parameters(Rng& rng, long bound, bool with_n)
{
	EtaParameters<Rational> p;
	p.for_each_scalar([&](const std::string&, Rational& x) { x = rng.rational(bound); });
	p.sigma[2][2] = -(p.sigma[0][0] + p.sigma[1][1]);
	p.chi[2][2] = -(p.chi[0][0] + p.chi[1][1]);
	if (!with_n)
		p.n = zero3<Rational>();
	return p;
}

std::optional<EtaParameters<Rational>> rational_parameters(const EtaParameters<Quadratic>& p)
{
	EtaParameters<Rational> r;
	std::vector<Rational> flat;
	bool ok = true;
	p.for_each_scalar([&](const std::string&, const Quadratic& x) {
		if (auto q = x.to_rational())
			flat.push_back(*q);
		else
			ok = false;
	});
	if (!ok)
		return std::nullopt;
	std::size_t i = 0;
	r.for_each_scalar([&](const std::string&, Rational& x) { x = flat[i++]; });
	return r;
}

} // namespace plg
