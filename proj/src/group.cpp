#include "plg/group.hpp"

namespace plg {

namespace basis {

const std::array<std::string, 10>& names()
{
	static const std::array<std::string, 10> n = {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"};
	return n;
}

int index_of(const std::string& name)
{
	const auto& n = names();
	for (int i = 0; i < dim; ++i)
		if (n[i] == name)
			return i;
	throw std::invalid_argument("unknown basis element '" + name + "'");
}

} // namespace basis

GroupElement<Rational> sample_group_element(Rng& rng, long bound)
{
	if (bound < 1)
		throw std::invalid_argument("bound must be >= 1");
	GroupElement<Rational> g;
	g.t = rng.rational(bound);
	g.a = rng.vec(bound);
	g.v = rng.vec(bound);
	g.R = cayley_rotation(rng.vec(bound));
	return g;
}

} // namespace plg
