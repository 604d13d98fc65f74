#include "plg/rng.hpp"

#include <stdexcept>

namespace plg {

void Rng::reseed()
{
	std::vector<std::uint32_t> words;
	words.reserve(2 * key_.size() + 1);
	words.push_back(static_cast<std::uint32_t>(key_.size()));
	for (auto k : key_) {
		words.push_back(static_cast<std::uint32_t>(k));
		words.push_back(static_cast<std::uint32_t>(k >> 32));
	}
	std::seed_seq seq(words.begin(), words.end());
	engine_.seed(seq);
}

long Rng::uniform(long lo, long hi)
{
	if (lo > hi)
		throw std::invalid_argument("empty range");
	std::uniform_int_distribution<long> dist(lo, hi);
	return dist(engine_);
}

Rational Rng::rational(long bound)
{
	if (bound < 1)
		throw std::invalid_argument("bound must be >= 1");
	long num = uniform(-bound, bound);
	long den = uniform(1, bound);
	return Rational(num, den);
}

Rational Rng::nonzero_rational(long bound)
{
	for (;;) {
		Rational r = rational(bound);
		if (!r.is_zero())
			return r;
	}
}

Vec3<Rational> Rng::vec(long bound)
{
	Vec3<Rational> x;
	for (auto& c : x)
		c = rational(bound);
	return x;
}

Vec3<Rational> Rng::nonzero_vec(long bound)
{
	for (;;) {
		auto x = vec(bound);
		if (!all_zero(x))
			return x;
	}
}

Mat3<Rational> Rng::mat(long bound)
{
	Mat3<Rational> m;
	for (auto& row : m)
		row = vec(bound);
	return m;
}

Mat3<Rational> Rng::traceless_mat(long bound)
{
	auto m = mat(bound);
	m[2][2] = -(m[0][0] + m[1][1]);
	return m;
}

} // namespace plg
