#pragma once

// Deterministic random streams. A stream is a pure function of its key path
// (master seed, then any number of split indices), so results never depend on
// the order or thread in which substreams are consumed.

#include "plg/linalg.hpp"
#include "plg/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace plg {

class Rng {
public:
	explicit Rng(std::uint64_t seed) : key_{seed} { reseed(); }

	Rng split(std::uint64_t index) const
	{
		Rng child(*this, index);
		return child;
	}

	std::uint64_t seed() const { return key_.front(); }
	std::uint64_t next_u64() { return engine_(); }
	// Uniform integer in [lo, hi].
	long uniform(long lo, long hi);

	// num in [-bound, bound], den in [1, bound].
	Rational rational(long bound);
	Rational nonzero_rational(long bound);
	Vec3<Rational> vec(long bound);
	Vec3<Rational> nonzero_vec(long bound);
	Mat3<Rational> mat(long bound);
	Mat3<Rational> traceless_mat(long bound);

private:
	Rng(const Rng& parent, std::uint64_t index) : key_(parent.key_)
	{
		key_.push_back(index);
		reseed();
	}
	void reseed();

	std::vector<std::uint64_t> key_;
	std::mt19937_64 engine_;
};

} // namespace plg
