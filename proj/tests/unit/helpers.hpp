#pragma once

#include "plg/algebra.hpp"
#include "plg/eta.hpp"
#include "plg/params.hpp"
#include "plg/rng.hpp"

#include <doctest.h>

namespace plg::test {

using Q = Rational;

inline Q q(long n, long d = 1) { return Q(n, d); }

inline Vec3<Q> v3(long x, long y, long z) { return {Q(x), Q(y), Q(z)}; }

inline GroupElement<Q> element(long t, Vec3<Q> a, Vec3<Q> v, Mat3<Q> R = identity3<Q>())
{
	return GroupElement<Q>{Q(t), a, v, R};
}

// Independent random stream per test case.
inline Rng stream(std::uint64_t test_id) { return Rng(20261016).split(test_id); }

} // namespace plg::test
