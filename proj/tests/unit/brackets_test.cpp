#include "helpers.hpp"

#include "plg/brackets.hpp"
#include "plg/catalog.hpp"
#include "plg/group.hpp"

using namespace plg;
using namespace plg::test;

namespace {

constexpr int t_ = 0, a1 = 1, v1 = 4, R11 = 7;

EtaParameters<Q> family_one()
{
	EtaParameters<Q> p;
	p.alpha = v3(0, 0, 1);
	p.beta = Q(1);
	return p;
}

Observable coord(int i) { return Observable::coordinate(i); }

} // namespace

TEST_CASE("bracket oracle: examples")
{
	Rng rng = stream(60);
	const auto p = random_parameters(rng, 8);
	const auto g = sample_group_element(rng, 8);
	for (int i = 0; i < coordinate_count; ++i)
		CHECK(bracket_oracle(coord(i), coord(i), p, g).is_zero());
	const auto f = Observable::parse("t*a1 + v2^2");
	CHECK(bracket_oracle(f, f, p, g).is_zero());
	CHECK(is_antisymmetric(bracket_table_oracle(p, g)));

	const EtaParameters<Q> zero;
	const auto z = bracket_table_oracle(zero, g);
	for (int i = 0; i < coordinate_count; ++i)
		for (int j = 0; j < coordinate_count; ++j)
			REQUIRE(z(i, j).is_zero());

	const auto one = family_one();
	const auto h = element(0, v3(0, 0, 0), v3(1, 0, 0));
	CHECK(bracket_oracle(coord(t_), coord(v1), one, h) == Q(1));
	CHECK(bracket_oracle(coord(t_), coord(v1 + 1), one, h) == Q(1));
	CHECK(bracket_oracle(coord(t_), coord(v1 + 2), one, h) == Q(0));
}

TEST_CASE("closed-form table: examples")
{
	Rng rng = stream(61);
	for (int it = 0; it < 10; ++it) {
		const auto p = random_parameters(rng, 8, false);
		const auto g = sample_group_element(rng, 8);
		const auto b = bracket_table_closed(p, g);
		CHECK(b(R11, R11 + 4).is_zero());
		CHECK(is_antisymmetric(b));
		const auto e = bracket_table_closed(p, identity_element<Q>());
		CHECK(e(v1, v1 + 1).is_zero());
	}
	const auto one = family_one();
	const auto h = element(0, v3(0, 0, 0), v3(1, 0, 0));
	const auto b = bracket_table_closed(one, h);
	CHECK(b(t_, v1) == Q(1));
	CHECK(b(t_, v1 + 1) == Q(1));
	CHECK(b(t_, v1 + 2) == Q(0));
	CHECK(b(t_, v1) == bracket_oracle(coord(t_), coord(v1), one, h));

	EtaParameters<Q> withn = one;
	withn.n = v3(0, 0, 1);
	CHECK_THROWS_AS(bracket_table_closed(withn, h), ClosedFormInapplicable);
}

TEST_CASE("closed-form table agrees with the oracle; printed {t,a} does not")
{
	Rng rng = stream(62);
	int printed_mismatch = 0;
	for (int it = 0; it < 40; ++it) {
		const auto p = random_parameters(rng, 8, false);
		const auto g = sample_group_element(rng, 8);
		const auto oracle = bracket_table_oracle(p, g);
		const auto bad = compare_tables(bracket_table_closed(p, g), oracle);
		CAPTURE(it);
		REQUIRE(bad.empty());
		const auto printed = compare_tables(bracket_table_closed(p, g, Transcription::printed), oracle);
		for (const auto& m : printed)
			REQUIRE((m.x == t_ && m.y >= a1 && m.y < v1));
		printed_mismatch += !printed.empty();
	}
	CHECK(printed_mismatch > 30);
}

TEST_CASE("bracket oracle: Leibniz rule")
{
	Rng rng = stream(63);
	const auto f = Observable::parse("t*a1 + 2*R12");
	const auto h = Observable::parse("v3^2 - a2");
	const auto k = Observable::parse("R33*t + v1");
	for (int it = 0; it < 10; ++it) {
		const auto p = random_parameters(rng, 8);
		const auto g = sample_group_element(rng, 8);
		REQUIRE(leibniz_residual(p, g, f, h, k).is_zero());
	}
}

TEST_CASE("bracket Jacobi")
{
	Rng rng = stream(64);
	const auto one = family_one();
	for (int it = 0; it < 20; ++it) {
		const auto g = sample_group_element(rng, 8);
		const BracketJacobi<Q> jac(one, g);
		for (int a = 0; a < 3; ++a)
			for (int b = 0; b < 3; ++b)
				REQUIRE(jac(t_, v1 + a, v1 + b).is_zero());
		const int x = int(rng.uniform(0, 15)), y = int(rng.uniform(0, 15));
		REQUIRE(jac(x, x, y).is_zero());
	}

	// Polynomial observables through nested duals agree with the coordinate route.
	const auto g = sample_group_element(rng, 6);
	const auto f = Observable::parse("t*v1");
	CHECK(check_bracket_jacobi(one, g, f, coord(a1), coord(R11)).is_zero());
	CHECK(check_bracket_jacobi(one, g, coord(t_), coord(a1), coord(v1)) ==
	      BracketJacobi<Q>(one, g)(t_, a1, v1));

	EtaParameters<Q> bad = one;
	bad.xi = v3(0, 0, 1);
	bool nonzero = false;
	for (int it = 0; it < 5 && !nonzero; ++it) {
		const BracketJacobi<Q> jac(bad, sample_group_element(rng, 8));
		for (int x = 0; x < coordinate_count && !nonzero; ++x)
			for (int y = x + 1; y < coordinate_count && !nonzero; ++y)
				for (int z = y + 1; z < coordinate_count && !nonzero; ++z)
					nonzero = !jac(x, y, z).is_zero();
	}
	CHECK(nonzero);

	// Every catalog entry with rational parameters, random triples.
	for (const auto& e : catalog()) {
		const auto p = rational_parameters(e.assemble(e.sample(rng, 6)));
		if (!p)
			continue;
		CAPTURE(e.id);
		const BracketJacobi<Q> jac(*p, sample_group_element(rng, 6));
		for (int it = 0; it < 10; ++it)
			REQUIRE(jac(int(rng.uniform(0, 15)), int(rng.uniform(0, 15)), int(rng.uniform(0, 15))).is_zero());
	}
}
