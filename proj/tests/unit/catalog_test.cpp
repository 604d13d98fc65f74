#include "helpers.hpp"

#include "plg/bialgebra.hpp"
#include "plg/catalog.hpp"
#include "plg/group.hpp"

#include <set>

using namespace plg;
using namespace plg::test;

namespace {

EtaParameters<Q> rational(const EtaParameters<Quadratic>& p)
{
	auto r = rational_parameters(p);
	REQUIRE(r);
	return *r;
}

Value qv(long x, long y, long z) { return Vec3<Quadratic>{Quadratic(x), Quadratic(y), Quadratic(z)}; }

} // namespace

TEST_CASE("family_params: examples")
{
	const auto one = rational(family_params("I", {{"alpha", qv(0, 0, 1)}, {"beta", Quadratic(1)}}));
	EtaParameters<Q> want;
	want.alpha = v3(0, 0, 1);
	want.beta = Q(1);
	CHECK(one == want);

	const auto two = rational(family_params(
	    "II", {{"alpha", qv(0, 0, 1)}, {"W", Quadratic(1)}, {"v", Quadratic(0)}, {"F", Quadratic(0)},
	           {"L", Quadratic(0)}, {"B", Quadratic(0)}}));
	Mat3<Q> om{};
	om[0][0] = om[1][1] = Q(1);
	CHECK(two.omega == om);

	CHECK_THROWS_AS(family_params("I", {{"alpha", qv(0, 0, 1)}, {"beta", Quadratic(0)}}), ConstraintError);
	CHECK_THROWS_AS(family_params("I", {{"alpha", qv(0, 0, 1)}}), ConstraintError);
	CHECK_THROWS_AS(family_params("I", {{"alpha", qv(0, 0, 1)}, {"beta", Quadratic(1)}, {"zeta", Quadratic(1)}}),
	                ConstraintError);
	CHECK_THROWS_AS(find_entry("XIX"), std::out_of_range);
}

TEST_CASE("canonical_params: examples")
{
	EtaParameters<Q> five;
	five.alpha = v3(0, 0, 1);
	CHECK(rational(canonical_params("I:5", {})) == five);

	const auto r15 = rational(canonical_params(
	    "II:15", {{"F", Quadratic(2)}, {"L", Quadratic(3)}, {"v", Quadratic(5)}, {"B", Quadratic(7)}}));
	CHECK(r15.alpha == v3(0, 0, 1));
	// chi_12 carries C = 2v through the antisymmetric part; omega = W diag(1,1,0) with W = 1.
	CHECK(r15.chi[0][1] - r15.chi[1][0] == Q(2) * Q(2 * 5));
	CHECK(r15.omega[0][0] == Q(1));
	CHECK(r15.omega[2][2] == Q(0));

	const auto& e30 = find_entry("III:30");
	Rng rng = stream(50);
	for (int it = 0; it < 5; ++it) {
		const auto a = e30.sample(rng, 8);
		REQUIRE_NOTHROW(e30.assemble(a));
	}
	// 2B^2 + 6C^2 = 3 with C = 0 would need B^2 = 3/2; any violation is rejected.
	CHECK_THROWS_AS(canonical_params("III:30", {{"B", Quadratic(1)}, {"C", Quadratic(1)}, {"theta", Quadratic(1)}}),
	                ConstraintError);
	CHECK_THROWS_AS(find_entry("II:99"), std::out_of_range);
}

TEST_CASE("catalog: counts and shape")
{
	CHECK(families().size() == 18);
	CHECK(printed_row_count() == 50);
	CHECK(canonical_entry_count() == 69);
	CHECK(canonical_entries().size() == 69);

	std::set<int> rows;
	std::set<std::string> ids;
	for (const auto* e : canonical_entries()) {
		if (e->row)
			rows.insert(e->row);
		CHECK(ids.insert(e->id).second);
		if (e->printed_count)
			CHECK_MESSAGE(e->essential_count() == *e->printed_count, e->id);
	}
	CHECK(rows.size() == 50);
	CHECK(*rows.begin() == 1);
	CHECK(*rows.rbegin() == 50);
	CHECK(ids.count("VIII:a") == 1);
	CHECK(ids.count("VIII:b") == 1);

	Rng rng = stream(51);
	for (const auto& e : catalog())
		for (int it = 0; it < 3; ++it) {
			const auto p = e.assemble(e.sample(rng, 8));
			CHECK_MESSAGE(all_zero(p.n), e.id);
		}
}

TEST_CASE("catalog: every entry passes the algebraic checks")
{
	Rng rng = stream(52);
	for (const auto& e : catalog()) {
		CAPTURE(e.id);
		const auto p = e.assemble(e.sample(rng, 6));
		if (auto r = rational_parameters(p)) {
			REQUIRE_FALSE(check_dual_jacobi(dual_structure_constants(*r)));
			REQUIRE_FALSE(check_cojacobi(cobracket_closed(*r)));
		} else {
			REQUIRE_FALSE(check_dual_jacobi(dual_structure_constants(p)));
			REQUIRE_FALSE(check_cojacobi(cobracket_closed(p)));
		}
	}
}

TEST_CASE("r_matrix: examples")
{
	using namespace basis;
	EtaParameters<Q> zero;
	CHECK(r_matrix(zero) == zero10<Q>());

	EtaParameters<Q> g;
	g.gamma = v3(0, 0, 1);
	const auto r = r_matrix(g);
	CHECK(r[H][K + 2] == Q(1));
	CHECK(r[K + 2][H] == Q(-1));
	int nonzero = 0;
	for (const auto& row : r)
		for (const auto& x : row)
			nonzero += !x.is_zero();
	CHECK(nonzero == 2);

	EtaParameters<Q> one;
	one.alpha = v3(0, 0, 1);
	one.beta = Q(1);
	CHECK_THROWS_AS(r_matrix(one), NotCoboundary);
	EtaParameters<Q> th;
	th.theta = Q(1);
	CHECK_THROWS_AS(r_matrix(th), NotCoboundary);
}

TEST_CASE("check_coboundary: identity, family XVIII and the sign convention")
{
	Rng rng = stream(53);
	const auto& e = find_entry("XVIII");
	const auto p = rational(e.assemble(e.sample(rng, 8)));
	CHECK(is_zero(check_coboundary(p, identity_element<Q>())));
	int flipped_nonzero = 0;
	for (int it = 0; it < 100; ++it) {
		const auto g = sample_group_element(rng, 8);
		REQUIRE(is_zero(check_coboundary(p, g)));
		flipped_nonzero += !is_zero(check_coboundary(p, g, -1));
	}
	CHECK(flipped_nonzero > 90);

	// Every coboundary-eligible canonical entry reconstructs.
	for (const auto* c : canonical_entries()) {
		const auto q = c->assemble(c->sample(rng, 6));
		if (!q.beta.is_zero() || !q.v_param.is_zero() || !q.theta.is_zero())
			continue;
		CAPTURE(c->id);
		for (int it = 0; it < 5; ++it) {
			const auto g = sample_group_element(rng, 6);
			if (auto r = rational_parameters(q))
				REQUIRE(is_zero(check_coboundary(*r, g)));
			else
				REQUIRE(is_zero(check_coboundary(q, lift<Quadratic>(g))));
		}
	}
}
