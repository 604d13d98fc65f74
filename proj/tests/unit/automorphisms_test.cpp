#include "helpers.hpp"

#include "plg/automorphisms.hpp"
#include "plg/catalog.hpp"

using namespace plg;
using namespace plg::test;

namespace {

Automorphism<Q> random_letter(Rng& rng)
{
	switch (rng.uniform(0, 4)) {
	case 0: return Automorphism<Q>::boost(rng.vec(4));
	case 1: return Automorphism<Q>::space_translation(rng.vec(4));
	case 2: return Automorphism<Q>::time_translation(rng.rational(4));
	case 3: return Automorphism<Q>::rotation(cayley_rotation(rng.vec(4)));
	default: return Automorphism<Q>::scaling(rng.nonzero_rational(4), rng.nonzero_rational(4));
	}
}

EtaParameters<Q> sample_family(const std::string& id, Rng& rng)
{
	const auto& f = find_entry(id);
	return *rational_parameters(f.assemble(f.sample(rng, 8)));
}

} // namespace

TEST_CASE("actions with identity parameters are the identity")
{
	Rng rng = stream(40);
	for (int it = 0; it < 10; ++it) {
		const auto p = random_parameters(rng, 8);
		CHECK(act_boost(p, v3(0, 0, 0)) == p);
		CHECK(act_space_translation(p, v3(0, 0, 0)) == p);
		CHECK(act_time_translation(p, Q(0)) == p);
		CHECK(act_rotation(p, identity3<Q>()) == p);
		CHECK(act_scaling(p, Q(1), Q(1)) == p);
		CHECK(apply_word(p, AutomorphismWord<Q>{}) == p);
	}
}

TEST_CASE("actions: examples")
{
	EtaParameters<Q> b;
	b.beta = Q(1);
	CHECK(act_boost(b, v3(1, 0, 0)).gamma == v3(-1, 0, 0));
	CHECK(act_space_translation(b, v3(0, 0, 1)).phi == v3(0, 0, -1));

	EtaParameters<Q> x;
	x.xi = v3(0, 0, 1);
	const auto t = act_time_translation(x, Q(1));
	CHECK(t.chi[0][1] == Q(2));
	CHECK(t.chi[1][0] == Q(-2));

	EtaParameters<Q> a;
	a.alpha = v3(0, 0, 1);
	CHECK(act_rotation(a, cayley_rotation(v3(1, 0, 0))).alpha == v3(0, 1, 0));

	CHECK(act_scaling(x, Q(2), Q(1)).xi == Vec3<Q>{Q(0), Q(0), q(1, 4)});
	CHECK_THROWS_AS(act_scaling(x, Q(0), Q(1)), std::invalid_argument);
	CHECK_THROWS_AS(Automorphism<Q>::scaling(Q(1), Q(0)), std::invalid_argument);
}

TEST_CASE("actions: composition laws and invariants")
{
	Rng rng = stream(41);
	for (int it = 0; it < 20; ++it) {
		const auto p = random_parameters(rng, 8);
		const Q t1 = rng.rational(5), t2 = rng.rational(5);
		REQUIRE(act_time_translation(act_time_translation(p, t1), t2) == act_time_translation(p, t1 + t2));
		const Q a1 = rng.nonzero_rational(5), b1 = rng.nonzero_rational(5);
		const Q a2 = rng.nonzero_rational(5), b2 = rng.nonzero_rational(5);
		REQUIRE(act_scaling(act_scaling(p, a1, b1), a2, b2) == act_scaling(p, a1 * a2, b1 * b2));
		const auto r = act_rotation(p, cayley_rotation(rng.vec(5)));
		REQUIRE(r.normalized());
	}
	// n = 0 keeps rho fixed under space translations.
	for (const auto* f : families()) {
		const auto p = *rational_parameters(f->assemble(f->sample(rng, 8)));
		REQUIRE(act_space_translation(p, rng.vec(5)).rho == p.rho);
	}
}

TEST_CASE("actions preserve validity and beta = 0")
{
	Rng rng = stream(42);
	const auto fams = families();
	for (int it = 0; it < 20; ++it) {
		const auto* f = fams[std::size_t(rng.uniform(0, long(fams.size()) - 1))];
		const auto p = *rational_parameters(f->assemble(f->sample(rng, 6)));
		const auto x = random_letter(rng);
		const auto q = plg::apply(p, x);
		CAPTURE(f->id);
		CAPTURE(int(x.kind));
		REQUIRE_FALSE(check_dual_jacobi(dual_structure_constants(q)));
		REQUIRE(is_zero(check_cocycle(q, sample_group_element(rng, 6), sample_group_element(rng, 6))));
		if (p.beta.is_zero())
			REQUIRE(q.beta.is_zero());
	}
}

TEST_CASE("verify_equivalence: witnesses and non-equivalence")
{
	Rng rng = stream(43);
	const auto p = random_parameters(rng, 8);
	CHECK(verify_equivalence(p, p, AutomorphismWord<Q>{}));

	// Family II with alpha = (0,-2,0) is carried to table II row 15 by rotating
	// alpha onto e3 and rescaling W|alpha|^2 and |alpha| to 1.
	const Q W(3), F(1), L(2), v(1), B(1), al(2);
	const auto generic = *rational_parameters(family_params("II", {{"alpha", Vec3<Quadratic>{0, -2, 0}},
	                                                               {"F", Quadratic(F)},
	                                                               {"L", Quadratic(L)},
	                                                               {"v", Quadratic(v)},
	                                                               {"W", Quadratic(W)},
	                                                               {"B", Quadratic(B)}}));
	const Q b = al, a = W * al * al * al;
	const auto row = *rational_parameters(canonical_params("II:15", {{"F", Quadratic(F * al / (a * b))},
	                                                                 {"L", Quadratic(L * al / (a * a))},
	                                                                 {"v", Quadratic(v / (a * b))},
	                                                                 {"B", Quadratic(B * al * al * b / (a * a))}}));
	const AutomorphismWord<Q> w{Automorphism<Q>::rotation(cayley_rotation(v3(1, 0, 0))),
	                            Automorphism<Q>::scaling(a, b)};
	CHECK(verify_equivalence(generic, row, w));

	const auto one = sample_family("I", rng);
	const auto eighteen = sample_family("XVIII", rng);
	for (int it = 0; it < 20; ++it) {
		AutomorphismWord<Q> word;
		for (int k = int(rng.uniform(1, 4)); k > 0; --k)
			word.push_back(random_letter(rng));
		CHECK_FALSE(verify_equivalence(one, eighteen, word));
		CHECK(apply_word(eighteen, word).beta == Q(0));
	}
}
