#include "helpers.hpp"

using namespace plg;
using namespace plg::test;
using namespace plg::basis;

namespace {

AlgebraVector<Q> e(int k) { return basis_vector<Q>(k); }

GroupElement<Q> random_element(Rng& rng) { return sample_group_element(rng, 6); }

AlgebraVector<Q> random_vector(Rng& rng)
{
	AlgebraVector<Q> x;
	for (auto& c : x)
		c = rng.rational(5);
	return x;
}

} // namespace

TEST_CASE("compose and inverse: examples")
{
	const auto id = identity_element<Q>();
	const auto g1 = element(1, v3(1, 0, 0), v3(0, 1, 0));
	const auto g2 = element(2, v3(0, 0, 1), v3(0, 0, 0));
	CHECK(compose(g1, g2) == element(3, v3(1, 2, 1), v3(0, 1, 0)));
	CHECK(compose(id, g1) == g1);
	CHECK(compose(g1, id) == g1);
	CHECK(inverse(id) == id);
	CHECK(inverse(element(1, v3(1, 0, 0), v3(0, 0, 1))) == element(-1, v3(-1, 0, 1), v3(0, 0, -1)));
}

TEST_CASE("group axioms on random elements")
{
	Rng rng = stream(10);
	const auto id = identity_element<Q>();
	for (int it = 0; it < 100; ++it) {
		const auto g1 = random_element(rng), g2 = random_element(rng), g3 = random_element(rng);
		REQUIRE(compose(compose(g1, g2), g3) == compose(g1, compose(g2, g3)));
		REQUIRE(compose(g1, inverse(g1)) == id);
		REQUIRE(inverse(inverse(g1)) == g1);
	}
}

TEST_CASE("algebra brackets: examples, antisymmetry and Jacobi")
{
	CHECK(algebra_bracket(e(J + 0), e(J + 1)) == e(J + 2));
	CHECK(algebra_bracket(e(K + 1), e(H)) == e(P + 1));
	CHECK(algebra_bracket(e(H), e(P + 0)) == AlgebraVector<Q>{});
	const auto sc = galilei_structure_constants<Q>();
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			for (int k = 0; k < 10; ++k)
				REQUIRE(sc.c[i][j][k] == -sc.c[j][i][k]);
	int triples = 0;
	for (int i = 0; i < 10; ++i)
		for (int j = i + 1; j < 10; ++j)
			for (int k = j + 1; k < 10; ++k, ++triples) {
				AlgebraVector<Q> s{};
				for (auto [x, y, z] : {std::array{i, j, k}, std::array{j, k, i}, std::array{k, i, j}}) {
					const auto t = algebra_bracket(e(x), algebra_bracket(e(y), e(z)));
					for (int m = 0; m < 10; ++m)
						s[m] += t[m];
				}
				REQUIRE(all_zero(s));
			}
	CHECK(triples == 120);
}

TEST_CASE("adjoint: identity, rotations and boosts")
{
	CHECK(adjoint(identity_element<Q>()) == identity10<Q>());

	const Mat3<Q> R = cayley_rotation(v3(1, 2, -1));
	const auto Ad = adjoint(element(0, v3(0, 0, 0), v3(0, 0, 0), R));
	CHECK(plg::apply(Ad, e(H)) == e(H));
	for (int block : {P, K, J})
		for (int j = 0; j < 3; ++j) {
			AlgebraVector<Q> expect{};
			for (int i = 0; i < 3; ++i)
				expect[block + i] = R[i][j];
			CHECK(plg::apply(Ad, e(block + j)) == expect);
		}

	// Boost: H picks up a multiple of v.P; P and K are fixed.
	const Vec3<Q> v = v3(2, -1, 3);
	const auto B = adjoint(element(0, v3(0, 0, 0), v));
	const auto h = plg::apply(B, e(H));
	CHECK(h[H] == Q(1));
	const Q c = h[P] / v[0];
	CHECK_FALSE(c.is_zero());
	for (int i = 0; i < 3; ++i)
		CHECK(h[P + i] == c * v[i]);
	for (int k = K; k < J; ++k)
		CHECK(h[k] == Q(0));
	for (int i = 0; i < 3; ++i) {
		CHECK(plg::apply(B, e(P + i)) == e(P + i));
		CHECK(plg::apply(B, e(K + i)) == e(K + i));
	}
}

TEST_CASE("adjoint: homomorphism and bracket preservation")
{
	Rng rng = stream(11);
	for (int it = 0; it < 100; ++it) {
		const auto g1 = random_element(rng), g2 = random_element(rng);
		const auto A1 = adjoint(g1);
		REQUIRE(adjoint(compose(g1, g2)) == matmul(A1, adjoint(g2)));
		const auto x = random_vector(rng), y = random_vector(rng);
		REQUIRE(plg::apply(A1, algebra_bracket(x, y)) == algebra_bracket(plg::apply(A1, x), plg::apply(A1, y)));
	}
}

TEST_CASE("right-invariant derivatives: examples")
{
	auto f_t = [](const auto& g) { return g.t; };
	auto f_a1 = [](const auto& g) { return g.a[0]; };
	// H generates exp(sH) = (-s, 0, 0, I), so X_H t = -1.
	CHECK(right_invariant_derivative(e(H), f_t, element(3, v3(1, 2, 3), v3(0, 1, 0))) == Q(-1));
	CHECK(right_invariant_derivative(e(K + 0), f_a1, element(2, v3(0, 0, 0), v3(0, 0, 0))) == Q(2));
	CHECK(right_invariant_derivative(e(J + 2), f_a1, element(0, v3(0, 5, 0), v3(0, 0, 0))) == Q(5));
}

// The coefficient form of the fields: H = -d/dt, P_i = d/da_i,
// K_i = t d/da_i + d/dv_i, J_i = -e_ijk (a_j d/da_k + v_j d/dv_k + R_jl d/dR_kl).
TEST_CASE("right-invariant derivatives match the coefficient form on every coordinate")
{
	Rng rng = stream(12);
	for (int it = 0; it < 20; ++it) {
		const auto g = random_element(rng);
		for (int X = 0; X < 10; ++X) {
			std::array<Q, 16> expect;
			expect.fill(Q(0));
			if (X == H) {
				expect[0] = Q(-1);
			} else if (X < K) {
				expect[1 + X - P] = Q(1);
			} else if (X < J) {
				expect[1 + X - K] = g.t;
				expect[4 + X - K] = Q(1);
			} else {
				const int i = X - J;
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k) {
						const Q s(-eps(i, j, k));
						if (s.is_zero())
							continue;
						expect[1 + k] += s * g.a[j];
						expect[4 + k] += s * g.v[j];
						for (int l = 0; l < 3; ++l)
							expect[7 + 3 * k + l] += s * g.R[j][l];
					}
			}
			for (int c = 0; c < 16; ++c) {
				auto f = [c](const auto& h) { return coordinates(h)[c]; };
				REQUIRE(right_invariant_derivative(e(X), f, g) == expect[c]);
			}
		}
	}
}
