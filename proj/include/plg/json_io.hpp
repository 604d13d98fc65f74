#pragma once

// JSON forms of the value types. Scalars are strings: "p/q" (just "p" for
// integers) or "p/q+r/s*sqrt(d)" for quadratic irrationals. Readers reject
// unknown keys and malformed scalars with JsonFormatError.

#include "plg/automorphisms.hpp"
#include "plg/bialgebra.hpp"
#include "plg/brackets.hpp"
#include "plg/catalog.hpp"
#include "plg/group.hpp"
#include "plg/observable.hpp"
#include "plg/params.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace plg {

using Json = nlohmann::ordered_json;

struct JsonFormatError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

template <class T>
Json to_json(const T& x)
{
	return to_string(x);
}

template <class T>
Json to_json(const Vec3<T>& x)
{
	return Json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])});
}

template <class T>
Json to_json(const Mat3<T>& m)
{
	return Json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])});
}

Quadratic scalar_from_json(const Json& j);
Vec3<Quadratic> vector_from_json(const Json& j);
Mat3<Quadratic> matrix_from_json(const Json& j);

template <class T>
Json to_json(const EtaParameters<T>& p)
{
	return Json{{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)},       {"gamma", to_json(p.gamma)},
	            {"phi", to_json(p.phi)},     {"lambda", to_json(p.lambda)},   {"v_param", to_json(p.v_param)},
	            {"xi", to_json(p.xi)},       {"theta", to_json(p.theta)},     {"rho", to_json(p.rho)},
	            {"sigma", to_json(p.sigma)}, {"chi", to_json(p.chi)},         {"omega", to_json(p.omega)},
	            {"n", to_json(p.n)}};
}

// Missing fields are zero. sigma and chi must be traceless.
EtaParameters<Quadratic> params_from_json(const Json& j);

template <class T>
Json to_json(const GroupElement<T>& g)
{
	return Json{{"t", to_json(g.t)}, {"a", to_json(g.a)}, {"v", to_json(g.v)}, {"R", to_json(g.R)}};
}

GroupElement<Quadratic> group_from_json(const Json& j);

// [{"kind": "boost", "v": [...]}, {"kind": "space_translation", "a": [...]},
//  {"kind": "time_translation", "t": "..."}, {"kind": "rotation", "R": [[...]]},
//  {"kind": "scaling", "a": "...", "b": "..."}]
template <class T>
Json to_json(const AutomorphismWord<T>& w)
{
	Json out = Json::array();
	for (const auto& x : w) {
		switch (x.kind) {
		case AutomorphismKind::boost: out.push_back({{"kind", "boost"}, {"v", to_json(x.vec)}}); break;
		case AutomorphismKind::space_translation:
			out.push_back({{"kind", "space_translation"}, {"a", to_json(x.vec)}});
			break;
		case AutomorphismKind::time_translation: out.push_back({{"kind", "time_translation"}, {"t", to_json(x.t)}}); break;
		case AutomorphismKind::rotation: out.push_back({{"kind", "rotation"}, {"R", to_json(x.R)}}); break;
		case AutomorphismKind::scaling:
			out.push_back({{"kind", "scaling"}, {"a", to_json(x.a)}, {"b", to_json(x.b)}});
			break;
		}
	}
	return out;
}

AutomorphismWord<Quadratic> word_from_json(const Json& j);

// Nonzero entries [X~_i, X~_j] = c X~_k with i < j.
template <class T>
Json dual_constants_to_json(const StructureConstants<T>& s)
{
	const auto& names = basis::names();
	Json out = Json::array();
	for (int i = 0; i < 10; ++i)
		for (int j = i + 1; j < 10; ++j)
			for (int k = 0; k < 10; ++k)
				if (!is_zero(s.c[i][j][k]))
					out.push_back({{"i", i},
					               {"j", j},
					               {"k", k},
					               {"value", to_json(s.c[i][j][k])},
					               {"bracket", "[" + names[i] + "~," + names[j] + "~] -> " + names[k] + "~"}});
	return out;
}

// Keys "x,y" for x before y in coordinate order; the table is antisymmetric.
template <class T>
Json to_json(const BracketTable<T>& b)
{
	const auto& names = Observable::coordinate_names();
	Json out = Json::object();
	for (int x = 0; x < coordinate_count; ++x)
		for (int y = x + 1; y < coordinate_count; ++y)
			out[names[x] + "," + names[y]] = to_json(b(x, y));
	return out;
}

template <class T>
Json to_json(const GalileiBivector<T>& b)
{
	return Json{{"Psi", to_json(b.Psi)},         {"Phi", to_json(b.Phi)},     {"Gamma", to_json(b.Gamma)},
	            {"Lambda", to_json(b.Lambda)},   {"Upsilon", to_json(b.Upsilon)}, {"Sigma", to_json(b.Sigma)},
	            {"Xi", to_json(b.Xi)},           {"Omega", to_json(b.Omega)}, {"Pi", to_json(b.Pi)}};
}

// Block components plus the nonzero coefficients c of c X_a^X_b (a < b).
template <class T>
Json r_matrix_to_json(const Mat10<T>& r)
{
	const auto& names = basis::names();
	Json wedges = Json::array();
	for (int a = 0; a < 10; ++a)
		for (int b = a + 1; b < 10; ++b)
			if (!is_zero(r[a][b]))
				wedges.push_back({{"wedge", names[a] + "^" + names[b]}, {"value", to_json(r[a][b])}});
	return Json{{"components", to_json(from_matrix(r))}, {"wedges", wedges}};
}

Json to_json(const CatalogEntry& e);
// {"printed_rows": 50, "canonical_entries": 69, "families": [...], "entries": [...], "note": ...}
Json catalog_to_json();

// "1/2", "1,0,0" (vector) or nine comma-separated entries (row-major matrix).
Value parse_value(ValueKind kind, const std::string& text);
Value value_from_json(ValueKind kind, const Json& j);
Json to_json(const Value& v);

} // namespace plg
