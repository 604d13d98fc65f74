#include "plg/json_io.hpp"

#include <set>
#include <sstream>

namespace plg {

Quadratic scalar_from_json(const Json& j)
{
	try {
		if (j.is_string())
			return Quadratic::parse(j.get<std::string>());
		if (j.is_number_integer())
			return Quadratic(j.get<long>());
	} catch (const std::exception& e) {
		throw JsonFormatError("malformed scalar " + j.dump() + ": " + e.what());
	}
	throw JsonFormatError("scalar must be a \"p/q\" string or an integer, got " + j.dump());
}

Vec3<Quadratic> vector_from_json(const Json& j)
{
	if (!j.is_array() || j.size() != 3)
		throw JsonFormatError("expected a 3-vector, got " + j.dump());
	return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2])};
}

Mat3<Quadratic> matrix_from_json(const Json& j)
{
	if (!j.is_array() || j.size() != 3)
		throw JsonFormatError("expected a 3x3 matrix, got " + j.dump());
	return {vector_from_json(j[0]), vector_from_json(j[1]), vector_from_json(j[2])};
}

namespace {

void require_object(const Json& j, const std::set<std::string>& allowed, const std::string& what)
{
	if (!j.is_object())
		throw JsonFormatError(what + " must be a JSON object");
	for (const auto& [k, v] : j.items())
		if (!allowed.count(k))
			throw JsonFormatError("unknown field '" + k + "' in " + what);
}

} // namespace

EtaParameters<Quadratic> params_from_json(const Json& j)
{
	require_object(j,
	               {"alpha", "beta", "gamma", "phi", "lambda", "v_param", "xi", "theta", "rho", "sigma", "chi", "omega", "n"},
	               "parameters");
	EtaParameters<Quadratic> p;
	auto vec = [&](const char* k, Vec3<Quadratic>& x) {
		if (j.contains(k))
			x = vector_from_json(j[k]);
	};
	auto sca = [&](const char* k, Quadratic& x) {
		if (j.contains(k))
			x = scalar_from_json(j[k]);
	};
	auto mat = [&](const char* k, Mat3<Quadratic>& x) {
		if (j.contains(k))
			x = matrix_from_json(j[k]);
	};
	vec("alpha", p.alpha);
	sca("beta", p.beta);
	vec("gamma", p.gamma);
	vec("phi", p.phi);
	vec("lambda", p.lambda);
	sca("v_param", p.v_param);
	vec("xi", p.xi);
	sca("theta", p.theta);
	sca("rho", p.rho);
	mat("sigma", p.sigma);
	mat("chi", p.chi);
	mat("omega", p.omega);
	vec("n", p.n);
	if (!trace(p.sigma).is_zero())
		throw JsonFormatError("sigma must be traceless (rho carries the trace part)");
	if (!trace(p.chi).is_zero())
		throw JsonFormatError("chi must be traceless");
	return p;
}

GroupElement<Quadratic> group_from_json(const Json& j)
{
	require_object(j, {"t", "a", "v", "R"}, "group element");
	GroupElement<Quadratic> g = identity_element<Quadratic>();
	if (j.contains("t"))
		g.t = scalar_from_json(j["t"]);
	if (j.contains("a"))
		g.a = vector_from_json(j["a"]);
	if (j.contains("v"))
		g.v = vector_from_json(j["v"]);
	if (j.contains("R"))
		g.R = matrix_from_json(j["R"]);
	if (!is_rotation(g.R))
		throw JsonFormatError("R must be orthogonal with determinant 1");
	return g;
}

AutomorphismWord<Quadratic> word_from_json(const Json& j)
{
	if (!j.is_array())
		throw JsonFormatError("automorphism word must be a JSON array");
	AutomorphismWord<Quadratic> w;
	for (const auto& x : j) {
		if (!x.is_object() || !x.contains("kind") || !x["kind"].is_string())
			throw JsonFormatError("automorphism element needs a string \"kind\": " + x.dump());
		const std::string kind = x["kind"];
		if (kind == "boost") {
			require_object(x, {"kind", "v"}, "boost");
			w.push_back(Automorphism<Quadratic>::boost(vector_from_json(x.at("v"))));
		} else if (kind == "space_translation") {
			require_object(x, {"kind", "a"}, "space_translation");
			w.push_back(Automorphism<Quadratic>::space_translation(vector_from_json(x.at("a"))));
		} else if (kind == "time_translation") {
			require_object(x, {"kind", "t"}, "time_translation");
			w.push_back(Automorphism<Quadratic>::time_translation(scalar_from_json(x.at("t"))));
		} else if (kind == "rotation") {
			require_object(x, {"kind", "R"}, "rotation");
			const auto R = matrix_from_json(x.at("R"));
			if (!is_rotation(R))
				throw JsonFormatError("rotation matrix must be orthogonal with determinant 1");
			w.push_back(Automorphism<Quadratic>::rotation(R));
		} else if (kind == "scaling") {
			require_object(x, {"kind", "a", "b"}, "scaling");
			try {
				w.push_back(Automorphism<Quadratic>::scaling(scalar_from_json(x.at("a")), scalar_from_json(x.at("b"))));
			} catch (const std::invalid_argument& e) {
				throw JsonFormatError(e.what());
			}
		} else {
			throw JsonFormatError("unknown automorphism kind '" + kind + "'");
		}
	}
	return w;
}

Json to_json(const Value& v)
{
	return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const CatalogEntry& e)
{
	Json free = Json::array();
	for (const auto& f : e.free) {
		const char* kind = f.kind == ValueKind::scalar ? "scalar" : f.kind == ValueKind::vector ? "vector" : "matrix";
		free.push_back({{"name", f.name}, {"kind", kind}, {"domain", to_string(f.domain)}});
	}
	Json j{{"id", e.id},
	       {"kind", e.kind == EntryKind::family ? "family" : "canonical"},
	       {"family_or_group", e.group}};
	if (!e.subcase.empty())
		j["subcase"] = e.subcase;
	j["row"] = e.row ? Json(e.row) : Json(nullptr);
	if (!e.variant.empty())
		j["variant"] = e.variant;
	j["constraints"] = e.constraint_text();
	j["parameters"] = e.layout;
	j["free_parameters"] = free;
	j["essential_count"] = e.essential_count();
	if (e.printed_count)
		j["printed_essential_count"] = *e.printed_count;
	return j;
}

Json catalog_to_json()
{
	Json fam = Json::array(), rows = Json::array();
	for (const auto* e : families())
		fam.push_back(to_json(*e));
	for (const auto* e : canonical_entries())
		rows.push_back(to_json(*e));
	return Json{{"printed_rows", printed_row_count()},
	            {"canonical_entries", canonical_entry_count()},
	            {"count_note", "50 numbered rows; every +-1 cell expands to two entries and every +-1,0 cell to three "
	                           "(67 entries), plus the unnumbered VIII:a and VIII:b (69)"},
	            {"families", fam},
	            {"entries", rows}};
}

Value parse_value(ValueKind kind, const std::string& text)
{
	std::vector<Quadratic> xs;
	std::stringstream ss(text);
	std::string item;
	try {
		while (std::getline(ss, item, ','))
			xs.push_back(Quadratic::parse(item));
	} catch (const std::exception& e) {
		throw JsonFormatError("malformed value '" + text + "': " + e.what());
	}
	switch (kind) {
	case ValueKind::scalar:
		if (xs.size() == 1)
			return xs[0];
		break;
	case ValueKind::vector:
		if (xs.size() == 3)
			return Vec3<Quadratic>{xs[0], xs[1], xs[2]};
		break;
	case ValueKind::matrix:
		if (xs.size() == 9) {
			Mat3<Quadratic> m;
			for (int i = 0; i < 9; ++i)
				m[i / 3][i % 3] = xs[i];
			return m;
		}
		break;
	}
	throw JsonFormatError("value '" + text + "' has the wrong number of components");
}

Value value_from_json(ValueKind kind, const Json& j)
{
	switch (kind) {
	case ValueKind::scalar: return scalar_from_json(j);
	case ValueKind::vector: return vector_from_json(j);
	case ValueKind::matrix: return matrix_from_json(j);
	}
	throw JsonFormatError("bad value kind");
}

} // namespace plg
