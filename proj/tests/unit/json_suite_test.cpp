#include "helpers.hpp"

#include "plg/catalog.hpp"
#include "plg/group.hpp"
#include "plg/json_io.hpp"
#include "plg/suite.hpp"

#include <atomic>

using namespace plg;
using namespace plg::test;

TEST_CASE("json: parameters, group elements and words round trip")
{
	Rng rng = stream(70);
	for (int it = 0; it < 20; ++it) {
		const auto p = random_parameters(rng, 8);
		CHECK(params_from_json(Json::parse(to_json(p).dump())) == p.as<Quadratic>());
		const auto g = sample_group_element(rng, 8);
		CHECK(group_from_json(Json::parse(to_json(g).dump())) == lift<Quadratic>(g));
	}
	const AutomorphismWord<Quadratic> w{Automorphism<Quadratic>::boost({Quadratic(1), Quadratic(0), Quadratic(2)}),
	                                    Automorphism<Quadratic>::time_translation(Quadratic(3)),
	                                    Automorphism<Quadratic>::scaling(Quadratic(2), Quadratic(-1))};
	CHECK(to_json(word_from_json(to_json(w))) == to_json(w));
	CHECK(params_from_json(Json::parse(R"({"xi":["0","0","1/2"]})")).xi[2] == Quadratic::parse("1/2"));
}

TEST_CASE("json: malformed input is rejected")
{
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"gamma2":[1,0,0]})")), JsonFormatError);
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"alpha":[1,0]})")), JsonFormatError);
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"beta":"1/0"})")), JsonFormatError);
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"beta":0.5})")), JsonFormatError);
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"chi":[[1,0,0],[0,0,0],[0,0,0]]})")), JsonFormatError);
	CHECK_THROWS_AS(params_from_json(Json::parse(R"({"sigma":[[0,0,0],[0,0,0],[0,0,1]]})")), JsonFormatError);
	CHECK_THROWS_AS(group_from_json(Json::parse(R"({"R":[[1,0,0],[0,1,0],[0,0,2]]})")), JsonFormatError);
	CHECK_THROWS_AS(word_from_json(Json::parse(R"([{"kind":"shear"}])")), JsonFormatError);
	CHECK_THROWS_AS(word_from_json(Json::parse(R"([{"kind":"scaling","a":0,"b":1}])")), JsonFormatError);
	CHECK_THROWS_AS(word_from_json(Json::parse(R"([{"kind":"boost","v":[1,0,0],"t":1}])")), JsonFormatError);
}

TEST_CASE("json: catalog export")
{
	const Json j = catalog_to_json();
	CHECK(j["printed_rows"] == 50);
	CHECK(j["canonical_entries"] == 69);
	CHECK(j["families"].size() == 18);
	CHECK(j["entries"].size() == 69);
	for (const auto& e : j["entries"]) {
		CHECK(e.contains("family_or_group"));
		CHECK(e.contains("row"));
		CHECK(e.contains("constraints"));
		CHECK(e.contains("parameters"));
		CHECK(e.contains("free_parameters"));
		CHECK(e.contains("essential_count"));
	}
}

TEST_CASE("suite: passes, fails under controls, and is independent of jobs")
{
	SuiteConfig cfg;
	cfg.seed = 11;
	cfg.samples = 6;
	cfg.jacobi_points = 3;
	cfg.jacobi_triples = 5;
	std::vector<VerifyTarget> targets;
	for (const char* id : {"I", "II", "XVIII", "II:19"}) {
		Rng rng = stream(71).split(targets.size());
		const auto& e = find_entry(id);
		targets.push_back({id, e.assemble(e.sample(rng, 6))});
	}

	const auto r1 = run_suite(targets, cfg);
	CHECK(all_pass(r1));
	CHECK(r1[0].field == "Q");
	CHECK(r1[3].field != "Q");
	for (const auto& r : r1)
		CHECK_MESSAGE(r.identities.size() == 10, r.target);
	cfg.jobs = 3;
	const auto r3 = run_suite(targets, cfg);
	CHECK(render_text(r1, cfg) == render_text(r3, cfg));
	CHECK(render_json(r1, cfg) == render_json(r3, cfg));

	auto broken = targets;
	broken[0].params.xi = {Quadratic(0), Quadratic(0), Quadratic(1)};
	CHECK_FALSE(run_suite(broken, cfg)[0].pass());

	cfg.control = Control::constant_psi;
	CHECK_FALSE(run_suite({targets[0]}, cfg)[0].pass());
	cfg.control = Control::flipped_coboundary;
	CHECK_FALSE(run_suite({targets[2]}, cfg)[0].pass());
}

TEST_CASE("parallel_for visits every index once")
{
	std::vector<std::atomic<int>> hits(1000);
	parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
	for (const auto& h : hits)
		REQUIRE(h.load() == 1);
	parallel_for(0, 4, [&](std::size_t) { FAIL("called"); });
}
