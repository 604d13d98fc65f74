// plgalilei: list the catalog, verify parameter sets, apply automorphisms and
// export derived data. Exit status: 0 all residuals zero, 1 a nonzero residual,
// 2 bad input.

#include "plg/json_io.hpp"
#include "plg/rng.hpp"
#include "plg/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace plg;

namespace {

struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Common {
	std::uint64_t seed = 0;
	int samples = 100;
	long bound = 8;
	std::string format = "text";
	std::string jobs = "auto";
	std::string output;

	void add(CLI::App* app)
	{
		app->add_option("--seed", seed, "master seed (default: $PLGALILEI_SEED or 0)");
		app->add_option("--samples", samples, "random group points per identity")->check(CLI::PositiveNumber);
		app->add_option("--bound", bound, "numerator/denominator bound of random rationals")
		    ->check(CLI::PositiveNumber);
		app->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
		app->add_option("--jobs", jobs, "worker threads: auto or N");
		app->add_option("-o,--output", output, "write the report to a file instead of stdout");
	}

	SuiteConfig config() const
	{
		SuiteConfig c;
		c.seed = seed;
		c.samples = samples;
		c.bound = bound;
		if (jobs == "auto") {
			c.jobs = 0;
		} else {
			try {
				std::size_t used = 0;
				c.jobs = std::stoi(jobs, &used);
				if (used != jobs.size() || c.jobs < 1)
					throw std::invalid_argument(jobs);
			} catch (const std::exception&) {
				throw InputError("--jobs must be 'auto' or a positive integer, got '" + jobs + "'");
			}
		}
		return c;
	}
};

struct TargetArgs {
	std::string family, canonical, file;
	std::vector<std::string> sets, overrides;
	int random = 0;

	void add(CLI::App* app, bool with_random)
	{
		auto* f = app->add_option("--family", family, "family I..XVIII");
		auto* c = app->add_option("--canonical", canonical, "canonical entry, e.g. I:5, I:3:+, VIII:a");
		auto* p = app->add_option("--file", file, "parameters JSON file");
		f->excludes(c)->excludes(p);
		c->excludes(p);
		app->add_option("--set", sets, "free parameter assignment name=value (vectors and matrices comma-separated)");
		app->add_option("--override", overrides,
		                "overwrite a raw parameter after assembly, e.g. xi=0,0,1 (for controls)");
		if (with_random)
			app->add_option("--random", random, "verify N random admissible assignments")
			    ->check(CLI::PositiveNumber);
	}

	bool given() const { return !family.empty() || !canonical.empty() || !file.empty(); }
};

std::string read_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot read '" + path + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Json parse_json(const std::string& text, const std::string& what)
{
	try {
		return Json::parse(text);
	} catch (const Json::parse_error& e) {
		throw InputError(what + " is not valid JSON: " + e.what());
	}
}

void write_output(const std::string& path, const std::string& text)
{
	if (path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream out(path);
	if (!out)
		throw InputError("cannot write '" + path + "'");
	out << text;
}

std::pair<std::string, std::string> split_assignment(const std::string& s)
{
	const auto eq = s.find('=');
	if (eq == std::string::npos || eq == 0)
		throw InputError("expected name=value, got '" + s + "'");
	return {s.substr(0, eq), s.substr(eq + 1)};
}

Assignment parse_sets(const CatalogEntry& e, const std::vector<std::string>& sets)
{
	Assignment a;
	for (const auto& s : sets) {
		auto [name, value] = split_assignment(s);
		auto it = std::find_if(e.free.begin(), e.free.end(), [&](const ParamSpec& p) { return p.name == name; });
		if (it == e.free.end()) {
			std::string known;
			for (const auto& p : e.free)
				known += (known.empty() ? "" : ", ") + p.name;
			throw InputError("'" + name + "' is not a free parameter of " + e.id +
			                 (known.empty() ? " (it has none)" : " (free: " + known + ")"));
		}
		a[name] = parse_value(it->kind, value);
	}
	return a;
}

void apply_override(EtaParameters<Quadratic>& p, const std::string& s)
{
	auto [name, value] = split_assignment(s);
	auto vec = [&](Vec3<Quadratic>& x) { x = std::get<Vec3<Quadratic>>(parse_value(ValueKind::vector, value)); };
	auto sca = [&](Quadratic& x) { x = std::get<Quadratic>(parse_value(ValueKind::scalar, value)); };
	auto mat = [&](Mat3<Quadratic>& x) { x = std::get<Mat3<Quadratic>>(parse_value(ValueKind::matrix, value)); };
	if (name == "alpha") vec(p.alpha);
	else if (name == "beta") sca(p.beta);
	else if (name == "gamma") vec(p.gamma);
	else if (name == "phi") vec(p.phi);
	else if (name == "lambda") vec(p.lambda);
	else if (name == "v_param") sca(p.v_param);
	else if (name == "xi") vec(p.xi);
	else if (name == "theta") sca(p.theta);
	else if (name == "rho") sca(p.rho);
	else if (name == "sigma") mat(p.sigma);
	else if (name == "chi") mat(p.chi);
	else if (name == "omega") mat(p.omega);
	else if (name == "n") vec(p.n);
	else
		throw InputError("unknown parameter '" + name + "' in --override");
	if (!trace(p.sigma).is_zero() || !trace(p.chi).is_zero())
		throw InputError("--override must keep sigma and chi traceless");
}

std::vector<VerifyTarget> resolve_targets(const TargetArgs& target_args, const SuiteConfig& cfg)
{
	std::vector<VerifyTarget> out;
	if (!target_args.file.empty()) {
		if (!target_args.sets.empty() || target_args.random)
			throw InputError("--set and --random apply to --family and --canonical only");
		out.push_back({target_args.file, params_from_json(parse_json(read_file(target_args.file), target_args.file))});
	} else {
		const std::string id = target_args.family.empty() ? target_args.canonical : target_args.family;
		const CatalogEntry* e = nullptr;
		try {
			e = &find_entry(id);
		} catch (const std::out_of_range& ex) {
			throw InputError(ex.what());
		}
		if (e->kind != (target_args.family.empty() ? EntryKind::canonical : EntryKind::family))
			throw InputError("'" + id + "' is a " + (e->kind == EntryKind::family ? "family" : "canonical entry") +
			                 "; use --" + (e->kind == EntryKind::family ? "family" : "canonical"));
		if (!target_args.sets.empty() && target_args.random)
			throw InputError("--set and --random are mutually exclusive");
		if (!target_args.sets.empty() || e->free.empty()) {
			out.push_back({e->id, e->assemble(parse_sets(*e, target_args.sets))});
		} else {
			const int n = target_args.random ? target_args.random : 1;
			const Rng root = Rng(cfg.seed).split(0xc11);
			for (int k = 0; k < n; ++k) {
				Rng rng = root.split(std::uint64_t(k));
				out.push_back({e->id + " random #" + std::to_string(k + 1), e->assemble(e->sample(rng, cfg.bound))});
			}
		}
	}
	for (auto& t : out)
		for (const auto& o : target_args.overrides)
			apply_override(t.params, o);
	if (!target_args.overrides.empty())
		for (auto& t : out)
			t.label += " (overridden)";
	return out;
}

int report(const std::vector<TargetReport>& reps, const SuiteConfig& cfg, const Common& common)
{
	if (common.format == "json")
		write_output(common.output, render_json(reps, cfg).dump(2) + "\n");
	else
		write_output(common.output, render_text(reps, cfg));
	return all_pass(reps) ? 0 : 1;
}

Control parse_control(const std::string& s)
{
	if (s == "none")
		return Control::none;
	if (s == "constant-psi")
		return Control::constant_psi;
	return Control::flipped_coboundary;
}

std::string list_text(const std::vector<const CatalogEntry*>& entries)
{
	std::ostringstream os;
	for (const auto* e : entries) {
		os << e->id;
		if (!e->subcase.empty())
			os << "  (" << e->subcase << ")";
		os << "\n  parameters:  " << e->layout << "\n  free:        ";
		if (e->free.empty())
			os << "none";
		for (std::size_t i = 0; i < e->free.size(); ++i) {
			const auto& f = e->free[i];
			os << (i ? "; " : "") << f.name;
			if (f.domain != Domain::any)
				os << " " << to_string(f.domain);
		}
		const std::string c = e->constraint_text();
		os << "\n  constraints: " << (c.empty() ? "none" : c) << "\n  essential:   " << e->essential_count();
		if (e->printed_count)
			os << " (printed " << *e->printed_count << ")";
		os << "\n";
	}
	return os.str();
}

int cmd_list(const std::string& family, const std::string& canonical, const Common& common)
{
	if (!family.empty() || !canonical.empty()) {
		const std::string id = family.empty() ? canonical : family;
		const CatalogEntry* e;
		try {
			e = &find_entry(id);
		} catch (const std::out_of_range& ex) {
			throw InputError(ex.what());
		}
		if (common.format == "json")
			write_output(common.output, to_json(*e).dump(2) + "\n");
		else
			write_output(common.output, list_text({e}));
		return 0;
	}
	if (common.format == "json") {
		write_output(common.output, catalog_to_json().dump(2) + "\n");
		return 0;
	}
	std::ostringstream os;
	os << "Families (" << families().size() << ")\n\n" << list_text(families()) << "\nCanonical entries ("
	   << printed_row_count() << " numbered rows, " << canonical_entry_count() << " entries)\n\n"
	   << list_text(canonical_entries());
	write_output(common.output, os.str());
	return 0;
}

// Letters in command-line order.
AutomorphismWord<Quadratic> word_from_options(CLI::App* app, const std::string& word_file)
{
	AutomorphismWord<Quadratic> w;
	if (!word_file.empty())
		w = word_from_json(parse_json(read_file(word_file), word_file));
	std::map<std::string, std::size_t> used;
	for (const CLI::Option* opt : app->parse_order()) {
		const std::string name = opt->get_name();
		if (name != "--boost" && name != "--space" && name != "--time" && name != "--rotation" && name != "--scaling")
			continue;
		const std::string value = opt->results().at(used[name]++);
		auto nums = [&](std::size_t n) {
			std::vector<Quadratic> xs;
			std::stringstream ss(value);
			std::string item;
			while (std::getline(ss, item, ','))
				xs.push_back(Quadratic::parse(item));
			if (xs.size() != n)
				throw InputError(name + " expects " + std::to_string(n) + " comma-separated values, got '" + value +
				                 "'");
			return xs;
		};
		try {
			if (name == "--boost") {
				auto x = nums(3);
				w.push_back(Automorphism<Quadratic>::boost({x[0], x[1], x[2]}));
			} else if (name == "--space") {
				auto x = nums(3);
				w.push_back(Automorphism<Quadratic>::space_translation({x[0], x[1], x[2]}));
			} else if (name == "--time") {
				w.push_back(Automorphism<Quadratic>::time_translation(nums(1)[0]));
			} else if (name == "--rotation") {
				Mat3<Quadratic> R;
				if (std::count(value.begin(), value.end(), ',') == 2) {
					auto s = nums(3);
					R = cayley_rotation(Vec3<Quadratic>{s[0], s[1], s[2]});
				} else {
					auto x = nums(9);
					for (int i = 0; i < 9; ++i)
						R[i / 3][i % 3] = x[i];
				}
				if (!is_rotation(R))
					throw InputError("--rotation is not orthogonal with determinant 1");
				w.push_back(Automorphism<Quadratic>::rotation(R));
			} else {
				auto x = nums(2);
				w.push_back(Automorphism<Quadratic>::scaling(x[0], x[1]));
			}
		} catch (const InputError&) {
			throw;
		} catch (const std::exception& e) {
			throw InputError(name + " " + value + ": " + e.what());
		}
	}
	return w;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact verification of Poisson-Lie structures on the Galilei group"};
	app.require_subcommand(1);

	Common common;
	if (const char* env = std::getenv("PLGALILEI_SEED")) {
		try {
			common.seed = std::stoull(env);
		} catch (const std::exception&) {
			std::cerr << "error: PLGALILEI_SEED must be a non-negative integer\n";
			return 2;
		}
	}

	auto* list = app.add_subcommand("list", "print the families and canonical entries");
	std::string list_family, list_canonical;
	list->add_option("--family", list_family, "show one family");
	list->add_option("--canonical", list_canonical, "show one canonical entry");
	Common list_common = common;
	list_common.add(list);

	auto* verify = app.add_subcommand("verify", "run the identity suite on one target");
	TargetArgs vspec;
	vspec.add(verify, true);
	std::string control = "none";
	verify->add_option("--control", control, "negative control")
	    ->check(CLI::IsMember({"none", "constant-psi", "flipped-coboundary"}));
	Common vcommon = common;
	vcommon.add(verify);

	auto* all = app.add_subcommand("verify-all", "every family x 5 assignments plus every canonical entry");
	Common acommon = common;
	acommon.add(all);

	auto* act = app.add_subcommand("act", "apply an automorphism word to a parameters file");
	std::string act_in, act_out, word_file;
	bool reverify = false;
	act->add_option("input", act_in, "parameters JSON file")->required();
	act->add_option("--out", act_out, "output parameters file (default: stdout)");
	act->add_option("--word", word_file, "automorphism word JSON file (applied before the letters below)");
	std::vector<std::string> letters[5];
	const std::pair<const char*, const char*> letter_opts[5] = {
	    {"--boost", "boost by v1,v2,v3"},
	    {"--space", "space translation by a1,a2,a3"},
	    {"--time", "time translation by t"},
	    {"--rotation", "rotation: nine row-major entries, or a Cayley vector s1,s2,s3"},
	    {"--scaling", "scaling by a,b (t -> a t, x -> b x)"},
	};
	for (int i = 0; i < 5; ++i)
		act->add_option(letter_opts[i].first, letters[i], letter_opts[i].second)->allow_extra_args(false);
	act->add_flag("--reverify", reverify, "run the identity suite on the result");
	Common act_common = common;
	act_common.add(act);
	act->get_option("--output")->description("write the verification report to a file");

	auto* exp = app.add_subcommand("export", "write derived data as JSON");
	std::string what, point;
	exp->add_option("what", what, "catalog | dual-constants | bracket-table | r-matrix")
	    ->required()
	    ->check(CLI::IsMember({"catalog", "dual-constants", "bracket-table", "r-matrix"}));
	TargetArgs espec;
	espec.add(exp, false);
	exp->add_option("--point", point, "group element as JSON text or a JSON file (bracket-table)");
	Common ecommon = common;
	ecommon.add(exp);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) ? 2 : 0;
	}

	try {
		if (list->parsed())
			return cmd_list(list_family, list_canonical, list_common);

		if (verify->parsed()) {
			if (!vspec.given())
				throw InputError("verify needs --family, --canonical or --file");
			SuiteConfig cfg = vcommon.config();
			cfg.control = parse_control(control);
			return report(run_suite(resolve_targets(vspec, cfg), cfg), cfg, vcommon);
		}

		if (all->parsed()) {
			SuiteConfig cfg = acommon.config();
			return report(run_suite(verify_all_targets(cfg), cfg), cfg, acommon);
		}

		if (act->parsed()) {
			const auto p = params_from_json(parse_json(read_file(act_in), act_in));
			const auto w = word_from_options(act, word_file);
			const auto q = apply_word(p, w);
			const std::string text = to_json(q).dump(2) + "\n";
			if (act_out.empty() && !reverify)
				std::cout << text;
			else if (!act_out.empty())
				write_output(act_out, text);
			if (!reverify)
				return 0;
			const SuiteConfig cfg = act_common.config();
			return report(run_suite({{act_out.empty() ? act_in + " (transformed)" : act_out, q}}, cfg), cfg,
			              act_common);
		}

		if (exp->parsed()) {
			if (what == "catalog") {
				write_output(ecommon.output, catalog_to_json().dump(2) + "\n");
				return 0;
			}
			if (!espec.given())
				throw InputError("export " + what + " needs --family, --canonical or --file");
			const SuiteConfig cfg = ecommon.config();
			const auto targets = resolve_targets(espec, cfg);
			const auto& t = targets.front();
			Json out{{"target", t.label}, {"parameters", to_json(t.params)}};
			if (what == "dual-constants") {
				out["dual_constants"] = dual_constants_to_json(dual_structure_constants(t.params));
			} else if (what == "r-matrix") {
				try {
					out["r_matrix"] = r_matrix_to_json(r_matrix(t.params));
				} catch (const NotCoboundary& e) {
					throw InputError(std::string("no r-matrix: ") + e.what());
				}
			} else {
				if (point.empty())
					throw InputError("export bracket-table needs --point");
				const std::string text = point.find('{') != std::string::npos ? point : read_file(point);
				const auto g = group_from_json(parse_json(text, "--point"));
				out["point"] = to_json(g);
				if (all_zero(t.params.n)) {
					out["source"] = "closed form";
					out["brackets"] = to_json(bracket_table_closed(t.params, g));
				} else {
					out["source"] = "oracle (no closed form when n != 0)";
					out["brackets"] = to_json(bracket_table_oracle(t.params, g));
				}
			}
			write_output(ecommon.output, out.dump(2) + "\n");
			return 0;
		}
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const JsonFormatError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const ConstraintError& e) {
		std::cerr << "error: inadmissible assignment: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
