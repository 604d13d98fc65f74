#include "plg/suite.hpp"

#include "plg/bialgebra.hpp"
#include "plg/brackets.hpp"
#include "plg/catalog.hpp"
#include "plg/eta.hpp"
#include "plg/rng.hpp"

#include <atomic>
#include <memory>
#include <sstream>
#include <thread>

namespace plg {

namespace {

enum Identity {
	cocycle,
	cobracket_crosscheck,
	dual_jacobi,
	cojacobi,
	cobracket_cocycle,
	eta_jacobi,
	bracket_oracle_id,
	bracket_jacobi,
	coboundary,
	classification,
	identity_count
};

struct IdentityInfo {
	const char* name;
	const char* statement;
};

const IdentityInfo identity_info[identity_count] = {
    {"cocycle", "eta(g1 g2) = eta(g1) + Ad(g1) eta(g2) Ad(g1)^T"},
    {"cobracket-crosscheck", "closed delta = d/ds eta(exp(s X)) at s = 0; dual brackets = transpose of delta"},
    {"dual-jacobi", "Jacobi identity of the dual brackets [X~_i, X~_j]"},
    {"cojacobi", "co-Jacobi identity of delta"},
    {"cobracket-cocycle", "delta([X,Y]) = ad_X delta(Y) - ad_Y delta(X)"},
    {"eta-jacobi", "Jacobi identity of the bracket defined by eta at g"},
    {"bracket-oracle", "closed coordinate brackets = -(X_i f) eta^ij (X_j h) at g"},
    {"bracket-jacobi", "{x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0 for coordinates x, y, z"},
    {"coboundary", "eta(g) = Ad(g) r Ad(g)^T - r"},
    {"classification", "constraint family (a)-(f) when n = 0"},
};

std::string compact(const Json& j)
{
	return j.dump();
}

template <class T>
std::string tensor_location(const Tensor3<T>& e)
{
	const auto& names = basis::names();
	for (int i = 0; i < 10; ++i)
		for (int j = 0; j < 10; ++j)
			for (int k = 0; k < 10; ++k)
				if (!is_zero(e[i][j][k]))
					return "E[" + names[i] + "," + names[j] + "," + names[k] + "] = " + to_string(e[i][j][k]);
	return "";
}

template <class T>
std::string residual_location(const std::optional<ResidualEntry<T>>& r)
{
	const auto& names = basis::names();
	std::string s = "[";
	for (int i = 0; i < 4 && r->index[i] >= 0; ++i)
		s += (i ? "," : "") + names[r->index[i]];
	return s + "] = " + to_string(r->value);
}

std::string field_of(const EtaParameters<Quadratic>& p)
{
	long d = 0;
	p.for_each_scalar([&](const std::string&, const Quadratic& x) {
		if (!x.is_rational())
			d = x.radicand();
	});
	return d ? "Q(sqrt " + std::to_string(d) + ")" : "Q";
}

// Outcome of a single sample: empty = pass.
using Outcome = std::optional<std::string>;

class Runner {
public:
	virtual ~Runner() = default;
	virtual int count(int id) const = 0;
	virtual std::string skip_note(int id) const = 0; // non-empty = skipped
	virtual Outcome run(int id, int sample, Rng rng) const = 0;
	virtual std::string constraint_family() const = 0;
};

template <class T>
class RunnerT final : public Runner {
public:
	RunnerT(EtaParameters<T> p, const SuiteConfig& cfg) : p_(std::move(p)), cfg_(cfg)
	{
		model_ = cfg.control == Control::constant_psi ? EtaModel::constant_psi : EtaModel::corrected;
		closed_form_ = all_zero(p_.n);
		coboundary_ = closed_form_ && is_zero(p_.beta) && is_zero(p_.v_param) && is_zero(p_.theta);
		cls_ = classify_constraint_family(p_);
		delta_ = cobracket_numeric(p_, model_);
	}

	int count(int id) const override
	{
		const int points = std::min(cfg_.jacobi_points, cfg_.samples);
		switch (id) {
		case cocycle: return cfg_.samples;
		case cobracket_crosscheck: return 2;
		case dual_jacobi:
		case cojacobi:
		case cobracket_cocycle:
		case classification: return 1;
		case eta_jacobi: return points;
		case bracket_oracle_id: return cfg_.samples;
		case bracket_jacobi: return points;
		case coboundary: return cfg_.samples;
		}
		return 0;
	}

	std::string skip_note(int id) const override
	{
		if (id == bracket_oracle_id && !closed_form_)
			return "n != 0: no closed-form brackets";
		if (id == coboundary && !coboundary_)
			return "beta, v or theta nonzero, or n != 0: not a coboundary";
		if (id == classification && !closed_form_)
			return "n != 0: no constraint family applies";
		return "";
	}

	std::string constraint_family() const override
	{
		return cls_.family ? std::string("(") + *cls_.family + ")" : "none";
	}

	Outcome run(int id, int sample, Rng rng) const override
	{
		auto point = [&] { return lift<T>(sample_group_element(rng, cfg_.bound)); };
		const std::string tag = "sample " + std::to_string(sample) + ": ";
		switch (id) {
		case cocycle: {
			const auto g1 = point(), g2 = point();
			const auto r = check_cocycle(p_, g1, g2, model_);
			if (is_zero(r))
				return {};
			return tag + "g1=" + compact(to_json(g1)) + " g2=" + compact(to_json(g2)) + " nonzero " +
			       first_nonzero_component(r);
		}
		case cobracket_crosscheck:
			if (sample == 0) {
				const auto closed = cobracket_closed(p_);
				for (int s = 0; s < 10; ++s)
					for (int i = 0; i < 10; ++i)
						for (int j = 0; j < 10; ++j)
							if (!(closed[s][i][j] == delta_[s][i][j]))
								return "delta(" + basis::names()[s] + ")[" + basis::names()[i] + "," +
								       basis::names()[j] + "]: closed " + to_string(closed[s][i][j]) +
								       ", numeric " + to_string(delta_[s][i][j]);
			} else {
				const auto diff = dual_structure_constants(p_) - dual_from_cobracket(cobracket_closed(p_));
				if (!is_zero(diff))
					return std::string("dual brackets differ from the transpose of delta");
			}
			return {};
		case dual_jacobi:
			if (auto r = check_dual_jacobi(dual_structure_constants(p_)))
				return "nonzero at " + residual_location(r);
			return {};
		case cojacobi:
			if (auto r = check_cojacobi(delta_))
				return "nonzero at " + residual_location(r);
			return {};
		case cobracket_cocycle:
			if (auto r = check_cocycle_condition(delta_))
				return "nonzero at " + residual_location(r);
			return {};
		case eta_jacobi: {
			const auto g = point();
			const auto e = eta_jacobi_residual(p_, g, +1, model_);
			if (is_zero(e))
				return {};
			return tag + "g=" + compact(to_json(g)) + " " + tensor_location(e);
		}
		case bracket_oracle_id: {
			const auto g = point();
			const auto bad = compare_tables(bracket_table_closed(p_, g), bracket_table_oracle(p_, g, model_));
			if (bad.empty())
				return {};
			const auto& names = Observable::coordinate_names();
			const auto& m = bad.front();
			return tag + "g=" + compact(to_json(g)) + " {" + names[m.x] + "," + names[m.y] +
			       "}: closed " + to_string(m.closed) + ", oracle " + to_string(m.oracle) + " (" +
			       std::to_string(bad.size()) + " entries differ)";
		}
		case bracket_jacobi: {
			const auto g = point();
			const BracketJacobi<T> jac(p_, g);
			const auto& names = Observable::coordinate_names();
			for (int k = 0; k < cfg_.jacobi_triples; ++k) {
				const int x = int(rng.uniform(0, coordinate_count - 1));
				const int y = int(rng.uniform(0, coordinate_count - 1));
				const int z = int(rng.uniform(0, coordinate_count - 1));
				const T v = jac(x, y, z);
				if (!is_zero(v))
					return tag + "g=" + compact(to_json(g)) + " (" + names[x] + "," + names[y] + "," + names[z] +
					       ") = " + to_string(v);
			}
			return {};
		}
		case coboundary: {
			const auto g = point();
			const int sign = cfg_.control == Control::flipped_coboundary ? -1 : +1;
			const auto r = check_coboundary(p_, g, sign);
			if (is_zero(r))
				return {};
			return tag + "g=" + compact(to_json(g)) + " nonzero " + first_nonzero_component(r);
		}
		case classification:
			if (cls_.family)
				return {};
			return cls_.diagnostic.empty() ? std::string("no constraint family matches") : cls_.diagnostic;
		}
		return {};
	}

private:
	EtaParameters<T> p_;
	SuiteConfig cfg_;
	EtaModel model_;
	bool closed_form_, coboundary_;
	Classification cls_;
	Cobracket<T> delta_;
};

std::unique_ptr<Runner> make_runner(const EtaParameters<Quadratic>& p, const SuiteConfig& cfg)
{
	if (auto q = rational_parameters(p))
		return std::make_unique<RunnerT<Rational>>(*q, cfg);
	return std::make_unique<RunnerT<Quadratic>>(p, cfg);
}

struct Task {
	std::size_t target;
	int id, sample;
};

} // namespace

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn)
{
	unsigned workers = jobs > 0 ? unsigned(jobs) : std::max(1u, std::thread::hardware_concurrency());
	workers = unsigned(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t i = next++; i < n; i = next++)
			fn(i);
	};
	if (workers <= 1) {
		work();
		return;
	}
	std::vector<std::jthread> pool;
	for (unsigned w = 0; w < workers; ++w)
		pool.emplace_back(work);
}

bool TargetReport::pass() const
{
	for (const auto& r : identities)
		if (r.failures)
			return false;
	return true;
}

bool all_pass(const std::vector<TargetReport>& reports)
{
	for (const auto& r : reports)
		if (!r.pass())
			return false;
	return true;
}

std::vector<TargetReport> run_suite(const std::vector<VerifyTarget>& targets, const SuiteConfig& cfg)
{
	std::vector<std::unique_ptr<Runner>> runners(targets.size());
	parallel_for(targets.size(), cfg.jobs, [&](std::size_t i) { runners[i] = make_runner(targets[i].params, cfg); });

	std::vector<Task> tasks;
	for (std::size_t t = 0; t < targets.size(); ++t)
		for (int id = 0; id < identity_count; ++id)
			if (runners[t]->skip_note(id).empty())
				for (int s = 0; s < runners[t]->count(id); ++s)
					tasks.push_back({t, id, s});

	std::vector<Outcome> outcomes(tasks.size());
	const Rng root(cfg.seed);
	parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
		const Task& k = tasks[i];
		const Rng rng = root.split(k.target).split(std::uint64_t(k.id)).split(std::uint64_t(k.sample));
		try {
			outcomes[i] = runners[k.target]->run(k.id, k.sample, rng);
		} catch (const std::exception& e) {
			outcomes[i] = std::string("error: ") + e.what();
		}
	});

	std::vector<TargetReport> reports(targets.size());
	for (std::size_t t = 0; t < targets.size(); ++t) {
		auto& rep = reports[t];
		rep.target = targets[t].label;
		rep.field = field_of(targets[t].params);
		rep.parameters = to_json(targets[t].params);
		rep.constraint_family = runners[t]->constraint_family();
		for (int id = 0; id < identity_count; ++id) {
			IdentityResult r;
			r.name = identity_info[id].name;
			r.note = runners[t]->skip_note(id);
			r.skipped = !r.note.empty();
			rep.identities.push_back(r);
		}
	}
	for (std::size_t i = 0; i < tasks.size(); ++i) {
		auto& r = reports[tasks[i].target].identities[tasks[i].id];
		++r.checks;
		if (outcomes[i]) {
			if (!r.failures)
				r.first_failure = *outcomes[i];
			++r.failures;
		}
	}
	for (std::size_t t = 0; t < targets.size(); ++t) {
		auto& r = reports[t].identities[bracket_jacobi];
		if (!r.skipped)
			r.note = std::to_string(r.checks * cfg.jacobi_triples) + " triples";
	}
	return reports;
}

std::vector<VerifyTarget> verify_all_targets(const SuiteConfig& cfg)
{
	std::vector<const CatalogEntry*> entries;
	std::vector<int> draw;
	for (const auto* f : families())
		for (int k = 1; k <= 5; ++k) {
			entries.push_back(f);
			draw.push_back(k);
		}
	for (const auto* e : canonical_entries()) {
		entries.push_back(e);
		draw.push_back(0);
	}
	std::vector<VerifyTarget> out(entries.size());
	const Rng root = Rng(cfg.seed).split(0x5eed);
	parallel_for(entries.size(), cfg.jobs, [&](std::size_t i) {
		Rng rng = root.split(i);
		const auto* e = entries[i];
		out[i].label = draw[i] ? "family " + e->id + " #" + std::to_string(draw[i]) : e->id;
		out[i].params = e->assemble(e->sample(rng, cfg.bound));
	});
	return out;
}

namespace {

const char* control_name(Control c)
{
	switch (c) {
	case Control::none: return "none";
	case Control::constant_psi: return "constant-psi";
	case Control::flipped_coboundary: return "flipped-coboundary";
	}
	return "";
}

} // namespace

std::string render_text(const std::vector<TargetReport>& reports, const SuiteConfig& cfg)
{
	std::ostringstream os;
	os << "seed " << cfg.seed << ", samples " << cfg.samples << ", bound " << cfg.bound << ", jacobi points "
	   << std::min(cfg.jacobi_points, cfg.samples) << " x " << cfg.jacobi_triples << " triples";
	if (cfg.control != Control::none)
		os << ", control " << control_name(cfg.control);
	os << "\n";
	std::size_t failing = 0;
	for (const auto& rep : reports) {
		const bool ok = rep.pass();
		failing += !ok;
		os << "\n" << rep.target << "  [" << rep.field << "]  constraint family " << rep.constraint_family << "  "
		   << (ok ? "PASS" : "FAIL") << "\n";
		for (int id = 0; id < identity_count; ++id) {
			const auto& r = rep.identities[id];
			char head[64];
			std::snprintf(head, sizeof head, "  %-21s", r.name.c_str());
			os << head;
			if (r.skipped) {
				os << "skipped  (" << r.note << ")\n";
				continue;
			}
			os << (r.failures ? "FAIL " : "pass ") << (r.checks - r.failures) << "/" << r.checks;
			if (!r.note.empty())
				os << " (" << r.note << ")";
			os << "  " << identity_info[id].statement << "\n";
			if (r.failures)
				os << "      first failure: " << r.first_failure << "\n";
		}
		if (!ok)
			os << "  parameters: " << rep.parameters.dump() << "\n";
	}
	os << "\n" << reports.size() << (reports.size() == 1 ? " target, " : " targets, ") << failing << " failing: " << (failing ? "FAIL" : "PASS") << "\n";
	return os.str();
}

Json render_json(const std::vector<TargetReport>& reports, const SuiteConfig& cfg)
{
	Json targets = Json::array();
	for (const auto& rep : reports) {
		Json ids = Json::array();
		for (int id = 0; id < identity_count; ++id) {
			const auto& r = rep.identities[id];
			Json j{{"identity", r.name}, {"statement", identity_info[id].statement}};
			if (r.skipped) {
				j["status"] = "skipped";
				j["note"] = r.note;
			} else {
				j["status"] = r.failures ? "fail" : "pass";
				j["checks"] = r.checks;
				j["failures"] = r.failures;
				if (!r.note.empty())
					j["note"] = r.note;
				if (r.failures)
					j["first_failure"] = r.first_failure;
			}
			ids.push_back(j);
		}
		targets.push_back({{"target", rep.target},
		                   {"field", rep.field},
		                   {"constraint_family", rep.constraint_family},
		                   {"pass", rep.pass()},
		                   {"parameters", rep.parameters},
		                   {"identities", ids}});
	}
	return Json{{"seed", cfg.seed},
	            {"samples", cfg.samples},
	            {"bound", cfg.bound},
	            {"jacobi_points", std::min(cfg.jacobi_points, cfg.samples)},
	            {"jacobi_triples", cfg.jacobi_triples},
	            {"control", control_name(cfg.control)},
	            {"pass", all_pass(reports)},
	            {"targets", targets}};
}

} // namespace plg
