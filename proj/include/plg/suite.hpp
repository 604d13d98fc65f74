#pragma once

// The identity suite run by `verify` and `verify-all`.
//
// Every (target, identity, sample) triple is an independent task with its own
// random stream keyed by (seed, target index, identity index, sample index).
// Results are reduced in index order, so reports do not depend on the number of
// worker threads.

#include "plg/json_io.hpp"
#include "plg/params.hpp"
#include "plg/quadratic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plg {

enum class Control {
	none,
	constant_psi,       // eta with Psi replaced by alpha: breaks the cocycle condition
	flipped_coboundary, // coboundary compared against r - Ad r Ad^T
};

struct SuiteConfig {
	std::uint64_t seed = 0;
	int samples = 100;       // group points for cocycle, bracket and coboundary checks
	long bound = 8;          // numerator/denominator bound of random rationals
	int jobs = 1;            // worker threads; 0 = hardware concurrency
	int jacobi_points = 20;  // points for the eta-Jacobi and bracket-Jacobi checks (capped by samples)
	int jacobi_triples = 20; // coordinate triples per bracket-Jacobi point
	Control control = Control::none;
};

struct IdentityResult {
	std::string name;
	long checks = 0;
	long failures = 0;
	bool skipped = false;
	std::string note;          // why skipped, or extra information
	std::string first_failure; // inputs and residual location of the lowest failing sample
};

struct TargetReport {
	std::string target;
	std::string field; // "Q" or "Q(sqrt d)"
	std::string constraint_family;
	Json parameters;
	std::vector<IdentityResult> identities;

	bool pass() const;
};

struct VerifyTarget {
	std::string label;
	EtaParameters<Quadratic> params;
};

std::vector<TargetReport> run_suite(const std::vector<VerifyTarget>& targets, const SuiteConfig& cfg);

// Every family with five random admissible assignments, then every canonical
// entry with one. Assignments are drawn from the configuration seed.
std::vector<VerifyTarget> verify_all_targets(const SuiteConfig& cfg);

bool all_pass(const std::vector<TargetReport>& reports);
std::string render_text(const std::vector<TargetReport>& reports, const SuiteConfig& cfg);
Json render_json(const std::vector<TargetReport>& reports, const SuiteConfig& cfg);

// Runs fn(i) for i in [0, n) on `jobs` threads (0 = hardware concurrency).
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace plg
