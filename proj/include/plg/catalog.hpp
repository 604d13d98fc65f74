#pragma once

// The classification as data: eighteen parameter families and the canonical
// table entries (rows 1-50, with every sign choice expanded, plus VIII:a and
// VIII:b), the r-matrix of the coboundary structures and its check.
//
// Entries are assembled over Quadratic because a few canonical normalizations
// have no rational points. Anything rational stays rational.

#include "plg/algebra.hpp"
#include "plg/bivector.hpp"
#include "plg/eta.hpp"
#include "plg/params.hpp"
#include "plg/quadratic.hpp"
#include "plg/rng.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace plg {

struct ConstraintError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct NotCoboundary : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

using Value = std::variant<Quadratic, Vec3<Quadratic>, Mat3<Quadratic>>;
using Assignment = std::map<std::string, Value>;

enum class ValueKind { scalar, vector, matrix };

enum class Domain {
	any,
	nonzero,
	nonnegative,
	unit,           // vector of norm 1
	traceless,      // matrix with zero trace
	sym_traceless,  // symmetric traceless matrix
};

struct ParamSpec {
	std::string name;
	ValueKind kind = ValueKind::scalar;
	Domain domain = Domain::any;

	// Independent scalars before equation constraints.
	int dim() const;
};

struct Constraint {
	std::string text;
	std::function<bool(const Assignment&)> holds;
	bool equation = false; // an equality that removes one essential parameter
};

enum class EntryKind { family, canonical };

struct CatalogEntry {
	EntryKind kind = EntryKind::family;
	std::string id;        // "II" for a family; "II:15", "I:3:+", "VIII:a" for canonical entries
	std::string group;     // family or table group
	std::string subcase;   // "Va", "VIIb", ... or empty
	int row = 0;           // printed row number, 0 if unnumbered
	std::string variant;   // "+", "-", "0", "a", "b" or empty
	std::string layout;    // nonzero parameters in terms of the free ones
	std::vector<ParamSpec> free;
	std::vector<Constraint> constraints;
	std::optional<int> printed_count; // essential-parameter column, where printed
	std::function<void(const Assignment&, EtaParameters<Quadratic>&)> build;
	// Draws the free parameters that need joint sampling (normalizations).
	std::function<void(Rng&, long, Assignment&)> joint_sampler;

	// Sum of free dimensions minus equation constraints.
	int essential_count() const;
	// Checks keys, domains and constraints, then assembles. Throws ConstraintError.
	EtaParameters<Quadratic> assemble(const Assignment& a) const;
	// Random admissible assignment (rejection sampling on open conditions).
	Assignment sample(Rng& rng, long bound) const;
	std::string constraint_text() const;
};

const std::vector<CatalogEntry>& catalog();
std::vector<const CatalogEntry*> families();
std::vector<const CatalogEntry*> canonical_entries();
// Throws std::out_of_range naming the unknown id.
const CatalogEntry& find_entry(const std::string& id);

// Convenience wrappers over find_entry(...).assemble(...).
EtaParameters<Quadratic> family_params(const std::string& family_id, const Assignment& a);
EtaParameters<Quadratic> canonical_params(const std::string& canonical_id, const Assignment& a);

// Number of distinct printed rows (50) and of canonical entries (69).
int printed_row_count();
int canonical_entry_count();

std::string to_string(Domain d);
std::string value_to_string(const Value& v);

// ---- coboundary ----------------------------------------------------------

// r = phi_k H^P_k + gamma_k H^K_k + alpha_k H^J_k + e_ijk lambda_k P_i^P_j
//   + (sigma_ij - rho delta_ij) P_i^J_j + chi_ij P_i^K_j
//   - (2 omega_ij - omega_nn delta_ij) J_i^K_j + e_ijk xi_k K_i^K_j
// (sums over all i, j). Requires beta = v = theta = 0 and n = 0.
template <class T>
Mat10<T> r_matrix(const EtaParameters<T>& p)
{
	using namespace basis;
	if (!is_zero(p.beta) || !is_zero(p.v_param) || !is_zero(p.theta))
		throw NotCoboundary("r-matrix needs beta = v = theta = 0");
	if (!all_zero(p.n))
		throw NotCoboundary("r-matrix needs n = 0");
	const T onn = trace(p.omega);
	Mat10<T> m = zero10<T>();
	for (int k = 0; k < 3; ++k) {
		add_wedge(m, H, P + k, p.phi[k]);
		add_wedge(m, H, K + k, p.gamma[k]);
		add_wedge(m, H, J + k, p.alpha[k]);
	}
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			T l(0), x(0);
			for (int k = 0; k < 3; ++k)
				if (int e = eps(i, j, k)) {
					l += T(e) * p.lambda[k];
					x += T(e) * p.xi[k];
				}
			add_wedge(m, P + i, P + j, l);
			add_wedge(m, P + i, J + j, p.sigma[i][j] - (i == j ? p.rho : T(0)));
			add_wedge(m, P + i, K + j, p.chi[i][j]);
			add_wedge(m, J + i, K + j, -(T(2) * p.omega[i][j] - (i == j ? onn : T(0))));
			add_wedge(m, K + i, K + j, x);
		}
	return m;
}

// eta(g) - (Ad r Ad^T - r). sign = -1 uses r - Ad r Ad^T (negative control).
template <class T, class B>
Mat10<T> coboundary_residual(const EtaParameters<B>& p, const GroupElement<T>& g, int sign = +1)
{
	const EtaParameters<T> pt = p.template as<T>();
	const Mat10<T> r = r_matrix(pt);
	Mat10<T> c = congruence(adjoint(g), r) - r;
	if (sign < 0)
		c = r - congruence(adjoint(g), r);
	return to_matrix(eval_eta(p, g)) - c;
}

template <class T, class B>
GalileiBivector<T> check_coboundary(const EtaParameters<B>& p, const GroupElement<T>& g, int sign = +1)
{
	return from_matrix(coboundary_residual(p, g, sign));
}

} // namespace plg
