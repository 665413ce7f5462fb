#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mhs/bigq.hpp"
#include "mhs/composition.hpp"

namespace mhs {

// Ordered name=value pairs; values are integers, rationals ("1/3") or
// compositions ("2,1").
using Params = std::vector<std::pair<std::string, std::string>>;

std::string params_str(const Params &p); // "n=3 m=2 b=(2,1)"
long param_long(const Params &p, const std::string &name);
BigRational param_rational(const Params &p, const std::string &name);
Composition param_composition(const Params &p, const std::string &name);
bool has_param(const Params &p, const std::string &name);

struct IdentityResult {
	std::string id;
	Params params;
	BigRational lhs;
	BigRational rhs;
	bool pass() const { return lhs == rhs; }
	BigRational difference() const { return lhs - rhs; }
};

struct GridBounds {
	long nmax = 0;      // 0 keeps each identity's own bound
	std::uint64_t seed = 20240601;
};

struct IdentityCase {
	std::string id;
	std::string statement;
	std::vector<std::string> param_names;
	std::function<std::vector<Params>(const GridBounds &)> grid;
	// throws InvalidInput outside the stated parameter range
	std::function<std::pair<BigRational, BigRational>(const Params &)> sides;
};

const std::vector<IdentityCase> &identity_catalog();
const IdentityCase &find_identity(const std::string &id);
IdentityResult verify_identity(const std::string &id, const Params &params);

// Shell-style globs, comma separated; "all" selects everything. A bare
// family name such as "GEN" also selects "GEN-..." ids.
bool id_selected(const std::string &selection, const std::string &id);

// Every point of every selected grid, in catalog order.
std::vector<IdentityResult> run_identities(const std::string &selection, const GridBounds &bounds, int jobs);

// WZ pairs with a rational parameter a.
struct WZPair {
	std::string id; // F1G1-zeta, F2G2-zeta, F1G1-beta, F2G2-beta
	bool beta;
	bool second;
	BigRational F(long n, long k, const BigRational &a) const; // n >= k+1
	BigRational G(long n, long k, const BigRational &a) const; // n >= k
};

const std::vector<WZPair> &wz_pairs();
const WZPair &find_wz(const std::string &id);

// a_i = i + 1/3, i = 0..count-1: distinct squares, never a pole.
std::vector<BigRational> wz_sample_points(size_t count);

struct WZVerdict {
	bool pass = true;
	// every (n, k) saw more distinct a^2 than the degree bound k + 2
	bool certified = true;
	long checks = 0;
	std::string first_failure;
};

// F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k) for 0 <= k < n <= nmax, k <= kmax.
WZVerdict verify_wz(const WZPair &pair, long nmax, long kmax, const std::vector<BigRational> &a_samples);

// Telescoped sum over the WZ relation up to N.
IdentityResult verify_summation_formula(const WZPair &pair, long N, const BigRational &a);
// The zeta-pair summation formula written out as a rational identity in a.
IdentityResult verify_parametric_identity(long N, const BigRational &a);

struct SummationVerdict {
	bool pass = true;
	bool certified = true;
	long checks = 0;
	std::string first_failure;
};
// Both summation identities for N = 1..Nmax at 2N + 1 sample points each
// (degree bound 2N - 1 in a^2 after clearing denominators).
SummationVerdict verify_summation_family(const WZPair &pair, long Nmax, bool parametric);

} // namespace mhs
