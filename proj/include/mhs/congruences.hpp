#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mhs/bigq.hpp"
#include "mhs/composition.hpp"
#include "mhs/identities.hpp"
#include "mhs/mhs.hpp"
#include "mhs/modring.hpp"

namespace mhs {

// Upper summation index as a function of p.
enum class Bound { Full, Half, Quarter }; // p-1, (p-1)/2, floor(p/4)

// Finite p-analogues of zeta and beta values.
enum class Analogue { ZetaEven, ZetaOdd, Beta, ZetaBar }; // zeta_p(2m+2), zeta_p(2m+3), beta_p(2m+1), zetabar_p(2m+2)

struct Factor {
	enum Kind { Bernoulli, Fermat, Sum, PAnalogue, SignHalf } kind = Bernoulli;
	long index = 0; // B_{p-index}, or m for an analogue
	SumKind sum_kind = SumKind::Strict;
	Composition comp;
	Bound bound = Bound::Full;
	Analogue analogue = Analogue::ZetaEven;
};

// coeff * p^p_power * product of factors
struct Term {
	BigRational coeff;
	int p_power = 0;
	std::vector<Factor> factors;
};

struct Expr {
	std::vector<Term> terms;
};

Expr constant(const BigRational &c);
Expr p_power(int e);
Expr bern(long m); // B_{p-m}
Expr fermat_q();   // q_p(2) = (2^{p-1} - 1)/p
Expr mhs_sum(SumKind kind, const Composition &s, Bound bound = Bound::Full);
Expr analogue(Analogue which, int m);
Expr sign_half(); // (-1)^{(p+1)/2}

Expr operator+(Expr a, const Expr &b);
Expr operator-(Expr a, const Expr &b);
Expr operator*(const BigRational &c, Expr e);
Expr operator*(const Expr &a, const Expr &b);

struct ZetaPValues {
	PAdicApprox zeta_even; // zeta_p(2m+2), valuation may be -1
	PAdicApprox zeta_odd;  // zeta_p(2m+3)
	PAdicApprox beta;      // beta_p(2m+1)
	PAdicApprox zetabar;   // zetabar_p(2m+2)
};

// Termwise in the p-adic ring; needs p > 2m+3.
ZetaPValues zeta_p_values(u64 p, int m);

struct ZetaPExact {
	BigRational zeta_even, zeta_odd, beta, zetabar;
};
ZetaPExact zeta_p_exact(u64 p, int m);

struct CustomOutcome {
	bool pass = true;
	ModInt lhs{2, 1};
	ModInt rhs{2, 1};
	std::string message;
};

struct ClaimCase {
	Params params;
	int N = 1;
	u64 min_prime = 5;
	Expr lhs;
	Expr rhs;
	// loop-style checks supply an evaluator in the p-adic ring (exact == false)
	// and one over the rationals (exact == true)
	std::function<CustomOutcome(u64 p, bool exact)> custom;
};

struct CongruenceClaim {
	std::string id;
	std::string statement;
	std::string condition; // prime condition in words
	int N = 1;              // largest modulus exponent among the cases
	u64 default_pmin = 5;
	u64 default_pmax = 300;
	std::string note;
	std::vector<ClaimCase> cases;
};

enum class CheckStatus { Pass, Fail, Skipped, Error };
const char *status_name(CheckStatus s);

struct CheckResult {
	std::string claim;
	Params params;
	u64 p = 0;
	int N = 0;
	u64 lhs = 0; // residues mod p^N
	u64 rhs = 0;
	CheckStatus status = CheckStatus::Skipped;
	std::string message;
	bool oracle = false; // LHS recomputed over the rationals and matched
	bool pass() const { return status == CheckStatus::Pass; }
};

const std::vector<CongruenceClaim> &congruence_catalog();
const CongruenceClaim &find_claim(const std::string &id);

// Below p = 50 the LHS is also evaluated exactly; a mismatch is an error.
constexpr u64 kOracleLimit = 50;

CheckResult check_case(const CongruenceClaim &claim, size_t case_index, u64 p);
std::vector<CheckResult> check_claim(const CongruenceClaim &claim, u64 p);
// Ad hoc congruence lhs == rhs mod p^N.
CheckResult check_expr(u64 p, int N, const Expr &lhs, const Expr &rhs);

struct PrimeRange {
	u64 lo;
	u64 hi;
};

std::vector<u64> primes_in(u64 lo, u64 hi);

struct SuiteReport {
	std::vector<CheckResult> results; // claim order, case order, then p
	long passed = 0, failed = 0, skipped = 0, errors = 0;
	bool ok() const { return failed == 0 && errors == 0; }
};

// Without a range each claim runs over its own default primes.
SuiteReport run_suite(const std::string &selection, std::optional<PrimeRange> range, int jobs);

} // namespace mhs
