#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mhs/bigq.hpp"
#include "mhs/composition.hpp"

namespace mhs {

struct SeriesFailure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// mantissa / 10^digits, known to within err ulps.
class FixedDecimal {
public:
	explicit FixedDecimal(int digits = 0) : digits_(digits) {}
	FixedDecimal(int digits, BigInt mantissa, BigInt err);

	// floor(q 10^digits), one ulp of error
	static FixedDecimal from_rational(const BigRational &q, int digits);

	int digits() const { return digits_; }
	const BigInt &mantissa() const { return m_; }
	const BigInt &error_ulps() const { return err_; }
	BigRational value() const;
	BigRational error_bound() const;

	// Widens the error by |extra| (rounded up to whole ulps).
	FixedDecimal widen(const BigRational &extra) const;

	FixedDecimal operator-() const { return FixedDecimal(digits_, -m_, err_); }
	friend FixedDecimal operator+(const FixedDecimal &a, const FixedDecimal &b);
	friend FixedDecimal operator-(const FixedDecimal &a, const FixedDecimal &b) { return a + (-b); }
	friend FixedDecimal operator*(const FixedDecimal &a, const FixedDecimal &b);
	FixedDecimal times(const BigInt &k) const;
	FixedDecimal divided_by(const BigInt &k) const;
	FixedDecimal pow(unsigned e) const;

	// Decimal expansion with `shown` fractional digits (truncated).
	std::string str(int shown) const;
	std::string str() const { return str(digits_); }

private:
	int digits_;
	BigInt m_;
	BigInt err_;
};

// |a - b| plus both error bounds stays within tol.
bool agrees(const FixedDecimal &a, const FixedDecimal &b, const BigRational &tol);
BigRational abs_difference(const FixedDecimal &a, const FixedDecimal &b);

constexpr int kMaxDigits = 60;
constexpr int kGuardDigits = 10;

// Reference values, error below 10^{-digits-5}.
FixedDecimal zeta_ref(int s, int digits);    // s >= 2, Euler-Maclaurin
FixedDecimal beta_ref(int s, int digits);    // s >= 1, accelerated alternating sum
FixedDecimal zetabar_ref(int s, int digits); // s >= 0; zetabar(0) = 1/2, zetabar(1) = log 2

// sum_{k>=0} (-1)^k a_k with Cohen-Villegas-Zagier weights. The error bound is
// the theoretical one for completely monotone a_k plus ten times the change
// against the run with eight fewer terms.
FixedDecimal alternating_sum(const std::function<FixedDecimal(long)> &a, int digits);

// zeta*(s) at the given scale for a positive composition with outermost part
// >= 2, by tail recurrences started from asymptotic expansions at a cutoff.
FixedDecimal zeta_star_direct(const Composition &s, int digits);

struct SeriesParams {
	int m = 0;
	int a = 0;
	int b = 0;
};

struct Evaluation {
	std::string method;
	FixedDecimal value;
};

struct SeriesResult {
	std::string target;
	SeriesParams params;
	int digits = 0;
	BigRational tolerance;
	std::vector<Evaluation> values; // all pairs must agree within tolerance
	bool pass = false;
	std::string message;
	// largest pairwise |x - y| plus error bounds
	BigRational worst() const;
};

const std::vector<std::string> &series_targets();
// Per-target digit ceiling.
int series_max_digits(const std::string &target);

SeriesResult evaluate_series(const std::string &target, const SeriesParams &params, int digits);

// ZSTAR-231, ZSTAR-121, ZSTAR-12b, ZAGIER-ZZZZ
SeriesResult zeta_star_check(const std::string &family, int a, int b, int digits);

// S_n({2}^a,3,{2}^b) from its single-sum form must sit below zeta* by no more
// than the tail bound.
SeriesResult finite_to_infinite_check(int a, int b, long n, int digits);

// zeta(2m) against |B_{2m}| (2 pi)^{2m} / (2 (2m)!) with pi = 4 beta(1).
SeriesResult bernoulli_pi_check(int m, int digits);

} // namespace mhs
