// One line per acceptance criterion: PASS/FAIL, what was checked, time used
// against its limit. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "mhs/congruences.hpp"
#include "mhs/identities.hpp"
#include "mhs/mhs.hpp"
#include "mhs/series.hpp"
#include "mhs/special_numbers.hpp"

using namespace mhs;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
};

// Pinned limits and tolerances.
constexpr double kLimit1 = 120, kLimit2 = 60, kLimit3 = 600, kLimit4 = 600, kLimit7 = 60;
constexpr int kAperyDigits = 30, kLeshDigits = 25, kStarDigits = 15;

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

bool run(int number, const char *title, double limit, const std::function<Outcome()> &body)
{
	auto t0 = std::chrono::steady_clock::now();
	Outcome o;
	try {
		o = body();
	} catch (const std::exception &e) {
		o = {false, std::string("exception: ") + e.what()};
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	bool in_time = limit <= 0 || secs <= limit;
	bool ok = o.pass && in_time;
	std::printf("[%s] %d %s: %s (%.1f s", ok ? "PASS" : "FAIL", number, title, o.detail.c_str(), secs);
	if (limit > 0)
		std::printf(", limit %.0f s%s", limit, in_time ? "" : ", EXCEEDED");
	std::printf(")\n");
	std::fflush(stdout);
	return ok;
}

std::string count(long n, const char *what) { return std::to_string(n) + " " + what; }

Outcome identity_suite()
{
	long checks = 0, failures = 0;
	std::string first;
	for (const auto &c : identity_catalog()) {
		if (c.id.rfind("WZ", 0) == 0)
			continue;
		for (const auto &r : run_identities(c.id, GridBounds{}, jobs())) {
			++checks;
			if (!r.pass()) {
				if (!failures)
					first = r.id + " " + params_str(r.params);
				++failures;
			}
		}
	}
	std::string d = count(checks, "exact equalities") + ", " + count(failures, "failures");
	if (failures)
		d += ", first " + first;
	return {failures == 0 && checks > 0, d};
}

Outcome wz_certificates()
{
	Outcome o;
	long checks = 0;
	auto samples = wz_sample_points(40); // degree bound k + 2 <= 32
	for (const auto &pair : wz_pairs()) {
		auto v = verify_wz(pair, 30, 30, samples);
		checks += v.checks;
		if (!v.pass || !v.certified) {
			o.pass = false;
			o.detail += pair.id + " " + v.first_failure + "; ";
		}
		for (bool parametric : {false, true}) {
			if (parametric && (pair.beta || pair.second))
				continue;
			auto s = verify_summation_family(pair, 20, parametric);
			checks += s.checks;
			if (!s.pass || !s.certified) {
				o.pass = false;
				o.detail += pair.id + (parametric ? " parametric " : " summation ") + s.first_failure + "; ";
			}
		}
	}
	o.detail += count(checks, "checks") + " over 4 pairs, n, k <= 30, N <= 20";
	return o;
}

Outcome congruence_range(const std::string &sel, PrimeRange range, int workers)
{
	auto rep = run_suite(sel, range, workers);
	Outcome o;
	o.pass = rep.ok() && rep.passed > 0;
	o.detail = count(rep.passed, "passed") + ", " + count(rep.failed, "failed") + ", " + count(rep.errors, "errors") +
	           ", " + count(rep.skipped, "skipped") + ", primes " + std::to_string(range.lo) + ".." +
	           std::to_string(range.hi) + ", " + std::to_string(workers) + " worker(s)";
	for (const auto &r : rep.results)
		if (r.status == CheckStatus::Fail || r.status == CheckStatus::Error) {
			o.detail += "; first " + r.claim + " " + params_str(r.params) + " p=" + std::to_string(r.p) + " " + r.message;
			break;
		}
	return o;
}

Outcome double_oracle()
{
	auto rep = run_suite("all", PrimeRange{2, 50}, jobs());
	long compared = 0, missing = 0;
	for (const auto &r : rep.results) {
		if (r.status == CheckStatus::Skipped)
			continue;
		if (r.oracle)
			++compared;
		else
			++missing;
	}
	return {rep.errors == 0 && missing == 0 && compared > 0,
	        count(compared, "LHS values matched their exact reduction") + ", " + count(missing, "without comparison") +
	            ", " + count(rep.errors, "mismatches or errors")};
}

Outcome bernoulli_oracle()
{
	long compared = 0, bad = 0;
	for (u64 p : primes_in(2, 200))
		for (long m = 2; m <= std::min<long>(40, static_cast<long>(p) - 3); m += 2) {
			++compared;
			if (bernoulli_mod_p(p, m) != reduce_rational(bernoulli_exact(m), p, 1))
				++bad;
		}
	long denominators = 0;
	for (long n = 2; n <= 60; n += 2) {
		BigInt expected(1);
		for (u64 q : primes_in(2, static_cast<u64>(n) + 1))
			if (n % static_cast<long>(q - 1) == 0)
				expected *= BigInt(static_cast<long>(q));
		++denominators;
		if (bernoulli_exact(n).den() != expected || von_staudt_denominator(n) != expected)
			++bad;
	}
	return {bad == 0, count(compared, "(p, m) residues") + ", " + count(denominators, "denominators") + ", " +
	                      count(bad, "disagreements")};
}

Outcome series_checks()
{
	Outcome o;
	long targets = 0;
	BigRational worst_ratio;
	auto take = [&](const SeriesResult &r) {
		++targets;
		worst_ratio = std::max(worst_ratio, r.worst() / r.tolerance);
		if (!r.pass) {
			o.pass = false;
			o.detail += r.target + " m=" + std::to_string(r.params.m) + " a=" + std::to_string(r.params.a) +
			            " b=" + std::to_string(r.params.b) + " " + r.message + "; ";
		}
	};
	take(evaluate_series("APERY2", {}, kAperyDigits));
	take(evaluate_series("APERY3", {}, kAperyDigits));
	for (const char *t : {"LESH-2", "LESH-3", "LESH-4", "LESH-5"})
		for (int m = 0; m <= 3; ++m)
			take(evaluate_series(t, {m, 0, 0}, kLeshDigits));
	for (int a = 0; a <= 3; ++a)
		for (int b = 0; b <= 3; ++b) {
			take(zeta_star_check("ZSTAR-231", a, b, kStarDigits));
			take(zeta_star_check("ZAGIER-ZZZZ", a, b, kStarDigits));
			if (a >= 1 && b >= 1)
				take(zeta_star_check("ZSTAR-121", a, b, kStarDigits));
		}
	for (int b = 1; b <= 3; ++b)
		take(zeta_star_check("ZSTAR-12b", 0, b, kStarDigits));
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.1e", worst_ratio.raw().get_d());
	o.detail += count(targets, "targets") + " at 1e-30 / 1e-25 / 1e-15, largest gap/tolerance " + buf;
	return o;
}

Outcome algebra()
{
	long checks = 0, bad = 0;
	auto expect = [&](bool ok) {
		++checks;
		bad += !ok;
	};
	for (int w = 1; w <= 12; ++w)
		for (const auto &s : compositions_of(w)) {
			auto d = dual(s);
			expect(d.weight() == w && dual(d) == s);
		}
	for (int w = 1; w <= 6; ++w)
		for (const auto &s : compositions_of(w)) {
			auto terms = sh_expand(s);
			BigRational sign = s.length() % 2 ? BigRational(-1) : BigRational(1);
			for (long n = 0; n <= 10; ++n)
				expect(evaluate_sh_expansion(RationalRing{}, terms, n) ==
				       sign * evaluate_exact(SumKind::NonStrict, s.reversed(), n));
		}
	for (int a : {-4, -3, -2, -1, 1, 2, 3, 4})
		for (int b : {-4, -3, -2, -1, 1, 2, 3, 4})
			for (long n = 0; n <= 30; ++n)
				expect(stuffle_depth1(RationalRing{}, a, b, n));
	for (int m = 1; m <= 5; ++m)
		for (long n = 0; n <= 30; ++n)
			expect(stuffle_odd_squares(RationalRing{}, m, n));
	auto rep = run_suite("DUAL", PrimeRange{2, 100}, jobs());
	for (const auto &r : rep.results)
		if (r.status != CheckStatus::Skipped)
			expect(r.pass());
	return {bad == 0, count(checks, "checks") + " (duality to weight 12, SH to weight 6, stuffles, mod-p duality " +
	                      "to p = 100), " + count(bad, "failures")};
}

} // namespace

int main()
{
	bool ok = true;
	ok &= run(1, "identity suite", kLimit1, identity_suite);
	ok &= run(2, "WZ certificates and summation formulas", kLimit2, wz_certificates);
	ok &= run(3, "congruence suite, single thread", kLimit3,
	          [] { return congruence_range("all", PrimeRange{5, 300}, 1); });
	ok &= run(4, "weight nine cubic congruence for 10 < p < 2000", kLimit4,
	          [] { return congruence_range("C3-eq41", PrimeRange{11, 1999}, jobs()); });
	ok &= run(5, "double oracle for p <= 50", 0, double_oracle);
	ok &= run(6, "Bernoulli residues and denominators", 0, bernoulli_oracle);
	ok &= run(7, "numeric series", kLimit7, series_checks);
	ok &= run(8, "duality and algebra", 0, algebra);
	std::printf("%s\n", ok ? "all criteria pass" : "SOME CRITERIA FAIL");
	return ok ? 0 : 1;
}
