#include <doctest.h>

#include <cmath>
#include <random>

#include "mhs/series.hpp"

using namespace mhs;

namespace {

// Published decimal expansions, 50 places.
const char *kPi = "3.14159265358979323846264338327950288419716939937510";
const char *kZeta2 = "1.64493406684822643647241516664602518921894990120679";
const char *kZeta3 = "1.20205690315959428539973816151144999076498629234049";
const char *kZeta5 = "1.03692775514336992633136548645703416805708091950191";
const char *kLog2 = "0.69314718055994530941723212145817656807550013436025";
const char *kCatalan = "0.91596559417721901505460351493238411077414937428167";

BigRational dec(const std::string &s)
{
	auto dot = s.find('.');
	std::string digits = s.substr(0, dot) + s.substr(dot + 1);
	return BigRational(BigInt(digits), BigInt(10).pow(s.size() - dot - 1));
}

// |x - c| within x's error bound plus the 10^-50 rounding of the constant.
bool brackets(const FixedDecimal &x, const BigRational &c)
{
	return (x.value() - c).abs() <= x.error_bound() + BigRational(1, 1) / BigRational(10).pow(50);
}

BigRational tol(int d) { return BigRational(10).pow(-d); }

// zeta*(s) by the defining sum truncated at n, and a bound on the tail:
// prod_{i<r} c_i / ((s_r - 1) n^{s_r - 1}) with c_i = zeta(s_i), or 2 + log n
// for a part 1 (one such part at most).
std::pair<double, double> star_brute(const std::vector<int> &s, long n)
{
	std::vector<double> level(s.size() + 1, 0.0);
	level[0] = 1.0;
	for (long k = 1; k <= n; ++k)
		for (size_t j = 0; j < s.size(); ++j)
			level[j + 1] += level[j] * std::pow(static_cast<double>(k), -s[j]);
	double prod = 1;
	for (size_t i = 0; i + 1 < s.size(); ++i)
		prod *= s[i] == 1 ? 2 + std::log(static_cast<double>(n)) : s[i] == 2 ? 1.6449340668482264 : 1.2020569031595943;
	int last = s.back();
	return {level[s.size()], prod / ((last - 1) * std::pow(static_cast<double>(n), last - 1))};
}

} // namespace

TEST_CASE("fixed-point rounding and formatting")
{
	auto third = FixedDecimal::from_rational(BigRational(1, 3), 5);
	CHECK(third.mantissa() == BigInt(33333));
	CHECK(third.error_ulps() == BigInt(1));
	CHECK(third.str() == "0.33333");
	CHECK(third.str(2) == "0.33");
	auto neg = FixedDecimal::from_rational(BigRational(-1, 3), 5);
	CHECK(neg.mantissa() == BigInt(-33334));
	CHECK(neg.str(3) == "-0.333");
	CHECK(FixedDecimal::from_rational(BigRational(7, 100), 4).str() == "0.0700");
	CHECK(FixedDecimal::from_rational(BigRational(12), 2).str(0) == "12");
	CHECK_THROWS_AS(third + FixedDecimal(6), InvalidInput);
	CHECK_THROWS_AS(third.divided_by(BigInt(0)), InvalidInput);
}

TEST_CASE("fixed-point error bounds cover the exact result")
{
	std::mt19937_64 rng(20241016);
	std::uniform_int_distribution<long> num(-100000, 100000), den(1, 999);
	for (int i = 0; i < 300; ++i) {
		BigRational x(num(rng), den(rng)), y(num(rng), den(rng));
		long k = den(rng);
		auto X = FixedDecimal::from_rational(x, 12), Y = FixedDecimal::from_rational(y, 12);
		auto within = [](const FixedDecimal &f, const BigRational &exact) {
			return (f.value() - exact).abs() <= f.error_bound();
		};
		CHECK(within(X + Y, x + y));
		CHECK(within(X - Y, x - y));
		CHECK(within(X * Y, x * y));
		CHECK(within(X.times(BigInt(-k)), x * BigRational(-k)));
		CHECK(within(X.divided_by(BigInt(-k)), x / BigRational(-k)));
		CHECK(within((X * Y).divided_by(BigInt(k)).pow(3), (x * y / BigRational(k)).pow(3)));
	}
}

TEST_CASE("reference constants against published digits")
{
	for (int d : {10, 30, 45}) {
		CAPTURE(d);
		CHECK(brackets(zeta_ref(2, d), dec(kZeta2)));
		CHECK(brackets(zeta_ref(3, d), dec(kZeta3)));
		CHECK(brackets(zeta_ref(5, d), dec(kZeta5)));
		CHECK(brackets(zetabar_ref(1, d), dec(kLog2)));
		CHECK(brackets(beta_ref(2, d), dec(kCatalan)));
		CHECK(brackets(beta_ref(1, d).times(BigInt(4)), dec(kPi)));
		CHECK(zeta_ref(3, d).error_bound() < tol(d + 5));
		CHECK(beta_ref(1, d).error_bound() < tol(d + 5));
	}
	CHECK(zeta_ref(2, 30).str(30).substr(0, 12) == "1.6449340668");
	CHECK(zetabar_ref(1, 20).str(8) == "0.69314718");
	CHECK(beta_ref(1, 20).str(8) == "0.78539816");
	CHECK(zetabar_ref(0, 20).value() == BigRational(1, 2));
	CHECK(brackets(zetabar_ref(2, 40).times(BigInt(12)), dec(kZeta2) * BigRational(6)));
	CHECK_THROWS_AS(zeta_ref(1, 20), InvalidInput);
	CHECK_THROWS_AS(zeta_ref(2, 61), InvalidInput);
}

TEST_CASE("accelerated alternating sums")
{
	// sum (-1)^k / (k+1)^2 = pi^2/12
	auto s = alternating_sum([](long k) { return FixedDecimal::from_rational(BigRational(1, (k + 1) * (k + 1)), 40); }, 40);
	CHECK(brackets(s.times(BigInt(2)), dec(kZeta2)));
}

TEST_CASE("binomial and Euler-sum expansions reach their targets")
{
	for (const auto &t : series_targets()) {
		if (t.rfind("ZSTAR", 0) == 0 || t.rfind("ZAGIER", 0) == 0)
			continue;
		for (int m = 0; m <= (t.rfind("APERY", 0) == 0 ? 0 : 4); ++m) {
			auto r = evaluate_series(t, {m, 0, 0}, 30);
			CAPTURE(t);
			CAPTURE(m);
			CHECK(r.pass);
			CHECK(r.worst() <= r.tolerance);
			CHECK(r.message.empty());
		}
	}
	auto lesh3 = evaluate_series("LESH-3", {1, 0, 0}, 40);
	CHECK(brackets(lesh3.values.at(0).value, dec(kZeta5)));
	auto lesh5 = evaluate_series("LESH-5", {0, 0, 0}, 40);
	CHECK(brackets(lesh5.values.at(0).value.times(BigInt(4)), dec(kPi)));
	auto apery = evaluate_series("APERY3", {}, 40);
	CHECK(brackets(apery.values.at(0).value, dec(kZeta3)));
	CHECK(evaluate_series("LESH-4", {6, 0, 0}, 40).pass);
	CHECK_THROWS_AS(evaluate_series("LESH-2", {0, 0, 0}, 41), InvalidInput);
	CHECK_THROWS_AS(evaluate_series("nope", {}, 10), InvalidInput);
}

TEST_CASE("zeta-star values by three routes")
{
	auto r = zeta_star_check("ZSTAR-12b", 0, 1, 20);
	CHECK(r.pass);
	CHECK(brackets(r.values.at(0).value, dec(kZeta3) * BigRational(2)));
	CHECK(zeta_star_check("ZSTAR-121", 1, 1, 15).pass);
	CHECK(zeta_star_check("ZAGIER-ZZZZ", 1, 0, 15).pass);
	for (int a = 0; a <= 3; ++a)
		for (int b = 0; b <= 3; ++b) {
			CAPTURE(a);
			CAPTURE(b);
			CHECK(zeta_star_check("ZSTAR-231", a, b, 15).pass);
			CHECK(zeta_star_check("ZAGIER-ZZZZ", a, b, 15).pass);
			if (a >= 1 && b >= 1)
				CHECK(zeta_star_check("ZSTAR-121", a, b, 15).pass);
		}
	CHECK_THROWS_AS(zeta_star_check("ZSTAR-121", 0, 1, 15), InvalidInput);
	CHECK_THROWS_AS(zeta_star_check("ZSTAR-231", 0, 0, 21), InvalidInput);
}

TEST_CASE("direct zeta-star against truncated defining sums")
{
	// zeta*({2}^n) = 2 (1 - 2^{1-2n}) zeta(2n)
	auto z4 = zeta_ref(4, 25);
	CHECK(agrees(zeta_star_direct(Composition{2, 2}, 35), z4.times(BigInt(7)).divided_by(BigInt(4)), tol(25)));
	for (const std::vector<int> &s : {std::vector<int>{2, 3, 2}, {1, 2, 2}, {2, 1, 2}, {3, 2}, {2, 2, 3}}) {
		auto [brute, tail] = star_brute(s, 200000);
		double direct = std::stod(zeta_star_direct(Composition(s), 25).str(20));
		CHECK(direct >= brute - 1e-9);
		CHECK(direct <= brute + tail + 1e-9);
	}
	CHECK_THROWS_AS(zeta_star_direct(Composition{2, 1}, 20), InvalidInput);
}

TEST_CASE("finite sums approach zeta-star within the tail bound")
{
	for (int a = 0; a <= 2; ++a)
		for (int b = 0; b <= 2; ++b) {
			auto r = finite_to_infinite_check(a, b, 4000, 20);
			CAPTURE(a);
			CAPTURE(b);
			CHECK(r.pass);
			BigRational gap = r.values[1].value.value() - r.values[0].value.value();
			CHECK(gap > BigRational(0));
			CHECK(gap < r.tolerance);
		}
	CHECK(finite_to_infinite_check(1, 0, 30, 15).pass);
}

TEST_CASE("even zeta values from Bernoulli numbers")
{
	for (int m = 1; m <= 8; ++m) {
		CAPTURE(m);
		CHECK(bernoulli_pi_check(m, 50).pass);
	}
}

TEST_CASE("a perturbed value is rejected")
{
	auto z = zeta_ref(3, 30);
	auto off = z + FixedDecimal::from_rational(tol(29), z.digits());
	CHECK(agrees(z, z, tol(30)));
	CHECK_FALSE(agrees(z, off, tol(30)));
	CHECK(agrees(z, off, tol(28)));
}
