#include "mhs/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "mhs/mhs.hpp"
#include "mhs/special_numbers.hpp"

namespace mhs {

// ---------------------------------------------------------------- FixedDecimal

namespace {

const BigInt &pow10(int d)
{
	static std::mutex mu;
	static std::map<int, BigInt> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto it = cache.find(d);
	if (it == cache.end())
		it = cache.emplace(d, BigInt(10).pow(static_cast<unsigned long>(d))).first;
	return it->second;
}

BigInt ceil_div(const BigInt &a, const BigInt &b) { return -((-a).fdiv(b)); }

BigInt ceil_rational(const BigRational &q) { return ceil_div(q.num(), q.den()); }

void same_scale(const FixedDecimal &a, const FixedDecimal &b)
{
	if (a.digits() != b.digits())
		throw InvalidInput("fixed-point values with different scales");
}

BigRational ten_pow(long e) { return BigRational(10).pow(e); }

} // namespace

FixedDecimal::FixedDecimal(int digits, BigInt mantissa, BigInt err)
    : digits_(digits), m_(std::move(mantissa)), err_(std::move(err))
{
}

FixedDecimal FixedDecimal::from_rational(const BigRational &q, int digits)
{
	BigInt scaled = (q.num() * pow10(digits)).fdiv(q.den());
	return FixedDecimal(digits, scaled, BigInt(1));
}

BigRational FixedDecimal::value() const { return BigRational(m_, pow10(digits_)); }

BigRational FixedDecimal::error_bound() const { return BigRational(err_, pow10(digits_)); }

FixedDecimal FixedDecimal::widen(const BigRational &extra) const
{
	return FixedDecimal(digits_, m_, err_ + ceil_rational(extra.abs() * BigRational(pow10(digits_))));
}

FixedDecimal operator+(const FixedDecimal &a, const FixedDecimal &b)
{
	same_scale(a, b);
	return FixedDecimal(a.digits_, a.m_ + b.m_, a.err_ + b.err_);
}

FixedDecimal operator*(const FixedDecimal &a, const FixedDecimal &b)
{
	same_scale(a, b);
	const BigInt &scale = pow10(a.digits_);
	BigInt m = (a.m_ * b.m_).fdiv(scale);
	BigInt spread = a.m_.abs() * b.err_ + b.m_.abs() * a.err_ + a.err_ * b.err_;
	return FixedDecimal(a.digits_, m, ceil_div(spread, scale) + 1);
}

FixedDecimal FixedDecimal::times(const BigInt &k) const { return FixedDecimal(digits_, m_ * k, err_ * k.abs()); }

FixedDecimal FixedDecimal::divided_by(const BigInt &k) const
{
	if (k.is_zero())
		throw InvalidInput("division by zero");
	BigInt q = k.sign() < 0 ? (-m_).fdiv(-k) : m_.fdiv(k);
	return FixedDecimal(digits_, q, ceil_div(err_, k.abs()) + 1);
}

FixedDecimal FixedDecimal::pow(unsigned e) const
{
	FixedDecimal r = from_rational(BigRational(1), digits_);
	r.err_ = 0;
	for (unsigned i = 0; i < e; ++i)
		r = r * *this;
	return r;
}

std::string FixedDecimal::str(int shown) const
{
	shown = std::clamp(shown, 0, digits_);
	BigInt a = m_.abs().fdiv(pow10(digits_ - shown));
	std::string s = a.str();
	if (static_cast<int>(s.size()) <= shown)
		s.insert(0, static_cast<size_t>(shown + 1 - static_cast<int>(s.size())), '0');
	if (shown > 0)
		s.insert(s.size() - static_cast<size_t>(shown), ".");
	return (m_.sign() < 0 ? "-" : "") + s;
}

BigRational abs_difference(const FixedDecimal &a, const FixedDecimal &b)
{
	same_scale(a, b);
	return BigRational(a.mantissa() - b.mantissa(), pow10(a.digits())).abs();
}

bool agrees(const FixedDecimal &a, const FixedDecimal &b, const BigRational &tol)
{
	return abs_difference(a, b) + a.error_bound() + b.error_bound() <= tol;
}

// ---------------------------------------------------------------- references

namespace {

FixedDecimal scaled(const FixedDecimal &x, const BigRational &q) { return x.times(q.num()).divided_by(q.den()); }

void check_digits(int digits, int ceiling)
{
	if (digits < 1 || digits > ceiling)
		throw InvalidInput("digits must lie in 1.." + std::to_string(ceiling));
}

// Working-precision versions; W counts all carried digits.
FixedDecimal zeta_w(int s, int W)
{
	if (s < 2)
		throw InvalidInput("zeta reference needs s >= 2");
	long N = std::max(20, W);
	BigRational sum;
	for (long k = 1; k < N; ++k)
		sum += BigRational(1, k).pow(s);
	BigRational n(N);
	sum += n.pow(1 - s) / BigRational(s - 1) + n.pow(-s) / BigRational(2);
	BigRational eps = ten_pow(-W - 3);
	// rising factorial s (s+1) ... (s+2j-2), over (2j)!
	BigRational rising(s);
	BigRational fact(2);
	for (long j = 1; j <= 400; ++j) {
		BigRational term = bernoulli_exact(2 * j) / fact * rising * n.pow(-s - 2 * j + 1);
		if (term.abs() < eps)
			return FixedDecimal::from_rational(sum, W).widen(BigRational(2) * term);
		sum += term;
		rising *= BigRational((s + 2 * j - 1) * (s + 2 * j));
		fact *= BigRational((2 * j + 1) * (2 * j + 2));
	}
	throw SeriesFailure("Euler-Maclaurin did not converge for zeta(" + std::to_string(s) + ")");
}

FixedDecimal alternating_w(const std::function<FixedDecimal(long)> &a, int W)
{
	// error 2/(3+sqrt 8)^n < 10^{-W-3}
	long n = static_cast<long>((W + 4) / 0.7655) + 1;
	std::vector<FixedDecimal> terms;
	BigRational amax;
	for (long k = 0; k < n; ++k) {
		terms.push_back(a(k));
		amax = std::max(amax, terms.back().value().abs());
	}
	auto run = [&](long len, BigInt &d) {
		BigInt t0(1), t1(3);
		for (long i = 1; i < len; ++i) {
			BigInt t2 = BigInt(6) * t1 - t0;
			t0 = t1;
			t1 = t2;
		}
		d = len == 0 ? BigInt(1) : t1;
		BigInt b(-1), c = -d;
		FixedDecimal s(W);
		for (long k = 0; k < len; ++k) {
			c = b - c;
			s = s + terms[static_cast<size_t>(k)].times(c);
			b = (b * BigInt(2 * (k + len) * (k - len))).exact_div(BigInt((2 * k + 1) * (k + 1)));
		}
		return s.divided_by(d);
	};
	BigInt d, d_short;
	FixedDecimal full = run(n, d);
	FixedDecimal shorter = run(n - 8, d_short);
	BigRational theory = BigRational(3) * amax / BigRational(d);
	BigRational drift = BigRational(10) * abs_difference(full, shorter);
	return full.widen(theory + drift);
}

FixedDecimal beta_w(int s, int W)
{
	if (s < 1)
		throw InvalidInput("beta reference needs s >= 1");
	return alternating_w([&](long k) { return FixedDecimal::from_rational(BigRational(1, 2 * k + 1).pow(s), W); }, W);
}

FixedDecimal zetabar_w(int s, int W)
{
	if (s < 0)
		throw InvalidInput("alternating zeta needs s >= 0");
	if (s == 0) {
		FixedDecimal half = FixedDecimal::from_rational(BigRational(1, 2), W);
		return FixedDecimal(W, half.mantissa(), BigInt(0));
	}
	if (s == 1)
		return alternating_w([&](long k) { return FixedDecimal::from_rational(BigRational(1, k + 1), W); }, W);
	return scaled(zeta_w(s, W), BigRational(1) - BigRational(2).pow(1 - s));
}

} // namespace

FixedDecimal zeta_ref(int s, int digits)
{
	check_digits(digits, kMaxDigits);
	return zeta_w(s, digits + kGuardDigits);
}

FixedDecimal beta_ref(int s, int digits)
{
	check_digits(digits, kMaxDigits);
	return beta_w(s, digits + kGuardDigits);
}

FixedDecimal zetabar_ref(int s, int digits)
{
	check_digits(digits, kMaxDigits);
	return zetabar_w(s, digits + kGuardDigits);
}

FixedDecimal alternating_sum(const std::function<FixedDecimal(long)> &a, int digits) { return alternating_w(a, digits); }

// ---------------------------------------------------------------- zeta-star by tail recurrences

FixedDecimal zeta_star_direct(const Composition &s, int W)
{
	if (s.empty() || !s.all_positive() || s[s.length() - 1] < 2)
		throw InvalidInput("zeta-star needs positive parts and a last part >= 2");
	const long M = std::max(60, 3 * W);
	const long L = 80;
	const BigRational eps = ten_pow(-W - 8);

	// T_j(k) = sum_{m >= k} m^{-s_j} T_{j+1}(m), T_{r+1} = 1. Each T_j has an
	// asymptotic expansion sum_i e_i k^{-i}; e solves g(k) - g(k+1) = f(k).
	std::vector<BigRational> next_coeff(static_cast<size_t>(L + 2));
	next_coeff[0] = 1;
	std::vector<BigRational> next_val(static_cast<size_t>(M + 1), BigRational(1));
	BigRational harmonic;
	for (long k = 1; k < M; ++k)
		harmonic += BigRational(1, k);
	BigRational delta; // uniform error of next_val

	for (size_t idx = s.length(); idx-- > 0;) {
		int e = s[idx];
		std::vector<BigRational> d(static_cast<size_t>(L + 2));
		for (long i = 0; i + e <= L + 1; ++i)
			d[static_cast<size_t>(i + e)] = next_coeff[static_cast<size_t>(i)];
		if (!d[0].is_zero() || !d[1].is_zero())
			throw InvalidInput("zeta-star diverges for " + s.str());
		std::vector<BigRational> coeff(static_cast<size_t>(L + 2));
		for (long n = 2; n <= L + 1; ++n) {
			BigRational acc = d[static_cast<size_t>(n)];
			for (long i = 1; i <= n - 2; ++i) {
				BigRational c = BigRational(binomial(n - 1, n - i)) * coeff[static_cast<size_t>(i)];
				acc -= (n - i + 1) % 2 ? -c : c;
			}
			coeff[static_cast<size_t>(n - 1)] = acc / BigRational(n - 1);
		}
		// value at the cutoff: stop once two successive terms are below eps
		BigRational at_m, mi(1);
		BigRational omitted;
		bool done = false, started = false;
		for (long i = 1; i <= L; ++i) {
			mi /= BigRational(M);
			BigRational t = coeff[static_cast<size_t>(i)] * mi;
			BigRational t2 = coeff[static_cast<size_t>(i + 1)] * mi / BigRational(M);
			if (started && t.abs() < eps && t2.abs() < eps) {
				omitted = BigRational(10) * std::max(t.abs(), t2.abs());
				done = true;
				break;
			}
			at_m += t;
			started = started || !t.is_zero();
		}
		if (!done)
			throw SeriesFailure("asymptotic tail did not reach the requested precision for " + s.str());
		std::vector<BigRational> val(static_cast<size_t>(M + 1));
		val[static_cast<size_t>(M)] = at_m;
		for (long k = M - 1; k >= 1; --k)
			val[static_cast<size_t>(k)] =
			    val[static_cast<size_t>(k + 1)] + BigRational(1, k).pow(e) * next_val[static_cast<size_t>(k)];
		delta = omitted + (harmonic + 1) * delta;
		next_val = std::move(val);
		next_coeff = std::move(coeff);
	}
	return FixedDecimal::from_rational(next_val[1], W).widen(delta);
}

// ---------------------------------------------------------------- series targets

namespace {

BigRational sgn(long e) { return e % 2 ? BigRational(-1) : BigRational(1); }

std::vector<BigRational> strict_prefixes(SumKind kind, const Composition &c, long n)
{
	return evaluate_prefixes(RationalRing{}, kind, c, n);
}

// sum_{k >= k0} t(k) for terms shrinking at least geometrically by 1/2; the
// last included term bounds the tail.
FixedDecimal geometric_sum(const std::function<BigRational(long)> &t, long k0, long kmax, int W)
{
	BigRational eps = ten_pow(-W - 3);
	FixedDecimal s(W);
	BigRational prev;
	for (long k = k0; k <= kmax; ++k) {
		BigRational x = t(k);
		s = s + FixedDecimal::from_rational(x, W);
		if (k > k0 + 2 && x.abs() < eps && x.abs() * 2 <= prev.abs())
			return s.widen(x);
		prev = x;
	}
	throw SeriesFailure("series tail bound not achieved");
}

long term_cap(int W) { return 4L * W + 40; }

FixedDecimal lesh_value(int which, int m, int W)
{
	long K = term_cap(W);
	std::vector<std::vector<BigRational>> H;
	for (int j = 0; j <= m; ++j)
		H.push_back(strict_prefixes(which >= 4 ? SumKind::Odd : SumKind::Strict, Composition::repeat(2, m - j), K + 1));
	std::vector<BigRational> central{BigRational(1)};
	for (long k = 1; k <= K + 1; ++k)
		central.push_back(central.back() * BigRational(2 * (2 * k - 1), k));
	auto kk = [](long k, long e) { return BigRational(k).pow(e); };
	std::function<BigRational(long)> term;
	long k0 = 1;
	switch (which) {
	case 2:
		term = [&](long k) {
			BigRational x = BigRational(3, 2) * sgn(m) * H[0][k - 1] / kk(k, 2);
			for (int j = 1; j <= m; ++j)
				x += 2 * sgn(m - j) * H[j][k - 1] / kk(k, 2 * j + 2);
			return x / central[k];
		};
		break;
	case 3:
		term = [&](long k) {
			BigRational x = BigRational(5, 2) * sgn(k) * H[0][k - 1] / kk(k, 3);
			for (int j = 1; j <= m; ++j)
				x += 2 * sgn(k - j) * H[j][k - 1] / kk(k, 2 * j + 3);
			return x / central[k];
		};
		break;
	case 4:
		k0 = 0;
		term = [&](long k) {
			BigRational x = BigRational(5, 4) * sgn(k + m) * H[0][k] / kk(2 * k + 1, 2);
			for (int j = 1; j <= m; ++j)
				x += sgn(k + m - j) * H[j][k] / kk(2 * k + 1, 2 * j + 2);
			return x * central[k] / BigRational(16).pow(k);
		};
		break;
	case 5:
		k0 = 0;
		term = [&](long k) {
			BigRational x = BigRational(3, 4) * sgn(m) * H[0][k] / BigRational(2 * k + 1);
			for (int j = 1; j <= m; ++j)
				x += sgn(m - j) * H[j][k] / kk(2 * k + 1, 2 * j + 1);
			return x * central[k] / BigRational(16).pow(k);
		};
		break;
	default:
		throw InvalidInput("unknown expansion");
	}
	return geometric_sum(term, k0, K, W);
}

FixedDecimal pi_w(int W) { return beta_w(1, W).times(BigInt(4)); }

// beta(2m+1) = (-1)^m E_{2m} pi^{2m+1} / (2^{2m+2} (2m)!)
FixedDecimal beta_closed_form(int m, int W)
{
	BigRational c = sgn(m) * BigRational(euler_exact(2 * m)) /
	                (BigRational(2).pow(2 * m + 2) * BigRational(factorial(2 * m)));
	return scaled(pi_w(W).pow(static_cast<unsigned>(2 * m + 1)), c);
}

// zeta(2m) = |B_{2m}| (2 pi)^{2m} / (2 (2m)!)
FixedDecimal zeta_even_closed_form(int m, int W)
{
	BigRational c = bernoulli_exact(2 * m).abs() * BigRational(2).pow(2 * m) / (BigRational(2) * BigRational(factorial(2 * m)));
	return scaled(pi_w(W).pow(static_cast<unsigned>(2 * m)), c);
}

BigRational binom(long r, long k) { return BigRational(binomial(r, k)); }

// 4 sum_{r=1}^K (C(2r,2b+1)(1-4^{-r}) + [r=a] - C(2r,2a)) zeta(2r+1) zetabar(2K-2r)
FixedDecimal star231_closed(int a, int b, int W)
{
	int K = a + b + 1;
	FixedDecimal total(W);
	for (int r = 1; r <= K; ++r) {
		BigRational c = binom(2 * r, 2 * b + 1) * (1 - BigRational(4).pow(-r)) + BigRational(r == a ? 1 : 0) -
		                binom(2 * r, 2 * a);
		if (c.is_zero())
			continue;
		total = total + scaled(zeta_w(2 * r + 1, W) * zetabar_w(2 * K - 2 * r, W), 4 * c);
	}
	return total;
}

// -2 sum_{r=1}^K (C(2r,2a) - [r=a] - (1-4^{-r}) C(2r,2b+1)) zeta(2r+1) H*(K-r),
// H*(n) = 2 (1 - 2^{1-2n}) zeta(2n), H*(0) = 1
FixedDecimal star231_zagier(int a, int b, int W)
{
	int K = a + b + 1;
	FixedDecimal total(W);
	for (int r = 1; r <= K; ++r) {
		BigRational c = binom(2 * r, 2 * a) - BigRational(r == a ? 1 : 0) -
		                (1 - BigRational(4).pow(-r)) * binom(2 * r, 2 * b + 1);
		if (c.is_zero())
			continue;
		int n = K - r;
		FixedDecimal hstar = n == 0 ? FixedDecimal(W, pow10(W), BigInt(0))
		                            : scaled(zeta_w(2 * n, W), 2 * (1 - BigRational(2).pow(1 - 2 * n)));
		total = total + scaled(zeta_w(2 * r + 1, W) * hstar, -2 * c);
	}
	return total;
}

// 2 zetabar(2a+2b+3) + 4 sum_{k>=1} (-1)^{k-1} H_{k-1}(2a+1) / k^{2b+2}
FixedDecimal star231_euler(int a, int b, int W)
{
	long n = static_cast<long>((W + 4) / 0.7655) + 2;
	auto H = strict_prefixes(SumKind::Strict, Composition{2 * a + 1}, n + 1);
	FixedDecimal alt = alternating_w(
	    [&](long i) { return FixedDecimal::from_rational(H[i] / BigRational(i + 1).pow(2 * b + 2), W); }, W);
	return zetabar_w(2 * a + 2 * b + 3, W).times(BigInt(2)) + alt.times(BigInt(4));
}

// 4 sum_{r=1}^{a+b} (C(2r,2b) - C(2r,2a-1)(1-4^{-r})) zeta(2r+1) zetabar(2a+2b-2r)
FixedDecimal star121_closed(int a, int b, int W)
{
	FixedDecimal total(W);
	for (int r = 1; r <= a + b; ++r) {
		BigRational c = binom(2 * r, 2 * b) - binom(2 * r, 2 * a - 1) * (1 - BigRational(4).pow(-r));
		if (c.is_zero())
			continue;
		total = total + scaled(zeta_w(2 * r + 1, W) * zetabar_w(2 * a + 2 * b - 2 * r, W), 4 * c);
	}
	return total;
}

// 2 zetabar(2a+2b+1) - 4 sum_k H_{k-1}(-2a)/k^{2b+1}, the double sum taken as
// sum_{j>=1} (-1)^j j^{-2a} (zeta(2b+1) - H_j(2b+1))
FixedDecimal star121_euler(int a, int b, int W)
{
	long n = static_cast<long>((W + 4) / 0.7655) + 2;
	FixedDecimal z = zeta_w(2 * b + 1, W);
	auto H = strict_prefixes(SumKind::Strict, Composition{2 * b + 1}, n + 2);
	// sum_{j>=1} (-1)^j x_j = -sum_{i>=0} (-1)^i x_{i+1}
	FixedDecimal alt = alternating_w(
	    [&](long i) {
		    long j = i + 1;
		    BigRational w = BigRational(1, j).pow(2 * a);
		    return scaled(z - FixedDecimal::from_rational(H[j], W), w);
	    },
	    W);
	return zetabar_w(2 * a + 2 * b + 1, W).times(BigInt(2)) + alt.times(BigInt(4));
}

Composition rep_with(int a, int mid, int b)
{
	return Composition::repeat(2, a) + Composition{mid} + Composition::repeat(2, b);
}

void finish(SeriesResult &r)
{
	r.pass = true;
	for (size_t i = 0; i < r.values.size(); ++i)
		for (size_t j = i + 1; j < r.values.size(); ++j)
			if (!agrees(r.values[i].value, r.values[j].value, r.tolerance)) {
				r.pass = false;
				if (r.message.empty())
					r.message = r.values[i].method + " and " + r.values[j].method + " differ beyond tolerance";
			}
}

SeriesResult start(const std::string &target, const SeriesParams &p, int digits)
{
	SeriesResult r;
	r.target = target;
	r.params = p;
	r.digits = digits;
	r.tolerance = ten_pow(-digits);
	return r;
}

} // namespace

BigRational SeriesResult::worst() const
{
	BigRational w;
	for (size_t i = 0; i < values.size(); ++i)
		for (size_t j = i + 1; j < values.size(); ++j)
			w = std::max(w, abs_difference(values[i].value, values[j].value) + values[i].value.error_bound() +
			                    values[j].value.error_bound());
	return w;
}

const std::vector<std::string> &series_targets()
{
	static const std::vector<std::string> t{"APERY2",    "APERY3",    "LESH-2",     "LESH-3",     "LESH-4",
	                                        "LESH-5",    "ZSTAR-231", "ZSTAR-121",  "ZSTAR-12b",  "ZAGIER-ZZZZ"};
	return t;
}

int series_max_digits(const std::string &target)
{
	if (target.rfind("APERY", 0) == 0 || target.rfind("LESH", 0) == 0)
		return 40;
	if (target.rfind("ZSTAR", 0) == 0 || target == "ZAGIER-ZZZZ")
		return 20;
	throw InvalidInput("unknown series target '" + target + "'");
}

SeriesResult zeta_star_check(const std::string &family, int a, int b, int digits)
{
	check_digits(digits, series_max_digits(family));
	if (a < 0 || b < 0 || a > 3 || b > 3)
		throw InvalidInput("zeta-star checks take 0 <= a, b <= 3");
	int W = digits + kGuardDigits;
	SeriesResult r = start(family, {0, a, b}, digits);
	try {
		if (family == "ZSTAR-231") {
			r.values.push_back({"euler-sum", star231_euler(a, b, W)});
			r.values.push_back({"closed-form", star231_closed(a, b, W)});
			r.values.push_back({"direct", zeta_star_direct(rep_with(a, 3, b), W)});
		} else if (family == "ZAGIER-ZZZZ") {
			r.values.push_back({"zagier", star231_zagier(a, b, W)});
			r.values.push_back({"closed-form", star231_closed(a, b, W)});
			r.values.push_back({"direct", zeta_star_direct(rep_with(a, 3, b), W)});
		} else if (family == "ZSTAR-121") {
			if (a < 1 || b < 1)
				throw InvalidInput("ZSTAR-121 needs a, b >= 1");
			r.values.push_back({"euler-sum", star121_euler(a, b, W)});
			r.values.push_back({"closed-form", star121_closed(a, b, W)});
			r.values.push_back({"direct", zeta_star_direct(rep_with(a, 1, b), W)});
		} else if (family == "ZSTAR-12b") {
			if (a != 0 || b < 1)
				throw InvalidInput("ZSTAR-12b needs a = 0, b >= 1");
			r.values.push_back({"direct", zeta_star_direct(rep_with(0, 1, b), W)});
			r.values.push_back({"closed-form", zeta_w(2 * b + 1, W).times(BigInt(2))});
		} else {
			throw InvalidInput("unknown zeta-star family '" + family + "'");
		}
	} catch (const SeriesFailure &e) {
		r.message = e.what();
		r.pass = false;
		return r;
	}
	finish(r);
	return r;
}

SeriesResult evaluate_series(const std::string &target, const SeriesParams &params, int digits)
{
	if (target.rfind("ZSTAR", 0) == 0 || target == "ZAGIER-ZZZZ")
		return zeta_star_check(target, params.a, params.b, digits);
	check_digits(digits, series_max_digits(target));
	int W = digits + kGuardDigits;
	int m = params.m;
	if (m < 0 || m > 6)
		throw InvalidInput("m must lie in 0..6");
	SeriesResult r = start(target, params, digits);
	try {
		if (target == "APERY2") {
			r.values.push_back({"series", lesh_value(2, 0, W).times(BigInt(2))});
			r.values.push_back({"reference", zeta_w(2, W)});
		} else if (target == "APERY3") {
			r.values.push_back({"series", (-lesh_value(3, 0, W))});
			r.values.push_back({"reference", zeta_w(3, W)});
		} else if (target == "LESH-2") {
			r.values.push_back({"series", lesh_value(2, m, W)});
			r.values.push_back({"reference", scaled(zeta_w(2 * m + 2, W), 1 - BigRational(2).pow(-2 * m - 1))});
		} else if (target == "LESH-3") {
			r.values.push_back({"series", lesh_value(3, m, W)});
			r.values.push_back({"reference", scaled(zeta_w(2 * m + 3, W), sgn(m - 1))});
		} else if (target == "LESH-4") {
			r.values.push_back({"series", lesh_value(4, m, W)});
			r.values.push_back({"reference", scaled(zeta_w(2 * m + 2, W), 1 - BigRational(2).pow(-2 * m - 2))});
		} else if (target == "LESH-5") {
			r.values.push_back({"series", lesh_value(5, m, W)});
			r.values.push_back({"reference", beta_w(2 * m + 1, W)});
			r.values.push_back({"euler-number-form", beta_closed_form(m, W)});
		} else {
			throw InvalidInput("unknown series target '" + target + "'");
		}
	} catch (const SeriesFailure &e) {
		r.message = e.what();
		r.pass = false;
		return r;
	}
	finish(r);
	return r;
}

SeriesResult finite_to_infinite_check(int a, int b, long n, int digits)
{
	check_digits(digits, 30);
	if (a < 0 || b < 0 || n < 1)
		throw InvalidInput("need a, b >= 0 and n >= 1");
	int W = digits + kGuardDigits;
	SeriesResult r = start("FINITE-231", {0, a, b}, digits);
	// S_n = 2 sum (-1)^{k-1} rho_k / k^{2a+2b+3} + 4 sum H_{k-1}(2a+1) (-1)^{k-1} rho_k / k^{2b+2},
	// rho_k = C(n,k)/C(n+k,k)
	FixedDecimal rho = FixedDecimal::from_rational(BigRational(1), W);
	FixedDecimal h(W), total(W);
	for (long k = 1; k <= n; ++k) {
		rho = rho.times(BigInt(n - k + 1)).divided_by(BigInt(n + k));
		FixedDecimal t = rho.divided_by(BigInt(k).pow(static_cast<unsigned long>(2 * a + 2 * b + 3))).times(BigInt(2)) +
		                 (rho * h).divided_by(BigInt(k).pow(static_cast<unsigned long>(2 * b + 2))).times(BigInt(4));
		total = k % 2 ? total + t : total - t;
		h = h + FixedDecimal::from_rational(BigRational(1, k).pow(2 * a + 1), W);
	}
	Composition s = rep_with(a, 3, b);
	FixedDecimal star = zeta_star_direct(s, W);
	// zeta* - S_n <= prod_{i<r} zeta(s_i) * sum_{k>n} k^{-s_r} <= prod zeta(s_i) / ((s_r - 1) n^{s_r - 1})
	BigRational bound(1);
	for (size_t i = 0; i + 1 < s.length(); ++i) {
		FixedDecimal z = zeta_w(s[i], W);
		bound *= z.value() + z.error_bound();
	}
	int last = s[s.length() - 1];
	bound /= BigRational(last - 1) * BigRational(n).pow(last - 1);
	r.tolerance = bound;
	r.values.push_back({"finite n=" + std::to_string(n), total});
	r.values.push_back({"zeta-star", star});
	BigRational diff = star.value() - total.value();
	BigRational slack = star.error_bound() + total.error_bound();
	r.pass = diff + slack >= 0 && diff - slack <= bound;
	if (!r.pass)
		r.message = "partial sum outside the tail bound";
	return r;
}

SeriesResult bernoulli_pi_check(int m, int digits)
{
	check_digits(digits, kMaxDigits);
	if (m < 1)
		throw InvalidInput("m must be positive");
	int W = digits + kGuardDigits;
	SeriesResult r = start("ZETA-EVEN", {m, 0, 0}, digits);
	r.tolerance = ten_pow(-(digits - 2));
	r.values.push_back({"reference", zeta_w(2 * m, W)});
	r.values.push_back({"bernoulli-form", zeta_even_closed_form(m, W)});
	finish(r);
	return r;
}

} // namespace mhs
