#include "mhs/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "mhs/special_numbers.hpp"

namespace mhs {

// ---------------------------------------------------------------- expressions

namespace {

Factor of_kind(Factor::Kind k)
{
	Factor f;
	f.kind = k;
	return f;
}

Expr single(Factor f)
{
	Expr e;
	e.terms.push_back({BigRational(1), 0, {std::move(f)}});
	return e;
}

} // namespace

Expr constant(const BigRational &c)
{
	Expr e;
	if (!c.is_zero())
		e.terms.push_back({c, 0, {}});
	return e;
}

Expr p_power(int e)
{
	Expr x;
	x.terms.push_back({BigRational(1), e, {}});
	return x;
}

Expr bern(long m)
{
	Factor f = of_kind(Factor::Bernoulli);
	f.index = m;
	return single(f);
}

Expr fermat_q() { return single(of_kind(Factor::Fermat)); }

Expr mhs_sum(SumKind kind, const Composition &s, Bound bound)
{
	if (kind == SumKind::Odd && bound != Bound::Half)
		throw InvalidInput("odd-denominator sums are taken up to (p-1)/2");
	Factor f = of_kind(Factor::Sum);
	f.sum_kind = kind;
	f.comp = s;
	f.bound = bound;
	return single(f);
}

Expr analogue(Analogue which, int m)
{
	Factor f = of_kind(Factor::PAnalogue);
	f.index = m;
	f.analogue = which;
	return single(f);
}

Expr sign_half() { return single(of_kind(Factor::SignHalf)); }

Expr operator+(Expr a, const Expr &b)
{
	a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
	return a;
}

Expr operator*(const BigRational &c, Expr e)
{
	if (c.is_zero())
		return Expr{};
	for (auto &t : e.terms)
		t.coeff *= c;
	return e;
}

Expr operator-(Expr a, const Expr &b) { return std::move(a) + BigRational(-1) * b; }

Expr operator*(const Expr &a, const Expr &b)
{
	Expr out;
	for (const auto &x : a.terms)
		for (const auto &y : b.terms) {
			Term t{x.coeff * y.coeff, x.p_power + y.p_power, x.factors};
			t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
			out.terms.push_back(std::move(t));
		}
	return out;
}

// ---------------------------------------------------------------- p-analogues

namespace {

constexpr int kPrec = 3;      // sums and constants are carried mod p^3
constexpr int kLoopPrec = 4;  // analogue sums and loop checks divide by p once

PAdicApprox from_residue(const ModInt &x)
{
	if (x.is_zero())
		return PAdicApprox::zero_mod(x.prime(), x.exponent());
	int v = x.valuation();
	u64 pv = ipow(x.prime(), v);
	return PAdicApprox::from_unit(v, ModInt(x.prime(), x.exponent() - v, x.residue() / pv));
}

BigRational sgn(long e) { return e % 2 ? BigRational(-1) : BigRational(1); }

BigRational binom(long r, long k) { return BigRational(binomial(r, k)); }

BigRational pow2(long e) { return BigRational(2).pow(e); }

void require_analogue_prime(u64 p, int m)
{
	if (m < 0 || p <= static_cast<u64>(2 * m + 3))
		throw InvalidInput("p-analogues need m >= 0 and p > 2m+3");
}

} // namespace

ZetaPValues zeta_p_values(u64 p, int m)
{
	require_analogue_prime(p, m);
	ModRing ring(p, kLoopPrec);
	long n = static_cast<long>(p - 1), h = static_cast<long>((p - 3) / 2);
	std::vector<std::vector<ModInt>> H, Hb;
	for (int j = 0; j <= m; ++j) {
		H.push_back(evaluate_prefixes(ring, SumKind::Strict, Composition::repeat(2, m - j), n));
		Hb.push_back(evaluate_prefixes(ring, SumKind::Odd, Composition::repeat(2, m - j), h));
	}
	ModInt c32 = ring.from_rational(BigRational(3, 2)), c52 = ring.from_rational(BigRational(5, 2));
	ModInt c34 = ring.from_rational(BigRational(3, 4)), c54 = ring.from_rational(BigRational(5, 4));
	ModInt two = ring.from_int(2);
	auto sg = [&](long e) { return e % 2 ? ring.from_int(-1) : ring.one(); };

	PAdicApprox zeven = PAdicApprox::exact_zero(p), zodd = zeven, beta = zeven, zbar = zeven;
	PAdicApprox central = to_padic(BigRational(1), p, kLoopPrec);
	for (long k = 1; k <= n; ++k) {
		central = central * to_padic(BigRational(2 * (2 * k - 1), k), p, kLoopPrec);
		PAdicApprox inv_c = central.inverse();
		ModInt e = c32 * sg(m) * H[0][k - 1] * ring.inv_power(k, 2);
		ModInt o = c52 * sg(m - 1) * H[0][k - 1] * ring.inv_power(k, 3);
		for (int j = 1; j <= m; ++j) {
			e += two * sg(m - j) * H[j][k - 1] * ring.inv_power(k, 2 * j + 2);
			o += two * sg(m - j - 1) * H[j][k - 1] * ring.inv_power(k, 2 * j + 3);
		}
		if (k % 2)
			o = -o;
		zeven += from_residue(e) * inv_c;
		zodd += from_residue(o) * inv_c;
	}
	ModInt d = ring.one(), inv16 = ring.inv(16);
	for (long k = 0; k <= h; ++k) {
		if (k > 0)
			d = d * ring.from_int(2 * (2 * k - 1)) * ring.inv(k) * inv16;
		ModInt b = c34 * sg(m) * Hb[0][k] * ring.inv(2 * k + 1);
		ModInt z = c54 * sg(m) * Hb[0][k] * ring.inv_power(2 * k + 1, 2);
		for (int j = 1; j <= m; ++j) {
			b += sg(m - j) * Hb[j][k] * ring.inv_power(2 * k + 1, 2 * j + 1);
			z += sg(m - j) * Hb[j][k] * ring.inv_power(2 * k + 1, 2 * j + 2);
		}
		if (k % 2)
			z = -z;
		beta += from_residue(d * b);
		zbar += from_residue(d * z);
	}
	return {zeven, zodd, beta, zbar};
}

ZetaPExact zeta_p_exact(u64 p, int m)
{
	require_analogue_prime(p, m);
	RationalRing ring;
	long n = static_cast<long>(p - 1), h = static_cast<long>((p - 3) / 2);
	std::vector<std::vector<BigRational>> H, Hb;
	for (int j = 0; j <= m; ++j) {
		H.push_back(evaluate_prefixes(ring, SumKind::Strict, Composition::repeat(2, m - j), n));
		Hb.push_back(evaluate_prefixes(ring, SumKind::Odd, Composition::repeat(2, m - j), h));
	}
	ZetaPExact z;
	for (long k = 1; k <= n; ++k) {
		BigRational c = binom(2 * k, k);
		z.zeta_even += BigRational(3, 2) * sgn(m) * H[0][k - 1] / (BigRational(k).pow(2) * c);
		z.zeta_odd += BigRational(5, 2) * sgn(k + m - 1) * H[0][k - 1] / (BigRational(k).pow(3) * c);
		for (int j = 1; j <= m; ++j) {
			z.zeta_even += 2 * sgn(m - j) * H[j][k - 1] / (BigRational(k).pow(2 * j + 2) * c);
			z.zeta_odd += 2 * sgn(k + m - j - 1) * H[j][k - 1] / (BigRational(k).pow(2 * j + 3) * c);
		}
	}
	for (long k = 0; k <= h; ++k) {
		BigRational d = binom(2 * k, k) / BigRational(16).pow(k);
		BigRational q(2 * k + 1);
		z.beta += BigRational(3, 4) * sgn(m) * d * Hb[0][k] / q;
		z.zetabar += BigRational(5, 4) * sgn(k + m) * d * Hb[0][k] / q.pow(2);
		for (int j = 1; j <= m; ++j) {
			z.beta += sgn(m - j) * d * Hb[j][k] / q.pow(2 * j + 1);
			z.zetabar += sgn(k + m - j) * d * Hb[j][k] / q.pow(2 * j + 2);
		}
	}
	return z;
}

// ---------------------------------------------------------------- per-prime evaluation

namespace {

long bound_index(u64 p, Bound b)
{
	switch (b) {
	case Bound::Full:
		return static_cast<long>(p - 1);
	case Bound::Half:
		return static_cast<long>((p - 1) / 2);
	case Bound::Quarter:
		return static_cast<long>(p / 4);
	}
	return 0;
}

using SumKey = std::pair<int, std::vector<int>>;

SumKey sum_key(const Factor &f) { return {static_cast<int>(f.sum_kind), f.comp.parts()}; }

// Everything one prime needs, computed once and shared by all cases.
class PrimeContext {
public:
	explicit PrimeContext(u64 p) : p_(p), ring_(p, kPrec) {}

	u64 prime() const { return p_; }

	PAdicApprox factor(const Factor &f)
	{
		switch (f.kind) {
		case Factor::Bernoulli: {
			auto it = bern_.find(f.index);
			if (it == bern_.end()) {
				long k = static_cast<long>(p_) - f.index;
				if (k < 0)
					throw InvalidInput("Bernoulli index below zero");
				it = bern_.emplace(f.index, from_residue(bernoulli_residue(p_, k))).first;
			}
			return it->second;
		}
		case Factor::Fermat:
			if (!fermat_)
				fermat_ = from_residue(fermat_quotient_mod(p_, kPrec));
			return *fermat_;
		case Factor::Sum: {
			auto key = sum_key(f);
			auto it = sums_.find(key);
			if (it == sums_.end()) {
				long top = f.sum_kind == SumKind::Odd ? static_cast<long>((p_ - 1) / 2) : static_cast<long>(p_ - 1);
				it = sums_.emplace(key, evaluate_prefixes(ring_, f.sum_kind, f.comp, top)).first;
			}
			return from_residue(it->second.at(static_cast<size_t>(bound_index(p_, f.bound))));
		}
		case Factor::PAnalogue: {
			auto it = analogues_.find(f.index);
			if (it == analogues_.end())
				it = analogues_.emplace(f.index, zeta_p_values(p_, static_cast<int>(f.index))).first;
			switch (f.analogue) {
			case Analogue::ZetaEven:
				return it->second.zeta_even;
			case Analogue::ZetaOdd:
				return it->second.zeta_odd;
			case Analogue::Beta:
				return it->second.beta;
			case Analogue::ZetaBar:
				return it->second.zetabar;
			}
			break;
		}
		case Factor::SignHalf:
			return to_padic(BigRational((p_ + 1) / 2 % 2 ? -1 : 1), p_, kPrec);
		}
		throw InvalidInput("unknown factor");
	}

	PAdicApprox eval(const Expr &e)
	{
		PAdicApprox total = PAdicApprox::exact_zero(p_);
		for (const auto &t : e.terms) {
			if (t.coeff.is_zero())
				continue;
			PAdicApprox v = to_padic(t.coeff, p_, kPrec);
			if (t.p_power)
				v = v * PAdicApprox::from_unit(t.p_power, ModInt(p_, kPrec, 1));
			for (const auto &f : t.factors)
				v = v * factor(f);
			total = total + v;
		}
		return total;
	}

private:
	u64 p_;
	ModRing ring_;
	std::map<long, PAdicApprox> bern_;
	std::optional<PAdicApprox> fermat_;
	std::map<SumKey, std::vector<ModInt>> sums_;
	std::map<long, ZetaPValues> analogues_;
};

// The same expressions over the rationals.
class ExactContext {
public:
	explicit ExactContext(u64 p) : p_(p) {}

	BigRational factor(const Factor &f)
	{
		switch (f.kind) {
		case Factor::Bernoulli:
			return bernoulli_exact(static_cast<long>(p_) - f.index);
		case Factor::Fermat: {
			BigInt two(2);
			return BigRational(two.pow(p_ - 1) - 1, BigInt(static_cast<unsigned long>(p_)));
		}
		case Factor::Sum: {
			auto key = std::make_tuple(static_cast<int>(f.sum_kind), f.comp.parts(), static_cast<int>(f.bound));
			auto it = sums_.find(key);
			if (it == sums_.end())
				it = sums_.emplace(key, evaluate_exact(f.sum_kind, f.comp, bound_index(p_, f.bound))).first;
			return it->second;
		}
		case Factor::PAnalogue: {
			auto it = analogues_.find(f.index);
			if (it == analogues_.end())
				it = analogues_.emplace(f.index, zeta_p_exact(p_, static_cast<int>(f.index))).first;
			switch (f.analogue) {
			case Analogue::ZetaEven:
				return it->second.zeta_even;
			case Analogue::ZetaOdd:
				return it->second.zeta_odd;
			case Analogue::Beta:
				return it->second.beta;
			case Analogue::ZetaBar:
				return it->second.zetabar;
			}
			break;
		}
		case Factor::SignHalf:
			return BigRational((p_ + 1) / 2 % 2 ? -1 : 1);
		}
		throw InvalidInput("unknown factor");
	}

	BigRational eval(const Expr &e)
	{
		BigRational total;
		BigInt pp(static_cast<unsigned long>(p_));
		for (const auto &t : e.terms) {
			if (t.coeff.is_zero())
				continue;
			BigRational v = t.coeff * BigRational(pp).pow(t.p_power);
			for (const auto &f : t.factors)
				v *= factor(f);
			total += v;
		}
		return total;
	}

private:
	u64 p_;
	std::map<std::tuple<int, std::vector<int>, int>, BigRational> sums_;
	std::map<long, ZetaPExact> analogues_;
};

CheckResult evaluate_case(const std::string &id, const ClaimCase &c, u64 p, PrimeContext &ctx,
                          std::optional<ExactContext> &exact)
{
	CheckResult r;
	r.claim = id;
	r.params = c.params;
	r.p = p;
	r.N = c.N;
	if (p < c.min_prime) {
		r.status = CheckStatus::Skipped;
		r.message = "needs p >= " + std::to_string(c.min_prime);
		return r;
	}
	try {
		if (c.custom) {
			CustomOutcome out = c.custom(p, false);
			r.lhs = out.lhs.residue();
			r.rhs = out.rhs.residue();
			r.message = out.message;
			r.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
			if (p <= kOracleLimit) {
				CustomOutcome ex = c.custom(p, true);
				if (ex.pass != out.pass || !(ex.lhs == out.lhs) || !(ex.rhs == out.rhs)) {
					r.status = CheckStatus::Error;
					r.message = "exact recomputation disagrees";
					return r;
				}
				r.oracle = true;
			}
			return r;
		}
		ModInt lhs = ctx.eval(c.lhs).residue(c.N);
		ModInt rhs = ctx.eval(c.rhs).residue(c.N);
		r.lhs = lhs.residue();
		r.rhs = rhs.residue();
		r.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
		if (p <= kOracleLimit) {
			if (!exact)
				exact.emplace(p);
			ModInt ex = to_padic(exact->eval(c.lhs), p, c.N).residue(c.N);
			if (!(ex == lhs)) {
				r.status = CheckStatus::Error;
				r.message = "exact LHS " + std::to_string(ex.residue()) + " disagrees with modular LHS";
				return r;
			}
			r.oracle = true;
		}
	} catch (const PrecisionExhausted &e) {
		r.status = CheckStatus::Error;
		r.message = std::string("precision exhausted: ") + e.what();
	} catch (const NotPIntegral &e) {
		r.status = CheckStatus::Error;
		r.message = std::string("not p-integral: ") + e.what();
	}
	return r;
}

// ---------------------------------------------------------------- loop-style checks

struct PAdicNum {
	u64 p;
	using T = PAdicApprox;
	T q(const BigRational &r) const { return to_padic(r, p, kLoopPrec); }
	ModInt res(const T &x, int N) const { return x.residue(N); }
};

struct ExactNum {
	u64 p;
	using T = BigRational;
	T q(const BigRational &r) const { return r; }
	ModInt res(const T &x, int N) const { return to_padic(x, p, N).residue(N); }
};

template <class Num>
bool compare_at(const Num &num, const typename Num::T &x, const typename Num::T &y, int N, long k,
                CustomOutcome &out)
{
	out.lhs = num.res(x, N);
	out.rhs = num.res(y, N);
	if (out.lhs == out.rhs)
		return true;
	out.pass = false;
	out.message = "first failure at k=" + std::to_string(k);
	return false;
}

// p C(p-1,k)/C(p-1+k,k) == (-1)^k k (1 - 2p H_{k-1}(1) - p/k) mod p^2
template <class Num>
CustomOutcome binomial_ratio_check(const Num &num)
{
	long p = static_cast<long>(num.p);
	CustomOutcome out;
	auto A = num.q(1), B = num.q(1), H1 = num.q(0);
	for (long k = 1; k <= p - 1; ++k) {
		A = A * num.q(BigRational(p - k, k));
		B = B * num.q(BigRational(p - 1 + k, k));
		auto X = num.q(p) * A * B.inverse();
		auto Y = num.q(sgn(k) * k) * (num.q(1) - num.q(2 * p) * H1 - num.q(BigRational(p, k)));
		if (!compare_at(num, X, Y, 2, k, out))
			return out;
		H1 = H1 + num.q(BigRational(1, k));
	}
	return out;
}

// p (-1)^k / (k^2 C(p-1,k) C(p-1+k,k)) == p (1/(pk) + 1/k^2 + p H_k(2)/k) mod p^3
template <class Num>
CustomOutcome binomial_product_check(const Num &num)
{
	long p = static_cast<long>(num.p);
	CustomOutcome out;
	auto A = num.q(1), B = num.q(1), H2 = num.q(0);
	for (long k = 1; k <= p - 1; ++k) {
		A = A * num.q(BigRational(p - k, k));
		B = B * num.q(BigRational(p - 1 + k, k));
		H2 = H2 + num.q(BigRational(1, k * k));
		auto X = num.q(sgn(k) * BigRational(p, k * k)) * (A * B).inverse();
		auto Y = num.q(BigRational(1, k)) + num.q(BigRational(p, k * k)) + num.q(BigRational(p * p, k)) * H2;
		if (!compare_at(num, X, Y, 3, k, out))
			return out;
	}
	return out;
}

// C(2k,k) / ((-16)^k C((p-1)/2+k, 2k+1)) == -2 - 2p/(2k+1) mod p^2, 0 <= k <= (p-3)/2
template <class Num>
CustomOutcome central_ratio_check(const Num &num)
{
	long p = static_cast<long>(num.p), h = (p - 1) / 2;
	CustomOutcome out;
	auto c = num.q(1), D = num.q(h);
	for (long k = 0; k <= (p - 3) / 2; ++k) {
		if (k > 0) {
			c = c * num.q(BigRational(2 * (2 * k - 1), k));
			D = D * num.q(BigRational((h + k) * (h - k), 2 * k * (2 * k + 1)));
		}
		auto X = c * (num.q(BigRational(-16).pow(k)) * D).inverse();
		auto Y = num.q(BigRational(-2) - BigRational(2 * p, 2 * k + 1));
		if (!compare_at(num, X, Y, 2, k, out))
			return out;
	}
	return out;
}

std::function<CustomOutcome(u64, bool)> loop_check(CustomOutcome (*padic)(const PAdicNum &),
                                                    CustomOutcome (*exact)(const ExactNum &))
{
	return [padic, exact](u64 p, bool use_exact) {
		return use_exact ? exact(ExactNum{p}) : padic(PAdicNum{p});
	};
}

// ---------------------------------------------------------------- catalog

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

Composition cat(std::initializer_list<Composition> parts)
{
	Composition out;
	for (const auto &c : parts)
		out = out + c;
	return out;
}

Expr H(const Composition &s, Bound b = Bound::Full) { return mhs_sum(SumKind::Strict, s, b); }
Expr S(const Composition &s, Bound b = Bound::Full) { return mhs_sum(SumKind::NonStrict, s, b); }
Expr Hbar(const Composition &s) { return mhs_sum(SumKind::Odd, s, Bound::Half); }

// c * p^e * B_{p-m}
Expr pb(const BigRational &c, int e, long m) { return c * (p_power(e) * bern(m)); }

std::string num(long v) { return std::to_string(v); }

// strict inequality p > x
u64 gt(long x) { return static_cast<u64>(std::max(5L, x + 1)); }
u64 ge(long x) { return static_cast<u64>(std::max(5L, x)); }

int expr_weight(const Expr &e)
{
	int w = 0;
	for (const auto &t : e.terms)
		for (const auto &f : t.factors) {
			if (f.kind == Factor::Sum)
				w = std::max(w, f.comp.weight());
			if (f.kind == Factor::PAnalogue)
				w = std::max(w, static_cast<int>(2 * f.index + 3));
		}
	return w;
}

class CatalogBuilder {
public:
	CongruenceClaim &claim(std::string id, std::string statement, std::string condition)
	{
		CongruenceClaim c;
		c.id = std::move(id);
		c.statement = std::move(statement);
		c.condition = std::move(condition);
		c.N = 0;
		c.default_pmax = 0;
		claims_.push_back(std::move(c));
		return claims_.back();
	}

	void add(Params params, int N, u64 min_prime, Expr lhs, Expr rhs)
	{
		ClaimCase c;
		c.params = std::move(params);
		c.N = N;
		c.min_prime = min_prime;
		c.lhs = std::move(lhs);
		c.rhs = std::move(rhs);
		push(std::move(c));
	}

	void add_loop(int N, std::function<CustomOutcome(u64, bool)> check)
	{
		ClaimCase c;
		c.N = N;
		c.custom = std::move(check);
		push(std::move(c));
	}

	std::vector<CongruenceClaim> finish()
	{
		for (auto &c : claims_) {
			if (c.default_pmax != 0)
				continue;
			int w = 0;
			for (const auto &k : c.cases)
				w = std::max({w, expr_weight(k.lhs), expr_weight(k.rhs)});
			c.default_pmax = w <= 5 ? 1000 : 300;
		}
		return std::move(claims_);
	}

private:
	void push(ClaimCase c)
	{
		auto &cl = claims_.back();
		cl.N = std::max(cl.N, c.N);
		cl.cases.push_back(std::move(c));
	}

	std::vector<CongruenceClaim> claims_;
};

std::vector<CongruenceClaim> build_catalog()
{
	CatalogBuilder b;
	const Expr zero;

	// ---- Wolstenholme, Glaisher-Lehmer
	b.claim("WOLST-1", "H_{p-1}(1) == 0 mod p^2", "p >= 5");
	b.add({}, 2, 5, H(comp({1})), zero);
	b.claim("WOLST-2", "H_{p-1}(2) == 0 mod p", "p >= 5");
	b.add({}, 1, 5, H(comp({2})), zero);

	b.claim("GL",
	        "H_{p-1}(m) == -m(m+1)/(2(m+2)) p^2 B_{p-m-2} mod p^3 (m odd); "
	        "m/(m+1) p B_{p-m-1} mod p^2 (m even)",
	        "p >= m+3");
	for (long m = 1; m <= 8; ++m) {
		if (m % 2)
			b.add({{"m", num(m)}}, 3, ge(m + 3), H(comp({int(m)})),
			      pb(BigRational(-m * (m + 1), 2 * (m + 2)), 2, m + 2));
		else
			b.add({{"m", num(m)}}, 2, ge(m + 3), H(comp({int(m)})), pb(BigRational(m, m + 1), 1, m + 1));
	}

	// ---- depth one to three at p-1 and (p-1)/2
	b.claim("F-i",
	        "H_{p-1}({a}^r) == (-1)^r a(ar+1)/(2(ar+2)) p^2 B_{p-ar-2} mod p^3 (ar odd); "
	        "(-1)^{r-1} a/(ar+1) p B_{p-ar-1} mod p^2 (ar even)",
	        "p > ar+2");
	for (long a = 1; a <= 4; ++a)
		for (long r = 1; r <= 4; ++r) {
			long w = a * r;
			Params ps{{"a", num(a)}, {"r", num(r)}};
			Expr lhs = H(Composition::repeat(int(a), int(r)));
			if (w % 2)
				b.add(ps, 3, gt(w + 2), lhs, pb(sgn(r) * BigRational(a * (w + 1), 2 * (w + 2)), 2, w + 2));
			else
				b.add(ps, 2, gt(w + 2), lhs, pb(sgn(r - 1) * BigRational(a, w + 1), 1, w + 1));
		}

	b.claim("F-ii-a", "H_{p-1}(a1,a2) == (-1)^{a2} C(w,a1)/w B_{p-w} mod p, w = a1+a2", "p >= w");
	for (int a1 = 1; a1 <= 5; ++a1)
		for (int a2 = 1; a2 <= 5; ++a2) {
			long w = a1 + a2;
			b.add({{"a1", num(a1)}, {"a2", num(a2)}}, 1, ge(w), H(comp({a1, a2})),
			      pb(sgn(a2) * binom(w, a1) / BigRational(w), 0, w));
		}

	b.claim("F-ii-b",
	        "H_{p-1}(a1,a2) == ((-1)^{a1} a2 C(w+1,a1) - (-1)^{a1} a1 C(w+1,a2) - w)/(2(w+1)) p B_{p-w-1} mod p^2",
	        "w = a1+a2 even, p > w+1");
	for (int a1 = 1; a1 <= 5; ++a1)
		for (int a2 = 1; a2 <= 5; ++a2) {
			long w = a1 + a2;
			if (w % 2)
				continue;
			BigRational c = (sgn(a1) * a2 * binom(w + 1, a1) - sgn(a1) * a1 * binom(w + 1, a2) - BigRational(w)) /
			                BigRational(2 * (w + 1));
			b.add({{"a1", num(a1)}, {"a2", num(a2)}}, 2, gt(w + 1), H(comp({a1, a2})), pb(c, 1, w + 1));
		}

	b.claim("F-iii", "H_{p-1}(a1,a2,a3) == ((-1)^{a1} C(w,a1) - (-1)^{a3} C(w,a3))/(2w) B_{p-w} mod p",
	        "w = a1+a2+a3 odd, p > w");
	for (int a1 = 1; a1 <= 4; ++a1)
		for (int a2 = 1; a2 <= 4; ++a2)
			for (int a3 = 1; a3 <= 4; ++a3) {
				long w = a1 + a2 + a3;
				if (w % 2 == 0)
					continue;
				BigRational c = (sgn(a1) * binom(w, a1) - sgn(a3) * binom(w, a3)) / BigRational(2 * w);
				b.add({{"a1", num(a1)}, {"a2", num(a2)}, {"a3", num(a3)}}, 1, gt(w), H(comp({a1, a2, a3})),
				      pb(c, 0, w));
			}

	Expr q = fermat_q();
	auto fermat_cubic = [&](const BigRational &bc) {
		return BigRational(-2) * q + p_power(1) * q * q -
		       p_power(2) * (BigRational(2, 3) * (q * q * q) + bc * bern(3));
	};

	b.claim("F-iv",
	        "H_{(p-1)/2}(1) == -2q + p q^2 - p^2(2/3 q^3 + 7/12 B_{p-3}) mod p^3; "
	        "a even: a(2^{a+1}-1)/(2(a+1)) p B_{p-a-1} mod p^2; a odd > 1: -(2^a-2)/a B_{p-a} mod p",
	        "p >= a+2, q = q_p(2)");
	for (int a = 1; a <= 7; ++a) {
		Expr lhs = H(comp({a}), Bound::Half);
		if (a == 1)
			b.add({{"a", "1"}}, 3, 5, lhs, fermat_cubic(BigRational(7, 12)));
		else if (a % 2 == 0)
			b.add({{"a", num(a)}}, 2, ge(a + 2), lhs,
			      pb(BigRational(a) * (pow2(a + 1) - 1) / BigRational(2 * (a + 1)), 1, a + 1));
		else
			b.add({{"a", num(a)}}, 1, ge(a + 2), lhs, pb(-(pow2(a) - 2) / BigRational(a), 0, a));
	}

	b.claim("F-v", "H_{(p-1)/2}(a,b) == ((-1)^b C(a+b,a) + 2^{a+b} - 2)/(2(a+b)) B_{p-a-b} mod p",
	        "a+b odd, p > a+b");
	for (int a = 1; a <= 5; ++a)
		for (int bb = 1; bb <= 5; ++bb) {
			long w = a + bb;
			if (w % 2 == 0)
				continue;
			b.add({{"a", num(a)}, {"b", num(bb)}}, 1, gt(w), H(comp({a, bb}), Bound::Half),
			      pb((sgn(bb) * binom(w, a) + pow2(w) - 2) / BigRational(2 * w), 0, w));
		}

	b.claim("F-vi",
	        "H_{p-1}(-1) == -2q + p q^2 - p^2(2/3 q^3 + 1/4 B_{p-3}) mod p^3; "
	        "a even: a(1-2^{-a})/(a+1) p B_{p-a-1} mod p^2; a odd > 1: -2(1-2^{1-a})/a B_{p-a} mod p",
	        "p >= a+2, q = q_p(2)");
	for (int a = 1; a <= 7; ++a) {
		Expr lhs = H(comp({-a}));
		if (a == 1)
			b.add({{"a", "1"}}, 3, 5, lhs, fermat_cubic(BigRational(1, 4)));
		else if (a % 2 == 0)
			b.add({{"a", num(a)}}, 2, ge(a + 2), lhs,
			      pb(BigRational(a) * (1 - pow2(-a)) / BigRational(a + 1), 1, a + 1));
		else
			b.add({{"a", num(a)}}, 1, ge(a + 2), lhs, pb(BigRational(-2) * (1 - pow2(1 - a)) / BigRational(a), 0, a));
	}

	b.claim("F-vi-split", "H_{p-1}(-a) == 2^{1-a} H_{(p-1)/2}(a) - H_{p-1}(a) mod p^3", "p >= 5");
	for (int a = 1; a <= 4; ++a)
		b.add({{"a", num(a)}}, 3, 5, H(comp({-a})), pow2(1 - a) * H(comp({a}), Bound::Half) - H(comp({a})));

	{
		const char *ids[] = {"F-vii-1", "F-vii-2", "F-vii-3"};
		const char *stmts[] = {"H_{p-1}(-a,b) == (1-2^{1-a-b})/(a+b) B_{p-a-b} mod p",
		                       "H_{p-1}(a,-b) == (1-2^{1-a-b})/(a+b) B_{p-a-b} mod p",
		                       "H_{p-1}(-a,-b) == (2^{1-a-b}-1)/(a+b) (-1)^b C(a+b,b) B_{p-a-b} mod p"};
		for (int form = 0; form < 3; ++form) {
			b.claim(ids[form], stmts[form], "a+b odd, p >= a+b+1");
			for (int a = 1; a <= 5; ++a)
				for (int bb = 1; bb <= 5; ++bb) {
					long w = a + bb;
					if (w % 2 == 0)
						continue;
					BigRational c = (1 - pow2(1 - w)) / BigRational(w);
					Composition s = form == 0 ? comp({-a, bb}) : form == 1 ? comp({a, -bb}) : comp({-a, -bb});
					if (form == 2)
						c = -c * sgn(bb) * binom(w, bb);
					b.add({{"a", num(a)}, {"b", num(bb)}}, 1, ge(w + 1), H(s), pb(c, 0, w));
				}
		}
	}

	b.claim("F-viii-1", "2H_{p-1}(a,-b,-c) == H(c+b,a) + H(-c,-b-a) - H(-c) H(-b,a) mod p", "w = a+b+c odd, p > w");
	for (int a = 1; a <= 4; ++a)
		for (int bb = 1; bb <= 4; ++bb)
			for (int c = 1; c <= 4; ++c) {
				int w = a + bb + c;
				if (w % 2 == 0)
					continue;
				b.add({{"a", num(a)}, {"b", num(bb)}, {"c", num(c)}}, 1, gt(w), BigRational(2) * H(comp({a, -bb, -c})),
				      H(comp({c + bb, a})) + H(comp({-c, -bb - a})) - H(comp({-c})) * H(comp({-bb, a})));
			}
	b.claim("F-viii-2",
	        "2H_{p-1}(-a,b,-c) == -H(-c) H(b,-a) - H(-c,b) H(-a) + H(-c-b,-a) + H(-c,-b-a) mod p",
	        "w = a+b+c odd, p > w")
	    .note = "sign of the H(-c)H(b,-a) term is negative; with a positive sign the relation fails";
	for (int a = 1; a <= 4; ++a)
		for (int bb = 1; bb <= 4; ++bb)
			for (int c = 1; c <= 4; ++c) {
				int w = a + bb + c;
				if (w % 2 == 0)
					continue;
				b.add({{"a", num(a)}, {"b", num(bb)}, {"c", num(c)}}, 1, gt(w), BigRational(2) * H(comp({-a, bb, -c})),
				      BigRational(-1) * (H(comp({-c})) * H(comp({bb, -a}))) - H(comp({-c, bb})) * H(comp({-a})) +
				          H(comp({-c - bb, -a})) + H(comp({-c, -bb - a})));
			}

	// ---- alternating depth two
	b.claim("L0",
	        "H_{p-1}(-2a,-2b) == ((a-b)(1-2^{-2a-2b})/((2a+1)(2b+1)) C(2a+2b,2a) - (a+b)/(2a+2b+1)) p "
	        "B_{p-2a-2b-1} mod p^2",
	        "p > 2a+2b+1");
	for (int a = 1; a <= 4; ++a)
		for (int bb = 1; bb <= 4; ++bb) {
			long w = 2 * a + 2 * bb;
			BigRational c = BigRational(a - bb) * (1 - pow2(-w)) / BigRational((2 * a + 1) * (2 * bb + 1)) *
			                    binom(w, 2 * a) -
			                BigRational(a + bb, w + 1);
			b.add({{"a", num(a)}, {"b", num(bb)}}, 2, gt(w + 1), H(comp({-2 * a, -2 * bb})), pb(c, 1, w + 1));
		}
	b.claim("L02",
	        "H_{(p-1)/2}(-2a,-2b-1) == (2^{2a+2b}-1)/(2a+2b+1) (C(2a+2b+1,2a)/2^{2a+2b+1} + 1) B_{p-2a-2b-1} mod p",
	        "p > 2a+2b+1");
	for (int a = 1; a <= 4; ++a)
		for (int bb = 1; bb <= 4; ++bb) {
			long w = 2 * a + 2 * bb;
			BigRational c = (pow2(w) - 1) / BigRational(w + 1) * (binom(w + 1, 2 * a) / pow2(w + 1) + 1);
			b.add({{"a", num(a)}, {"b", num(bb)}}, 1, gt(w + 1), H(comp({-2 * a, -2 * bb - 1}), Bound::Half),
			      pb(c, 0, w + 1));
		}

	// ---- ({2}^a, 3, {2}^b) and ({2}^a, 1, {2}^b)
	auto grid_ab = [](auto fn) {
		for (int a = 0; a <= 4; ++a)
			for (int bb = 0; bb <= 4; ++bb)
				fn(a, bb, Params{{"a", num(a)}, {"b", num(bb)}});
	};
	auto s231 = [](int a, int bb) { return cat({Composition::repeat(2, a), comp({3}), Composition::repeat(2, bb)}); };
	auto s212 = [](int a, int bb) { return cat({Composition::repeat(2, a), comp({1}), Composition::repeat(2, bb)}); };
	auto c231 = [](int a, int bb) { return BigRational(bb - a, (a + 1) * (bb + 1)) * binom(2 * a + 2 * bb + 2, 2 * a + 1); };
	auto c212 = [](int a, int bb) {
		return BigRational(4 * (bb - a)) * (1 - BigRational(4).pow(-a - bb)) / BigRational((2 * a + 1) * (2 * bb + 1)) *
		       binom(2 * a + 2 * bb, 2 * a);
	};

	b.claim("T-231-S",
	        "S_{p-1}({2}^a,3,{2}^b) == (b-a)/((a+1)(b+1)) C(2a+2b+2,2a+1) B_{p-2a-2b-3} mod p", "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 3;
		b.add(ps, 1, gt(w), S(s231(a, bb)), pb(c231(a, bb), 0, w));
	});
	b.claim("T-231-H",
	        "H_{p-1}({2}^a,3,{2}^b) == (-1)^{a+b+1} (b-a)/((a+1)(b+1)) C(2a+2b+2,2a+1) B_{p-2a-2b-3} mod p",
	        "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 3;
		b.add(ps, 1, gt(w), H(s231(a, bb)), pb(-c231(a, bb) * sgn(a + bb), 0, w));
	});
	b.claim("SIGN-27", "(-1)^{a+b+1} S_{p-1}({2}^a,3,{2}^b) == -H_{p-1}({2}^b,3,{2}^a) mod p", "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		b.add(ps, 1, gt(2 * a + 2 * bb + 3), sgn(a + bb + 1) * S(s231(a, bb)), BigRational(-1) * H(s231(bb, a)));
	});
	b.claim("SIGN-28", "H_{p-1}({2}^a,3,{2}^b) == -H_{p-1}({2}^b,3,{2}^a) mod p", "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		b.add(ps, 1, gt(2 * a + 2 * bb + 3), H(s231(a, bb)), BigRational(-1) * H(s231(bb, a)));
	});
	b.claim("T-half3-S", "S_{(p-1)/2}({2}^a,3,{2}^b) == -C(2a+2b+2,2a+1)/(b+1) B_{p-2a-2b-3} mod p",
	        "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 3;
		b.add(ps, 1, gt(w), S(s231(a, bb), Bound::Half), pb(-binom(w - 1, 2 * a + 1) / BigRational(bb + 1), 0, w));
	});
	b.claim("T-half3-H",
	        "H_{(p-1)/2}({2}^a,3,{2}^b) == (-1)^{a+b+1} C(2a+2b+2,2a+1)/(a+1) B_{p-2a-2b-3} mod p", "p > 2a+2b+3");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 3;
		b.add(ps, 1, gt(w), H(s231(a, bb), Bound::Half),
		      pb(sgn(a + bb + 1) * binom(w - 1, 2 * a + 1) / BigRational(a + 1), 0, w));
	});

	b.claim("T-212-S",
	        "S_{p-1}({2}^a,1,{2}^b) == 4(b-a)(1-4^{-a-b})/((2a+1)(2b+1)) C(2a+2b,2a) B_{p-2a-2b-1} mod p",
	        "p > 2a+2b+1");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 1;
		b.add(ps, 1, gt(w), S(s212(a, bb)), pb(c212(a, bb), 0, w));
	});
	b.claim("T-212-H",
	        "H_{p-1}({2}^a,1,{2}^b) == (-1)^{a+b+1} 4(b-a)(1-4^{-a-b})/((2a+1)(2b+1)) C(2a+2b,2a) B_{p-2a-2b-1} mod p",
	        "p > 2a+2b+1");
	grid_ab([&](int a, int bb, Params ps) {
		long w = 2 * a + 2 * bb + 1;
		b.add(ps, 1, gt(w), H(s212(a, bb)), pb(-c212(a, bb) * sgn(a + bb), 0, w));
	});
	b.claim("T-half1-S", "S_{(p-1)/2}({2}^a,1,{2}^b) == (2^{1-2a-2b}-2)/(2b+1) C(2a+2b,2a) B_{p-2a-2b-1} mod p",
	        "a+b > 0, p > 2a+2b+1");
	grid_ab([&](int a, int bb, Params ps) {
		if (a + bb == 0)
			return;
		long w = 2 * a + 2 * bb + 1;
		b.add(ps, 1, gt(w), S(s212(a, bb), Bound::Half),
		      pb((pow2(2 - w) - 2) / BigRational(2 * bb + 1) * binom(w - 1, 2 * a), 0, w));
	});
	b.claim("T-half1-H",
	        "H_{(p-1)/2}({2}^a,1,{2}^b) == (-1)^{a+b} (2^{1-2a-2b}-2)/(2a+1) C(2a+2b,2a) B_{p-2a-2b-1} mod p",
	        "a+b > 0, p > 2a+2b+1");
	grid_ab([&](int a, int bb, Params ps) {
		if (a + bb == 0)
			return;
		long w = 2 * a + 2 * bb + 1;
		b.add(ps, 1, gt(w), H(s212(a, bb), Bound::Half),
		      pb(sgn(a + bb) * (pow2(2 - w) - 2) / BigRational(2 * a + 1) * binom(w - 1, 2 * a), 0, w));
	});

	// ---- ({1}^a, 2, {1}^b)
	for (int form = 0; form < 2; ++form) {
		b.claim(form ? "T-121-H" : "T-121-S",
		        std::string(form ? "H" : "S") +
		            "_{p-1}({1}^a,2,{1}^b) == (-1)^b/(a+b+2) C(a+b+2,a+1) B_{p-a-b-2} mod p (a+b odd); "
		            "(1 + (-1)^a C(a+b+3," +
		            (form ? "b+2" : "a+2") + "))/(2(a+b+3)) p B_{p-a-b-3} mod p^2 (a+b even)",
		        "p > a+b+3");
		grid_ab([&](int a, int bb, Params ps) {
			Composition s = cat({Composition::repeat(1, a), comp({2}), Composition::repeat(1, bb)});
			Expr lhs = form ? H(s) : S(s);
			long w = a + bb;
			if (w % 2)
				b.add(ps, 1, gt(w + 3), lhs, pb(sgn(bb) / BigRational(w + 2) * binom(w + 2, a + 1), 0, w + 2));
			else
				b.add(ps, 2, gt(w + 3), lhs,
				      pb((1 + sgn(a) * binom(w + 3, form ? bb + 2 : a + 2)) / BigRational(2 * (w + 3)), 1, w + 3));
		});
	}

	// ---- weight seven and nine
	b.claim("C3-eq40a", "S_{p-1}(1,1,1,4) == 27/16 B_{p-7} mod p", "p > 7");
	b.add({}, 1, 11, S(comp({1, 1, 1, 4})), pb(BigRational(27, 16), 0, 7));
	b.claim("C3-eq40b", "S_{p-1}(1,2,2,2) == 27/16 B_{p-7} mod p", "p > 7");
	b.add({}, 1, 11, S(comp({1, 2, 2, 2})), pb(BigRational(27, 16), 0, 7));
	{
		auto &c = b.claim("C3-eq41", "S_{p-1}(1,1,1,6) == 1/54 B_{p-3}^3 + 1889/648 B_{p-9} mod p", "p > 7");
		c.default_pmin = 11;
		c.default_pmax = 1999;
		b.add({}, 1, 11, S(comp({1, 1, 1, 6})),
		      BigRational(1, 54) * (bern(3) * bern(3) * bern(3)) + pb(BigRational(1889, 648), 0, 9));
	}
	b.claim("C3-eq42", "S_{p-1}(1,2,2,2,2) == 85/48 B_{p-9} mod p", "p > 7");
	b.add({}, 1, 11, S(comp({1, 2, 2, 2, 2})), pb(BigRational(85, 48), 0, 9));
	Expr s12222 = BigRational(2) * S(comp({1, 2, 2, 2, 2}));
	b.claim("C3-eq43",
	        "2 S_{p-1}(1,{2}^4) == 3 S_{p-1}(1,1,1,6) + 1/3 S_{p-1}(1,2) S_{p-1}(1,1,4) - 281/54 S_{p-1}(1,8) mod p",
	        "p > 7");
	b.add({}, 1, 11, s12222,
	      BigRational(3) * S(comp({1, 1, 1, 6})) + BigRational(1, 3) * (S(comp({1, 2})) * S(comp({1, 1, 4}))) -
	          BigRational(281, 54) * S(comp({1, 8})));
	b.claim("C3-hof64",
	        "2 S_{p-1}(1,{2}^4) == S(1,2,2,4) + S(1,2,4,2) + S(1,4,2,2) + S(3,2,2,2) - 255/18 S(1,8) mod p", "p > 7");
	b.add({}, 1, 11, s12222,
	      S(comp({1, 2, 2, 4})) + S(comp({1, 2, 4, 2})) + S(comp({1, 4, 2, 2})) + S(comp({3, 2, 2, 2})) -
	          BigRational(255, 18) * S(comp({1, 8})));

	// ---- odd denominators
	b.claim("T-odd2-10", "Hbar_{(p-1)/2}(2m) == m/(4^m(2m+1)) p B_{p-2m-1} mod p^2", "p > 2m+1");
	for (int m = 1; m <= 4; ++m)
		b.add({{"m", num(m)}}, 2, gt(2 * m + 1), Hbar(comp({2 * m})),
		      pb(BigRational(m) / (BigRational(4).pow(m) * (2 * m + 1)), 1, 2 * m + 1));
	b.claim("T-odd2-11", "Hbar_{(p-1)/2}({2}^m) == (-1)^{m-1}/(4^m(2m+1)) p B_{p-2m-1} mod p^2", "p > 2m+1");
	for (int m = 1; m <= 4; ++m)
		b.add({{"m", num(m)}}, 2, gt(2 * m + 1), Hbar(Composition::repeat(2, m)),
		      pb(sgn(m - 1) / (BigRational(4).pow(m) * (2 * m + 1)), 1, 2 * m + 1));

	{
		auto &c = b.claim("L-quarter-20",
		                  "H_{(p-1)/2}(r) == H_q(r) + (-2)^r sum_{k=0}^a C(r-1+k,k) H_{(p-1)/2}(r+k) p^k "
		                  "- (-1)^r sum_{k=0}^a C(r-1+k,k) H_q(r+k) p^k/2^k mod p^{a+1}, q = floor(p/4)",
		                  "p > r+2");
		c.note = "a <= 2 verified (modulus p^{a+1} <= p^3); a = 3 untested";
	}
	for (int r = 1; r <= 4; ++r)
		for (int a = 1; a <= 2; ++a) {
			Expr rhs = H(comp({r}), Bound::Quarter);
			for (int k = 0; k <= a; ++k) {
				BigRational c = binom(r - 1 + k, k);
				rhs = rhs + (BigRational(-2).pow(r) * c) * (p_power(k) * H(comp({r + k}), Bound::Half));
				rhs = rhs - (sgn(r) * c / pow2(k)) * (p_power(k) * H(comp({r + k}), Bound::Quarter));
			}
			b.add({{"r", num(r)}, {"a", num(a)}}, a + 1, gt(r + 2), H(comp({r}), Bound::Half), rhs);
		}
	b.claim("L-quarter-odd", "Hbar_{(p-1)/2}(-2r-1) == (-1)^{(p+1)/2}/4^{2r+1} H_{(p-1)/2}(2r+1) mod p^2",
	        "p > 2r+3");
	for (int r = 0; r <= 4; ++r)
		b.add({{"r", num(r)}}, 2, gt(2 * r + 3), Hbar(comp({-2 * r - 1})),
		      BigRational(1) / BigRational(4).pow(2 * r + 1) * (sign_half() * H(comp({2 * r + 1}), Bound::Half)));

	b.claim("L01", "Hbar_{(p-1)/2}(s) == (-1)^w/2^w H_{(p-1)/2}(reversed s) mod p", "positive s, p > 3");
	for (int w = 1; w <= 6; ++w)
		for (auto &s : compositions_of(w))
			b.add({{"s", s.str()}}, 1, 5, Hbar(s), sgn(w) / pow2(w) * H(s.reversed(), Bound::Half));

	// ---- finite p-analogues
	b.claim("ZP-even", "2 p zeta_p(2m+2) == -4m(1-4^{-m})/(2m+1) B_{p-2m-1} mod p", "p > 2m+3");
	for (int m = 0; m <= 4; ++m)
		b.add({{"m", num(m)}}, 1, gt(2 * m + 3), BigRational(2) * (p_power(1) * analogue(Analogue::ZetaEven, m)),
		      pb(BigRational(-4 * m) * (1 - BigRational(4).pow(-m)) / BigRational(2 * m + 1), 0, 2 * m + 1));
	b.claim("ZP-odd", "zeta_p(2m+3) == -(m+1)(2m+1)/(2m+3) B_{p-2m-3} mod p", "p > 2m+3");
	for (int m = 0; m <= 4; ++m)
		b.add({{"m", num(m)}}, 1, gt(2 * m + 3), analogue(Analogue::ZetaOdd, m),
		      pb(BigRational(-(m + 1) * (2 * m + 1), 2 * m + 3), 0, 2 * m + 3));
	b.claim("BP-beta", "beta_p(2m+1) == (-1)^{(p+1)/2} m(4^m-1)/(16^m(2m+1)) B_{p-2m-1} mod p", "p > 2m+3");
	for (int m = 0; m <= 4; ++m)
		b.add({{"m", num(m)}}, 1, gt(2 * m + 3), analogue(Analogue::Beta, m),
		      BigRational(m) * (BigRational(4).pow(m) - 1) / (BigRational(16).pow(m) * (2 * m + 1)) *
		          (sign_half() * bern(2 * m + 1)));
	b.claim("BP-zetabar", "zetabar_p(2m+2) == -(2m^2+3m+2)/(2^{2m+3}(2m+3)) p B_{p-2m-3} mod p^2", "p > 2m+3");
	for (int m = 0; m <= 4; ++m)
		b.add({{"m", num(m)}}, 2, gt(2 * m + 3), analogue(Analogue::ZetaBar, m),
		      pb(BigRational(-(2 * m * m + 3 * m + 2)) / (pow2(2 * m + 3) * (2 * m + 3)), 1, 2 * m + 3));

	// ---- generators modulo p
	b.claim("GEN",
	        "S_{p-1}(1,2) == B_{p-3}, S(1,4) == B_{p-5}, S(1,1,4) == -1/6 B_{p-3}^2, S(1,6) == B_{p-7}, "
	        "S(1,8) == B_{p-9}, products, weights 1, 2, 4 vanish (mod p)",
	        "p > w+1");
	for (int w : {1, 2, 4})
		for (auto &s : compositions_of(w))
			b.add({{"s", s.str()}}, 1, gt(w + 1), S(s), zero);
	b.add({{"s", "1,2"}}, 1, gt(4), S(comp({1, 2})), bern(3));
	b.add({{"s", "1,4"}}, 1, gt(6), S(comp({1, 4})), bern(5));
	b.add({{"s", "1,1,4"}}, 1, gt(7), S(comp({1, 1, 4})), BigRational(-1, 6) * (bern(3) * bern(3)));
	b.add({{"s", "1,6"}}, 1, gt(8), S(comp({1, 6})), bern(7));
	b.add({{"s", "1,8"}}, 1, gt(10), S(comp({1, 8})), bern(9));
	b.add({{"s", "(1,4)*(1,2)"}}, 1, gt(9), S(comp({1, 4})) * S(comp({1, 2})), bern(5) * bern(3));
	b.add({{"s", "(1,2)*(1,1,4)"}}, 1, gt(9), S(comp({1, 2})) * S(comp({1, 1, 4})),
	      BigRational(-1, 6) * (bern(3) * bern(3) * bern(3)));

	// ---- duality
	b.claim("HEIGHT1-DUAL", "S_{p-1}({1}^{k-1},h) == (-1)^{k+h} S_{p-1}({1}^{h-1},k) mod p", "p > max(h,k)")
	    .default_pmax = 100;
	for (int k = 1; k <= 5; ++k)
		for (int h = 1; h <= 5; ++h)
			b.add({{"h", num(h)}, {"k", num(k)}}, 1, gt(std::max(h, k)),
			      S(cat({Composition::repeat(1, k - 1), comp({h})})),
			      sgn(k + h) * S(cat({Composition::repeat(1, h - 1), comp({k})})));
	b.claim("DUAL", "S_{p-1}(s) == -S_{p-1}(dual s) mod p", "positive s of weight w, p >= w+2").default_pmax = 100;
	for (int w = 1; w <= 7; ++w)
		for (auto &s : compositions_of(w))
			b.add({{"s", s.str()}}, 1, ge(w + 2), S(s), BigRational(-1) * S(dual(s)));

	// ---- binomial congruences inside the proofs
	b.claim("PROOF-26", "p C(p-1,k)/C(p-1+k,k) == (-1)^k k (1 - 2p H_{k-1}(1) - p/k) mod p^2, 1 <= k <= p-1",
	        "p >= 5")
	    .default_pmax = 300;
	b.add_loop(2, loop_check(binomial_ratio_check<PAdicNum>, binomial_ratio_check<ExactNum>));
	b.claim("PROOF-19",
	        "p (-1)^k/(k^2 C(p-1,k) C(p-1+k,k)) == p (1/(pk) + 1/k^2 + p H_k(2)/k) mod p^3, 1 <= k <= p-1", "p >= 5")
	    .default_pmax = 300;
	b.add_loop(3, loop_check(binomial_product_check<PAdicNum>, binomial_product_check<ExactNum>));
	b.claim("PROOF-21",
	        "C(2k,k)/((-16)^k C((p-1)/2+k,2k+1)) == -2 - 2p/(2k+1) mod p^2, 0 <= k <= (p-3)/2", "p >= 5")
	    .default_pmax = 300;
	b.add_loop(2, loop_check(central_ratio_check<PAdicNum>, central_ratio_check<ExactNum>));

	return b.finish();
}

} // namespace

// ---------------------------------------------------------------- public API

const char *status_name(CheckStatus s)
{
	switch (s) {
	case CheckStatus::Pass:
		return "pass";
	case CheckStatus::Fail:
		return "fail";
	case CheckStatus::Skipped:
		return "skipped";
	case CheckStatus::Error:
		return "error";
	}
	return "?";
}

const std::vector<CongruenceClaim> &congruence_catalog()
{
	static const std::vector<CongruenceClaim> catalog = build_catalog();
	return catalog;
}

const CongruenceClaim &find_claim(const std::string &id)
{
	for (const auto &c : congruence_catalog())
		if (c.id == id)
			return c;
	throw InvalidInput("unknown congruence claim '" + id + "'");
}

CheckResult check_case(const CongruenceClaim &claim, size_t case_index, u64 p)
{
	PrimeContext ctx(p);
	std::optional<ExactContext> exact;
	return evaluate_case(claim.id, claim.cases.at(case_index), p, ctx, exact);
}

std::vector<CheckResult> check_claim(const CongruenceClaim &claim, u64 p)
{
	PrimeContext ctx(p);
	std::optional<ExactContext> exact;
	std::vector<CheckResult> out;
	for (const auto &c : claim.cases)
		out.push_back(evaluate_case(claim.id, c, p, ctx, exact));
	return out;
}

CheckResult check_expr(u64 p, int N, const Expr &lhs, const Expr &rhs)
{
	ClaimCase c;
	c.N = N;
	c.min_prime = 0;
	c.lhs = lhs;
	c.rhs = rhs;
	PrimeContext ctx(p);
	std::optional<ExactContext> exact;
	return evaluate_case("expr", c, p, ctx, exact);
}

std::vector<u64> primes_in(u64 lo, u64 hi)
{
	std::vector<u64> out;
	if (hi < 2 || lo > hi)
		return out;
	std::vector<bool> composite(hi + 1, false);
	for (u64 i = 2; i <= hi; ++i) {
		if (composite[i])
			continue;
		if (i >= lo)
			out.push_back(i);
		for (u64 j = i * i; j <= hi; j += i)
			composite[j] = true;
	}
	return out;
}

SuiteReport run_suite(const std::string &selection, std::optional<PrimeRange> range, int jobs)
{
	const auto &catalog = congruence_catalog();
	std::vector<size_t> chosen;
	for (size_t i = 0; i < catalog.size(); ++i)
		if (id_selected(selection, catalog[i].id))
			chosen.push_back(i);
	if (chosen.empty())
		throw InvalidInput("no congruence claim matches '" + selection + "'");

	auto claim_range = [&](const CongruenceClaim &c) {
		return range ? *range : PrimeRange{c.default_pmin, c.default_pmax};
	};
	u64 lo = UINT64_MAX, hi = 0;
	for (size_t i : chosen) {
		auto r = claim_range(catalog[i]);
		lo = std::min(lo, r.lo);
		hi = std::max(hi, r.hi);
	}
	std::vector<u64> primes = primes_in(lo, hi);
	// largest primes first so the slow tasks start early
	std::reverse(primes.begin(), primes.end());

	struct Slot {
		size_t claim, kase;
		CheckResult r;
	};
	std::vector<std::vector<Slot>> per_prime(primes.size());
	std::atomic<size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mu;
	auto work = [&]() {
		try {
			for (;;) {
				size_t t = next.fetch_add(1);
				if (t >= primes.size())
					return;
				u64 p = primes[t];
				PrimeContext ctx(p);
				std::optional<ExactContext> exact;
				for (size_t ci : chosen) {
					const auto &c = catalog[ci];
					auto r = claim_range(c);
					if (p < r.lo || p > r.hi)
						continue;
					for (size_t k = 0; k < c.cases.size(); ++k)
						per_prime[t].push_back({ci, k, evaluate_case(c.id, c.cases[k], p, ctx, exact)});
				}
			}
		} catch (...) {
			std::lock_guard<std::mutex> lock(error_mu);
			if (!error)
				error = std::current_exception();
			next = primes.size();
		}
	};
	jobs = std::max(1, jobs);
	std::vector<std::thread> pool;
	for (int j = 1; j < jobs; ++j)
		pool.emplace_back(work);
	work();
	for (auto &t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);

	std::vector<Slot> all;
	for (auto &v : per_prime)
		for (auto &s : v)
			all.push_back(std::move(s));
	std::sort(all.begin(), all.end(), [](const Slot &a, const Slot &b) {
		return std::tie(a.claim, a.kase, a.r.p) < std::tie(b.claim, b.kase, b.r.p);
	});
	SuiteReport rep;
	for (auto &s : all) {
		switch (s.r.status) {
		case CheckStatus::Pass:
			++rep.passed;
			break;
		case CheckStatus::Fail:
			++rep.failed;
			break;
		case CheckStatus::Skipped:
			++rep.skipped;
			break;
		case CheckStatus::Error:
			++rep.errors;
			break;
		}
		rep.results.push_back(std::move(s.r));
	}
	return rep;
}

} // namespace mhs
