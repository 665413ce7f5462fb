#include "mhs/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "mhs/mhs.hpp"

namespace mhs {

// ---------------------------------------------------------------- params

std::string params_str(const Params &p)
{
	std::string out;
	for (const auto &[k, v] : p) {
		if (!out.empty())
			out += ' ';
		out += k + '=';
		out += v.find(',') != std::string::npos || v.empty() ? "(" + v + ")" : v;
	}
	return out;
}

static const std::string &lookup(const Params &p, const std::string &name)
{
	for (const auto &kv : p)
		if (kv.first == name)
			return kv.second;
	throw InvalidInput("missing parameter '" + name + "'");
}

bool has_param(const Params &p, const std::string &name)
{
	for (const auto &kv : p)
		if (kv.first == name)
			return true;
	return false;
}

long param_long(const Params &p, const std::string &name)
{
	const std::string &v = lookup(p, name);
	size_t used = 0;
	long x = 0;
	try {
		x = std::stol(v, &used);
	} catch (const std::exception &) {
		used = 0;
	}
	if (used != v.size() || v.empty())
		throw InvalidInput("parameter " + name + "='" + v + "' is not an integer");
	return x;
}

BigRational param_rational(const Params &p, const std::string &name) { return BigRational::parse(lookup(p, name)); }

Composition param_composition(const Params &p, const std::string &name)
{
	return Composition::parse(lookup(p, name));
}

bool id_selected(const std::string &selection, const std::string &id)
{
	if (selection == "all" || selection.empty())
		return true;
	std::stringstream ss(selection);
	std::string pat;
	while (std::getline(ss, pat, ','))
		if (pat == "all" || fnmatch(pat.c_str(), id.c_str(), 0) == 0 || id.rfind(pat + "-", 0) == 0)
			return true;
	return false;
}

// ---------------------------------------------------------------- caches

namespace {

BigRational sign(long e) { return e % 2 ? BigRational(-1) : BigRational(1); }

BigRational recip_pow(long d, long e) { return BigRational(1, d).pow(e); }

BigRational ratio(const BigInt &a, const BigInt &b) { return BigRational(a, b); }

// Prefix values X_0..X_n of one composition, grown on demand. One cache per
// worker thread.
const std::vector<BigRational> &prefixes(SumKind kind, const Composition &s, long n)
{
	thread_local std::map<std::pair<int, Composition>, std::vector<BigRational>> cache;
	auto &v = cache[{static_cast<int>(kind), s}];
	if (static_cast<long>(v.size()) <= n)
		v = evaluate_prefixes(RationalRing{}, kind, s, std::max<long>(n, 2 * static_cast<long>(v.size())));
	return v;
}

// k-dependent factors of the binomial-sum identities, k = 0..n.
enum class Kernel {
	AltCentral, // (-1)^{k-1} C(n,k) / C(n+k,k)
	Central,    // C(n,k) / C(n+k,k)
	AltBinom,   // (-1)^{k-1} C(n,k)
	MBinom,     // (-1)^k C(mn, n-k)
};

const std::vector<BigRational> &kernel(Kernel kind, long n, long m)
{
	thread_local std::map<std::tuple<int, long, long>, std::vector<BigRational>> cache;
	auto key = std::make_tuple(static_cast<int>(kind), n, m);
	auto it = cache.find(key);
	if (it != cache.end())
		return it->second;
	std::vector<BigRational> w(static_cast<size_t>(n + 1));
	for (long k = 1; k <= n; ++k) {
		switch (kind) {
		case Kernel::AltCentral:
			w[k] = sign(k - 1) * ratio(binomial(n, k), binomial(n + k, k));
			break;
		case Kernel::Central:
			w[k] = ratio(binomial(n, k), binomial(n + k, k));
			break;
		case Kernel::AltBinom:
			w[k] = sign(k - 1) * BigRational(binomial(n, k));
			break;
		case Kernel::MBinom:
			w[k] = sign(k) * BigRational(binomial(m * n, n - k));
			break;
		}
	}
	return cache.emplace(key, std::move(w)).first->second;
}

// sum_{k=1}^n H_{k-1}(inner) w_k / k^e
BigRational kernel_sum(Kernel kind, long n, long m, const Composition &inner, int e)
{
	thread_local std::map<std::tuple<int, long, long, Composition, int>, BigRational> cache;
	auto key = std::make_tuple(static_cast<int>(kind), n, m, inner, e);
	auto it = cache.find(key);
	if (it != cache.end())
		return it->second;
	const auto &w = kernel(kind, n, m);
	const auto &h = prefixes(SumKind::Strict, inner, n);
	BigRational s(0);
	for (long k = 1; k <= n; ++k)
		if (!h[k - 1].is_zero())
			s += h[k - 1] * w[k] * recip_pow(k, e);
	cache.emplace(key, s);
	return s;
}

void require(bool ok, const std::string &what)
{
	if (!ok)
		throw InvalidInput("parameter out of range: " + what);
}

Params P(std::initializer_list<std::pair<std::string, long>> xs)
{
	Params p;
	for (const auto &[k, v] : xs)
		p.emplace_back(k, std::to_string(v));
	return p;
}

long bound(const GridBounds &g, long dflt) { return g.nmax > 0 ? g.nmax : dflt; }

using Sides = std::pair<BigRational, BigRational>;

// ---------------------------------------------------------------- binomial lemmas

Sides alt_binomial_tail(const Params &p)
{
	long m = param_long(p, "m"), n = param_long(p, "n"), l = param_long(p, "l");
	require(m >= 1 && n >= 1 && l >= 0, "m, n >= 1, l >= 0");
	BigRational lhs(0);
	for (long k = l + 1; k <= n; ++k)
		lhs += sign(k - 1) * BigRational(binomial(m * n, n - k));
	return {lhs, sign(l) * BigRational(binomial(m * n - 1, n - l - 1))};
}

Sides central_ratio_tail(const Params &p)
{
	long n = param_long(p, "n"), l = param_long(p, "l");
	require(n >= 1 && l >= 0, "n >= 1, l >= 0");
	const auto &w = kernel(Kernel::Central, n, 0);
	BigRational lhs(0);
	for (long k = l + 1; k <= n; ++k)
		lhs += BigRational(k) * w[k];
	lhs *= BigRational(2);
	return {lhs, BigRational(n) * ratio(binomial(n - 1, l), binomial(n + l, l))};
}

Sides central_ratio_harmonic(const Params &p)
{
	long n = param_long(p, "n");
	require(n >= 1, "n >= 1");
	return {BigRational(2) * kernel_sum(Kernel::Central, n, 0, {}, 1),
	        evaluate_exact(SumKind::Strict, {1}, n)};
}

Sides central_ratio_telescoping(const Params &p)
{
	long n = param_long(p, "n"), l = param_long(p, "l");
	require(n >= 1 && l >= 1, "n >= 1, l >= 1");
	BigRational lhs(0);
	for (long k = l; k <= n; ++k)
		lhs += ratio(binomial(k, l), binomial(k + l, l)) * recip_pow(k, 2);
	return {lhs, ratio(binomial(n, l), binomial(n + l, l)) * recip_pow(l, 2)};
}

Sides central_ratio_second_moment(const Params &p)
{
	long n = param_long(p, "n");
	require(n >= 2, "n >= 2");
	const auto &w = kernel(Kernel::Central, n, 0);
	BigRational lhs(0);
	for (long k = 1; k <= n; ++k)
		lhs += sign(k) * BigRational(k * k) * w[k];
	return {lhs, BigRational(0)};
}

// ---------------------------------------------------------------- transformation lemma

BigRational random_coefficient(std::uint64_t seed, long n, long m)
{
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
	std::mt19937_64 rng(seq);
	std::uniform_int_distribution<long> num(1, 40), den(1, 25);
	long a = num(rng) - 21;
	if (a >= 0)
		++a; // skip zero
	return BigRational(a, den(rng));
}

Sides shifted_weight_lemma(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m"), a = param_long(p, "a"), c = param_long(p, "c");
	Composition b = param_composition(p, "b");
	std::uint64_t seed = static_cast<std::uint64_t>(param_long(p, "seed"));
	require(n >= 1 && m >= 1 && a >= 0 && c >= 1, "n, m, c >= 1, a >= 0");
	BigRational cn = random_coefficient(seed, n, m);
	BigRational lhs = kernel_sum(Kernel::MBinom, n, m, b, static_cast<int>(a)) * recip_pow(n, c);
	BigRational rhs = kernel_sum(Kernel::MBinom, n, m, b, static_cast<int>(a + c));
	for (const auto &t : enumerate_tail_compositions(static_cast<int>(a + c), static_cast<int>(a)))
		rhs += BigRational(m).pow(static_cast<long>(t.s.length())) *
		       kernel_sum(Kernel::MBinom, n, m, b + t.s, t.j);
	return {cn * lhs, cn * rhs};
}

// ---------------------------------------------------------------- star sums as binomial sums

Composition twos(long a) { return Composition::repeat(2, static_cast<int>(a)); }
Composition ones(long a) { return Composition::repeat(1, static_cast<int>(a)); }

Sides star_twos_around(const Params &p)
{
	long n = param_long(p, "n"), a = param_long(p, "a"), b = param_long(p, "b"), c = param_long(p, "c");
	require(n >= 1 && a >= 0 && b >= 0 && c >= 2, "n >= 1, a, b >= 0, c >= 2");
	BigRational lhs = evaluate_exact(SumKind::NonStrict, twos(a) + Composition{static_cast<int>(c)} + twos(b), n);
	BigRational rhs = BigRational(2) * kernel_sum(Kernel::AltCentral, n, 0, {}, static_cast<int>(2 * a + 2 * b + c));
	for (const auto &t : enumerate_inner_compositions(static_cast<int>(c), 2))
		rhs += BigRational(4) * BigRational(2).pow(static_cast<long>(t.s.length())) *
		       kernel_sum(Kernel::AltCentral, n, 0, Composition{static_cast<int>(2 * a + t.i)} + t.s,
		                  static_cast<int>(2 * b + t.j));
	return {lhs, rhs};
}

Sides star_twos(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m");
	require(n >= 1 && m >= 0, "n >= 1, m >= 0");
	return {evaluate_exact(SumKind::NonStrict, twos(m), n),
	        BigRational(2) * kernel_sum(Kernel::AltCentral, n, 0, {}, static_cast<int>(2 * m))};
}

Sides star_twos_three(const Params &p)
{
	long n = param_long(p, "n"), a = param_long(p, "a"), b = param_long(p, "b");
	require(n >= 1 && a >= 0 && b >= 0, "n >= 1, a, b >= 0");
	BigRational lhs = evaluate_exact(SumKind::NonStrict, twos(a) + Composition{3} + twos(b), n);
	BigRational rhs = BigRational(2) * kernel_sum(Kernel::AltCentral, n, 0, {}, static_cast<int>(2 * a + 2 * b + 3)) +
	                  BigRational(4) * kernel_sum(Kernel::AltCentral, n, 0, Composition{static_cast<int>(2 * a + 1)},
	                                              static_cast<int>(2 * b + 2));
	return {lhs, rhs};
}

Sides star_ones_around(const Params &p)
{
	long n = param_long(p, "n"), a = param_long(p, "a"), b = param_long(p, "b"), c = param_long(p, "c");
	require(n >= 1 && a >= 0 && b >= 0 && c >= 1, "n >= 1, a, b >= 0, c >= 1");
	BigRational lhs = evaluate_exact(SumKind::NonStrict, ones(a) + Composition{static_cast<int>(c)} + ones(b), n);
	BigRational rhs = kernel_sum(Kernel::AltBinom, n, 0, {}, static_cast<int>(a + b + c));
	for (const auto &t : enumerate_inner_compositions(static_cast<int>(c), 1))
		rhs += kernel_sum(Kernel::AltBinom, n, 0, Composition{static_cast<int>(a + t.i)} + t.s,
		                  static_cast<int>(b + t.j));
	return {lhs, rhs};
}

Sides star_one_twos(const Params &p)
{
	long n = param_long(p, "n"), b = param_long(p, "b");
	require(n >= 1 && b >= 0, "n >= 1, b >= 0");
	return {evaluate_exact(SumKind::NonStrict, Composition{1} + twos(b), n),
	        BigRational(2) * kernel_sum(Kernel::Central, n, 0, {}, static_cast<int>(2 * b + 1))};
}

Sides star_twos_one_twos(const Params &p)
{
	long n = param_long(p, "n"), a = param_long(p, "a"), b = param_long(p, "b");
	require(n >= 1 && a >= 1 && b >= 0, "n >= 1, a >= 1, b >= 0");
	BigRational lhs = evaluate_exact(SumKind::NonStrict, twos(a) + Composition{1} + twos(b), n);
	BigRational rhs = BigRational(2) * kernel_sum(Kernel::AltCentral, n, 0, {}, static_cast<int>(2 * a + 2 * b + 1)) -
	                  BigRational(4) * kernel_sum(Kernel::Central, n, 0, Composition{static_cast<int>(-2 * a)},
	                                              static_cast<int>(2 * b + 1));
	return {lhs, rhs};
}

// ---------------------------------------------------------------- finite Leshchiner-type identities

BigRational central(long k) { return BigRational(binomial(2 * k, k)); }

Sides finite_even_zeta(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m");
	require(n >= 1 && m >= 0, "n >= 1, m >= 0");
	BigRational lhs(0), tail(0), rhs(0);
	const auto &h = prefixes(SumKind::Strict, twos(m), n);
	for (long k = 1; k <= n; ++k) {
		lhs += sign(k - 1) * recip_pow(k, 2 * m + 2);
		tail += sign(n + k + m) * h[k - 1] * recip_pow(k, 2) /
		        BigRational(binomial(n, k) * binomial(n + k, k));
		rhs += BigRational(3, 2) * sign(m) * h[k - 1] * recip_pow(k, 2) / central(k);
	}
	lhs -= BigRational(1, 2) * tail;
	for (long j = 1; j <= m; ++j) {
		const auto &hj = prefixes(SumKind::Strict, twos(m - j), n);
		for (long k = 1; k <= n; ++k)
			rhs += BigRational(2) * sign(m - j) * hj[k - 1] * recip_pow(k, 2 * j + 2) / central(k);
	}
	return {lhs, rhs};
}

Sides finite_odd_zeta(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m");
	require(n >= 1 && m >= 0, "n >= 1, m >= 0");
	BigRational lhs(0), tail(0), rhs(0);
	const auto &h = prefixes(SumKind::Strict, twos(m), n);
	for (long k = 1; k <= n; ++k) {
		lhs += recip_pow(k, 2 * m + 3);
		tail += sign(k + m) * h[k - 1] * recip_pow(k, 3) / BigRational(binomial(n, k) * binomial(n + k, k));
		rhs += BigRational(5, 2) * sign(k + m - 1) * h[k - 1] * recip_pow(k, 3) / central(k);
	}
	lhs -= BigRational(1, 2) * tail;
	for (long j = 1; j <= m; ++j) {
		const auto &hj = prefixes(SumKind::Strict, twos(m - j), n);
		for (long k = 1; k <= n; ++k)
			rhs += BigRational(2) * sign(k + m - j - 1) * hj[k - 1] * recip_pow(k, 2 * j + 3) / central(k);
	}
	return {lhs, rhs};
}

// binom(2k,k) / 16^k
BigRational central_16(long k) { return central(k) / BigRational(BigInt(16).pow(static_cast<unsigned long>(k))); }

Sides finite_beta(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m");
	require(n >= 0 && m >= 0, "n, m >= 0");
	BigRational lhs(0), tail(0), rhs(0);
	const auto &h = prefixes(SumKind::Odd, twos(m), n);
	for (long k = 0; k <= n; ++k) {
		BigRational c = central_16(k);
		lhs += sign(k) * recip_pow(2 * k + 1, 2 * m + 1);
		tail += sign(n + k + m) * c * h[k] / (BigRational(2 * k + 1) * BigRational(binomial(n + k + 1, 2 * k + 1)));
		rhs += BigRational(3, 4) * sign(m) * c * h[k] / BigRational(2 * k + 1);
	}
	lhs -= BigRational(1, 4) * tail;
	for (long j = 1; j <= m; ++j) {
		const auto &hj = prefixes(SumKind::Odd, twos(m - j), n);
		for (long k = 0; k <= n; ++k)
			rhs += sign(m - j) * central_16(k) * hj[k] * recip_pow(2 * k + 1, 2 * j + 1);
	}
	return {lhs, rhs};
}

Sides finite_odd_square_zeta(const Params &p)
{
	long n = param_long(p, "n"), m = param_long(p, "m");
	require(n >= 0 && m >= 0, "n, m >= 0");
	BigRational lhs(0), tail(0), rhs(0);
	const auto &h = prefixes(SumKind::Odd, twos(m), n);
	for (long k = 0; k <= n; ++k) {
		BigRational c = central_16(k);
		lhs += recip_pow(2 * k + 1, 2 * m + 2);
		tail += sign(k + m) * c * h[k] * recip_pow(2 * k + 1, 2) / BigRational(binomial(n + k + 1, 2 * k + 1));
		rhs += BigRational(5, 4) * sign(k + m) * c * h[k] * recip_pow(2 * k + 1, 2);
	}
	lhs += BigRational(1, 4) * tail;
	for (long j = 1; j <= m; ++j) {
		const auto &hj = prefixes(SumKind::Odd, twos(m - j), n);
		for (long k = 0; k <= n; ++k)
			rhs += sign(k + m - j) * central_16(k) * hj[k] * recip_pow(2 * k + 1, 2 * j + 2);
	}
	return {lhs, rhs};
}

// ---------------------------------------------------------------- grids

std::vector<Params> grid_mnl(const GridBounds &g)
{
	std::vector<Params> out;
	for (long m = 1; m <= 4; ++m)
		for (long n = 1; n <= bound(g, 200); ++n)
			for (long l = 0; l <= n; ++l)
				out.push_back(P({{"m", m}, {"n", n}, {"l", l}}));
	return out;
}

std::vector<Params> grid_nl(const GridBounds &g, long lmin)
{
	std::vector<Params> out;
	for (long n = 1; n <= bound(g, 200); ++n)
		for (long l = lmin; l <= n; ++l)
			out.push_back(P({{"n", n}, {"l", l}}));
	return out;
}

std::vector<Params> grid_n(const GridBounds &g, long nmin, long nmax)
{
	std::vector<Params> out;
	for (long n = nmin; n <= bound(g, nmax); ++n)
		out.push_back(P({{"n", n}}));
	return out;
}

std::vector<Params> grid_lemma_shift(const GridBounds &g)
{
	std::vector<Params> out;
	for (const char *b : {"", "1", "3", "2,1"})
		for (long m = 1; m <= 4; ++m)
			for (long a = 0; a <= 4; ++a)
				for (long c = 1; c <= 5; ++c)
					for (long n = 1; n <= bound(g, 30); ++n) {
						Params p = P({{"n", n}, {"m", m}, {"a", a}, {"c", c}});
						p.emplace_back("b", b);
						p.emplace_back("seed", std::to_string(static_cast<long>(g.seed & 0x7fffffffffffffffULL)));
						out.push_back(std::move(p));
					}
	return out;
}

std::vector<Params> grid_nabc(const GridBounds &g, long nmax, long cmin, long cmax, long amax, long amin = 0)
{
	std::vector<Params> out;
	for (long a = amin; a <= amax; ++a)
		for (long b = 0; b <= amax; ++b)
			for (long c = cmin; c <= cmax; ++c)
				for (long n = 1; n <= bound(g, nmax); ++n)
					out.push_back(P({{"n", n}, {"a", a}, {"b", b}, {"c", c}}));
	return out;
}

std::vector<Params> grid_nab(const GridBounds &g, long nmax, long amin, long amax)
{
	std::vector<Params> out;
	for (long a = amin; a <= amax; ++a)
		for (long b = 0; b <= amax; ++b)
			for (long n = 1; n <= bound(g, nmax); ++n)
				out.push_back(P({{"n", n}, {"a", a}, {"b", b}}));
	return out;
}

std::vector<Params> grid_nm(const GridBounds &g, long nmin, long nmax, long mmax, const char *mname = "m")
{
	std::vector<Params> out;
	for (long m = 0; m <= mmax; ++m)
		for (long n = nmin; n <= bound(g, nmax); ++n)
			out.push_back(P({{"n", n}, {mname, m}}));
	return out;
}

// ---------------------------------------------------------------- WZ entries

std::string rat_str(const BigRational &a) { return a.str(); }

Sides wz_relation(const WZPair &w, const Params &p)
{
	long n = param_long(p, "n"), k = param_long(p, "k");
	BigRational a = param_rational(p, "a");
	require(k >= 0 && n >= k + 1, "0 <= k < n");
	return {w.F(n + 1, k, a) - w.F(n, k, a), w.G(n, k + 1, a) - w.G(n, k, a)};
}

Sides wz_sum(const WZPair &w, long N, const BigRational &a)
{
	require(N >= 1, "N >= 1");
	BigRational lhs(0), rhs(0);
	for (long n = 1; n <= N; ++n) {
		lhs += w.G(n - 1, 0, a);
		rhs += w.G(n - 1, n - 1, a) + w.F(n, n - 1, a);
	}
	for (long k = 1; k <= N; ++k)
		rhs -= w.F(N, k - 1, a);
	return {lhs, rhs};
}

Sides parametric_sum(long N, const BigRational &a)
{
	require(N >= 1, "N >= 1");
	BigRational a2 = a * a;
	for (long n = 1; n <= N; ++n)
		if (BigRational(n * n) == a2)
			throw InvalidInput("a^2 = " + a2.str() + " is a pole");
	BigRational lhs(0), first(0), second(0), prod(1);
	for (long n = 1; n <= N; ++n) {
		BigRational n2(n * n);
		lhs += sign(n - 1) / (n2 - a2);
		first += prod * (BigRational(3) * n2 + a2) / (n2 * central(n) * (n2 - a2));
		second += sign(N + n) * prod / (n2 * BigRational(binomial(N, n) * binomial(N + n, n)));
		prod *= BigRational(1) - a2 / n2;
	}
	return {lhs, BigRational(1, 2) * (first + second)};
}

std::vector<Params> grid_wz(const GridBounds &g)
{
	std::vector<Params> out;
	long nmax = bound(g, 30);
	auto samples = wz_sample_points(static_cast<size_t>(nmax + 2));
	for (long n = 1; n <= nmax; ++n)
		for (long k = 0; k < n; ++k) {
			// k + 3 distinct a^2 beat the degree bound k + 2 of the cleared relation
			for (long i = 0; i < k + 3; ++i) {
				Params p = P({{"n", n}, {"k", k}});
				p.emplace_back("a", rat_str(samples[i]));
				out.push_back(std::move(p));
			}
			Params p = P({{"n", n}, {"k", k}});
			p.emplace_back("a", "0");
			out.push_back(std::move(p));
		}
	return out;
}

std::vector<Params> grid_wz_sum(const GridBounds &g)
{
	std::vector<Params> out;
	long Nmax = bound(g, 20);
	auto samples = wz_sample_points(static_cast<size_t>(2 * Nmax + 1));
	for (long N = 1; N <= Nmax; ++N) {
		for (long i = 0; i < 2 * N + 1; ++i) {
			Params p = P({{"N", N}});
			p.emplace_back("a", rat_str(samples[i]));
			out.push_back(std::move(p));
		}
		Params p = P({{"N", N}});
		p.emplace_back("a", "0");
		out.push_back(std::move(p));
	}
	return out;
}

std::vector<IdentityCase> build_catalog()
{
	std::vector<IdentityCase> c;
	auto add = [&](std::string id, std::string statement, std::vector<std::string> names,
	               std::function<std::vector<Params>(const GridBounds &)> grid,
	               std::function<Sides(const Params &)> sides) {
		c.push_back({std::move(id), std::move(statement), std::move(names), std::move(grid), std::move(sides)});
	};

	add("L2.1a", "sum_{k=l+1}^n (-1)^{k-1} C(mn,n-k) = (-1)^l C(mn-1,n-l-1)", {"m", "n", "l"}, grid_mnl,
	    alt_binomial_tail);
	add("L2.1b", "2 sum_{k=l+1}^n k C(n,k)/C(n+k,k) = n C(n-1,l)/C(n+l,l)", {"n", "l"},
	    [](const GridBounds &g) { return grid_nl(g, 0); }, central_ratio_tail);
	add("L2.1c", "2 sum_{k=1}^n C(n,k)/(k C(n+k,k)) = H_n(1)", {"n"},
	    [](const GridBounds &g) { return grid_n(g, 1, 200); }, central_ratio_harmonic);
	add("L2.1d", "sum_{k=l}^n C(k,l)/(k^2 C(k+l,l)) = C(n,l)/(l^2 C(n+l,l)), l >= 1", {"n", "l"},
	    [](const GridBounds &g) { return grid_nl(g, 1); }, central_ratio_telescoping);
	add("L2.1e", "sum_{k=1}^n (-1)^k k^2 C(n,k)/C(n+k,k) = 0, n >= 2", {"n"},
	    [](const GridBounds &g) { return grid_n(g, 2, 200); }, central_ratio_second_moment);
	add("L2.2",
	    "n^{-c} sum_k H_{k-1}(b) A_k/k^a = sum_k H_{k-1}(b) A_k/k^{a+c} + sum_{j+|s|=a+c, s_1>a} m^{l(s)} "
	    "sum_k H_{k-1}(b,s) A_k/k^j, A_k = (-1)^k C(mn,n-k) c_n",
	    {"n", "m", "a", "c", "b", "seed"}, grid_lemma_shift, shifted_weight_lemma);
	add("T-S2",
	    "S_n({2}^a,c,{2}^b) = 2 sum_k (-1)^{k-1}C(n,k)/(k^{2a+2b+c}C(n+k,k)) + 4 sum_{i+j+|s|=c, i>=1, j>=2} "
	    "2^{l(s)} sum_k H_{k-1}(2a+i,s)(-1)^{k-1}C(n,k)/(k^{2b+j}C(n+k,k))",
	    {"n", "a", "b", "c"}, [](const GridBounds &g) { return grid_nabc(g, 30, 2, 6, 4); }, star_twos_around);
	add("T-S2m", "S_n({2}^m) = 2 sum_k (-1)^{k-1}C(n,k)/(k^{2m}C(n+k,k))", {"n", "m"},
	    [](const GridBounds &g) { return grid_nm(g, 1, 30, 4); }, star_twos);
	add("T-S2a32b",
	    "S_n({2}^a,3,{2}^b) = 2 sum_k (-1)^{k-1}C(n,k)/(k^{2a+2b+3}C(n+k,k)) + 4 sum_k "
	    "H_{k-1}(2a+1)(-1)^{k-1}C(n,k)/(k^{2b+2}C(n+k,k))",
	    {"n", "a", "b"}, [](const GridBounds &g) { return grid_nab(g, 30, 0, 4); }, star_twos_three);
	add("T-S1",
	    "S_n({1}^a,c,{1}^b) = sum_k (-1)^{k-1}C(n,k)/k^{a+b+c} + sum_{i+j+|s|=c, i,j>=1} sum_k "
	    "H_{k-1}(a+i,s)(-1)^{k-1}C(n,k)/k^{b+j}",
	    {"n", "a", "b", "c"}, [](const GridBounds &g) { return grid_nabc(g, 30, 1, 5, 4); }, star_ones_around);
	add("T-21-34", "S_n(1,{2}^b) = 2 sum_k C(n,k)/(k^{2b+1}C(n+k,k))", {"n", "b"},
	    [](const GridBounds &g) { return grid_nm(g, 1, 40, 4, "b"); }, star_one_twos);
	add("T-21-35",
	    "S_n({2}^a,1,{2}^b) = 2 sum_k (-1)^{k-1}C(n,k)/(k^{2a+2b+1}C(n+k,k)) - 4 sum_k "
	    "H_{k-1}(-2a)C(n,k)/(k^{2b+1}C(n+k,k)), a >= 1",
	    {"n", "a", "b"}, [](const GridBounds &g) { return grid_nab(g, 40, 1, 4); }, star_twos_one_twos);
	add("LESH-13", "finite form of the (1-2^{-2m-1}) zeta(2m+2) expansion", {"n", "m"},
	    [](const GridBounds &g) { return grid_nm(g, 1, 50, 4); }, finite_even_zeta);
	add("LESH-14", "finite form of the zeta(2m+3) expansion", {"n", "m"},
	    [](const GridBounds &g) { return grid_nm(g, 1, 50, 4); }, finite_odd_zeta);
	add("LESH-15", "finite form of the beta(2m+1) expansion", {"n", "m"},
	    [](const GridBounds &g) { return grid_nm(g, 0, 50, 4); }, finite_beta);
	add("LESH-16", "finite form of the (1-2^{-2m-2}) zeta(2m+2) expansion", {"n", "m"},
	    [](const GridBounds &g) { return grid_nm(g, 0, 50, 4); }, finite_odd_square_zeta);

	for (const auto &w : wz_pairs()) {
		const WZPair *wp = &w;
		add("WZ-" + w.id, "F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) for the " + w.id + " pair", {"n", "k", "a"},
		    grid_wz, [wp](const Params &p) { return wz_relation(*wp, p); });
	}
	for (const auto &w : wz_pairs()) {
		const WZPair *wp = &w;
		add("WZSUM-" + w.id,
		    "sum_{n<=N} G(n-1,0) = sum_{n<=N} (G(n-1,n-1) + F(n,n-1)) - sum_{k<=N} F(N,k-1) for the " + w.id +
		        " pair",
		    {"N", "a"}, grid_wz_sum,
		    [wp](const Params &p) { return wz_sum(*wp, param_long(p, "N"), param_rational(p, "a")); });
	}
	add("WZPARAM-zeta",
	    "sum_{n<=N} (-1)^{n-1}/(n^2-a^2) = 1/2 sum_{n<=N} (3n^2+a^2)/(n^2 C(2n,n)(n^2-a^2)) prod_{m<n}(1-a^2/m^2) + "
	    "1/2 sum_{k<=N} (-1)^{N+k}/(k^2 C(N,k)C(N+k,k)) prod_{m<k}(1-a^2/m^2)",
	    {"N", "a"}, grid_wz_sum,
	    [](const Params &p) { return parametric_sum(param_long(p, "N"), param_rational(p, "a")); });
	return c;
}

} // namespace

// ---------------------------------------------------------------- WZ pairs

BigRational WZPair::F(long n, long k, const BigRational &a) const
{
	if (k < 0 || n < k + 1)
		throw InvalidInput("F(n,k) needs n >= k+1 >= 1");
	BigRational poch = beta ? shifted_factorial((BigRational(1) + a) / BigRational(2), k) *
	                              shifted_factorial((BigRational(1) - a) / BigRational(2), k)
	                        : shifted_factorial(BigRational(1) + a, k) * shifted_factorial(BigRational(1) - a, k);
	BigRational v = sign(n + k) * BigRational(factorial(n - k - 1)) * poch;
	if (beta)
		v = v / (BigRational(4) * BigRational(factorial(n + k)));
	else
		v = v / (BigRational(2) * BigRational(factorial(n + k + 1)));
	if (second)
		v = v * sign(n) / BigRational(beta ? 2 * k + 1 : k + 1);
	return v;
}

BigRational WZPair::G(long n, long k, const BigRational &a) const
{
	if (k < 0 || n < k)
		throw InvalidInput("G(n,k) needs n >= k >= 0");
	long d = beta ? 2 * n + 1 : n + 1;
	BigRational pole = BigRational(d * d) - a * a;
	if (pole.is_zero())
		throw InvalidInput("a = " + a.str() + " is a pole of G(" + std::to_string(n) + ",k)");
	BigRational poch = beta ? shifted_factorial((BigRational(1) + a) / BigRational(2), k) *
	                              shifted_factorial((BigRational(1) - a) / BigRational(2), k)
	                        : shifted_factorial(BigRational(1) + a, k) * shifted_factorial(BigRational(1) - a, k);
	BigRational v = sign(n + k) * BigRational(factorial(n - k)) * BigRational(d) * poch /
	                (pole * BigRational(factorial(beta ? n + k : n + k + 1)));
	if (second)
		v = v * sign(n) / BigRational(d);
	return v;
}

const std::vector<WZPair> &wz_pairs()
{
	static const std::vector<WZPair> pairs{
	    {"F1G1-zeta", false, false},
	    {"F2G2-zeta", false, true},
	    {"F1G1-beta", true, false},
	    {"F2G2-beta", true, true},
	};
	return pairs;
}

const WZPair &find_wz(const std::string &id)
{
	for (const auto &w : wz_pairs())
		if (w.id == id)
			return w;
	throw InvalidInput("unknown WZ pair '" + id + "'");
}

std::vector<BigRational> wz_sample_points(size_t count)
{
	std::vector<BigRational> out;
	for (size_t i = 0; i < count; ++i)
		out.push_back(BigRational(static_cast<long>(3 * i + 1), 3));
	return out;
}

WZVerdict verify_wz(const WZPair &pair, long nmax, long kmax, const std::vector<BigRational> &a_samples)
{
	WZVerdict v;
	std::vector<BigRational> squares;
	for (const auto &a : a_samples) {
		BigRational s = a * a;
		if (std::find(squares.begin(), squares.end(), s) == squares.end())
			squares.push_back(s);
	}
	for (long n = 1; n <= nmax; ++n)
		for (long k = 0; k < n && k <= kmax; ++k) {
			if (static_cast<long>(squares.size()) < k + 3)
				v.certified = false;
			for (const auto &a : a_samples) {
				++v.checks;
				bool ok = pair.F(n + 1, k, a) - pair.F(n, k, a) == pair.G(n, k + 1, a) - pair.G(n, k, a);
				if (!ok && v.pass) {
					v.pass = false;
					v.first_failure = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " a=" + a.str();
				}
			}
		}
	return v;
}

IdentityResult verify_summation_formula(const WZPair &pair, long N, const BigRational &a)
{
	auto [l, r] = wz_sum(pair, N, a);
	Params p = P({{"N", N}});
	p.emplace_back("a", a.str());
	return {"WZSUM-" + pair.id, p, l, r};
}

IdentityResult verify_parametric_identity(long N, const BigRational &a)
{
	auto [l, r] = parametric_sum(N, a);
	Params p = P({{"N", N}});
	p.emplace_back("a", a.str());
	return {"WZPARAM-zeta", p, l, r};
}

SummationVerdict verify_summation_family(const WZPair &pair, long Nmax, bool parametric)
{
	SummationVerdict v;
	auto samples = wz_sample_points(static_cast<size_t>(2 * Nmax + 1));
	for (long N = 1; N <= Nmax; ++N)
		for (long i = 0; i < 2 * N + 1; ++i) {
			++v.checks;
			auto r = parametric ? verify_parametric_identity(N, samples[i]) : verify_summation_formula(pair, N, samples[i]);
			if (!r.pass() && v.pass) {
				v.pass = false;
				v.first_failure = params_str(r.params);
			}
		}
	return v;
}

// ---------------------------------------------------------------- catalog

const std::vector<IdentityCase> &identity_catalog()
{
	static const std::vector<IdentityCase> catalog = build_catalog();
	return catalog;
}

const IdentityCase &find_identity(const std::string &id)
{
	for (const auto &c : identity_catalog())
		if (c.id == id)
			return c;
	throw InvalidInput("unknown identity '" + id + "'");
}

IdentityResult verify_identity(const std::string &id, const Params &params)
{
	const auto &c = find_identity(id);
	for (const auto &name : c.param_names)
		if (!has_param(params, name))
			throw InvalidInput(id + " needs parameter '" + name + "'");
	auto [l, r] = c.sides(params);
	return {id, params, l, r};
}

std::vector<IdentityResult> run_identities(const std::string &selection, const GridBounds &bounds, int jobs)
{
	struct Task {
		const IdentityCase *c;
		Params p;
	};
	std::vector<Task> tasks;
	for (const auto &c : identity_catalog())
		if (id_selected(selection, c.id))
			for (auto &p : c.grid(bounds))
				tasks.push_back({&c, std::move(p)});
	std::vector<IdentityResult> out(tasks.size());
	// contiguous blocks keep each worker's caches warm within one identity
	std::atomic<size_t> next{0};
	const size_t block = 64;
	std::exception_ptr error;
	std::mutex error_mu;
	auto work = [&]() {
		try {
			for (;;) {
				size_t start = next.fetch_add(block);
				if (start >= tasks.size())
					return;
				for (size_t i = start; i < std::min(tasks.size(), start + block); ++i) {
					auto [l, r] = tasks[i].c->sides(tasks[i].p);
					out[i] = {tasks[i].c->id, tasks[i].p, std::move(l), std::move(r)};
				}
			}
		} catch (...) {
			std::lock_guard<std::mutex> lock(error_mu);
			if (!error)
				error = std::current_exception();
			next = tasks.size();
		}
	};
	int n = std::max(1, jobs);
	std::vector<std::thread> pool;
	for (int t = 1; t < n; ++t)
		pool.emplace_back(work);
	work();
	for (auto &t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);
	return out;
}

} // namespace mhs
