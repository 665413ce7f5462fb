#include "mhs/special_numbers.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace mhs {

namespace {

std::mutex bern_mu;
std::vector<BigRational> bern_table{BigRational(1)};

std::mutex euler_mu;
std::vector<BigInt> euler_table{BigInt(1)}; // E_0, E_2, E_4, ...

std::mutex bmodp_mu;
std::map<std::pair<u64, long>, u64> bmodp_cache;

bool is_prime_small(long n)
{
	if (n < 2)
		return false;
	for (long d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

} // namespace

BigRational bernoulli_exact(long k)
{
	if (k < 0)
		throw InvalidInput("Bernoulli index must be nonnegative");
	std::lock_guard<std::mutex> lock(bern_mu);
	// sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1
	for (long n = static_cast<long>(bern_table.size()); n <= k; ++n) {
		if (n >= 3 && n % 2 == 1) {
			bern_table.emplace_back(0);
			continue;
		}
		BigRational s(0);
		for (long j = 0; j < n; ++j)
			if (!bern_table[j].is_zero())
				s += BigRational(binomial(n + 1, j)) * bern_table[j];
		bern_table.push_back(-s / BigRational(n + 1));
	}
	return bern_table[k];
}

ModInt bernoulli_mod_p(u64 p, long m)
{
	if (m < 2 || m % 2 != 0 || static_cast<u64>(m) + 3 > p)
		throw InvalidInput("bernoulli_mod_p needs even m with 2 <= m <= p-3 (m=" + std::to_string(m) +
		                   ", p=" + std::to_string(p) + ")");
	{
		std::lock_guard<std::mutex> lock(bmodp_mu);
		auto it = bmodp_cache.find({p, m});
		if (it != bmodp_cache.end())
			return ModInt(p, 1, it->second);
	}
	u64 p2 = p * p;
	u64 s = 0;
	for (u64 a = 1; a < p; ++a)
		s = (s + powmod(a, static_cast<u64>(m), p2)) % p2;
	if (s % p != 0)
		throw std::logic_error("power sum not divisible by p");
	u64 r = s / p;
	std::lock_guard<std::mutex> lock(bmodp_mu);
	bmodp_cache.emplace(std::make_pair(p, m), r);
	return ModInt(p, 1, r);
}

ModInt bernoulli_residue(u64 p, long k)
{
	if (k < 0)
		throw InvalidInput("Bernoulli index must be nonnegative");
	if (k == 0)
		return ModInt(p, 1, 1);
	if (k == 1)
		return -ModInt(p, 1, 2).inverse();
	if (k % 2 == 1)
		return ModInt(p, 1, 0);
	if (static_cast<u64>(k) % (p - 1) == 0)
		throw NotPIntegral("B_" + std::to_string(k) + " is not " + std::to_string(p) + "-integral");
	if (static_cast<u64>(k) + 3 > p)
		return reduce_rational(bernoulli_exact(k), p, 1);
	return bernoulli_mod_p(p, k);
}

BigInt euler_exact(long n)
{
	if (n < 0 || n % 2 != 0)
		throw InvalidInput("Euler numbers are indexed by even n >= 0");
	std::lock_guard<std::mutex> lock(euler_mu);
	// sum_{j=0}^{h} binom(2h, 2j) E_{2j} = 0 for h >= 1
	for (long h = static_cast<long>(euler_table.size()); h <= n / 2; ++h) {
		BigInt s(0);
		for (long j = 0; j < h; ++j)
			s += binomial(2 * h, 2 * j) * euler_table[j];
		euler_table.push_back(-s);
	}
	return euler_table[n / 2];
}

BigInt von_staudt_denominator(long n)
{
	if (n < 2 || n % 2 != 0)
		throw InvalidInput("von Staudt denominator needs even n >= 2");
	BigInt d(1);
	for (long q = 2; q <= n + 1; ++q)
		if (n % (q - 1) == 0 && is_prime_small(q))
			d *= BigInt(q);
	return d;
}

} // namespace mhs
