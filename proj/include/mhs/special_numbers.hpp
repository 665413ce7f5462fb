#pragma once

#include "mhs/bigq.hpp"
#include "mhs/modring.hpp"

namespace mhs {

// Exact B_k with B_1 = -1/2 (generating function x/(e^x - 1)). Cached.
BigRational bernoulli_exact(long k);

// B_m mod p via (sum_{a<p} a^m mod p^2) / p; needs m even, 2 <= m <= p-3. Cached.
ModInt bernoulli_mod_p(u64 p, long m);

// B_k mod p for any index where B_k is p-integral: k = 0, 1, odd k, or even k <= p-3.
ModInt bernoulli_residue(u64 p, long k);

// Exact E_{n} for even n >= 0 (E_0 = 1, E_2 = -1, E_4 = 5, ...). Cached.
BigInt euler_exact(long n);

// Product of primes q with (q-1) | n, n even and positive.
BigInt von_staudt_denominator(long n);

} // namespace mhs
