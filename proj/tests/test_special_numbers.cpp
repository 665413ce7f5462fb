#include "doctest.h"

#include "mhs/special_numbers.hpp"

using namespace mhs;

TEST_CASE("Bernoulli numbers")
{
	CHECK(bernoulli_exact(0) == BigRational(1));
	CHECK(bernoulli_exact(1) == BigRational(-1, 2));
	CHECK(bernoulli_exact(2) == BigRational(1, 6));
	CHECK(bernoulli_exact(4) == BigRational(-1, 30));
	CHECK(bernoulli_exact(7) == BigRational(0));
	CHECK(bernoulli_exact(12) == BigRational(-691, 2730));
	for (long m = 1; m <= 30; ++m)
		CHECK(bernoulli_exact(2 * m + 1).is_zero());
}

TEST_CASE("Bernoulli denominators follow von Staudt-Clausen")
{
	CHECK(von_staudt_denominator(2) == BigInt(6));
	CHECK(von_staudt_denominator(4) == BigInt(30));
	CHECK(von_staudt_denominator(12) == BigInt(2730));
	for (long k = 2; k <= 60; k += 2)
		CHECK(bernoulli_exact(k).den() == von_staudt_denominator(k));
}

TEST_CASE("Bernoulli numbers mod p")
{
	CHECK(bernoulli_mod_p(7, 4).residue() == 3);
	CHECK(bernoulli_mod_p(11, 8) == reduce_rational(BigRational(-1, 30), 11, 1));
	CHECK(bernoulli_mod_p(5, 2).residue() == 1);
	CHECK_THROWS_AS(bernoulli_mod_p(7, 6), InvalidInput);
	CHECK_THROWS_AS(bernoulli_mod_p(7, 3), InvalidInput);
	CHECK_THROWS_AS(bernoulli_residue(7, 6), NotPIntegral);
	CHECK(bernoulli_residue(7, 9).residue() == 0);
}

TEST_CASE("power-sum and exact Bernoulli routes agree")
{
	for (u64 p = 5; p <= 200; ++p) {
		bool prime = true;
		for (u64 d = 2; d * d <= p; ++d)
			if (p % d == 0)
				prime = false;
		if (!prime)
			continue;
		for (long m = 2; m + 3 <= static_cast<long>(p); m += 2)
			CHECK(bernoulli_mod_p(p, m) == reduce_rational(bernoulli_exact(m), p, 1));
	}
}

TEST_CASE("Euler numbers")
{
	CHECK(euler_exact(0) == BigInt(1));
	CHECK(euler_exact(2) == BigInt(-1));
	CHECK(euler_exact(4) == BigInt(5));
	CHECK(euler_exact(10) == BigInt(-50521));
	for (long m = 0; m <= 30; ++m)
		CHECK(euler_exact(2 * m).sign() == (m % 2 ? -1 : 1));
	CHECK_THROWS_AS(euler_exact(3), InvalidInput);
}
