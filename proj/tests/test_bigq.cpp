#include "doctest.h"

#include "mhs/bigq.hpp"

using mhs::BigInt;
using mhs::BigRational;
using mhs::binomial;

TEST_CASE("binomial examples")
{
	CHECK(binomial(6, 1) == BigInt(6));
	CHECK(binomial(5, -2) == BigInt(0));
	CHECK(binomial(-3, 2) == BigInt(6));
	CHECK(binomial(3, 5) == BigInt(0));
	CHECK(binomial(-1, 7) == BigInt(-1));
	CHECK(binomial(0, 0) == BigInt(1));
}

TEST_CASE("binomial Pascal rule over signed upper index")
{
	for (long r = -15; r <= 15; ++r)
		for (long k = 1; k <= 12; ++k)
			CHECK(binomial(r, k) == binomial(r - 1, k) + binomial(r - 1, k - 1));
}

TEST_CASE("binomial times factorials is n!")
{
	for (long n = 0; n <= 30; ++n)
		for (long k = 0; k <= n; ++k)
			CHECK(binomial(n, k) * mhs::factorial(k) * mhs::factorial(n - k) == mhs::factorial(n));
}

TEST_CASE("shifted factorial")
{
	CHECK(mhs::shifted_factorial(BigRational(1), 3) == BigRational(6));
	CHECK(mhs::shifted_factorial(BigRational(7, 3), 0) == BigRational(1));
	CHECK(mhs::shifted_factorial(BigRational(1, 2), 2) == BigRational(3, 4));
	CHECK(mhs::shifted_factorial(BigRational(-2), 3) == BigRational(0));
}

TEST_CASE("rational arithmetic")
{
	CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
	CHECK(BigRational(-1, 30) * BigRational(1) == BigRational(-1, 30));
	CHECK(BigRational(3) / BigRational(50) == BigRational(3, 50));
	CHECK_THROWS_AS(BigRational(1) / BigRational(0), mhs::InvalidInput);
	CHECK_THROWS_AS(BigRational(1, 0), mhs::InvalidInput);

	BigRational r(6, -4);
	CHECK(r.num() == BigInt(-3));
	CHECK(r.den() == BigInt(2));
	CHECK(r.str() == "-3/2");
	CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
	CHECK(BigRational::parse("7") == BigRational(7));
	CHECK_THROWS_AS(BigRational::parse("1/x"), mhs::InvalidInput);
	CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
	CHECK(BigRational(50, 3).valuation(5) == 2);
	CHECK(BigRational(3, 50).valuation(5) == -2);
}

TEST_CASE("rational arithmetic agrees with integer arithmetic")
{
	for (long a = -20; a <= 20; a += 3)
		for (long b = -17; b <= 17; b += 4) {
			CHECK(BigRational(a) + BigRational(b) == BigRational(a + b));
			CHECK(BigRational(a) - BigRational(b) == BigRational(a - b));
			CHECK(BigRational(a) * BigRational(b) == BigRational(a * b));
			CHECK((BigRational(a) * BigRational(b)).is_integer());
		}
}

TEST_CASE("big integer helpers")
{
	CHECK(BigInt(std::string("-123456789012345678901234567890")).str() == "-123456789012345678901234567890");
	CHECK(BigInt(-7).fdiv(BigInt(2)) == BigInt(-4));
	CHECK(BigInt(-7).fmod(BigInt(2)) == BigInt(1));
	CHECK(BigInt(12).exact_div(BigInt(4)) == BigInt(3));
	CHECK_THROWS(BigInt(13).exact_div(BigInt(4)));
	CHECK(BigInt(250).valuation(5) == 3);
	CHECK(BigInt(-3).mod_ui(7) == 4);
}
