#include "doctest.h"

#include "mhs/modring.hpp"

using namespace mhs;

TEST_CASE("reduce_rational examples")
{
	CHECK(reduce_rational(BigRational(-1, 30), 7, 1).residue() == 3);
	CHECK(reduce_rational(BigRational(0), 5, 2).residue() == 0);
	CHECK(reduce_rational(BigRational(1, 2), 3, 2).residue() == 5);
	CHECK_THROWS_AS(reduce_rational(BigRational(1, 10), 5, 2), NotPIntegral);
}

TEST_CASE("to_padic examples")
{
	auto x = to_padic(BigRational(3, 50), 5, 2);
	CHECK(x.valuation() == -2);
	CHECK(x.unit().residue() == 14);
	CHECK(x.unit().modulus() == 25);

	auto y = to_padic(BigRational(7), 7, 2);
	CHECK(y.valuation() == 1);
	CHECK(y.unit().residue() == 1);

	CHECK(to_padic(BigRational(0), 11, 1).is_exact_zero());
}

TEST_CASE("p-adic arithmetic examples")
{
	auto a = PAdicApprox::from_unit(-1, ModInt(5, 2, 2));
	auto b = PAdicApprox::from_unit(1, ModInt(5, 2, 3));
	auto c = a * b;
	CHECK(c.valuation() == 0);
	CHECK(c.unit().residue() == 6);
	CHECK(c.precision() == 2);

	auto one = PAdicApprox::from_unit(0, ModInt(5, 2, 1));
	auto s = one + PAdicApprox::exact_zero(5);
	CHECK(s.valuation() == 0);
	CHECK(s.unit().residue() == 1);

	auto u = PAdicApprox::from_unit(-1, ModInt(5, 2, 1));
	auto v = PAdicApprox::from_unit(-1, ModInt(5, 2, 24));
	auto z = u + v;
	CHECK(z.is_zero());
	CHECK_FALSE(z.is_exact_zero());
	CHECK(z.absolute_precision() == 1);
	CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
	CHECK(z.residue(1).residue() == 0);
	CHECK_THROWS_AS(z.residue(2), PrecisionExhausted);
}

TEST_CASE("p-adic addition loses relative precision on cancellation")
{
	// 1 + 24 = 25 = 5^2 * 1, known mod 5^2 only
	auto a = PAdicApprox::from_unit(0, ModInt(5, 3, 1));
	auto b = PAdicApprox::from_unit(0, ModInt(5, 3, 24));
	auto c = a + b;
	CHECK(c.valuation() == 2);
	CHECK(c.precision() == 1);
	CHECK(c.residue(3).residue() == 25);
	CHECK_THROWS_AS(c.residue(4), PrecisionExhausted);
	CHECK_THROWS_AS(to_padic(BigRational(1, 5), 5, 2).residue(1), NotPIntegral);
}

TEST_CASE("Fermat quotient")
{
	CHECK(fermat_quotient(7).value.residue() == 9);
	CHECK(fermat_quotient(7).value.modulus() == 49);
	CHECK(fermat_quotient(3).value.residue() == 1);
	CHECK(fermat_quotient(5).value.residue() == 3);
	for (u64 p : {3, 5, 7, 11, 13, 101, 1009, 4999}) {
		auto q = fermat_quotient(p).value;
		// p q == 2^{p-1} - 1 (mod p^3)
		u64 p3 = p * p * p;
		u64 lhs = mulmod(p, q.residue(), p3);
		CHECK(lhs == (powmod(2, p - 1, p3) + p3 - 1) % p3);
		CHECK(fermat_quotient_mod(p, 3).project(2) == q);
	}
}

TEST_CASE("reduce_rational is a ring homomorphism")
{
	const BigRational vals[] = {BigRational(1, 3), BigRational(-5, 8), BigRational(22, 9), BigRational(7),
	                            BigRational(-1, 30), BigRational(100, 121)};
	for (u64 p : {7, 13, 101}) {
		for (int N = 1; N <= 3; ++N)
			for (const auto &a : vals)
				for (const auto &b : vals) {
					auto ra = reduce_rational(a, p, N), rb = reduce_rational(b, p, N);
					CHECK(reduce_rational(a + b, p, N) == ra + rb);
					CHECK(reduce_rational(a * b, p, N) == ra * rb);
					CHECK(reduce_rational(a - b, p, N) == ra - rb);
				}
	}
}

TEST_CASE("to_padic inverse and consistency with reduce_rational")
{
	const BigRational vals[] = {BigRational(3, 50), BigRational(-49, 6), BigRational(14, 5), BigRational(125),
	                            BigRational(-1, 30), BigRational(343, 2)};
	for (u64 p : {5, 7}) {
		for (int N = 1; N <= 3; ++N)
			for (const auto &r : vals) {
				auto x = to_padic(r, p, N), y = to_padic(r.inverse(), p, N);
				auto prod = x * y;
				CHECK(prod.valuation() == 0);
				CHECK(prod.unit().residue() == 1);
				int v = x.valuation();
				if (v >= 0 && v < N)
					CHECK(x.residue(N) == reduce_rational(r, p, N));
			}
	}
}

TEST_CASE("ModInt basics")
{
	ModInt a(7, 2, 10);
	CHECK(a.inverse() * a == ModInt(7, 2, 1));
	CHECK(ModInt::from_int(-1, 7, 2).residue() == 48);
	CHECK(ModInt::from_int(-1, 7, 2).centered() == -1);
	CHECK(ModInt(7, 2, 14).valuation() == 1);
	CHECK_THROWS_AS(ModInt(7, 2, 14).inverse(), NotPIntegral);
	CHECK_THROWS_AS(ModInt(7, 2, 1) + ModInt(7, 3, 1), InvalidInput);
	CHECK_THROWS_AS(ModInt(7, 2, 1).project(3), PrecisionExhausted);
	CHECK(ModInt(7, 3, 100).project(1).residue() == 2);
	CHECK(ModInt(7, 2, 3).pow(-1) * ModInt(7, 2, 3) == ModInt(7, 2, 1));
}
