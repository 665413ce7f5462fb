#include "doctest.h"

#include <set>

#include "mhs/mhs.hpp"
#include "naive.hpp"

using namespace mhs;

static BigRational H(const Composition &s, long n) { return evaluate_exact(SumKind::Strict, s, n); }
static BigRational S(const Composition &s, long n) { return evaluate_exact(SumKind::NonStrict, s, n); }
static BigRational Hbar(const Composition &s, long n) { return evaluate_exact(SumKind::Odd, s, n); }

TEST_CASE("evaluate examples")
{
	CHECK(H({1, 2}, 3) == BigRational(5, 12));
	CHECK(H({1, 2}, 2) == BigRational(1, 4));
	CHECK(S({2, 1}, 2) == BigRational(13, 8));
	CHECK(H({2, 3}, 1) == BigRational(0));
	CHECK(evaluate(ModRing(7, 2), SumKind::Strict, Composition{2, 3}, 1).is_zero());
	CHECK(Hbar({2}, 2) == BigRational(10, 9));
	CHECK(H({}, 5) == BigRational(1));
	CHECK(S({}, 5) == BigRational(1));
	CHECK(Hbar({}, 5) == BigRational(1));
	CHECK(evaluate(ModRing(5, 1), SumKind::Strict, Composition{}, 5).residue() == 1);
	CHECK_THROWS_AS(S({2, -1}, 3), InvalidInput);
	CHECK_THROWS_AS(evaluate(ModRing(5, 2), SumKind::Strict, Composition{1}, 5), NotPIntegral);
	CHECK_THROWS_AS(evaluate(ModRing(5, 2), SumKind::Odd, Composition{1}, 3), NotPIntegral);
}

TEST_CASE("composition parsing")
{
	CHECK(Composition::parse("2,2,-3") == Composition{2, 2, -3});
	CHECK(Composition::parse("2^3,1") == Composition{2, 2, 2, 1});
	CHECK(Composition::parse("(1, 2)") == Composition{1, 2});
	CHECK(Composition::parse("").empty());
	CHECK(Composition::parse("2^0").empty());
	CHECK_THROWS_AS(Composition::parse("1,0"), InvalidInput);
	CHECK_THROWS_AS(Composition::parse("1,,2"), InvalidInput);
	CHECK_THROWS_AS(Composition::parse("1,a"), InvalidInput);
	CHECK(Composition({3, -2, 1}).weight() == 6);
	CHECK(Composition({3, -2, 1}).str() == "3,-2,1");
}

TEST_CASE("evaluator matches nested-loop oracle")
{
	// all signed compositions of weight <= 6 for H and Hbar, positive ones for S
	for (int w = 0; w <= 6; ++w)
		for (const auto &base : compositions_of(w)) {
			size_t r = base.length();
			for (unsigned mask = 0; mask < (1u << r); ++mask) {
				std::vector<int> parts = base.parts();
				for (size_t i = 0; i < r; ++i)
					if (mask >> i & 1)
						parts[i] = -parts[i];
				Composition s(parts);
				for (long n = 0; n <= 12; ++n) {
					CHECK(H(s, n) == naive::nested('H', parts, n));
					CHECK(Hbar(s, n) == naive::nested('O', parts, n));
					if (mask == 0)
						CHECK(S(s, n) == naive::nested('S', parts, n));
				}
			}
		}
}

TEST_CASE("prefix vector holds every partial sum")
{
	Composition s{2, -1, 3};
	auto pre = evaluate_prefixes(RationalRing{}, SumKind::Strict, s, 15);
	for (long k = 0; k <= 15; ++k)
		CHECK(pre[k] == H(s, k));
}

TEST_CASE("reduction commutes with evaluation")
{
	for (u64 p : {7, 11, 13})
		for (int N = 1; N <= 3; ++N) {
			ModRing ring(p, N);
			PAdicRing pring(p, N);
			for (int w = 1; w <= 5; ++w)
				for (const auto &s : compositions_of(w)) {
					Composition alt = s;
					if (s.length() >= 2) {
						auto parts = s.parts();
						parts[1] = -parts[1];
						alt = Composition(parts);
					}
					for (long n : {long(p - 1), long(p - 1) / 2, 3L}) {
						CHECK(evaluate(ring, SumKind::Strict, alt, n) == reduce_rational(H(alt, n), p, N));
						CHECK(evaluate(ring, SumKind::NonStrict, s, n) == reduce_rational(S(s, n), p, N));
						long m = (p - 1) / 2;
						CHECK(evaluate(ring, SumKind::Odd, alt, m) == reduce_rational(Hbar(alt, m), p, N));
						auto pv = evaluate(pring, SumKind::Strict, alt, n);
						auto exact = H(alt, n);
						if (exact.is_zero())
							CHECK(pv.is_zero());
						else if (pv.absolute_precision() >= N)
							CHECK(pv.residue(N) == reduce_rational(exact, p, N));
					}
				}
		}
}

TEST_CASE("p-adic evaluation past the unit range")
{
	// H_{p}(1) has a 1/p term; p-adic evaluation keeps valuation -1
	PAdicRing ring(5, 3);
	auto v = evaluate(ring, SumKind::Strict, Composition{1}, 5);
	auto exact = H({1}, 5);
	CHECK(v.valuation() == exact.valuation(5));
	CHECK(v.valuation() == -1);
	auto ref = to_padic(exact, 5, 3);
	CHECK(v.unit().project(v.precision()) == ref.unit().project(v.precision()));
}

TEST_CASE("dual")
{
	CHECK(dual({1, 2}) == Composition{2, 1});
	CHECK(dual({2, 1}) == Composition{1, 2});
	CHECK(dual({2, 2}) == Composition{1, 2, 1});
	CHECK(dual({1}) == Composition{1});
	CHECK(dual({3}) == Composition{1, 1, 1});
	CHECK_THROWS_AS(dual({1, -2}), InvalidInput);
	CHECK_THROWS_AS(dual({}), InvalidInput);
	for (int w = 1; w <= 12; ++w)
		for (const auto &s : compositions_of(w)) {
			auto d = dual(s);
			CHECK(d.weight() == w);
			CHECK(s.length() + d.length() == static_cast<size_t>(w + 1));
			CHECK(dual(d) == s);
		}
}

TEST_CASE("compositions_of counts and order")
{
	for (int w = 1; w <= 12; ++w) {
		auto all = compositions_of(w);
		CHECK(all.size() == (size_t(1) << (w - 1)));
		CHECK(std::set<Composition>(all.begin(), all.end()).size() == all.size());
		CHECK(std::is_sorted(all.begin(), all.end()));
	}
	CHECK(compositions_of(0).size() == 1);
}

TEST_CASE("SH expansion")
{
	auto terms = sh_expand({1, 2});
	CHECK(terms.size() == 2);
	CHECK(evaluate_sh_expansion(RationalRing{}, terms, 2) == BigRational(13, 8));
	CHECK(evaluate_sh_expansion(RationalRing{}, terms, 2) == S({2, 1}, 2));

	auto single = sh_expand({4});
	CHECK(single.size() == 1);
	CHECK(evaluate_sh_expansion(RationalRing{}, single, 7) == -S({4}, 7));
	CHECK(S({4}, 7) == H({4}, 7));

	// length 2: S_n(1,1) = H_n(1)^2 - H_n(1,1)
	CHECK(evaluate_sh_expansion(RationalRing{}, sh_expand({1, 1}), 3) == S({1, 1}, 3));
	CHECK(S({1, 1}, 3) == H({1}, 3) * H({1}, 3) - H({1, 1}, 3));
	CHECK(S({1, 1}, 3) == BigRational(85, 36));

	for (int w = 1; w <= 6; ++w)
		for (const auto &s : compositions_of(w)) {
			auto t = sh_expand(s);
			CHECK(t.size() == (size_t(1) << (s.length() - 1)));
			for (const auto &term : t) {
				Composition joined;
				for (const auto &b : term.blocks)
					joined = joined + b;
				CHECK(joined == s);
			}
			BigRational sign = s.length() % 2 ? BigRational(-1) : BigRational(1);
			for (long n = 0; n <= 10; ++n)
				CHECK(evaluate_sh_expansion(RationalRing{}, t, n) == sign * S(s.reversed(), n));
		}
}

TEST_CASE("depth-one stuffle")
{
	CHECK(stuffle_depth1(RationalRing{}, 1, 2, 4));
	CHECK(stuffle_depth1(RationalRing{}, -1, -1, 3));
	CHECK(H({-1}, 3) * H({-1}, 3) == 2 * H({-1, -1}, 3) + H({2}, 3));
	CHECK(stuffle_depth1(RationalRing{}, 1, 1, 1));
	for (int a : {-3, -2, -1, 1, 2, 3})
		for (int b : {-3, -2, -1, 1, 2, 3})
			for (long n = 0; n <= 9; ++n) {
				CHECK(stuffle_depth1(RationalRing{}, a, b, n));
				CHECK(stuffle_depth1(ModRing(11, 3), a, b, 10));
			}
}

TEST_CASE("odd squares stuffle")
{
	CHECK(stuffle_odd_squares(RationalRing{}, 1, 3));
	CHECK(2 * Hbar({2, 2}, 2) == BigRational(2, 9));
	CHECK(Hbar({2}, 2) * Hbar({2}, 2) - Hbar({4}, 2) == BigRational(2, 9));
	CHECK(stuffle_odd_squares(RationalRing{}, 2, 2));
	CHECK(stuffle_odd_squares(RationalRing{}, 3, 4));
	for (int m = 1; m <= 5; ++m)
		for (long n = 0; n <= 8; ++n)
			CHECK(stuffle_odd_squares(RationalRing{}, m, n));
	CHECK(stuffle_odd_squares(ModRing(13, 2), 4, 6));
}

TEST_CASE("inner composition enumeration")
{
	auto c3 = enumerate_inner_compositions(3, 2);
	REQUIRE(c3.size() == 1);
	CHECK(c3[0] == InnerTriple{1, 2, {}});

	auto c4 = enumerate_inner_compositions(4, 2);
	std::vector<InnerTriple> want{{1, 2, {1}}, {1, 3, {}}, {2, 2, {}}};
	CHECK(c4.size() == want.size());
	for (const auto &t : want)
		CHECK(std::find(c4.begin(), c4.end(), t) != c4.end());

	CHECK(enumerate_inner_compositions(2, 2).empty());

	// count: sum over i, j of 2^{|s|-1} (1 for |s| = 0)
	for (int c = 2; c <= 9; ++c)
		for (int jmin : {1, 2}) {
			size_t want_n = 0;
			for (int i = 1; i <= c; ++i)
				for (int j = jmin; i + j <= c; ++j)
					want_n += c - i - j == 0 ? 1 : size_t(1) << (c - i - j - 1);
			CHECK(enumerate_inner_compositions(c, jmin).size() == want_n);
		}
}

TEST_CASE("reversal convention")
{
	// H_n(s) with s_1 on the smallest index
	CHECK(H({1, 2}, 3) == BigRational(1, 1) / 4 + BigRational(1, 9) + BigRational(1, 18));
	CHECK(H({2, 1}, 3) == BigRational(1, 2) + BigRational(1, 3) + BigRational(1, 12));
	CHECK(H({1, 2}, 3) != H({2, 1}, 3));
}
