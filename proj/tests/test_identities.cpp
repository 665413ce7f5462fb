#include "doctest.h"

#include "mhs/identities.hpp"
#include "mhs/mhs.hpp"

using namespace mhs;

static Params pr(std::initializer_list<std::pair<std::string, std::string>> xs) { return Params(xs); }

TEST_CASE("binomial lemma examples")
{
	auto r = verify_identity("L2.1a", pr({{"m", "2"}, {"n", "3"}, {"l", "1"}}));
	CHECK(r.lhs == BigRational(-5));
	CHECK(r.rhs == BigRational(-5));

	auto h = verify_identity("L2.1c", pr({{"n", "3"}}));
	CHECK(h.lhs == BigRational(11, 6));
	CHECK(h.pass());
}

TEST_CASE("star sum of twos example")
{
	auto r = verify_identity("T-S2m", pr({{"n", "2"}, {"m", "1"}}));
	CHECK(r.lhs == BigRational(5, 4));
	CHECK(r.rhs == BigRational(2) * (BigRational(2, 3) - BigRational(1, 24)));
}

TEST_CASE("finite even-zeta identity at the first point")
{
	auto r = verify_identity("LESH-13", pr({{"n", "1"}, {"m", "0"}}));
	CHECK(r.lhs == BigRational(3, 4));
	CHECK(r.rhs == BigRational(3, 4));
}

TEST_CASE("parameter validation")
{
	CHECK_THROWS_AS(verify_identity("T-S2", pr({{"n", "3"}, {"a", "0"}, {"b", "0"}, {"c", "1"}})), InvalidInput);
	CHECK_THROWS_AS(verify_identity("T-21-35", pr({{"n", "3"}, {"a", "0"}, {"b", "0"}})), InvalidInput);
	CHECK_THROWS_AS(verify_identity("L2.1d", pr({{"n", "3"}, {"l", "0"}})), InvalidInput);
	CHECK_THROWS_AS(verify_identity("L2.1a", pr({{"m", "2"}, {"n", "3"}})), InvalidInput);
	CHECK_THROWS_AS(verify_identity("nope", pr({})), InvalidInput);
	CHECK_THROWS_AS(verify_identity("L2.1c", pr({{"n", "x"}})), InvalidInput);
}

TEST_CASE("id globs")
{
	CHECK(id_selected("L2.1*", "L2.1a"));
	CHECK_FALSE(id_selected("L2.1*", "L2.2"));
	CHECK(id_selected("T-S2,LESH-*", "LESH-15"));
	CHECK(id_selected("all", "WZ-F1G1-zeta"));
	CHECK_FALSE(id_selected("T-S2", "T-S2m"));
}

TEST_CASE("every identity passes on a reduced grid")
{
	GridBounds g;
	g.nmax = 8;
	auto results = run_identities("all", g, 2);
	CHECK(results.size() > 1000);
	for (const auto &r : results) {
		INFO(r.id << " " << params_str(r.params));
		CHECK(r.pass());
	}
	// deterministic order regardless of workers
	auto again = run_identities("all", g, 1);
	REQUIRE(again.size() == results.size());
	for (size_t i = 0; i < results.size(); ++i)
		CHECK(params_str(again[i].params) == params_str(results[i].params));
}

TEST_CASE("random coefficient depends only on the seed")
{
	Params p = pr({{"n", "5"}, {"m", "2"}, {"a", "1"}, {"c", "2"}, {"b", "2,1"}, {"seed", "7"}});
	auto a = verify_identity("L2.2", p);
	auto b = verify_identity("L2.2", p);
	CHECK(a.lhs == b.lhs);
	CHECK(a.pass());
	p.back().second = "8";
	auto c = verify_identity("L2.2", p);
	CHECK(c.pass());
	CHECK(c.lhs != a.lhs);
}

TEST_CASE("WZ relation examples")
{
	const auto &z1 = find_wz("F1G1-zeta");
	CHECK(z1.F(4, 1, BigRational(0)) - z1.F(3, 1, BigRational(0)) ==
	      z1.G(3, 2, BigRational(0)) - z1.G(3, 1, BigRational(0)));
	auto v = verify_wz(z1, 10, 10, {BigRational(1, 3)});
	CHECK(v.pass);
	CHECK_FALSE(v.certified);

	const auto &b2 = find_wz("F2G2-beta");
	CHECK(b2.F(3, 0, BigRational(0)) - b2.F(2, 0, BigRational(0)) ==
	      b2.G(2, 1, BigRational(0)) - b2.G(2, 0, BigRational(0)));

	CHECK_THROWS_AS(z1.F(2, 2, BigRational(0)), InvalidInput);
	CHECK_THROWS_AS(z1.G(1, 0, BigRational(2)), InvalidInput);
	CHECK_THROWS_AS(find_wz("F3G3-zeta"), InvalidInput);
}

TEST_CASE("WZ relation certified for all pairs")
{
	for (const auto &w : wz_pairs()) {
		auto v = verify_wz(w, 12, 12, wz_sample_points(15));
		CHECK(v.pass);
		CHECK(v.certified);
	}
}

TEST_CASE("F and G from different pairs do not telescope")
{
	const auto &z = find_wz("F1G1-zeta");
	const auto &b = find_wz("F1G1-beta");
	BigRational a(1, 3);
	bool all = true;
	for (long n = 1; n <= 5; ++n)
		for (long k = 0; k < n; ++k)
			all = all && (z.F(n + 1, k, a) - z.F(n, k, a) == b.G(n, k + 1, a) - b.G(n, k, a));
	CHECK_FALSE(all);
}

TEST_CASE("summation formulas")
{
	auto r = verify_parametric_identity(1, BigRational(0));
	CHECK(r.lhs == BigRational(1));
	CHECK(r.rhs == BigRational(1));
	CHECK(verify_parametric_identity(5, BigRational(1, 2)).pass());
	CHECK(verify_summation_formula(find_wz("F1G1-beta"), 4, BigRational(1, 5)).pass());
	CHECK_THROWS_AS(verify_parametric_identity(3, BigRational(2)), InvalidInput);
	for (const auto &w : wz_pairs()) {
		auto v = verify_summation_family(w, 6, false);
		CHECK(v.pass);
	}
	CHECK(verify_summation_family(find_wz("F1G1-zeta"), 6, true).pass);
}

TEST_CASE("parametric identity at a = 0")
{
	for (long n = 1; n <= 10; ++n) {
		auto p = verify_parametric_identity(n, BigRational(0));
		auto l = verify_identity("LESH-13", pr({{"n", std::to_string(n)}, {"m", "0"}}));
		CHECK(p.lhs == evaluate_exact(SumKind::Strict, {-2}, n) * BigRational(-1));
		CHECK(l.pass());
	}
}
