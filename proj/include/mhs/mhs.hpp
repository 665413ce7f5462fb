#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mhs/bigq.hpp"
#include "mhs/composition.hpp"
#include "mhs/modring.hpp"

namespace mhs {

enum class SumKind { Strict, NonStrict, Odd };

const char *kind_name(SumKind k); // "H", "S", "Hbar"
SumKind parse_kind(const std::string &name);

// Value rings for the evaluator. Each supplies zero(), one(), from_int(v) and
// inv_power(d, e) = 1/d^e.

struct RationalRing {
	using value_type = BigRational;
	value_type zero() const { return BigRational(0); }
	value_type one() const { return BigRational(1); }
	value_type from_int(long v) const { return BigRational(v); }
	value_type inv_power(long d, int e) const;
};

class ModRing {
public:
	using value_type = ModInt;
	ModRing(u64 p, int N);
	u64 prime() const { return p_; }
	int exponent() const { return n_; }
	value_type zero() const { return ModInt(p_, n_); }
	value_type one() const { return ModInt(p_, n_, 1); }
	value_type from_int(long v) const { return ModInt::from_int(v, p_, n_); }
	value_type from_rational(const BigRational &r) const { return reduce_rational(r, p_, n_); }
	// throws NotPIntegral when p | d
	value_type inv(long d) const;
	value_type inv_power(long d, int e) const { return inv(d).pow(e); }

private:
	u64 p_;
	int n_;
	// lazily grown inverse table; a ModRing belongs to one worker
	mutable std::vector<u64> inv_;
};

class PAdicRing {
public:
	using value_type = PAdicApprox;
	PAdicRing(u64 p, int N) : p_(p), n_(N) {}
	u64 prime() const { return p_; }
	int precision() const { return n_; }
	value_type zero() const { return PAdicApprox::exact_zero(p_); }
	value_type one() const { return to_padic(BigRational(1), p_, n_); }
	value_type from_int(long v) const { return to_padic(BigRational(v), p_, n_); }
	value_type from_rational(const BigRational &r) const { return to_padic(r, p_, n_); }
	value_type inv_power(long d, int e) const { return to_padic(BigRational(1, d).pow(e), p_, n_); }

private:
	u64 p_;
	int n_;
};

// Prefix values X_k(s) for k = 0..n, X in {H, S, Hbar}, by the DP
//   T_j(k) = T_j(k-1) + T_{j-1}(k-1 or k) * sgn(s_j)^k / d_k^{|s_j|}
// with d_k = k (H, S) or d_k = 2k-1 with sign exponent k-1 (Hbar). O(n r).
template <class Ring>
std::vector<typename Ring::value_type> evaluate_prefixes(const Ring &ring, SumKind kind, const Composition &s,
                                                         long n)
{
	using V = typename Ring::value_type;
	if (n < 0)
		throw InvalidInput("summation bound must be nonnegative");
	if (kind == SumKind::NonStrict && !s.all_positive())
		throw InvalidInput("non-strict sums need positive parts: " + s.str());
	std::vector<V> prev(static_cast<size_t>(n + 1), ring.one());
	std::map<int, std::vector<V>> weights;
	for (size_t j = 0; j < s.length(); ++j) {
		int e = std::abs(s[j]);
		auto it = weights.find(e);
		if (it == weights.end()) {
			std::vector<V> w;
			w.reserve(static_cast<size_t>(n + 1));
			w.push_back(ring.zero());
			for (long k = 1; k <= n; ++k)
				w.push_back(ring.inv_power(kind == SumKind::Odd ? 2 * k - 1 : k, e));
			it = weights.emplace(e, std::move(w)).first;
		}
		const std::vector<V> &w = it->second;
		std::vector<V> cur;
		cur.reserve(static_cast<size_t>(n + 1));
		cur.push_back(ring.zero());
		for (long k = 1; k <= n; ++k) {
			V term = (kind == SumKind::NonStrict ? prev[k] : prev[k - 1]) * w[k];
			long sign_exp = kind == SumKind::Odd ? k - 1 : k;
			if (s[j] < 0 && (sign_exp & 1))
				cur.push_back(cur.back() - term);
			else
				cur.push_back(cur.back() + term);
		}
		prev = std::move(cur);
	}
	return prev;
}

template <class Ring>
typename Ring::value_type evaluate(const Ring &ring, SumKind kind, const Composition &s, long n)
{
	return evaluate_prefixes(ring, kind, s, n).back();
}

inline BigRational evaluate_exact(SumKind kind, const Composition &s, long n)
{
	return evaluate(RationalRing{}, kind, s, n);
}

// H_n(a) H_n(b) == H_n(a,b) + H_n(b,a) + H_n(sgn(ab)(|a|+|b|))
template <class Ring>
bool stuffle_depth1(const Ring &ring, int a, int b, long n)
{
	int c = (a < 0) != (b < 0) ? -(std::abs(a) + std::abs(b)) : std::abs(a) + std::abs(b);
	auto lhs = evaluate(ring, SumKind::Strict, Composition{a}, n) * evaluate(ring, SumKind::Strict, Composition{b}, n);
	auto rhs = evaluate(ring, SumKind::Strict, Composition{a, b}, n) +
	           evaluate(ring, SumKind::Strict, Composition{b, a}, n) +
	           evaluate(ring, SumKind::Strict, Composition{c}, n);
	return lhs == rhs;
}

// m Hbar_n({2}^m) == sum_{k=1}^m (-1)^{k-1} Hbar_n(2k) Hbar_n({2}^{m-k})
template <class Ring>
bool stuffle_odd_squares(const Ring &ring, int m, long n)
{
	auto lhs = ring.from_int(m) * evaluate(ring, SumKind::Odd, Composition::repeat(2, m), n);
	auto rhs = ring.zero();
	for (int k = 1; k <= m; ++k) {
		auto t = evaluate(ring, SumKind::Odd, Composition{2 * k}, n) *
		         evaluate(ring, SumKind::Odd, Composition::repeat(2, m - k), n);
		rhs = k % 2 ? rhs + t : rhs - t;
	}
	return lhs == rhs;
}

// Signed products of H-sums whose total equals (-1)^{l(s)} S_n(reversed s).
struct SHTerm {
	int sign;
	SHSplitting blocks;
};
std::vector<SHTerm> sh_expand(const Composition &s);

template <class Ring>
typename Ring::value_type evaluate_sh_expansion(const Ring &ring, const std::vector<SHTerm> &terms, long n)
{
	auto total = ring.zero();
	for (const auto &t : terms) {
		auto prod = ring.one();
		for (const auto &b : t.blocks)
			prod = prod * evaluate(ring, SumKind::Strict, b, n);
		total = t.sign > 0 ? total + prod : total - prod;
	}
	return total;
}

} // namespace mhs
