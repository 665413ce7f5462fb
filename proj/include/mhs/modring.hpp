#pragma once

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mhs/bigq.hpp"

namespace mhs {

struct NotPIntegral : std::domain_error {
	using std::domain_error::domain_error;
};

struct PrecisionExhausted : std::runtime_error {
	using std::runtime_error::runtime_error;
};

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 b, u64 e, u64 m);
u64 ipow(u64 p, int e); // throws if p^e exceeds 2^62

// Residue modulo p^N.
class ModInt {
public:
	ModInt(u64 p, int N, u64 residue = 0);
	static ModInt from_int(long v, u64 p, int N);

	u64 prime() const { return p_; }
	int exponent() const { return n_; }
	u64 modulus() const { return m_; }
	u64 residue() const { return r_; }
	// Residue as a symmetric representative in (-m/2, m/2].
	long centered() const;

	bool is_zero() const { return r_ == 0; }
	bool is_unit() const { return r_ % p_ != 0; }
	int valuation() const; // exponent() for zero

	ModInt inverse() const; // throws NotPIntegral for non-units
	ModInt pow(long e) const;
	// Reduction to a smaller exponent.
	ModInt project(int N) const;

	ModInt operator-() const { return ModInt(p_, n_, r_ ? m_ - r_ : 0, m_); }
	ModInt &operator+=(const ModInt &o);
	ModInt &operator-=(const ModInt &o);
	ModInt &operator*=(const ModInt &o);
	ModInt &operator/=(const ModInt &o) { return *this *= o.inverse(); }

	friend ModInt operator+(ModInt a, const ModInt &b) { return a += b; }
	friend ModInt operator-(ModInt a, const ModInt &b) { return a -= b; }
	friend ModInt operator*(ModInt a, const ModInt &b) { return a *= b; }
	friend ModInt operator/(ModInt a, const ModInt &b) { return a /= b; }
	friend bool operator==(const ModInt &a, const ModInt &b)
	{
		return a.p_ == b.p_ && a.n_ == b.n_ && a.r_ == b.r_;
	}

private:
	ModInt(u64 p, int N, u64 r, u64 m) : p_(p), m_(m), r_(r), n_(N) {}
	void same_ring(const ModInt &o) const;

	u64 p_;
	u64 m_;
	u64 r_;
	int n_;
};

std::ostream &operator<<(std::ostream &os, const ModInt &x);

// p^v * (u + O(p^prec)) with u a unit, or zero known modulo p^abs.
class PAdicApprox {
public:
	static constexpr int kExact = INT_MAX;

	static PAdicApprox exact_zero(u64 p) { return PAdicApprox(p, 0, 0, 0, true, kExact); }
	static PAdicApprox zero_mod(u64 p, int abs_precision) { return PAdicApprox(p, 0, 0, 0, true, abs_precision); }
	// unit must not be divisible by p
	static PAdicApprox from_unit(int valuation, const ModInt &unit);

	u64 prime() const { return p_; }
	bool is_zero() const { return zero_; }
	bool is_exact_zero() const { return zero_ && abs_ == kExact; }
	int valuation() const; // throws for zero
	int precision() const { return prec_; } // relative digits of the unit
	int absolute_precision() const { return zero_ ? abs_ : v_ + prec_; }
	ModInt unit() const;

	// Value modulo p^k; needs valuation >= 0 and absolute precision >= k.
	ModInt residue(int k) const;

	PAdicApprox inverse() const;
	PAdicApprox operator-() const;
	friend PAdicApprox operator+(const PAdicApprox &a, const PAdicApprox &b);
	friend PAdicApprox operator-(const PAdicApprox &a, const PAdicApprox &b) { return a + (-b); }
	friend PAdicApprox operator*(const PAdicApprox &a, const PAdicApprox &b);
	PAdicApprox &operator+=(const PAdicApprox &o) { return *this = *this + o; }
	PAdicApprox &operator*=(const PAdicApprox &o) { return *this = *this * o; }

	std::string str() const;

private:
	PAdicApprox(u64 p, int v, u64 u, int prec, bool zero, int abs)
	    : p_(p), u_(u), v_(v), prec_(prec), abs_(abs), zero_(zero)
	{
	}

	u64 p_;
	u64 u_;
	int v_;
	int prec_;
	int abs_;
	bool zero_;
};

std::ostream &operator<<(std::ostream &os, const PAdicApprox &x);

ModInt reduce_rational(const BigRational &r, u64 p, int N);
PAdicApprox to_padic(const BigRational &r, u64 p, int N);

struct FermatQuotient {
	u64 p;
	ModInt value; // q_p(2) mod p^2
};

FermatQuotient fermat_quotient(u64 p);
// q_p(2) mod p^N from 2^{p-1} mod p^{N+1}.
ModInt fermat_quotient_mod(u64 p, int N);

} // namespace mhs
