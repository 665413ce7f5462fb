#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mhs {

struct InvalidInput : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

class BigInt {
public:
	BigInt() = default;
	BigInt(long v) : v_(v) {}
	BigInt(int v) : v_(v) {}
	BigInt(unsigned long v) : v_(v) {}
	BigInt(long long v);
	explicit BigInt(const mpz_class &v) : v_(v) {}
	explicit BigInt(const std::string &decimal);

	const mpz_class &raw() const { return v_; }

	int sign() const { return sgn(v_); }
	bool is_zero() const { return sgn(v_) == 0; }
	bool fits_long() const { return v_.fits_slong_p(); }
	long to_long() const;
	std::string str() const { return v_.get_str(); }
	size_t bits() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }

	BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
	BigInt pow(unsigned long e) const;
	// Exact division; throws if d does not divide *this.
	BigInt exact_div(const BigInt &d) const;
	// Floor division and the matching nonnegative-for-positive-d remainder.
	BigInt fdiv(const BigInt &d) const;
	BigInt fmod(const BigInt &d) const;
	// Number of times p divides *this (nonzero).
	int valuation(unsigned long p) const;
	unsigned long mod_ui(unsigned long m) const;

	BigInt operator-() const { return BigInt(mpz_class(-v_)); }
	BigInt &operator+=(const BigInt &o) { v_ += o.v_; return *this; }
	BigInt &operator-=(const BigInt &o) { v_ -= o.v_; return *this; }
	BigInt &operator*=(const BigInt &o) { v_ *= o.v_; return *this; }

	friend BigInt operator+(BigInt a, const BigInt &b) { return a += b; }
	friend BigInt operator-(BigInt a, const BigInt &b) { return a -= b; }
	friend BigInt operator*(BigInt a, const BigInt &b) { return a *= b; }
	friend bool operator==(const BigInt &a, const BigInt &b) { return a.v_ == b.v_; }
	friend auto operator<=>(const BigInt &a, const BigInt &b) { return cmp(a.v_, b.v_) <=> 0; }

private:
	mpz_class v_;
};

std::ostream &operator<<(std::ostream &os, const BigInt &x);

class BigRational {
public:
	BigRational() = default;
	BigRational(long v) : v_(v) {}
	BigRational(int v) : v_(v) {}
	BigRational(const BigInt &v) : v_(v.raw()) {}
	BigRational(const BigInt &num, const BigInt &den);
	BigRational(long num, long den);
	explicit BigRational(const mpq_class &v);
	// Accepts "a", "-a/b".
	static BigRational parse(const std::string &text);

	const mpq_class &raw() const { return v_; }

	BigInt num() const { return BigInt(v_.get_num()); }
	BigInt den() const { return BigInt(v_.get_den()); }
	int sign() const { return sgn(v_); }
	bool is_zero() const { return sgn(v_) == 0; }
	bool is_integer() const { return v_.get_den() == 1; }
	std::string str() const { return v_.get_str(); }
	// p-adic valuation; the value must be nonzero.
	int valuation(unsigned long p) const;

	BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }
	BigRational inverse() const;
	BigRational pow(long e) const;

	BigRational operator-() const { return BigRational(mpq_class(-v_)); }
	BigRational &operator+=(const BigRational &o) { v_ += o.v_; return *this; }
	BigRational &operator-=(const BigRational &o) { v_ -= o.v_; return *this; }
	BigRational &operator*=(const BigRational &o) { v_ *= o.v_; return *this; }
	BigRational &operator/=(const BigRational &o);

	friend BigRational operator+(BigRational a, const BigRational &b) { return a += b; }
	friend BigRational operator-(BigRational a, const BigRational &b) { return a -= b; }
	friend BigRational operator*(BigRational a, const BigRational &b) { return a *= b; }
	friend BigRational operator/(BigRational a, const BigRational &b) { return a /= b; }
	friend bool operator==(const BigRational &a, const BigRational &b) { return a.v_ == b.v_; }
	friend auto operator<=>(const BigRational &a, const BigRational &b) { return cmp(a.v_, b.v_) <=> 0; }

private:
	mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const BigRational &x);

BigInt factorial(long n);

// r(r-1)...(r-k+1)/k! for k >= 0, zero for k < 0; r may be negative.
BigInt binomial(long r, long k);

// Rising product c(c+1)...(c+k-1), (c)_0 = 1.
BigRational shifted_factorial(const BigRational &c, long k);

} // namespace mhs
