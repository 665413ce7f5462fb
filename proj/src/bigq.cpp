#include "mhs/bigq.hpp"

#include <ostream>

namespace mhs {

static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");

BigInt::BigInt(long long v) : v_(static_cast<long>(v)) {}

BigInt::BigInt(const std::string &decimal)
{
	if (v_.set_str(decimal, 10) != 0)
		throw InvalidInput("not an integer: '" + decimal + "'");
}

long BigInt::to_long() const
{
	if (!v_.fits_slong_p())
		throw std::overflow_error("integer does not fit in 64 bits");
	return v_.get_si();
}

BigInt BigInt::pow(unsigned long e) const
{
	mpz_class r;
	mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
	return BigInt(r);
}

BigInt BigInt::exact_div(const BigInt &d) const
{
	if (d.is_zero())
		throw InvalidInput("division by zero");
	if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()))
		throw InvalidInput("inexact division " + str() + "/" + d.str());
	mpz_class r;
	mpz_divexact(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
	return BigInt(r);
}

BigInt BigInt::fdiv(const BigInt &d) const
{
	if (d.is_zero())
		throw InvalidInput("division by zero");
	mpz_class r;
	mpz_fdiv_q(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
	return BigInt(r);
}

BigInt BigInt::fmod(const BigInt &d) const
{
	if (d.is_zero())
		throw InvalidInput("division by zero");
	mpz_class r;
	mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
	return BigInt(r);
}

int BigInt::valuation(unsigned long p) const
{
	if (is_zero())
		throw InvalidInput("valuation of zero");
	mpz_class t = v_;
	int v = 0;
	while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
		mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
		++v;
	}
	return v;
}

unsigned long BigInt::mod_ui(unsigned long m) const
{
	return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

std::ostream &operator<<(std::ostream &os, const BigInt &x) { return os << x.str(); }

BigRational::BigRational(const BigInt &num, const BigInt &den)
{
	if (den.is_zero())
		throw InvalidInput("zero denominator");
	v_ = mpq_class(num.raw(), den.raw());
	v_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational::BigRational(const mpq_class &v) : v_(v)
{
	if (v_.get_den() == 0)
		throw InvalidInput("zero denominator");
	v_.canonicalize();
}

BigRational BigRational::parse(const std::string &text)
{
	auto slash = text.find('/');
	if (slash == std::string::npos)
		return BigRational(BigInt(text));
	return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

int BigRational::valuation(unsigned long p) const
{
	if (is_zero())
		throw InvalidInput("valuation of zero");
	return num().valuation(p) - den().valuation(p);
}

BigRational BigRational::inverse() const
{
	if (is_zero())
		throw InvalidInput("division by zero");
	return BigRational(mpq_class(1) / v_);
}

BigRational BigRational::pow(long e) const
{
	if (e < 0)
		return inverse().pow(-e);
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
	mpq_class r(n, d);
	return BigRational(r);
}

BigRational &BigRational::operator/=(const BigRational &o)
{
	if (o.is_zero())
		throw InvalidInput("division by zero");
	v_ /= o.v_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const BigRational &x) { return os << x.str(); }

BigInt factorial(long n)
{
	if (n < 0)
		throw InvalidInput("factorial of negative integer");
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return BigInt(r);
}

BigInt binomial(long r, long k)
{
	if (k < 0)
		return BigInt(0);
	if (r >= 0) {
		if (k > r)
			return BigInt(0);
		mpz_class b;
		mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
		return BigInt(b);
	}
	// falling factorial r(r-1)...(r-k+1) over k!; each prefix quotient is an integer
	mpz_class acc = 1;
	for (long i = 0; i < k; ++i) {
		acc *= (r - i);
		mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
	}
	return BigInt(acc);
}

BigRational shifted_factorial(const BigRational &c, long k)
{
	if (k < 0)
		throw InvalidInput("shifted factorial needs k >= 0");
	BigRational acc(1);
	for (long i = 0; i < k; ++i)
		acc *= c + BigRational(i);
	return acc;
}

} // namespace mhs
