#include "mhs/modring.hpp"

#include <ostream>
#include <sstream>

namespace mhs {

u64 powmod(u64 b, u64 e, u64 m)
{
	u64 r = 1 % m;
	b %= m;
	while (e) {
		if (e & 1)
			r = mulmod(r, b, m);
		b = mulmod(b, b, m);
		e >>= 1;
	}
	return r;
}

u64 ipow(u64 p, int e)
{
	u64 r = 1;
	for (int i = 0; i < e; ++i) {
		if (r > (u64(1) << 62) / p)
			throw InvalidInput("modulus p^N too large");
		r *= p;
	}
	return r;
}

static u64 inverse_mod(u64 a, u64 m)
{
	// extended Euclid on signed 128-bit to stay exact
	__int128 t = 0, nt = 1, r = m, nr = a % m;
	while (nr) {
		__int128 q = r / nr;
		__int128 tmp = t - q * nt;
		t = nt;
		nt = tmp;
		tmp = r - q * nr;
		r = nr;
		nr = tmp;
	}
	if (r != 1)
		throw NotPIntegral("not invertible modulo " + std::to_string(m));
	if (t < 0)
		t += m;
	return static_cast<u64>(t);
}

ModInt::ModInt(u64 p, int N, u64 residue) : p_(p), m_(0), r_(0), n_(N)
{
	if (p < 2)
		throw InvalidInput("modulus prime must be >= 2");
	if (N < 1)
		throw InvalidInput("modulus exponent must be >= 1");
	m_ = ipow(p, N);
	r_ = residue % m_;
}

ModInt ModInt::from_int(long v, u64 p, int N)
{
	ModInt z(p, N);
	long m = static_cast<long>(z.m_);
	long r = v % m;
	if (r < 0)
		r += m;
	z.r_ = static_cast<u64>(r);
	return z;
}

long ModInt::centered() const
{
	return r_ > m_ / 2 ? static_cast<long>(r_) - static_cast<long>(m_) : static_cast<long>(r_);
}

int ModInt::valuation() const
{
	if (r_ == 0)
		return n_;
	int v = 0;
	u64 t = r_;
	while (t % p_ == 0) {
		t /= p_;
		++v;
	}
	return v;
}

void ModInt::same_ring(const ModInt &o) const
{
	if (p_ != o.p_ || n_ != o.n_)
		throw InvalidInput("mixing residues of different rings");
}

ModInt &ModInt::operator+=(const ModInt &o)
{
	same_ring(o);
	r_ += o.r_;
	if (r_ >= m_)
		r_ -= m_;
	return *this;
}

ModInt &ModInt::operator-=(const ModInt &o)
{
	same_ring(o);
	r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + m_ - o.r_;
	return *this;
}

ModInt &ModInt::operator*=(const ModInt &o)
{
	same_ring(o);
	r_ = mulmod(r_, o.r_, m_);
	return *this;
}

ModInt ModInt::inverse() const
{
	if (!is_unit())
		throw NotPIntegral("residue " + std::to_string(r_) + " is not a unit mod " + std::to_string(p_));
	return ModInt(p_, n_, inverse_mod(r_, m_), m_);
}

ModInt ModInt::pow(long e) const
{
	if (e < 0)
		return inverse().pow(-e);
	return ModInt(p_, n_, powmod(r_, static_cast<u64>(e), m_), m_);
}

ModInt ModInt::project(int N) const
{
	if (N > n_)
		throw PrecisionExhausted("cannot lift residue mod p^" + std::to_string(n_) + " to p^" +
		                         std::to_string(N));
	return ModInt(p_, N, r_);
}

std::ostream &operator<<(std::ostream &os, const ModInt &x)
{
	return os << x.residue() << " mod " << x.prime() << "^" << x.exponent();
}

PAdicApprox PAdicApprox::from_unit(int valuation, const ModInt &unit)
{
	if (!unit.is_unit())
		throw InvalidInput("p-adic unit part divisible by p");
	return PAdicApprox(unit.prime(), valuation, unit.residue(), unit.exponent(), false, 0);
}

int PAdicApprox::valuation() const
{
	if (zero_)
		throw PrecisionExhausted("valuation of a value known only to vanish mod p^" + std::to_string(abs_));
	return v_;
}

ModInt PAdicApprox::unit() const
{
	if (zero_)
		throw PrecisionExhausted("unit part of zero");
	return ModInt(p_, prec_, u_);
}

ModInt PAdicApprox::residue(int k) const
{
	if (zero_) {
		if (abs_ < k)
			throw PrecisionExhausted("zero known only mod p^" + std::to_string(abs_) + ", need p^" +
			                         std::to_string(k));
		return ModInt(p_, k, 0);
	}
	if (v_ < 0)
		throw NotPIntegral("value has p-adic valuation " + std::to_string(v_));
	if (v_ + prec_ < k)
		throw PrecisionExhausted("value known mod p^" + std::to_string(v_ + prec_) + ", need p^" +
		                         std::to_string(k));
	if (v_ >= k)
		return ModInt(p_, k, 0);
	u64 m = ipow(p_, k);
	return ModInt(p_, k, mulmod(u_ % m, ipow(p_, v_), m));
}

PAdicApprox PAdicApprox::inverse() const
{
	if (zero_)
		throw PrecisionExhausted("inverse of a value not known to be nonzero");
	ModInt inv = unit().inverse();
	return PAdicApprox(p_, -v_, inv.residue(), prec_, false, 0);
}

PAdicApprox PAdicApprox::operator-() const
{
	if (zero_)
		return *this;
	u64 m = ipow(p_, prec_);
	return PAdicApprox(p_, v_, m - u_, prec_, false, 0);
}

PAdicApprox operator+(const PAdicApprox &a, const PAdicApprox &b)
{
	if (a.p_ != b.p_)
		throw InvalidInput("mixing p-adic values of different primes");
	if (a.is_exact_zero())
		return b;
	if (b.is_exact_zero())
		return a;
	int A = std::min(a.absolute_precision(), b.absolute_precision());
	const PAdicApprox *parts[2];
	int n = 0;
	for (const PAdicApprox *x : {&a, &b})
		if (!x->zero_ && x->v_ < A)
			parts[n++] = x;
	if (n == 0)
		return PAdicApprox::zero_mod(a.p_, A);
	int vmin = parts[0]->v_;
	for (int i = 1; i < n; ++i)
		vmin = std::min(vmin, parts[i]->v_);
	int k = A - vmin;
	u64 m = ipow(a.p_, k);
	u64 s = 0;
	for (int i = 0; i < n; ++i) {
		u64 term = mulmod(parts[i]->u_ % m, ipow(a.p_, parts[i]->v_ - vmin) % m, m);
		s = (s + term) % m;
	}
	if (s == 0)
		return PAdicApprox::zero_mod(a.p_, A);
	int t = 0;
	while (s % a.p_ == 0) {
		s /= a.p_;
		++t;
	}
	return PAdicApprox(a.p_, vmin + t, s, k - t, false, 0);
}

PAdicApprox operator*(const PAdicApprox &a, const PAdicApprox &b)
{
	if (a.p_ != b.p_)
		throw InvalidInput("mixing p-adic values of different primes");
	if (a.is_exact_zero() || b.is_exact_zero())
		return PAdicApprox::exact_zero(a.p_);
	if (a.zero_ && b.zero_)
		return PAdicApprox::zero_mod(a.p_, a.abs_ + b.abs_);
	if (a.zero_)
		return PAdicApprox::zero_mod(a.p_, a.abs_ + b.v_);
	if (b.zero_)
		return PAdicApprox::zero_mod(a.p_, b.abs_ + a.v_);
	int prec = std::min(a.prec_, b.prec_);
	u64 m = ipow(a.p_, prec);
	return PAdicApprox(a.p_, a.v_ + b.v_, mulmod(a.u_ % m, b.u_ % m, m), prec, false, 0);
}

std::string PAdicApprox::str() const
{
	std::ostringstream os;
	if (is_exact_zero())
		os << "0";
	else if (zero_)
		os << "O(" << p_ << "^" << abs_ << ")";
	else
		os << p_ << "^" << v_ << "*(" << u_ << " mod " << p_ << "^" << prec_ << ")";
	return os.str();
}

std::ostream &operator<<(std::ostream &os, const PAdicApprox &x) { return os << x.str(); }

ModInt reduce_rational(const BigRational &r, u64 p, int N)
{
	ModInt z(p, N);
	u64 m = z.modulus();
	u64 d = r.den().mod_ui(m);
	if (d % p == 0)
		throw NotPIntegral(r.str() + " is not " + std::to_string(p) + "-integral");
	return ModInt(p, N, r.num().mod_ui(m)) * ModInt(p, N, d).inverse();
}

PAdicApprox to_padic(const BigRational &r, u64 p, int N)
{
	if (r.is_zero())
		return PAdicApprox::exact_zero(p);
	BigInt num = r.num(), den = r.den();
	int a = num.valuation(p), b = den.valuation(p);
	BigInt pp(static_cast<unsigned long>(p));
	num = num.exact_div(pp.pow(a));
	den = den.exact_div(pp.pow(b));
	ModInt u = reduce_rational(BigRational(num, den), p, N);
	return PAdicApprox::from_unit(a - b, u);
}

FermatQuotient fermat_quotient(u64 p) { return {p, fermat_quotient_mod(p, 2)}; }

ModInt fermat_quotient_mod(u64 p, int N)
{
	if (p < 3)
		throw InvalidInput("Fermat quotient needs an odd prime");
	u64 m = ipow(p, N + 1);
	u64 t = powmod(2, p - 1, m);
	u64 q = (t + m - 1) % m / p;
	return ModInt(p, N, q);
}

} // namespace mhs
