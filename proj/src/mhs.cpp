#include "mhs/mhs.hpp"

namespace mhs {

const char *kind_name(SumKind k)
{
	switch (k) {
	case SumKind::Strict:
		return "H";
	case SumKind::NonStrict:
		return "S";
	case SumKind::Odd:
		return "Hbar";
	}
	return "?";
}

SumKind parse_kind(const std::string &name)
{
	if (name == "H")
		return SumKind::Strict;
	if (name == "S")
		return SumKind::NonStrict;
	if (name == "Hbar")
		return SumKind::Odd;
	throw InvalidInput("unknown sum kind '" + name + "' (expected H, S or Hbar)");
}

BigRational RationalRing::inv_power(long d, int e) const { return BigRational(1, d).pow(e); }

ModRing::ModRing(u64 p, int N) : p_(p), n_(N) { (void)ModInt(p, N); }

ModInt ModRing::inv(long d) const
{
	if (d <= 0)
		throw InvalidInput("inverse of nonpositive integer");
	u64 ud = static_cast<u64>(d);
	if (ud % p_ == 0)
		throw NotPIntegral("denominator " + std::to_string(d) + " is divisible by " + std::to_string(p_));
	if (ud >= inv_.size()) {
		// batch inversion over 1..limit, skipping multiples of p
		size_t limit = std::max<size_t>(ud + 1, 2 * inv_.size());
		u64 m = ipow(p_, n_);
		std::vector<u64> prefix(limit, 1);
		for (size_t i = 1; i < limit; ++i)
			prefix[i] = i % p_ ? mulmod(prefix[i - 1], i % m, m) : prefix[i - 1];
		u64 acc = ModInt(p_, n_, prefix[limit - 1]).inverse().residue();
		inv_.assign(limit, 0);
		for (size_t i = limit - 1; i >= 1; --i) {
			if (i % p_ == 0)
				continue;
			inv_[i] = mulmod(acc, prefix[i - 1], m);
			acc = mulmod(acc, i % m, m);
		}
	}
	return ModInt(p_, n_, inv_[ud]);
}

std::vector<SHTerm> sh_expand(const Composition &s)
{
	if (!s.all_positive())
		throw InvalidInput("SH expansion needs positive parts");
	std::vector<SHTerm> out;
	for (auto &blocks : sh_splittings(s))
		out.push_back({blocks.size() % 2 ? -1 : 1, blocks});
	return out;
}

} // namespace mhs
