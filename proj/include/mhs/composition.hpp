#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mhs {

// Signed exponent vector (s_1, ..., s_r). In every sum s_1 sits on the
// smallest summation index; a negative part means an alternating sign.
class Composition {
public:
	Composition() = default;
	Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
	explicit Composition(std::vector<int> parts);

	// "2,2,-3", "2^3,1" (= 2,2,2,1), "" (empty)
	static Composition parse(const std::string &text);
	static Composition repeat(int part, int times);

	const std::vector<int> &parts() const { return parts_; }
	int operator[](size_t i) const { return parts_[i]; }
	size_t length() const { return parts_.size(); }
	bool empty() const { return parts_.empty(); }
	int weight() const;
	bool all_positive() const;

	Composition reversed() const;
	Composition slice(size_t begin, size_t end) const;
	std::string str() const;

	friend Composition operator+(const Composition &a, const Composition &b);
	friend bool operator==(const Composition &, const Composition &) = default;
	friend auto operator<=>(const Composition &, const Composition &) = default;

private:
	std::vector<int> parts_;
};

// All positive compositions of weight w, in lexicographic order of parts.
std::vector<Composition> compositions_of(int w);

// Complement of the partial-sum set inside {1, ..., w-1}.
Composition dual(const Composition &s);

// One way to cut s into consecutive nonempty blocks.
using SHSplitting = std::vector<Composition>;
std::vector<SHSplitting> sh_splittings(const Composition &s);

struct InnerTriple {
	int i;
	int j;
	Composition s;
	friend bool operator==(const InnerTriple &, const InnerTriple &) = default;
};

// Triples (i, j, s) with i >= 1, j >= jmin, s a positive composition (possibly
// empty) and i + j + |s| = c.
std::vector<InnerTriple> enumerate_inner_compositions(int c, int jmin);

// Positive compositions s (nonempty) with first part > lead_above and
// |s| = total - j for some j >= 0, returned with that j.
struct TailTerm {
	int j;
	Composition s;
};
std::vector<TailTerm> enumerate_tail_compositions(int total, int lead_above);

} // namespace mhs
