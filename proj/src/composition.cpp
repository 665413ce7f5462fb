#include "mhs/composition.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "mhs/bigq.hpp"

namespace mhs {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
	for (int s : parts_)
		if (s == 0)
			throw InvalidInput("composition parts must be nonzero");
}

static int parse_int(const std::string &tok, const std::string &whole)
{
	size_t used = 0;
	int v = 0;
	try {
		v = std::stoi(tok, &used);
	} catch (const std::exception &) {
		used = 0;
	}
	if (used != tok.size() || tok.empty())
		throw InvalidInput("bad composition '" + whole + "'");
	return v;
}

Composition Composition::parse(const std::string &text)
{
	std::string t;
	for (char c : text)
		if (c != ' ' && c != '(' && c != ')')
			t.push_back(c);
	std::vector<int> parts;
	if (t.empty())
		return Composition();
	std::stringstream ss(t);
	std::string item;
	while (std::getline(ss, item, ',')) {
		auto caret = item.find('^');
		if (caret == std::string::npos) {
			parts.push_back(parse_int(item, text));
			continue;
		}
		int base = parse_int(item.substr(0, caret), text);
		int times = parse_int(item.substr(caret + 1), text);
		if (times < 0)
			throw InvalidInput("negative repetition in '" + text + "'");
		parts.insert(parts.end(), times, base);
	}
	if (!t.empty() && t.back() == ',')
		throw InvalidInput("bad composition '" + text + "'");
	return Composition(std::move(parts));
}

Composition Composition::repeat(int part, int times)
{
	return Composition(std::vector<int>(static_cast<size_t>(std::max(times, 0)), part));
}

int Composition::weight() const
{
	int w = 0;
	for (int s : parts_)
		w += std::abs(s);
	return w;
}

bool Composition::all_positive() const
{
	for (int s : parts_)
		if (s < 0)
			return false;
	return true;
}

Composition Composition::reversed() const
{
	return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::slice(size_t begin, size_t end) const
{
	return Composition(std::vector<int>(parts_.begin() + begin, parts_.begin() + end));
}

std::string Composition::str() const
{
	std::string out;
	for (size_t i = 0; i < parts_.size(); ++i) {
		if (i)
			out += ',';
		out += std::to_string(parts_[i]);
	}
	return out;
}

Composition operator+(const Composition &a, const Composition &b)
{
	std::vector<int> v = a.parts_;
	v.insert(v.end(), b.parts_.begin(), b.parts_.end());
	return Composition(std::move(v));
}

std::vector<Composition> compositions_of(int w)
{
	std::vector<Composition> out;
	if (w <= 0) {
		if (w == 0)
			out.emplace_back();
		return out;
	}
	std::vector<int> cur;
	// depth-first, smallest first part first
	auto rec = [&](auto &&self, int left) -> void {
		if (left == 0) {
			out.emplace_back(cur);
			return;
		}
		for (int part = 1; part <= left; ++part) {
			cur.push_back(part);
			self(self, left - part);
			cur.pop_back();
		}
	};
	rec(rec, w);
	return out;
}

Composition dual(const Composition &s)
{
	if (s.empty() || !s.all_positive())
		throw InvalidInput("dual needs a nonempty positive composition");
	int w = s.weight();
	std::set<int> partial;
	int acc = 0;
	for (size_t i = 0; i + 1 < s.length(); ++i)
		partial.insert(acc += s[i]);
	std::vector<int> parts;
	int last = 0;
	for (int x = 1; x < w; ++x)
		if (!partial.count(x)) {
			parts.push_back(x - last);
			last = x;
		}
	parts.push_back(w - last);
	return Composition(std::move(parts));
}

std::vector<SHSplitting> sh_splittings(const Composition &s)
{
	std::vector<SHSplitting> out;
	size_t r = s.length();
	if (r == 0)
		return out;
	for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
		SHSplitting blocks;
		size_t start = 0;
		for (size_t i = 0; i + 1 < r; ++i)
			if (mask >> i & 1) {
				blocks.push_back(s.slice(start, i + 1));
				start = i + 1;
			}
		blocks.push_back(s.slice(start, r));
		out.push_back(std::move(blocks));
	}
	return out;
}

std::vector<InnerTriple> enumerate_inner_compositions(int c, int jmin)
{
	std::vector<InnerTriple> out;
	for (int i = 1; i + jmin <= c; ++i)
		for (int j = jmin; i + j <= c; ++j)
			for (auto &s : compositions_of(c - i - j))
				out.push_back({i, j, s});
	return out;
}

std::vector<TailTerm> enumerate_tail_compositions(int total, int lead_above)
{
	std::vector<TailTerm> out;
	for (int w = lead_above + 1; w <= total; ++w)
		for (int first = lead_above + 1; first <= w; ++first)
			for (auto &rest : compositions_of(w - first))
				out.push_back({total - w, Composition{first} + rest});
	return out;
}

} // namespace mhs
