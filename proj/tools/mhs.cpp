// mhs: compute harmonic sums, verify the identity and congruence catalogs,
// and run the high-precision series checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "mhs/congruences.hpp"
#include "mhs/identities.hpp"
#include "mhs/mhs.hpp"
#include "mhs/series.hpp"

using namespace mhs;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Record {
	std::string kind; // identity, congruence, series
	std::string id;
	std::string params;
	std::optional<u64> prime;
	std::optional<int> N;
	std::string lhs;
	std::string rhs;
	bool pass = false;
	bool skipped = false;
	std::string status;
	std::string message;
};

const char *kCsvHeader = "kind,id,params,prime,N,lhs,rhs,pass,skipped,status,message,timing";

std::string csv_field(const std::string &s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

json to_json(const Record &r)
{
	json j;
	j["kind"] = r.kind;
	j["id"] = r.id;
	j["params"] = r.params;
	j["prime"] = r.prime ? json(*r.prime) : json(nullptr);
	j["N"] = r.N ? json(*r.N) : json(nullptr);
	j["lhs"] = r.lhs;
	j["rhs"] = r.rhs;
	j["pass"] = r.pass;
	j["skipped"] = r.skipped;
	j["status"] = r.status;
	j["message"] = r.message;
	j["timing"] = nullptr;
	return j;
}

std::string to_csv(const Record &r)
{
	std::ostringstream os;
	os << r.kind << ',' << csv_field(r.id) << ',' << csv_field(r.params) << ',' << (r.prime ? std::to_string(*r.prime) : "")
	   << ',' << (r.N ? std::to_string(*r.N) : "") << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
	   << (r.pass ? "true" : "false") << ',' << (r.skipped ? "true" : "false") << ',' << r.status << ','
	   << csv_field(r.message) << ',';
	return os.str();
}

// Output sink: stdout or --output file.
class Sink {
public:
	explicit Sink(const std::string &path)
	{
		if (!path.empty()) {
			file_.open(path);
			if (!file_)
				throw UsageError("cannot open " + path);
		}
	}
	std::ostream &out() { return file_.is_open() ? file_ : std::cout; }

private:
	std::ofstream file_;
};

std::string sci(const BigRational &x)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2e", x.raw().get_d());
	return buf;
}

std::optional<PrimeRange> parse_primes(const std::string &text)
{
	if (text.empty())
		return std::nullopt;
	auto dots = text.find("..");
	try {
		size_t used = 0;
		if (dots == std::string::npos) {
			u64 p = std::stoull(text, &used);
			if (used != text.size())
				throw UsageError("");
			return PrimeRange{p, p};
		}
		std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
		u64 a = std::stoull(lo, &used);
		if (used != lo.size())
			throw UsageError("");
		u64 b = std::stoull(hi, &used);
		if (used != hi.size())
			throw UsageError("");
		return PrimeRange{a, b};
	} catch (const std::exception &) {
		throw UsageError("prime range must look like 5..300 or 13");
	}
}

struct Options {
	std::string format;
	std::string output;
	int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
	bool timing = false;

	// compute
	std::string kind = "H";
	std::string index;
	long n = -1;
	bool exact = false;
	u64 mod = 0;
	int exp = 1;

	// verify
	std::string identities;
	std::string congruences;
	std::string primes;
	long nmax = 0;
	std::uint64_t seed = GridBounds{}.seed;

	// series
	std::string target;
	int digits = 30;
	int m = 0, a = 0, b = 1;
	long terms = 4000;
};

std::string format_or(const Options &o, const char *fallback)
{
	std::string f = o.format.empty() ? fallback : o.format;
	if (f != "json" && f != "csv" && f != "text")
		throw UsageError("format must be json, csv or text");
	return f;
}

int cmd_compute(const Options &o)
{
	if (o.n < 0)
		throw UsageError("--n is required");
	if (o.exact == (o.mod != 0))
		throw UsageError("give exactly one of --exact or --mod p");
	SumKind kind = parse_kind(o.kind);
	Composition s = Composition::parse(o.index);
	std::string value;
	if (o.exact) {
		value = evaluate(RationalRing{}, kind, s, o.n).str();
	} else {
		if (primes_in(o.mod, o.mod).empty())
			throw UsageError("--mod must be a prime");
		ModRing ring(o.mod, o.exp);
		value = std::to_string(evaluate(ring, kind, s, o.n).residue());
	}
	std::string f = format_or(o, "text");
	Sink sink(o.output);
	if (f == "text") {
		sink.out() << value << '\n';
	} else if (f == "json") {
		json j;
		j["sum"] = kind_name(kind);
		j["index"] = s.str();
		j["n"] = o.n;
		j["modulus"] = o.exact ? json(nullptr) : json(std::to_string(o.mod) + "^" + std::to_string(o.exp));
		j["value"] = value;
		sink.out() << j.dump() << '\n';
	} else {
		sink.out() << "sum,index,n,modulus,value\n"
		           << kind_name(kind) << ',' << csv_field(s.str()) << ',' << o.n << ','
		           << (o.exact ? "" : std::to_string(o.mod) + "^" + std::to_string(o.exp)) << ',' << value << '\n';
	}
	return 0;
}

void write_records(const std::vector<Record> &recs, const std::string &f, std::ostream &out)
{
	if (f == "json") {
		for (const auto &r : recs)
			out << to_json(r).dump() << '\n';
	} else if (f == "csv") {
		out << kCsvHeader << '\n';
		for (const auto &r : recs)
			out << to_csv(r) << '\n';
	}
}

// Per-id tallies and the failing records.
void write_summary(const std::vector<Record> &recs, std::ostream &out)
{
	struct Tally {
		long pass = 0, fail = 0, skip = 0;
	};
	std::vector<std::string> order;
	std::map<std::string, Tally> tally;
	for (const auto &r : recs) {
		std::string key = r.kind + " " + r.id;
		if (!tally.count(key))
			order.push_back(key);
		Tally &t = tally[key];
		(r.pass ? t.pass : r.skipped ? t.skip : t.fail)++;
	}
	for (const auto &k : order) {
		const Tally &t = tally[k];
		out << k << ": " << t.pass << " passed";
		if (t.fail)
			out << ", " << t.fail << " FAILED";
		if (t.skip)
			out << ", " << t.skip << " skipped";
		out << '\n';
	}
	for (const auto &r : recs)
		if (!r.pass && !r.skipped) {
			out << "FAIL " << r.kind << ' ' << r.id << ' ' << r.params;
			if (r.prime)
				out << " p=" << *r.prime;
			out << " lhs=" << r.lhs << " rhs=" << r.rhs;
			if (!r.message.empty())
				out << " (" << r.message << ")";
			out << '\n';
		}
}

int cmd_verify(const Options &o)
{
	if (o.identities.empty() && o.congruences.empty())
		throw UsageError("select --identities and/or --congruences");
	if (o.jobs < 1)
		throw UsageError("--jobs must be positive");
	std::string f = format_or(o, "json");
	auto range = parse_primes(o.primes);
	std::vector<Record> recs;
	auto t0 = std::chrono::steady_clock::now();
	long failures = 0;
	if (!o.identities.empty()) {
		GridBounds bounds;
		bounds.nmax = o.nmax;
		bounds.seed = o.seed;
		for (const auto &r : run_identities(o.identities, bounds, o.jobs)) {
			Record rec{"identity", r.id, params_str(r.params), std::nullopt, std::nullopt, r.lhs.str(), r.rhs.str()};
			rec.pass = r.pass();
			rec.status = rec.pass ? "pass" : "fail";
			failures += !rec.pass;
			recs.push_back(std::move(rec));
		}
	}
	if (!o.congruences.empty()) {
		auto rep = run_suite(o.congruences, range, o.jobs);
		for (const auto &r : rep.results) {
			Record rec{"congruence", r.claim, params_str(r.params), r.p, r.N, "", ""};
			if (r.status == CheckStatus::Pass || r.status == CheckStatus::Fail) {
				rec.lhs = std::to_string(r.lhs);
				rec.rhs = std::to_string(r.rhs);
			}
			rec.pass = r.pass();
			rec.skipped = r.status == CheckStatus::Skipped;
			rec.status = status_name(r.status);
			rec.message = r.message;
			failures += !rec.pass && !rec.skipped;
			recs.push_back(std::move(rec));
		}
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	Sink sink(o.output);
	if (f == "text")
		write_summary(recs, sink.out());
	else
		write_records(recs, f, sink.out());
	if (o.timing)
		std::cerr << "elapsed " << secs << " s, " << recs.size() << " checks\n";
	return failures ? 1 : 0;
}

SeriesResult run_series(const Options &o)
{
	const std::string &t = o.target;
	if (t == "FINITE-231")
		return finite_to_infinite_check(o.a, o.b, o.terms, o.digits);
	if (t == "ZETA-EVEN")
		return bernoulli_pi_check(o.m, o.digits);
	if (t.rfind("ZSTAR", 0) == 0 || t == "ZAGIER-ZZZZ")
		return zeta_star_check(t, o.a, o.b, o.digits);
	return evaluate_series(t, {o.m, o.a, o.b}, o.digits);
}

int cmd_series(const Options &o)
{
	if (o.target.empty())
		throw UsageError("--target is required");
	std::string f = format_or(o, "text");
	SeriesResult r = run_series(o);
	std::ostringstream params;
	if (o.target.rfind("LESH", 0) == 0 || o.target == "ZETA-EVEN")
		params << "m=" << r.params.m << ' ';
	else if (o.target.rfind("APERY", 0) != 0)
		params << "a=" << r.params.a << " b=" << r.params.b << ' ';
	if (o.target == "FINITE-231")
		params << "n=" << o.terms << ' ';
	params << "digits=" << r.digits;
	Sink sink(o.output);
	if (f == "text") {
		sink.out() << r.target << "  " << params.str() << '\n';
		for (const auto &v : r.values)
			sink.out() << "  " << v.method << std::string(v.method.size() < 18 ? 18 - v.method.size() : 1, ' ')
			           << v.value.str(r.digits + 2) << "  +- " << sci(v.value.error_bound()) << '\n';
		sink.out() << "  tolerance " << sci(r.tolerance) << ", largest gap " << sci(r.worst()) << ": "
		           << (r.pass ? "pass" : "FAIL") << '\n';
		if (!r.message.empty())
			sink.out() << "  " << r.message << '\n';
	} else {
		Record rec{"series", r.target, params.str(), std::nullopt, std::nullopt, "", ""};
		if (r.values.size() >= 2) {
			rec.lhs = r.values[0].value.str(r.digits + 2);
			rec.rhs = r.values[1].value.str(r.digits + 2);
		}
		rec.pass = r.pass;
		rec.status = r.pass ? "pass" : "fail";
		rec.message = r.message;
		write_records({rec}, f, sink.out());
	}
	return r.pass ? 0 : 1;
}

std::string range_str(u64 lo, u64 hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

int cmd_catalog(const Options &o)
{
	std::string f = format_or(o, "text");
	Sink sink(o.output);
	auto &out = sink.out();
	GridBounds bounds;
	if (f == "csv")
		out << "kind,id,statement,parameters,grid,condition,modulus,primes,note\n";
	for (const auto &c : identity_catalog()) {
		std::string names;
		for (const auto &n : c.param_names)
			names += (names.empty() ? "" : ",") + n;
		size_t grid = c.grid(bounds).size();
		if (f == "json") {
			json j;
			j["kind"] = "identity";
			j["id"] = c.id;
			j["statement"] = c.statement;
			j["parameters"] = c.param_names;
			j["grid"] = grid;
			out << j.dump() << '\n';
		} else if (f == "csv") {
			out << "identity," << csv_field(c.id) << ',' << csv_field(c.statement) << ',' << csv_field(names) << ','
			    << grid << ",,,,\n";
		} else {
			out << c.id << "  [" << names << "] " << grid << " points\n    " << c.statement << '\n';
		}
	}
	for (const auto &c : congruence_catalog()) {
		std::string primes = range_str(c.default_pmin, c.default_pmax);
		if (f == "json") {
			json j;
			j["kind"] = "congruence";
			j["id"] = c.id;
			j["statement"] = c.statement;
			j["condition"] = c.condition;
			j["cases"] = c.cases.size();
			j["modulus"] = "p^" + std::to_string(c.N);
			j["primes"] = primes;
			j["note"] = c.note;
			out << j.dump() << '\n';
		} else if (f == "csv") {
			out << "congruence," << csv_field(c.id) << ',' << csv_field(c.statement) << ",," << c.cases.size() << ','
			    << csv_field(c.condition) << ",p^" << c.N << ',' << primes << ',' << csv_field(c.note) << '\n';
		} else {
			out << c.id << "  mod p^" << c.N << ", " << c.cases.size() << " cases, primes " << primes << '\n'
			    << "    " << c.statement << '\n';
			if (!c.condition.empty())
				out << "    for " << c.condition << '\n';
			if (!c.note.empty())
				out << "    note: " << c.note << '\n';
		}
	}
	for (const auto &t : series_targets()) {
		int d = series_max_digits(t);
		if (f == "json") {
			json j;
			j["kind"] = "series";
			j["id"] = t;
			j["max_digits"] = d;
			out << j.dump() << '\n';
		} else if (f == "csv") {
			out << "series," << t << ",,,,,,,max digits " << d << '\n';
		} else {
			out << t << "  series, up to " << d << " digits\n";
		}
	}
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Multiple harmonic sums: exact evaluation, identity and congruence verification, series checks"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App *sub) {
		sub->add_option("--format", o.format, "json (one record per line), csv or text");
		sub->add_option("--output", o.output, "write the report here instead of stdout");
	};

	auto *compute = app.add_subcommand("compute", "evaluate one sum exactly or modulo p^N");
	compute->add_option("--kind", o.kind, "H (strict), S (non-strict) or Hbar (odd denominators)")->capture_default_str();
	compute->add_option("--index", o.index, "composition, e.g. \"2,-1\" or \"2^3,1\"")->required();
	compute->add_option("--n", o.n, "upper summation bound")->required();
	compute->add_flag("--exact", o.exact, "exact rational value");
	compute->add_option("--mod", o.mod, "prime p for residues mod p^N");
	compute->add_option("--exp", o.exp, "modulus exponent N")->capture_default_str();
	common(compute);

	auto *verify = app.add_subcommand("verify", "run identity and/or congruence suites");
	verify->add_option("--identities", o.identities, "identity id globs, comma separated, or all");
	verify->add_option("--congruences", o.congruences, "claim id globs, comma separated, or all");
	verify->add_option("--primes", o.primes, "inclusive range lo..hi (default: each claim's own range)");
	verify->add_option("--nmax", o.nmax, "cap on identity grid bounds (0 keeps defaults)")->capture_default_str();
	verify->add_option("--seed", o.seed, "seed for random compositions")->capture_default_str();
	verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
	verify->add_flag("--timing", o.timing, "print elapsed time to stderr");
	common(verify);

	auto *series = app.add_subcommand("series", "evaluate a series target and compare with its reference");
	series->add_option("--target", o.target, "APERY2, APERY3, LESH-2..5, ZSTAR-231, ZSTAR-121, ZSTAR-12b, ZAGIER-ZZZZ, "
	                                         "FINITE-231, ZETA-EVEN")
	    ->required();
	series->add_option("--digits", o.digits, "decimal digits")->capture_default_str();
	series->add_option("--m", o.m)->capture_default_str();
	series->add_option("--a", o.a)->capture_default_str();
	series->add_option("--b", o.b)->capture_default_str();
	series->add_option("--n", o.terms, "partial-sum bound for FINITE-231")->capture_default_str();
	common(series);

	auto *catalog = app.add_subcommand("catalog", "list identities, congruence claims and series targets");
	common(catalog);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}

	try {
		if (compute->parsed())
			return cmd_compute(o);
		if (verify->parsed())
			return cmd_verify(o);
		if (series->parsed())
			return cmd_series(o);
		return cmd_catalog(o);
	} catch (const UsageError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const InvalidInput &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const NotPIntegral &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
}
