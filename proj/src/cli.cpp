#include "burau/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "burau/conjugation.hpp"
#include "burau/representation.hpp"
#include "burau/serialize.hpp"
#include "burau/verify.hpp"

namespace burau {

namespace {

using json = nlohmann::ordered_json;

struct Options {
	RunConfig cfg;
	std::string format = "text";
	std::string cache_dir;
	bool no_timing = false;

	// eval / kernel
	std::string word;
	std::string ring = "f2";
	bool projective = false;
	bool gamma = false;
	bool assert_member = false;

	// stab
	int stab_n = 0;

	// conj
	std::string fraction = "1";
	std::vector<std::string> conj_check;

	// verify
	std::string check_id;
	bool all = false;
};

bool json_format(const Options &o) { return o.cfg.format == OutputFormat::Json; }

template <class R> void print_matrix(std::ostream &out, const Options &o, const Mat3<R> &m, json extra)
{
	if (json_format(o)) {
		extra["matrix"] = serialize(m);
		out << extra.dump() << '\n';
	} else {
		out << m.to_string() << '\n';
	}
}

int run_eval(const Options &o, std::ostream &out)
{
	const GroupWord w = parse_word(o.word);
	const json base = {{"word", o.word}, {"ring", o.ring}, {"projective", o.projective}};
	if (o.ring == "int") {
		const MatZ m = eval_braid_z(w);
		print_matrix(out, o, o.projective ? proj_canonical(m).representative() : m, base);
	} else {
		const MatF2 m = eval_braid_f2(w);
		print_matrix(out, o, o.projective ? proj_canonical(m).representative() : m, base);
	}
	return exit_code::ok;
}

int run_kernel(const Options &o, std::ostream &out)
{
	const GroupWord w = parse_word(o.word);
	const bool member = o.gamma ? kernel_gamma(w) : kernel_mod2(w);
	const std::string kernel = o.gamma ? "gamma" : "mod2";
	if (json_format(o))
		out << json{{"word", o.word}, {"kernel", kernel}, {"member", member}}.dump() << '\n';
	else
		out << (member ? "in kernel (" : "not in kernel (") << kernel << ")\n";
	return o.assert_member && !member ? exit_code::failed : exit_code::ok;
}

int run_stab(const Options &o, std::ostream &out)
{
	if (o.stab_n < 0 || o.stab_n > o.cfg.stab_n_max)
		throw UsageError("n must lie in 0.." + std::to_string(o.cfg.stab_n_max));
	const FiniteGroupTable g =
	    o.cfg.cache_dir ? stab7_cached(o.stab_n, *o.cfg.cache_dir, o.cfg.closure_cap) : stab7(o.stab_n, o.cfg.closure_cap);
	const SubgroupHandle z = center(g);
	const SubgroupHandle d = derived_subgroup(g);
	const auto cls = nilpotency_class(g);
	const auto zr = elementary_abelian_2_rank(z);
	const auto dr = elementary_abelian_2_rank(d);
	const bool nf = normal_form_check(g, o.stab_n);
	auto opt = [](const std::optional<int> &v) { return v ? json(*v) : json(nullptr); };
	const json report = {{"n", o.stab_n},
	                     {"order", g.size()},
	                     {"center_order", z.size()},
	                     {"center_rank", opt(zr)},
	                     {"derived_order", d.size()},
	                     {"derived_rank", opt(dr)},
	                     {"exponent", exponent(g)},
	                     {"class", opt(cls)},
	                     {"normal_form", nf}};
	if (json_format(o)) {
		out << report.dump() << '\n';
	} else {
		for (const auto &[key, value] : report.items())
			out << key << ": " << value.dump() << '\n';
	}
	return exit_code::ok;
}

int parse_int(const std::string &s)
{
	std::size_t used = 0;
	int v = 0;
	try {
		v = std::stoi(s, &used);
	} catch (const std::exception &) {
		used = 0;
	}
	if (used == 0 || used != s.size())
		throw UsageError("expected an integer, got '" + s + "'");
	return v;
}

int run_conj(const Options &o, std::ostream &out)
{
	const RationalF2 f = parse_fraction(o.fraction);
	const ConjugatorMf mf = build_mf(f);
	if (o.conj_check.empty()) {
		if (json_format(o))
			out << json{{"f", f.to_string()}, {"det", mf.matrix.det().to_string()}, {"matrix", serialize(mf.matrix)}}.dump()
			    << '\n';
		else
			out << mf.matrix.to_string() << "\ndet: " << mf.matrix.det().to_string() << '\n';
		return exit_code::ok;
	}
	const std::string &kind = o.conj_check[0];
	const std::size_t args = o.conj_check.size() - 1;
	bool ok = false;
	if (kind == "eq4" && args == 0) {
		ok = check_eq4(mf);
	} else if (kind == "lemma34" && args == 0) {
		ok = lemma34_check();
	} else if (kind == "power" && args == 2) {
		ok = conj_power_check(parse_int(o.conj_check[1]), parse_int(o.conj_check[2]), o.cfg.conj_depth);
	} else if (kind == "lamp" && args == 2) {
		ok = lamplighter_window_check(parse_int(o.conj_check[1]), parse_int(o.conj_check[2]), o.cfg.conj_depth);
	} else {
		throw UsageError("--check expects eq4 | lemma34 | power i k | lamp i w");
	}
	std::string label = kind;
	for (std::size_t k = 1; k < o.conj_check.size(); ++k)
		label += " " + o.conj_check[k];
	if (json_format(o))
		out << json{{"f", f.to_string()}, {"check", label}, {"holds", ok}}.dump() << '\n';
	else
		out << label << ": " << (ok ? "holds" : "fails") << '\n';
	return ok ? exit_code::ok : exit_code::failed;
}

int emit_records(const Options &o, const std::vector<CheckRecord> &records, std::ostream &out)
{
	bool all_pass = true;
	json arr = json::array();
	for (const auto &r : records) {
		all_pass = all_pass && r.status != CheckStatus::Fail;
		if (json_format(o))
			arr.push_back(to_json(r));
		else
			out << to_text(r) << '\n';
	}
	if (json_format(o))
		out << arr.dump(2) << '\n';
	return all_pass ? exit_code::ok : exit_code::failed;
}

int run_verify(const Options &o, std::ostream &out)
{
	if (o.all == !o.check_id.empty())
		throw UsageError("verify takes exactly one of <id> or --all");
	if (o.all)
		return emit_records(o, run_all(o.cfg), out);
	return emit_records(o, {run_check(o.check_id, o.cfg)}, out);
}

int run_list(const Options &o, std::ostream &out)
{
	const auto checks = list_checks();
	if (json_format(o)) {
		json arr = json::array();
		for (const auto &c : checks)
			arr.push_back({{"id", c.id}, {"citation", c.citation}});
		out << arr.dump(2) << '\n';
	} else {
		for (const auto &c : checks)
			out << c.id << "  " << c.citation << '\n';
	}
	return exit_code::ok;
}

} // namespace

int cli_main(int argc, const char *const argv[], std::ostream &out, std::ostream &err)
{
	Options o;
	CLI::App app{"Exact checks for the mod-2 Burau representation of B4"};
	app.require_subcommand(1);
	app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--family-depth", o.cfg.family_depth, "Largest index of the x_i family");
	app.add_option("--conj-depth", o.cfg.conj_depth, "Largest index for conjugation checks");
	app.add_option("--stab-n-max", o.cfg.stab_n_max, "Largest n for Stab(7^(n))");
	app.add_option("--cap", o.cfg.closure_cap, "Closure element cap");
	app.add_option("--kernel-depth", o.cfg.kernel_depth, "Largest index for kernel checks");
	app.add_option("--cache-dir", o.cache_dir, std::string("Enumeration cache directory (default $") + kCacheDirEnv + ")");
	app.add_flag("--no-timing", o.no_timing, "Report elapsed times as 0");

	auto *eval = app.add_subcommand("eval", "Print the matrix of a word");
	eval->add_option("word", o.word)->required();
	eval->add_option("--ring", o.ring)->check(CLI::IsMember({"int", "f2"}));
	eval->add_flag("--projective", o.projective, "Print the projective canonical form");

	auto *kernel = app.add_subcommand("kernel", "Kernel membership of a word");
	kernel->add_option("word", o.word)->required();
	kernel->add_flag("--gamma", o.gamma, "Test the projective kernel");
	kernel->add_flag("--assert", o.assert_member, "Exit 1 when the word is not in the kernel");

	auto *stab = app.add_subcommand("stab", "Structure report for Stab(7^(n))");
	stab->add_option("n", o.stab_n)->required();

	auto *conj = app.add_subcommand("conj", "Conjugating matrix M_f and its identities");
	conj->add_option("--f", o.fraction, "Rational function f");
	conj->add_option("--check", o.conj_check, "eq4 | lemma34 | power i k | lamp i w")->expected(1, 3);

	auto *verify = app.add_subcommand("verify", "Run registry checks");
	verify->add_option("id", o.check_id);
	verify->add_flag("--all", o.all);

	auto *list = app.add_subcommand("list-checks", "Print the check registry");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		out << app.help();
		return exit_code::ok;
	} catch (const CLI::ParseError &e) {
		err << e.what() << '\n';
		return exit_code::usage;
	}

	try {
		o.cfg.format = o.format == "json" ? OutputFormat::Json : OutputFormat::Text;
		o.cfg.timings = !o.no_timing;
		if (!o.cache_dir.empty())
			o.cfg.cache_dir = o.cache_dir;
		else if (const char *env = std::getenv(kCacheDirEnv); env && *env)
			o.cfg.cache_dir = env;
		o.cfg.validate();

		if (eval->parsed())
			return run_eval(o, out);
		if (kernel->parsed())
			return run_kernel(o, out);
		if (stab->parsed())
			return run_stab(o, out);
		if (conj->parsed())
			return run_conj(o, out);
		if (verify->parsed())
			return run_verify(o, out);
		if (list->parsed())
			return run_list(o, out);
	} catch (const UsageError &e) {
		err << "error: " << e.what() << '\n';
		return exit_code::usage;
	} catch (const ResourceError &e) {
		err << "resource limit: " << e.what() << '\n';
		return exit_code::resource;
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return exit_code::failed;
	}
	return exit_code::usage;
}

} // namespace burau
