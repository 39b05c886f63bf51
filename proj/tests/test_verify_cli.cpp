#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "burau/cli.hpp"
#include "burau/errors.hpp"
#include "burau/finite_group.hpp"
#include "burau/verify.hpp"

using namespace burau;

namespace {

struct CliRun {
	int code;
	std::string out;
	std::string err;
};

CliRun run_cli(std::vector<std::string> args)
{
	args.insert(args.begin(), "burau-check");
	std::vector<const char *> argv;
	for (const auto &a : args)
		argv.push_back(a.c_str());
	std::ostringstream out, err;
	const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str(), err.str()};
}

RunConfig quick_config()
{
	RunConfig cfg;
	cfg.stab_n_max = 1;
	cfg.family_depth = 4;
	cfg.kernel_depth = 3;
	cfg.timings = false;
	return cfg;
}

} // namespace

TEST(Registry, IdsAreUniqueAndCitationsQuote)
{
	const auto checks = list_checks();
	EXPECT_GE(checks.size(), 40u);
	std::set<std::string> ids;
	for (const auto &c : checks) {
		EXPECT_TRUE(ids.insert(c.id).second) << c.id;
		const auto open = c.citation.find('"');
		EXPECT_NE(open, std::string::npos) << c.id;
		EXPECT_NE(c.citation.find('"', open + 1), std::string::npos) << c.id;
	}
	EXPECT_TRUE(ids.count("eq1"));
	EXPECT_TRUE(ids.count("thmA.4.class.n3"));
}

TEST(Registry, SingleChecks)
{
	const RunConfig cfg = quick_config();
	const auto r = run_check("eq1", cfg);
	EXPECT_EQ(r.status, CheckStatus::Pass);
	EXPECT_EQ(r.id, "eq1");
	EXPECT_THROW(run_check("nosuch", cfg), UsageError);
}

TEST(Registry, RunAllIsDeterministicWithoutTimings)
{
	const RunConfig cfg = quick_config();
	const auto a = run_all(cfg), b = run_all(cfg);
	ASSERT_EQ(a.size(), b.size());
	for (std::size_t i = 0; i < a.size(); ++i) {
		EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
		EXPECT_EQ(to_text(a[i]), to_text(b[i]));
		EXPECT_NE(a[i].status, CheckStatus::Fail) << a[i].id << ": " << a[i].detail;
	}
}

TEST(Registry, TextAndJsonAgree)
{
	const auto r = run_check("golden.matrices", quick_config());
	const auto j = to_json(r);
	EXPECT_EQ(j.begin().key(), "id");
	EXPECT_EQ(j["status"], to_string(r.status));
	EXPECT_EQ(j["citation"], r.citation);
	const std::string text = to_text(r);
	EXPECT_NE(text.find(r.id), std::string::npos);
	EXPECT_NE(text.find(r.citation), std::string::npos);
	EXPECT_EQ(text.rfind("PASS", 0), 0u);
	EXPECT_EQ(j["status"], "pass");
}

TEST(RunConfig, RejectsNonPositiveBounds)
{
	RunConfig cfg;
	cfg.stab_n_max = -1;
	EXPECT_THROW(cfg.validate(), UsageError);
	EXPECT_EQ(run_cli({"--stab-n-max", "-1", "verify", "eq1"}).code, exit_code::usage);
}

TEST(Cli, EvalPrintsFullTwist)
{
	const CliRun r = run_cli({"eval", "D^2", "--ring", "int"});
	EXPECT_EQ(r.code, exit_code::ok);
	EXPECT_FALSE(r.out.empty());
	const CliRun p = run_cli({"eval", "D^2", "--ring", "f2", "--projective"});
	EXPECT_EQ(p.code, exit_code::ok);
}

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run_cli({"kernel", "x y q"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"verify", "nosuch"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"verify"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"verify", "eq1", "--all"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"frobnicate"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"--format", "xml", "list-checks"}).code, exit_code::usage);
	EXPECT_FALSE(run_cli({"eval", "(x"}).err.empty());
}

TEST(Cli, KernelAssert)
{
	EXPECT_EQ(run_cli({"kernel", "s1", "--assert"}).code, exit_code::failed);
	EXPECT_EQ(run_cli({"kernel", "s1"}).code, exit_code::ok);
	EXPECT_EQ(run_cli({"kernel", "[[y x y, x], x]^4"}).code, exit_code::ok);
	EXPECT_EQ(run_cli({"kernel", "x^4", "--gamma", "--assert"}).code, exit_code::ok);
}

TEST(Cli, ResourceCapExitsThree)
{
	EXPECT_EQ(run_cli({"--cap", "100", "stab", "3"}).code, exit_code::resource);
}

TEST(Cli, VerifyAllPasses)
{
	const CliRun r = run_cli({"--no-timing", "--stab-n-max", "2", "verify", "--all"});
	EXPECT_EQ(r.code, exit_code::ok) << r.out << r.err;
	EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, JsonVerifyIsParseable)
{
	const CliRun r = run_cli({"--format", "json", "--no-timing", "verify", "eq1"});
	ASSERT_EQ(r.code, exit_code::ok);
	const auto j = nlohmann::json::parse(r.out);
	EXPECT_NE(j.dump().find("\"eq1\""), std::string::npos);
	const CliRun list = run_cli({"--format", "json", "list-checks"});
	EXPECT_EQ(nlohmann::json::parse(list.out).size(), list_checks().size());
}

TEST(Cli, ConjChecks)
{
	EXPECT_EQ(run_cli({"conj", "--f", "1/(1+t)", "--check", "eq4"}).code, exit_code::ok);
	EXPECT_EQ(run_cli({"conj", "--check", "power", "1", "2"}).code, exit_code::ok);
	EXPECT_EQ(run_cli({"conj", "--check", "lemma34"}).code, exit_code::ok);
	EXPECT_EQ(run_cli({"conj", "--check", "bogus"}).code, exit_code::usage);
	EXPECT_EQ(run_cli({"conj", "--f", "1/0"}).code, exit_code::usage);
}

TEST(Cli, CacheDirectoryFromEnvironment)
{
	const auto dir = std::filesystem::temp_directory_path() / "burau_cli_cache_test";
	std::filesystem::remove_all(dir);
	::setenv(kCacheDirEnv, dir.c_str(), 1);
	EXPECT_EQ(run_cli({"stab", "1"}).code, exit_code::ok);
	::unsetenv(kCacheDirEnv);
	EXPECT_TRUE(std::filesystem::exists(stab7_cache_file(dir, 1)));
	const auto flag_dir = dir / "flag";
	EXPECT_EQ(run_cli({"--cache-dir", flag_dir.string(), "stab", "0"}).code, exit_code::ok);
	EXPECT_TRUE(std::filesystem::exists(stab7_cache_file(flag_dir, 0)));
	std::filesystem::remove_all(dir);
}
