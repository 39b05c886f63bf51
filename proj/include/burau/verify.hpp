#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "burau/finite_group.hpp"

namespace burau {

enum class OutputFormat { Text, Json };
enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct RunConfig {
	int family_depth = kDefaultFamilyDepth;
	int conj_depth = 5;
	int stab_n_max = kDefaultStabDepth;
	std::size_t closure_cap = kDefaultClosureCap;
	int kernel_depth = 6;
	OutputFormat format = OutputFormat::Text;
	std::optional<std::filesystem::path> cache_dir;
	/// When false, elapsed times are reported as 0 so that repeated runs
	/// serialize identically.
	bool timings = true;

	/// Throws UsageError unless every bound is positive.
	void validate() const;
};

struct CheckRecord {
	std::string id;
	std::string citation;
	CheckStatus status = CheckStatus::Skipped;
	double elapsed_ms = 0;
	std::string detail;
};

struct CheckInfo {
	std::string id;
	std::string citation;
};

/// Registry in its fixed order.
std::vector<CheckInfo> list_checks();

/// Throws UsageError for an unknown id.
CheckRecord run_check(const std::string &id, const RunConfig &cfg);

/// Every registry check in registry order. Group tables are built once and
/// shared between checks.
std::vector<CheckRecord> run_all(const RunConfig &cfg);

nlohmann::ordered_json to_json(const CheckRecord &r);
std::string to_text(const CheckRecord &r);

} // namespace burau
