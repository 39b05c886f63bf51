#pragma once

#include <iosfwd>

namespace burau {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
} // namespace exit_code

/// Environment variable naming the default enumeration cache directory.
inline constexpr const char *kCacheDirEnv = "BURAU_CACHE_DIR";

int cli_main(int argc, const char *const argv[], std::ostream &out, std::ostream &err);

} // namespace burau
