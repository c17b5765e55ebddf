#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sepk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seed from SEPK_SEED, or kDefaultSeed when unset. Throws parse on garbage.
std::uint64_t seed_from_environment();

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error (structured JSON error on `out`), 2 on a usage error
/// (message and usage on `err`). `equisingular` returns 0 when equisingular
/// and 1 when not.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepk::cli
