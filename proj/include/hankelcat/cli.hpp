#pragma once

#include <ostream>
#include <vector>

#include "hankelcat/conjectures.hpp"

namespace hankelcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // runtime error, cache divergence
inline constexpr int kExitRefuted = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;

/// 2 if any report is refuted, else 3 if any is inconclusive, else 0.
int check_exit_code(const std::vector<ConjectureReport>& reports);

/// Entry point of the hankelcat tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankelcat::cli
