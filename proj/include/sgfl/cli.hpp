#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sgfl {

enum class OutputFormat { Json, Tsv, Pretty };

struct RunConfig {
  std::uint64_t budget = 10'000'000;
  OutputFormat output = OutputFormat::Json;
  unsigned parallelism = 1;
  std::uint64_t seed = 0;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgfl
