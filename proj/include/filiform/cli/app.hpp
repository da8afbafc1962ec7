#ifndef FILIFORM_CLI_APP_HPP
#define FILIFORM_CLI_APP_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace filiform::cli {

// Exit codes: affirmative results, definite negatives (not conjugate, no
// root, nothing within the radius) and usage or resource errors never mix.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

enum class OutputFormat { Plain, Csv, Json };

struct Config {
  std::size_t dim = 0;  // 0: take it from the input element
  std::uint32_t max_radius = 10;
  std::size_t memory_cap_bytes = std::size_t{2} << 30;
  std::filesystem::path cache_dir = ".filiform-cache";
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Plain;
  unsigned threads = 1;
};

// "1073741824", "512M", "2G" and so on.
std::size_t parse_memory_size(const std::string& text);

// Runs the command line; flags are also read from FILIFORM_* environment
// variables. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace filiform::cli

#endif  // FILIFORM_CLI_APP_HPP
