#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sitepc::cli {

inline constexpr std::uint64_t kDefaultSeed = 20190611;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kFiniteSize = 3, kResource = 4 };

struct RunConfig {
  std::string command;
  int d = 2;
  int L = 16;
  std::optional<double> p;
  std::vector<double> p_grid;
  int order = 2;
  std::uint64_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  int radius = 4;
  std::string format = "json";
  std::string out;
  bool strict = false;

  // Subcommand-specific.
  std::string query = "class";
  std::string x;
  int m = 2;
  int l1 = 2;
  int linf = 1;
  int omega_degree = -1;
  int length = 4;
  std::string variant = "plain";
  int l = 1;
  int n = 0;
  std::string input;
  std::string preset;
  std::string direction = "to-2d";
  double floor = 1e-3;
};

/// Rejects invalid combinations with UsageError.
void validate(RunConfig& config);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs a validated config, writing the artifact to `out`; returns the exit
/// code (0, or 3 for a finite-size warning under --strict).
int run(const RunConfig& config, std::ostream& out);

/// Full entry point: parse, validate, run, map errors to exit codes.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sitepc::cli
