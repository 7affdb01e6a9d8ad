#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nilcoh::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_estimate = 3;

/// Everything a run depends on. Vectors are kept as the text given on the
/// command line ("0,0,1", "1, phi") and parsed by the subcommand.
struct RunConfig {
  std::string subcommand;
  std::filesystem::path algebra;
  std::filesystem::path out_dir = ".";
  bool json = false;
  int precision = 15;
  std::uint64_t seed = 0;

  std::string lambda;
  std::string x;

  // solve
  std::string f = "dgaussian";
  double alpha = 2.0;
  double beta = -1.0;
  int grid_n = 4096;
  double grid_l = 12.0;
  std::string mode = "grid";
  int hermite_count = 96;
  double inversion_tol = 1e-8;
  double estimate_slack = 1e-9;
  double zero_tol = 1e-9;

  // diophantine
  std::string omega;
  double tau = 0.0;
  long m_max = 1000;

  // simulate
  std::string x0;
  std::string obs = "character(1,-1)";
  std::vector<double> times{10.0, 100.0, 1000.0};
  double dt = 0.05;

  /// Throws Error(invalid_argument) naming the first bad field.
  void validate() const;

  std::string to_json() const;
  /// Missing keys keep their defaults; throws Error(parse) on malformed text.
  static RunConfig from_json(std::string_view text);

  bool operator==(const RunConfig&) const = default;
};

/// Runs one subcommand, printing the report to out and diagnostics to err,
/// and writing CSV artifacts under out_dir. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nilcoh::cli
