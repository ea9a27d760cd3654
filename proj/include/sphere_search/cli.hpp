#pragma once

// Command-line front end. Exit codes: 0 success, 1 verified failure (witness
// found, envelope violated), 2 usage or file-format error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphere_search/geometry.hpp"

namespace sphere_search {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct SweepConfig {
  std::size_t dim = 2;
  std::size_t trials = 1000;
  double rho_min = 0.1;
  double rho_max = 100.0;
  std::uint64_t seed = 1;
};

struct SweepRow {
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  double rho = 0.0;
  std::uint64_t direction_hash = 0;
  double traversed_length = 0.0;
  int phase = 0;
  double ratio = 0.0;
  bool envelope_ok = false;
};

/// FNV-1a over the IEEE-754 bit patterns of the coordinates.
std::uint64_t direction_hash(const UnitDirection& direction);

/// Simulates `trials` hyperplanes with uniform normals and log-uniform
/// offsets against the doubling strategy of the inspection tour. Rows are in
/// trial order and depend only on the config.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphere_search
