#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cprig/report.hpp"

namespace cprig {

enum class Command { Lefschetz, Star, Mod24, Rigidity, PetrieBound, Jacobi, Reconstruct, All };

Command parse_command(const std::string& name);
std::string to_string(Command c);

struct RunConfig {
  Command command = Command::All;
  std::string fixturePath;
  int qOrder = 4;
  double tolerance = 1e-9;
  std::string outputPath;
  std::uint64_t seed = 1;
  std::optional<int> m;
  std::optional<std::pair<long, long>> bRange;
  std::optional<long> n;
  int scanPoints = 64;
  /// jacobi: where the pole-scan samples go, if anywhere.
  std::string csvPath;

  /// InvalidArgument on qOrder < 0, tolerance <= 0 and similar.
  void validate() const;
};

struct RunResult {
  Json report;
  /// 0 all pass, 1 some check failed, 2 fixture could not be read.
  int exitCode = 0;
  std::string csv;
};

/// "lo..hi" with lo <= hi.
std::pair<long, long> parse_range(const std::string& text);

/// VERIFY_THREADS if set to a positive integer, else the hardware count.
unsigned worker_limit();

using Task = std::function<std::vector<VerificationReport>()>;

/// Runs the tasks on at most `workers` threads. A task that throws turns
/// into a failing report carrying the task name. The result keeps task order.
std::vector<VerificationReport> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, unsigned workers);

RunResult run(const RunConfig& config);

}  // namespace cprig
