#pragma once

// Job description and the synthesize / verify / table commands.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pulsesynth/io.hpp"

namespace pulsesynth {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kVerificationFailed = 3;
}  // namespace exit_code

/// Numeric-path fidelity a verified schedule must reach.
inline constexpr double kVerifyFidelity = 1.0 - 1e-6;

struct JobConfig {
  int dim;
  GeometricState initial;
  GeometricState target;
  WaveformFamily family;
  PerformanceParams params;
  int rk4_steps_per_pulse = 2000;
  int samples_per_pulse = 512;
  std::filesystem::path output_dir = ".";
};

/// Throws ConfigError naming the offending field.
JobConfig parse_job(const Json& j);
JobConfig load_job(const std::filesystem::path& path);

/// Three-stage schedule at the family's optimal amplitude.
Schedule optimal_schedule(const JobConfig& job);

struct VerifyReport {
  double exact_fidelity;
  double numeric_fidelity;
  /// || psi_exact - psi_numeric ||_2 at t_f.
  double discrepancy;
  double measured_jte;
  double t_f;
  int pulse_count;
  double max_norm_error;
  int renormalizations;

  bool passed() const { return numeric_fidelity >= kVerifyFidelity; }
};

VerifyReport verify_schedule(const Schedule& schedule, const PureState& initial, const PureState& target,
                             double lambda, int rk4_steps_per_pulse, Trajectory* trajectory = nullptr,
                             int samples_per_pulse = 512);

Json verify_report_to_json(const VerifyReport& report);

// Each command writes its files into `out_dir`, prints a JSON summary to
// `console` and returns the process exit code.
int cmd_synthesize(const JobConfig& job, const std::filesystem::path& out_dir, std::ostream& console);
int cmd_verify(const JobConfig& job, const std::optional<std::filesystem::path>& schedule_path,
               const std::filesystem::path& out_dir, std::ostream& console);
int cmd_table(const JobConfig& job, const std::vector<int>& orders, const std::filesystem::path& out_dir,
              std::ostream& console);

/// Synthesizes and verifies `cases` random transitions per family.
int cmd_selftest(std::uint64_t seed, int cases, std::ostream& console);

}  // namespace pulsesynth
