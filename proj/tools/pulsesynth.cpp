// pulsesynth: synthesize, verify and tabulate trajectory-constrained
// waveform schedules from a JSON job description.
//
//   pulsesynth synthesize --config job.json --out run/
//   pulsesynth verify     --config job.json --out run/ [--schedule run/schedule.json]
//   pulsesynth table      --config job.json --out run/ [--orders 1,10,100]
//
// Exit codes: 0 success, 2 configuration error, 3 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pulsesynth/cli.hpp"

namespace {

std::filesystem::path output_dir(const std::string& flag, const pulsesynth::JobConfig& job) {
  return flag.empty() ? job.output_dir : std::filesystem::path(flag);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pulsesynth;

  CLI::App app{"Trajectory-constrained local waveform pulse synthesis"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string schedule_path;
  std::vector<int> orders{1, 2, 5, 10};
  std::uint64_t seed = 1;
  int cases = 20;

  auto* synth = app.add_subcommand("synthesize", "Write the optimal-amplitude schedule and control traces");
  auto* verify = app.add_subcommand("verify", "Propagate a schedule both ways and report fidelities");
  auto* table = app.add_subcommand("table", "Tabulate J_t and J_te for every waveform family");
  auto* selftest = app.add_subcommand("selftest", "Verify random transitions");
  selftest->group("");

  for (auto* cmd : {synth, verify, table}) {
    cmd->add_option("--config", config_path, "JSON job description")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_flag, "Output directory (defaults to the job's output_dir)");
  }
  verify->add_option("--schedule", schedule_path, "Verify this schedule.json instead of synthesizing one");
  table->add_option("--orders", orders, "Polynomial orders for the LN rows")->delimiter(',');
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--cases", cases, "Random transitions per family")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kConfigError;
  }

  try {
    if (*selftest) return cmd_selftest(seed, cases, std::cout);

    const JobConfig job = load_job(config_path);
    const auto out = output_dir(out_flag, job);
    if (*synth) return cmd_synthesize(job, out, std::cout);
    if (*verify) {
      std::optional<std::filesystem::path> sched;
      if (!schedule_path.empty()) sched = schedule_path;
      return cmd_verify(job, sched, out, std::cout);
    }
    if (*table) return cmd_table(job, orders, out, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_code::kConfigError;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_code::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
