#include "pulsesynth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace pulsesynth {

namespace {

bool looks_like_degrees(const std::string& key) {
  std::string k = key;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return k.find("deg") != std::string::npos;
}

void reject_degrees(const Json& j, const std::string& where) {
  if (!j.is_object()) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string field = where.empty() ? it.key() : where + "." + it.key();
    if (looks_like_degrees(it.key())) throw ConfigError(field, "angles are accepted in radians only");
    if ((it.key() == "units" || it.key() == "angle_unit" || it.key() == "angle_units") &&
        !(it.value().is_string() && it.value() == "radians")) {
      throw ConfigError(field, "angles are accepted in radians only");
    }
    reject_degrees(it.value(), field);
  }
}

int positive_int(const Json& j, const char* key, int fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 1 || it->get<long long>() > 100000000) {
    throw ConfigError(key, "expected a positive integer");
  }
  return it->get<int>();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

JobConfig parse_job(const Json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  reject_degrees(j, "");

  auto it = j.find("dim");
  if (it == j.end()) throw ConfigError("dim", "missing");
  if (!it->is_number_integer() || it->get<long long>() < 2 || it->get<long long>() > 64) {
    throw ConfigError("dim", "expected an integer in [2, 64]");
  }
  const int dim = it->get<int>();

  if (!j.contains("initial")) throw ConfigError("initial", "missing");
  if (!j.contains("target")) throw ConfigError("target", "missing");
  GeometricState initial = geometric_from_json(j.at("initial"), "initial");
  GeometricState target = geometric_from_json(j.at("target"), "target");
  if (initial.dim() != dim) throw ConfigError("initial", "dimension " + std::to_string(initial.dim()) + " != dim");
  if (target.dim() != dim) throw ConfigError("target", "dimension " + std::to_string(target.dim()) + " != dim");

  it = j.find("family");
  if (it == j.end()) throw ConfigError("family", "missing");
  if (!it->is_string()) throw ConfigError("family", "expected \"bb\", \"ls\" or \"ln\"");
  const std::string tag = it->get<std::string>();
  int order = 0;
  if (tag == "ln") {
    auto o = j.find("order");
    if (o == j.end()) throw ConfigError("order", "missing (required for family \"ln\")");
    if (!o->is_number_integer() || o->get<long long>() < 1) throw ConfigError("order", "expected an integer >= 1");
    order = o->get<int>();
  }
  WaveformFamily family = WaveformFamily::local_sine();
  try {
    family = family_from_tag(tag, order);
  } catch (const InvalidInput& e) {
    throw ConfigError("family", e.what());
  }

  it = j.find("lambda");
  if (it == j.end()) throw ConfigError("lambda", "missing");
  if (!it->is_number() || !(it->get<double>() > 0) || !std::isfinite(it->get<double>())) {
    throw ConfigError("lambda", "expected a positive number");
  }
  PerformanceParams params{it->get<double>(), std::nullopt};

  it = j.find("bound");
  if (it == j.end()) throw ConfigError("bound", "missing (number or \"unbounded\")");
  if (it->is_string()) {
    if (*it != "unbounded") throw ConfigError("bound", "expected a positive number or \"unbounded\"");
  } else if (it->is_number() && it->get<double>() > 0 && std::isfinite(it->get<double>())) {
    params.bound = it->get<double>();
  } else {
    throw ConfigError("bound", "expected a positive number or \"unbounded\"");
  }

  JobConfig job{dim, std::move(initial), std::move(target), family, params};
  job.rk4_steps_per_pulse = positive_int(j, "rk4_steps_per_pulse", job.rk4_steps_per_pulse);
  job.samples_per_pulse = positive_int(j, "samples_per_pulse", job.samples_per_pulse);
  it = j.find("output_dir");
  if (it != j.end()) {
    if (!it->is_string()) throw ConfigError("output_dir", "expected a path string");
    job.output_dir = it->get<std::string>();
  }
  return job;
}

JobConfig load_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_job(j);
}

Schedule optimal_schedule(const JobConfig& job) {
  const double amplitude = optimal_amplitude(job.family, job.params);
  return synthesize({job.dim, job.initial, job.target, job.family, {amplitude}});
}

VerifyReport verify_schedule(const Schedule& schedule, const PureState& initial, const PureState& target,
                             double lambda, int rk4_steps_per_pulse, Trajectory* trajectory, int samples_per_pulse) {
  const PureState exact = propagate_exact(schedule, initial);

  const double t_f = transition_time(schedule);
  NumericOptions options{t_f > 0 ? t_f : 1.0, rk4_steps_per_pulse,
                         std::max(1, rk4_steps_per_pulse / std::max(1, samples_per_pulse)), target};
  const Trajectory numeric = propagate_numeric(schedule_to_field(schedule), initial, t_f, options);

  VerifyReport r{fidelity(target, exact),
                 fidelity(target, numeric.final_state()),
                 (exact.amplitudes() - numeric.final_state().amplitudes()).norm(),
                 measured_jte(schedule, lambda),
                 t_f,
                 static_cast<int>(schedule.pulses.size()),
                 numeric.max_norm_error,
                 numeric.renormalizations};
  if (trajectory) *trajectory = numeric;
  return r;
}

Json verify_report_to_json(const VerifyReport& r) {
  return Json{{"exact_fidelity", r.exact_fidelity},
              {"numeric_fidelity", r.numeric_fidelity},
              {"discrepancy", r.discrepancy},
              {"measured_jte", r.measured_jte},
              {"t_f", r.t_f},
              {"pulse_count", r.pulse_count},
              {"max_norm_error", r.max_norm_error},
              {"renormalizations", r.renormalizations},
              {"fidelity_threshold", kVerifyFidelity},
              {"passed", r.passed()}};
}

int cmd_synthesize(const JobConfig& job, const std::filesystem::path& out_dir, std::ostream& console) {
  std::filesystem::create_directories(out_dir);
  const Schedule schedule = optimal_schedule(job);
  write_file(out_dir / "schedule.json", dump_json(schedule_to_json(schedule)));

  std::ostringstream csv;
  write_controls_csv(csv, sample_controls(schedule_to_field(schedule), pulse_sample_times(schedule, job.samples_per_pulse)));
  write_file(out_dir / "controls.csv", csv.str());

  const auto [c1, c2] = c_constants(job.initial, job.target);
  std::optional<double> j_t;
  if (job.params.bound) j_t = closed_form_jt(job.family, c1, c2, *job.params.bound);
  const Json summary{{"family", job.family.tag()},
                     {"amplitude", optimal_amplitude(job.family, job.params)},
                     {"pulse_count", static_cast<int>(schedule.pulses.size())},
                     {"t_f", transition_time(schedule)},
                     {"j_t", optional_number(j_t)},
                     {"j_te", measured_jte(schedule, job.params.lambda)},
                     {"j_te_closed_form", closed_form_jte(job.family, c1, c2, job.params)},
                     {"c1", c1},
                     {"c2", c2}};
  console << dump_json(summary);
  return exit_code::kOk;
}

int cmd_verify(const JobConfig& job, const std::optional<std::filesystem::path>& schedule_path,
               const std::filesystem::path& out_dir, std::ostream& console) {
  Schedule schedule;
  if (schedule_path) {
    std::ifstream in(*schedule_path);
    if (!in) throw ConfigError("schedule", "cannot open " + schedule_path->string());
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ConfigError("schedule", std::string("malformed JSON: ") + e.what());
    }
    schedule = schedule_from_json(j);
    if (schedule.dim != job.dim) throw ConfigError("schedule.dim", "does not match the job's dim");
  } else {
    schedule = optimal_schedule(job);
  }

  std::filesystem::create_directories(out_dir);
  Trajectory trajectory;
  const VerifyReport report = verify_schedule(schedule, to_amplitudes(job.initial), to_amplitudes(job.target),
                                              job.params.lambda, job.rk4_steps_per_pulse, &trajectory,
                                              job.samples_per_pulse);
  std::ostringstream csv;
  write_trajectory_csv(csv, trajectory);
  write_file(out_dir / "trajectory.csv", csv.str());
  const std::string text = dump_json(verify_report_to_json(report));
  write_file(out_dir / "report.json", text);
  console << text;
  return report.passed() ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_table(const JobConfig& job, const std::vector<int>& orders, const std::filesystem::path& out_dir,
              std::ostream& console) {
  for (int n : orders) {
    if (n < 1) throw ConfigError("orders", "orders must be integers >= 1");
  }
  const auto [c1, c2] = c_constants(job.initial, job.target);
  const auto rows = table1(c1, c2, job.params, orders);

  Json list = Json::array();
  for (const auto& r : rows) list.push_back(report_to_json(r));
  const Json doc{{"c1", c1}, {"c2", c2}, {"lambda", job.params.lambda},
                 {"bound", optional_number(job.params.bound)}, {"rows", list}};

  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "table1.json", dump_json(doc));
  const std::string text = format_table(rows);
  write_file(out_dir / "table1.txt", text);
  console << text;
  return exit_code::kOk;
}

int cmd_selftest(std::uint64_t seed, int cases, std::ostream& console) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_dim(2, 6);
  std::normal_distribution<double> gauss;
  auto random_state = [&](int dim) {
    VectorXcd v(dim);
    for (int n = 0; n < dim; ++n) v(n) = {gauss(rng), gauss(rng)};
    return PureState::normalized(v);
  };

  const std::vector<WaveformFamily> families{WaveformFamily::bang_bang(), WaveformFamily::local_sine(),
                                             WaveformFamily::local_poly(3)};
  int failures = 0;
  double worst_exact = 1.0, worst_numeric = 1.0, worst_discrepancy = 0.0;
  for (const auto& family : families) {
    for (int c = 0; c < cases; ++c) {
      const int dim = pick_dim(rng);
      const PureState a = random_state(dim);
      const PureState b = random_state(dim);
      const JobConfig job{dim, to_geometric(a), to_geometric(b), family, {2.0, 1.0}};
      const Schedule s = optimal_schedule(job);
      const VerifyReport r = verify_schedule(s, a, b, job.params.lambda, 2000);
      worst_exact = std::min(worst_exact, r.exact_fidelity);
      worst_numeric = std::min(worst_numeric, r.numeric_fidelity);
      worst_discrepancy = std::max(worst_discrepancy, r.discrepancy);
      if (!r.passed() || static_cast<int>(s.pulses.size()) > slot_count(dim)) ++failures;
    }
  }
  console << dump_json(Json{{"seed", seed},
                            {"cases", cases * static_cast<int>(families.size())},
                            {"failures", failures},
                            {"worst_exact_fidelity", worst_exact},
                            {"worst_numeric_fidelity", worst_numeric},
                            {"worst_discrepancy", worst_discrepancy}});
  return failures == 0 ? exit_code::kOk : exit_code::kVerificationFailed;
}

}  // namespace pulsesynth
