#include "pulsesynth/performance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pulsesynth {

namespace {

// Unconstrained minimizer of w for each family.
double stationary_amplitude(const WaveformFamily& family, double lambda) {
  switch (family.family()) {
    case Family::BangBang:
      return std::sqrt(lambda);
    case Family::LocalSine:
      return std::sqrt(2 * lambda);
    case Family::LocalPoly: {
      const double n = family.order();
      return std::sqrt((2 * n + 1) * (2 * n + 2) * lambda) / (2 * n);
    }
  }
  return 0.0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void PerformanceParams::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be positive and finite");
  if (bound && (!(*bound > 0) || !std::isfinite(*bound))) throw InvalidInput("bound must be positive and finite");
}

double w_value(const WaveformFamily& family, double x, double lambda) {
  if (!(x > 0)) throw InvalidInput("w_value: amplitude must be positive");
  if (!(lambda > 0)) throw InvalidInput("w_value: lambda must be positive");
  switch (family.family()) {
    case Family::BangBang:
      return 0.5 * (1 / x + x / lambda);
    case Family::LocalSine:
      return kPi<double> / 4 * (1 / x + x / (2 * lambda));
    case Family::LocalPoly: {
      const double n = family.order();
      return (n + 1) / (2 * n * x) + n * x / ((2 * n + 1) * lambda);
    }
  }
  return 0.0;
}

double optimal_amplitude(const WaveformFamily& family, const PerformanceParams& params) {
  params.validate();
  const double free = stationary_amplitude(family, params.lambda);
  return params.bound ? std::min(*params.bound, free) : free;
}

double closed_form_jte(const WaveformFamily& family, double c1, double c2, const PerformanceParams& params) {
  if (c1 < 0 || c2 < 0) throw InvalidInput("closed_form_jte: C1 and C2 must be non-negative");
  return (c1 + c2) * w_value(family, optimal_amplitude(family, params), params.lambda);
}

double closed_form_jt(const WaveformFamily& family, double c1, double c2, double bound) {
  if (!(bound > 0)) throw InvalidInput("closed_form_jt: bound must be positive");
  if (c1 < 0 || c2 < 0) throw InvalidInput("closed_form_jt: C1 and C2 must be non-negative");
  const double t_star = (c1 + c2) / bound;
  switch (family.family()) {
    case Family::BangBang:
      return t_star / 2;
    case Family::LocalSine:
      return kPi<double> * t_star / 4;
    case Family::LocalPoly: {
      const double n = family.order();
      return (n + 1) * t_star / (2 * n);
    }
  }
  return 0.0;
}

double total_energy(const Schedule& schedule) {
  double e = 0.0;
  for (const auto& p : schedule.pulses) e += energy(p);
  return e;
}

double measured_jte(const Schedule& schedule, double lambda) {
  if (!(lambda > 0)) throw InvalidInput("measured_jte: lambda must be positive");
  return transition_time(schedule) + total_energy(schedule) / lambda;
}

std::vector<PerformanceReport> table1(double c1, double c2, const PerformanceParams& params,
                                      const std::vector<int>& orders) {
  params.validate();
  std::vector<WaveformFamily> families{WaveformFamily::bang_bang()};
  for (int n : orders) families.push_back(WaveformFamily::local_poly(n));
  families.push_back(WaveformFamily::local_sine());

  const PerformanceParams unbounded{params.lambda, std::nullopt};
  std::vector<PerformanceReport> rows;
  for (const auto& f : families) {
    PerformanceReport r{f, c1, c2, optimal_amplitude(f, params), optimal_amplitude(f, unbounded),
                        std::nullopt, closed_form_jte(f, c1, c2, params), closed_form_jte(f, c1, c2, unbounded),
                        std::nullopt};
    if (params.bound) {
      r.j_t = closed_form_jt(f, c1, c2, *params.bound);
      r.t_star = (c1 + c2) / *params.bound;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string format_table(const std::vector<PerformanceReport>& rows) {
  const std::vector<std::string> header{"Case", "J_t", "J_te(bounded)", "J_te(unbounded)"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& r : rows) {
    cells.push_back({r.family.label(), r.j_t ? fmt(*r.j_t) : "-", fmt(r.j_te), fmt(r.j_te_unbounded)});
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pulsesynth
