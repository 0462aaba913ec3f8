#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gkpft/gaussian_core.hpp"
#include "gkpft/noise_model.hpp"
#include "gkpft/rational.hpp"
#include "gkpft/symbolic_covariance.hpp"

namespace gkpft {

enum class Gate { I, P, F, CZ };

inline const char* gate_name(Gate g) {
  switch (g) {
    case Gate::I: return "i";
    case Gate::P: return "p";
    case Gate::F: return "f";
    case Gate::CZ: return "cz";
  }
  throw std::invalid_argument("gate_name: unknown gate");
}

inline Gate gate_from_name(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "i") return Gate::I;
  if (lower == "p") return Gate::P;
  if (lower == "f") return Gate::F;
  if (lower == "cz") return Gate::CZ;
  throw std::invalid_argument("unknown gate '" + lower + "' (expected i, p, f, or cz)");
}

/// Measurement schedule of one error-corrected gate: four quadrature
/// measurements p + m_j q along the wire (the CZ gate measures plain p
/// everywhere, i.e. all shear parameters zero), with an ancilla-based shift
/// correction after measurements 3 and 4.
struct GateSchedule {
  Gate gate = Gate::I;
  std::vector<Rational> measurement_vector;
  std::vector<int> correction_steps = {3, 4};

  static GateSchedule standard(Gate g) {
    GateSchedule s;
    s.gate = g;
    switch (g) {
      case Gate::I: s.measurement_vector = {0, 0, 0, 0}; break;
      case Gate::P: s.measurement_vector = {1, 0, 0, 0}; break;
      case Gate::F: s.measurement_vector = {1, 1, 1, 0}; break;
      case Gate::CZ: s.measurement_vector = {0, 0, 0, 0}; break;
      default: throw std::invalid_argument("GateSchedule: unknown gate");
    }
    return s;
  }

  void validate() const {
    if (measurement_vector.size() != 4) {
      throw std::invalid_argument("GateSchedule: measurement vector must have 4 entries");
    }
    if (correction_steps != std::vector<int>{3, 4}) {
      throw std::invalid_argument("GateSchedule: corrections are fixed at steps 3 and 4");
    }
  }
};

enum class Rail { single, top, bottom };

inline const char* rail_name(Rail r) {
  switch (r) {
    case Rail::single: return "single";
    case Rail::top: return "top";
    case Rail::bottom: return "bottom";
  }
  throw std::invalid_argument("rail_name: unknown rail");
}

/// Exact linear combination a*delta + b*epsilon.
struct NoiseExpr {
  Rational delta;
  Rational epsilon;

  double eval(const NoiseModel& noise) const {
    return delta.to_double() * noise.delta + epsilon.to_double() * noise.epsilon;
  }

  friend bool operator==(const NoiseExpr& a, const NoiseExpr& b) {
    return a.delta == b.delta && a.epsilon == b.epsilon;
  }
};

struct TraceRow {
  std::string label;
  SymbolicCovariance eta;
};

struct ErrVar {
  int step = 0;
  Rail rail = Rail::single;
  NoiseExpr variance;  // q variance entering the correction, plus the ancilla's delta
};

struct PropagationTrace {
  Gate gate = Gate::I;
  std::vector<TraceRow> rows;
  std::vector<ErrVar> err_vars;

  const SymbolicCovariance& row(std::string_view label) const {
    for (const TraceRow& r : rows) {
      if (r.label == label) return r.eta;
    }
    throw std::out_of_range("PropagationTrace: no row labeled '" + std::string(label) + "'");
  }
};

/// The standard input error matrix: what a preceding corrected gate hands
/// over. diag(delta, 2*delta + epsilon) per mode.
inline SymbolicCovariance standard_input(Gate g) {
  if (g == Gate::CZ) {
    return SymbolicCovariance(Mat<Rational>::diagonal({1, 1, 2, 2}),
                              Mat<Rational>::diagonal({0, 0, 1, 1}));
  }
  return SymbolicCovariance(Mat<Rational>::diagonal({1, 2}),
                            Mat<Rational>::diagonal({0, 1}));
}

/// Runs a schedule from an arbitrary input error matrix, recording every
/// intermediate matrix and the correction error variances
/// sigma2_err = eta_qq + delta (per rail for the two-mode gate).
inline PropagationTrace propagate_from(const GateSchedule& schedule,
                                       const SymbolicCovariance& eta0) {
  schedule.validate();
  const bool two_mode = schedule.gate == Gate::CZ;
  if (eta0.dim() != (two_mode ? 4 : 2)) {
    throw std::invalid_argument("propagate_from: input dim does not match gate");
  }

  PropagationTrace trace;
  trace.gate = schedule.gate;
  trace.rows.push_back({"eta0", eta0});

  SymbolicCovariance eta = eta0;
  if (two_mode) {
    eta = cz_inject(eta);
    trace.rows.push_back({"eta0_prime", eta});
  }

  for (int step = 1; step <= 4; ++step) {
    eta = two_mode
              ? two_mode_step(eta)
              : single_mode_step(eta, schedule.measurement_vector[static_cast<std::size_t>(step - 1)]);
    trace.rows.push_back({"eta" + std::to_string(step), eta});

    if (step == 3 || step == 4) {
      if (two_mode) {
        for (int mode = 0; mode < 2; ++mode) {
          trace.err_vars.push_back(
              {step, mode == 0 ? Rail::top : Rail::bottom,
               {eta.delta_coeff()(mode, mode) + Rational(1), eta.epsilon_coeff()(mode, mode)}});
        }
      } else {
        trace.err_vars.push_back(
            {step, Rail::single,
             {eta.delta_coeff()(0, 0) + Rational(1), eta.epsilon_coeff()(0, 0)}});
      }
      eta = correct_map(eta);
      trace.rows.push_back({"eta" + std::to_string(step) + "_c", eta});
    }
  }
  return trace;
}

inline PropagationTrace propagate(const GateSchedule& schedule) {
  return propagate_from(schedule, standard_input(schedule.gate));
}

/// With delta = epsilon = sigma^2, each correction error variance is an
/// integer multiple n_j of sigma^2. Returned in schedule order (step 3 rails,
/// then step 4 rails).
inline std::vector<int> error_multipliers(const GateSchedule& schedule) {
  const PropagationTrace trace = propagate(schedule);
  std::vector<int> multipliers;
  multipliers.reserve(trace.err_vars.size());
  for (const ErrVar& ev : trace.err_vars) {
    const Rational n = ev.variance.delta + ev.variance.epsilon;
    if (!n.is_integer()) {
      throw std::logic_error("error_multipliers: variance is not an integer multiple of sigma^2");
    }
    multipliers.push_back(static_cast<int>(n.num()));
  }
  return multipliers;
}

inline std::vector<int> error_multipliers(Gate g) {
  return error_multipliers(GateSchedule::standard(g));
}

/// True iff the corrected output matrix equals the standard input exactly, so
/// correlated errors cannot accumulate across gates.
inline bool fixed_point_check(const GateSchedule& schedule) {
  const PropagationTrace trace = propagate(schedule);
  return trace.row("eta4_c") == standard_input(schedule.gate);
}

inline bool fixed_point_check(Gate g) {
  return fixed_point_check(GateSchedule::standard(g));
}

}  // namespace gkpft
