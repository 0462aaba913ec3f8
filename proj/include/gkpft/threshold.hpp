#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gkpft/cluster_gates.hpp"
#include "gkpft/constants.hpp"
#include "gkpft/erf.hpp"

namespace gkpft {

inline double squeezing_db_from_sigma2(double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("squeezing_db_from_sigma2: sigma2 must be positive");
  return -10.0 * std::log10(sigma2 / kVacuumVariance);
}

inline double sigma2_from_squeezing_db(double db) {
  return kVacuumVariance * std::pow(10.0, -db / 10.0);
}

// Experimental squeezing milestones often drawn on threshold plots. Shown by
// the CLI as annotations; nothing is computed from them.
inline constexpr double kRecordSingleModeSqueezingDb = 12.7;
inline constexpr double kRecordClusterSqueezingDb = 5.0;

/// Probability that one shift correction succeeds when the combined shift
/// (data plus ancilla) has variance n*sigma^2: the mass of that Gaussian
/// inside the half-cell, erf(sqrt(pi) / (2*sqrt(2n)*sigma)). sigma == 0 is
/// the noiseless limit and returns exactly 1.
inline double p_succ(int n, double sigma) {
  if (n < 1) throw std::invalid_argument("p_succ: n must be >= 1");
  if (sigma < 0.0) throw std::invalid_argument("p_succ: sigma must be nonnegative");
  if (sigma == 0.0) return 1.0;
  return gkpft::erf(kSqrtPi / (2.0 * std::sqrt(2.0 * n) * sigma));
}

namespace detail {

inline const std::vector<int>& multipliers_for(Gate g) {
  static const std::array<std::vector<int>, 4> table = {
      error_multipliers(Gate::I), error_multipliers(Gate::P),
      error_multipliers(Gate::F), error_multipliers(Gate::CZ)};
  switch (g) {
    case Gate::I: return table[0];
    case Gate::P: return table[1];
    case Gate::F: return table[2];
    case Gate::CZ: return table[3];
  }
  throw std::invalid_argument("multipliers_for: unknown gate");
}

}  // namespace detail

/// Probability that a gate suffers a qubit-level error: one minus the product
/// of the success probabilities of all its corrections (two for single-mode
/// gates, four for CZ). Evaluated in the complementary form
/// -expm1(sum log1p(-erfc)) so tiny error rates keep full relative accuracy
/// instead of rounding to zero against 1.
inline double p_err_gate(Gate gate, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("p_err_gate: sigma2 must be positive");
  const double sigma = std::sqrt(sigma2);
  double log_prod = 0.0;
  for (int n : detail::multipliers_for(gate)) {
    log_prod += std::log1p(-gkpft::erfc(kSqrtPi / (2.0 * std::sqrt(2.0 * n) * sigma)));
  }
  return -std::expm1(log_prod);
}

struct ThresholdRow {
  double p_ft = 0.0;
  double sigma2 = 0.0;
  double squeezing_db = 0.0;
};

/// Squeezing required for a target per-gate error rate: solves
/// p_err_gate(CZ, sigma2) = p_ft for the noisiest gate by bisection on
/// log(sigma2), to 1e-9 relative in sigma2.
inline ThresholdRow sigma2_for_threshold(double p_ft) {
  if (!(p_ft > 0.0) || !(p_ft < 1.0)) {
    throw std::invalid_argument("sigma2_for_threshold: p_ft must lie in (0, 1)");
  }
  double lo = std::log(1e-6);
  double hi = std::log(1.0);
  // p_err is monotone increasing in sigma2; widen until the bracket straddles p_ft.
  for (int guard = 0; p_err_gate(Gate::CZ, std::exp(lo)) > p_ft; ++guard) {
    lo -= 5.0;
    if (guard > 100) throw std::runtime_error("sigma2_for_threshold: bracket expansion failed (low side)");
  }
  for (int guard = 0; p_err_gate(Gate::CZ, std::exp(hi)) < p_ft; ++guard) {
    hi += 5.0;
    if (guard > 100) throw std::runtime_error("sigma2_for_threshold: bracket expansion failed (high side)");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (p_err_gate(Gate::CZ, std::exp(mid)) < p_ft) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ThresholdRow row;
  row.p_ft = p_ft;
  row.sigma2 = std::exp(0.5 * (lo + hi));
  row.squeezing_db = squeezing_db_from_sigma2(row.sigma2);
  return row;
}

struct CurvePoint {
  double squeezing_db = 0.0;
  double p_err = 0.0;
};

/// CZ error rate sampled evenly in dB; strictly decreasing in squeezing.
inline std::vector<CurvePoint> curve(double db_min, double db_max, int points) {
  if (!(db_min < db_max)) throw std::invalid_argument("curve: db_min must be < db_max");
  if (points < 2) throw std::invalid_argument("curve: points must be >= 2");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(points));
  const double step = (db_max - db_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double db = db_min + step * i;
    out.push_back({db, p_err_gate(Gate::CZ, sigma2_from_squeezing_db(db))});
  }
  return out;
}

}  // namespace gkpft
