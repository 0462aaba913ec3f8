#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gkpft/cluster_gates.hpp"
#include "gkpft/constants.hpp"
#include "gkpft/matrix.hpp"
#include "gkpft/noise_model.hpp"
#include "gkpft/rng.hpp"
#include "gkpft/symplectic.hpp"

namespace gkpft {

/// How a correction outcome is scored as a logical error.
///   half_cell:     any measured shift outside [-sqrt(pi)/2, sqrt(pi)/2),
///                  i.e. the correction lands in a nonzero lattice cell.
///   exact_modular: only odd lattice cells count; a shift of an even multiple
///                  of sqrt(pi) is a stabilizer and leaves the qubit intact.
enum class CountConvention { half_cell, exact_modular };

inline const char* convention_name(CountConvention c) {
  return c == CountConvention::half_cell ? "half-cell" : "exact-modular";
}

inline CountConvention convention_from_name(std::string_view name) {
  if (name == "half-cell" || name == "half_cell") return CountConvention::half_cell;
  if (name == "exact-modular" || name == "exact_modular") return CountConvention::exact_modular;
  throw std::invalid_argument("unknown convention '" + std::string(name) +
                              "' (expected half-cell or exact-modular)");
}

struct MCConfig {
  Gate gate = Gate::I;
  double sigma2 = 0.01;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  CountConvention convention = CountConvention::half_cell;

  void validate() const {
    if (samples < 1) throw std::invalid_argument("MCConfig: samples must be >= 1");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("MCConfig: sigma2 must be positive");
  }
};

struct MCResult {
  double p_err_hat = 0.0;
  double std_err = 0.0;
  Mat<double> empirical_eta{2};               // residual covariance after the last correction
  std::vector<double> per_step_fail_rates;    // schedule order: step 3 rails, then step 4 rails
  std::uint64_t failures = 0;
  std::uint64_t samples = 0;

  friend bool operator==(const MCResult& a, const MCResult& b) {
    return a.p_err_hat == b.p_err_hat && a.std_err == b.std_err &&
           a.empirical_eta == b.empirical_eta &&
           a.per_step_fail_rates == b.per_step_fail_rates &&
           a.failures == b.failures && a.samples == b.samples;
  }
};

/// Centered modulus: x reduced into [-spacing/2, spacing/2).
inline double mod_half(double x, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("mod_half: spacing must be positive");
  const double r = x - spacing * std::floor(x / spacing + 0.5);
  // floor rounding can land exactly on +spacing/2; fold it back.
  return r >= spacing / 2.0 ? r - spacing : r;
}

/// Integer multiple of `spacing` closest to x. An exact half-way tie goes to
/// the even multiple (then toward -inf, though adjacent multiples always
/// differ in parity so the even rule decides every tie).
inline double nearest_multiple(double x, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("nearest_multiple: spacing must be positive");
  const double f = x / spacing;
  double k = std::floor(f);
  const double frac = f - k;
  if (frac > 0.5) {
    k += 1.0;
  } else if (frac == 0.5) {
    const double even_low = std::fmod(k, 2.0) == 0.0 ? k : k + 1.0;
    k = even_low;
  }
  return k * spacing;
}

namespace detail {

inline void apply_linear(const Mat<double>& s, std::vector<double>& y, std::vector<double>& tmp) {
  const int n = s.dim();
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int c = 0; c < n; ++c) acc += s(r, c) * y[static_cast<std::size_t>(c)];
    tmp[static_cast<std::size_t>(r)] = acc;
  }
  y.swap(tmp);
}

}  // namespace detail

/// Samples explicit shift-error trajectories through a gate schedule and
/// scores the corrections empirically. Per sample: draw the input shift from
/// N(0, eta0), push it through the measurement steps (adding the squeezing
/// noise in p each time), and at steps 3 and 4 run the ancilla-based
/// correction on each rail: measure s = shift_q + a with ancilla error
/// a ~ N(0, delta), shift back by -mod_half(s, sqrt(pi)), and record in which
/// lattice cell the correction landed. After correction the stored q shift is
/// the residual relative to the nearest codeword, i.e. -a, with the cell
/// index kept as the logical-error flag; the correction also kicks p by an
/// independent N(0, delta).
///
/// Identical (seed, config) gives a bit-identical MCResult; the per-sample
/// streams make the sample loop order-independent (bit-stability is promised
/// single-threaded, and this implementation is single-threaded).
inline MCResult simulate(const MCConfig& cfg) {
  cfg.validate();
  const NoiseModel noise = NoiseModel::symmetric(cfg.sigma2);
  const bool two_mode = cfg.gate == Gate::CZ;
  const int dim = two_mode ? 4 : 2;
  const int n_modes = dim / 2;
  const int n_corrections = 2 * n_modes;

  const GateSchedule schedule = GateSchedule::standard(cfg.gate);
  const Mat<double> chol = cholesky(standard_input(cfg.gate).evaluate(noise));
  const Mat<double> cz = SymplecticMap::cz(-1.0).entries();
  std::vector<Mat<double>> steps;
  steps.reserve(4);
  for (int j = 0; j < 4; ++j) {
    steps.push_back(two_mode
                        ? SymplecticMap::two_mode_fourier().entries()
                        : SymplecticMap::shear_step(
                              schedule.measurement_vector[static_cast<std::size_t>(j)].to_double())
                              .entries());
  }

  const double delta_sd = std::sqrt(noise.delta);
  const double eps_sd = std::sqrt(noise.epsilon);

  std::uint64_t failures = 0;
  std::vector<std::uint64_t> step_failures(static_cast<std::size_t>(n_corrections), 0);
  Mat<double> cov_sum(dim);

  std::vector<double> y(static_cast<std::size_t>(dim));
  std::vector<double> draw(static_cast<std::size_t>(dim));
  std::vector<double> tmp(static_cast<std::size_t>(dim));

  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    SampleStream rng(cfg.seed, i);

    for (int k = 0; k < dim; ++k) draw[static_cast<std::size_t>(k)] = rng.normal();
    for (int r = 0; r < dim; ++r) {
      double acc = 0.0;
      for (int c = 0; c <= r; ++c) acc += chol(r, c) * draw[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(r)] = acc;
    }

    if (two_mode) {
      detail::apply_linear(cz, y, tmp);
      for (int m = 0; m < n_modes; ++m) y[static_cast<std::size_t>(n_modes + m)] += eps_sd * rng.normal();
    }

    bool failed = false;
    for (int step = 1; step <= 4; ++step) {
      detail::apply_linear(steps[static_cast<std::size_t>(step - 1)], y, tmp);
      for (int m = 0; m < n_modes; ++m) y[static_cast<std::size_t>(n_modes + m)] += eps_sd * rng.normal();

      if (step == 3 || step == 4) {
        for (int m = 0; m < n_modes; ++m) {
          const double a_meas = delta_sd * rng.normal();
          const double shift = y[static_cast<std::size_t>(m)] + a_meas;
          const long long cell =
              std::llround(nearest_multiple(shift, kSqrtPi) / kSqrtPi);
          const bool corr_failed = cfg.convention == CountConvention::half_cell
                                       ? cell != 0
                                       : (cell % 2 != 0);
          if (corr_failed) {
            failed = true;
            ++step_failures[static_cast<std::size_t>((step - 3) * n_modes + m)];
          }
          y[static_cast<std::size_t>(m)] = -a_meas;
          y[static_cast<std::size_t>(n_modes + m)] += delta_sd * rng.normal();
        }
      }
    }

    if (failed) ++failures;
    for (int r = 0; r < dim; ++r) {
      for (int c = r; c < dim; ++c) {
        cov_sum(r, c) += y[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(c)];
      }
    }
  }

  MCResult result;
  result.samples = cfg.samples;
  result.failures = failures;
  const double n = static_cast<double>(cfg.samples);
  result.p_err_hat = static_cast<double>(failures) / n;
  result.std_err = std::sqrt(result.p_err_hat * (1.0 - result.p_err_hat) / n);
  result.empirical_eta = Mat<double>(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = r; c < dim; ++c) {
      const double v = cov_sum(r, c) / n;
      result.empirical_eta(r, c) = v;
      result.empirical_eta(c, r) = v;
    }
  }
  result.per_step_fail_rates.reserve(static_cast<std::size_t>(n_corrections));
  for (std::uint64_t f : step_failures) {
    result.per_step_fail_rates.push_back(static_cast<double>(f) / n);
  }
  return result;
}

}  // namespace gkpft
