#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "gkpft/constants.hpp"

namespace gkpft {

/// Thrown when a computation loses numerical meaning (e.g. a normalization
/// sum comes out nonpositive). The CLI maps this to its own exit code.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laguerre polynomial L_n(x) by the stable three-term recurrence
/// (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}.
inline double laguerre(int n, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be nonnegative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

/// Wigner function of the photon-number projector |n><n| at radius r:
/// (1/pi) (-1)^n L_n(2 r^2) exp(-r^2).
inline double wigner_number(int n, double r) {
  if (n < 0) throw std::invalid_argument("wigner_number: n must be nonnegative");
  if (r < 0.0) throw std::invalid_argument("wigner_number: r must be nonnegative");
  const double r2 = r * r;
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign / kPi * laguerre(n, 2.0 * r2) * std::exp(-r2);
}

/// Normalized isotropic Gaussian of per-quadrature variance v at squared
/// radius r2: exp(-r2 / 2v) / (2 pi v).
inline double gaussian_isotropic(double r2, double v) {
  if (!(v > 0.0)) throw std::invalid_argument("gaussian_isotropic: variance must be positive");
  return std::exp(-r2 / (2.0 * v)) / (2.0 * kPi * v);
}

/// Gaussian-blurred Wigner function of the photon-number-mod-4 projector for
/// even outcome a, split into the smooth closed form and the blurred
/// point-mass term so lattice sums can add the latter analytically:
///
///   smooth     = (1/8pi) { 1 +- 2 exp(-2 r^2 t / (4t^2+1)) / (4t^2+1)
///                  [ (1-2t) sin(r^2/(4t^2+1)) + (1+2t) cos(r^2/(4t^2+1)) ] }
///   delta_term = (1/8pi) * pi * G_t(r)          (t = tau2)
///
/// with + for a = 0 and - for a = 2. As tau2 -> 0 the smooth part recovers
/// the unblurred projector Wigner function away from the origin.
struct BlurredWigner {
  double smooth = 0.0;
  double delta_term = 0.0;
  double total() const { return smooth + delta_term; }
};

inline BlurredWigner wigner_pi_blurred(int a, double r, double tau2) {
  if (a != 0 && a != 2) {
    throw std::invalid_argument(
        "wigner_pi_blurred: outcome must be 0 or 2 (odd counts are discard events)");
  }
  if (!(tau2 > 0.0)) throw std::invalid_argument("wigner_pi_blurred: tau2 must be positive");
  if (r < 0.0) throw std::invalid_argument("wigner_pi_blurred: r must be nonnegative");
  const double r2 = r * r;
  const double den = 4.0 * tau2 * tau2 + 1.0;
  const double osc = 2.0 * std::exp(-2.0 * r2 * tau2 / den) / den *
                     ((1.0 - 2.0 * tau2) * std::sin(r2 / den) +
                      (1.0 + 2.0 * tau2) * std::cos(r2 / den));
  const double pref = 1.0 / (8.0 * kPi);
  BlurredWigner w;
  w.smooth = pref * (1.0 + (a == 0 ? osc : -osc));
  w.delta_term = pref * kPi * gaussian_isotropic(r2, tau2);
  return w;
}

/// Weight of the ideal Hadamard-eigenstate Wigner function at lattice point
/// (q, p) = (sqrt(pi) t / 2, sqrt(pi) s / 2); j = 0, 1 selects the +/-
/// eigenstate.
inline double hadamard_indicator(int j, long long t, long long s) {
  if (j != 0 && j != 1) throw std::invalid_argument("hadamard_indicator: j must be 0 or 1");
  const bool t_even = t % 2 == 0;
  const bool s_even = s % 2 == 0;
  constexpr double inv_sqrt2 = 0.7071067811865475244008443621048490393;
  if (t_even && s_even) return 1.0;
  if (!t_even && !s_even) return 0.0;
  const long long half = t_even ? t / 2 : s / 2;
  const long long parity = (static_cast<long long>(j) + half) % 2;
  return parity == 0 ? inv_sqrt2 : -inv_sqrt2;
}

/// Smallest lattice bound S such that the envelope exponent at radius
/// sqrt(pi) S / 2 is at least 30, leaving tail weight below ~1e-13 of the
/// peak. Sums are dominated by the envelope, so this bounds their tails too.
inline long truncation_bound(double envelope_variance) {
  if (!(envelope_variance > 0.0)) {
    throw std::invalid_argument("truncation_bound: envelope variance must be positive");
  }
  const double s = std::sqrt(240.0 * envelope_variance / kPi);
  return static_cast<long>(std::ceil(s));
}

/// Inputs for the distillation probability sums. Defaults model one
/// error-corrected preparation round at delta = epsilon = sigma^2: spike blur
/// variance 3*sigma^2 and envelope variance 1/(4*sigma^2). product_override
/// rescales the blur so that blur*envelope equals the requested product while
/// the envelope stays at 1/(4*sigma^2).
struct DistillationConfig {
  double sigma2 = 0.0;
  double blur_variance = 0.0;
  double envelope_variance = 0.0;
  long truncation = 0;  // 0 = derive from truncation_bound
  std::optional<double> product_override;

  static DistillationConfig defaults(double sigma2) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("DistillationConfig: sigma2 must be positive");
    DistillationConfig cfg;
    cfg.sigma2 = sigma2;
    cfg.blur_variance = 3.0 * sigma2;
    cfg.envelope_variance = 1.0 / (4.0 * sigma2);
    return cfg;
  }

  void validate() const {
    if (!(sigma2 > 0.0) || !(blur_variance > 0.0) || !(envelope_variance > 0.0)) {
      throw std::invalid_argument("DistillationConfig: variances must be positive");
    }
    if (product_override && !(*product_override > 0.0)) {
      throw std::invalid_argument("DistillationConfig: product override must be positive");
    }
  }

  DistillationConfig resolved() const {
    validate();
    DistillationConfig cfg = *this;
    if (cfg.product_override) {
      cfg.blur_variance = *cfg.product_override / cfg.envelope_variance;
    }
    const long required = truncation_bound(cfg.envelope_variance);
    if (cfg.truncation < required) cfg.truncation = required;
    return cfg;
  }
};

struct LatticeSums {
  double a_norm = 0.0;  // normalization overlap
  double a0 = 0.0;      // overlap with the blurred mod-4 = 0 projector
  double a2 = 0.0;      // overlap with the blurred mod-4 = 2 projector
  long s_max = 0;       // lattice bound actually used
};

namespace detail {

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

/// Overlap sums over the Hadamard-eigenstate lattice, accumulated shell by
/// shell in |s|+|t| with compensated summation (the indicator and the
/// oscillatory factor alternate in sign, so naive ordering loses digits at
/// small sigma^2).
inline LatticeSums lattice_sums(const DistillationConfig& config, int j) {
  if (j != 0 && j != 1) throw std::invalid_argument("lattice_sums: j must be 0 or 1");
  const DistillationConfig cfg = config.resolved();
  const long s_max = cfg.truncation;
  const double env_var = cfg.envelope_variance;
  const double tau2 = cfg.blur_variance;

  detail::Kahan a_norm;
  detail::Kahan a0;
  detail::Kahan a2;
  const double two_pi = 2.0 * kPi;

  for (long shell = 0; shell <= 2 * s_max; ++shell) {
    for (long t = -std::min(shell, s_max); t <= std::min(shell, s_max); ++t) {
      const long s_abs = shell - std::abs(t);
      if (s_abs > s_max) continue;
      for (int sign = 0; sign < (s_abs == 0 ? 1 : 2); ++sign) {
        const long s = sign == 0 ? s_abs : -s_abs;
        const double lam = hadamard_indicator(j, t, s);
        if (lam == 0.0) continue;
        const double r2 = kPi * static_cast<double>(t * t + s * s) / 4.0;
        const double env = gaussian_isotropic(r2, env_var) * lam;
        a_norm.add(env);
        const double r = std::sqrt(r2);
        a0.add(two_pi * env * wigner_pi_blurred(0, r, tau2).total());
        a2.add(two_pi * env * wigner_pi_blurred(2, r, tau2).total());
      }
    }
  }
  return {a_norm.sum, a0.sum, a2.sum, s_max};
}

struct DistillationResult {
  double a_norm_plus = 0.0;
  double a_norm_minus = 0.0;
  double a0_plus = 0.0;
  double a2_plus = 0.0;
  double a0_minus = 0.0;
  double a2_minus = 0.0;
  double p0_plus = 0.0;
  double p2_plus = 0.0;
  double p0_minus = 0.0;
  double p2_minus = 0.0;
  double epsilon = 0.0;  // probability an even count identifies the wrong eigenstate
  double p_even = 0.0;   // probability of an even count (attempt succeeds)
  long s_max = 0;
};

/// Photon-count identification statistics of the noisy Hadamard eigenstates:
/// conditional outcome probabilities P[a|+-] = A[a|+-]/A[.|+-], the error
/// probability of an even outcome, and the even-outcome success probability.
inline DistillationResult distill_stats(const DistillationConfig& config) {
  const LatticeSums plus = lattice_sums(config, 0);
  const LatticeSums minus = lattice_sums(config, 1);
  if (!(plus.a_norm > 0.0) || !(minus.a_norm > 0.0)) {
    throw NumericalError("distill_stats: normalization sum is not positive");
  }

  DistillationResult out;
  out.a_norm_plus = plus.a_norm;
  out.a_norm_minus = minus.a_norm;
  out.a0_plus = plus.a0;
  out.a2_plus = plus.a2;
  out.a0_minus = minus.a0;
  out.a2_minus = minus.a2;
  out.p0_plus = plus.a0 / plus.a_norm;
  out.p2_plus = plus.a2 / plus.a_norm;
  out.p0_minus = minus.a0 / minus.a_norm;
  out.p2_minus = minus.a2 / minus.a_norm;
  const double even_total = out.p0_plus + out.p2_plus + out.p0_minus + out.p2_minus;
  if (!(even_total > 0.0)) {
    throw NumericalError("distill_stats: even-outcome probability is not positive");
  }
  out.epsilon = (out.p2_plus + out.p0_minus) / even_total;
  out.p_even = 0.5 * even_total;
  out.s_max = plus.s_max;
  return out;
}

}  // namespace gkpft
