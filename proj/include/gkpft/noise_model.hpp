#pragma once

#include <stdexcept>

namespace gkpft {

/// Numeric noise parameters in quadrature-variance units (vacuum = 1/2).
/// delta is the spike variance of the encoded ancillas, epsilon the variance
/// of the momentum-squeezed inputs used to build the cluster. Most analyses
/// set both to a common sigma^2.
struct NoiseModel {
  double delta;
  double epsilon;

  NoiseModel(double delta_value, double epsilon_value)
      : delta(delta_value), epsilon(epsilon_value) {
    if (!(delta > 0.0) || !(epsilon > 0.0)) {
      throw std::invalid_argument("NoiseModel: variances must be strictly positive");
    }
  }

  static NoiseModel symmetric(double sigma2) { return NoiseModel(sigma2, sigma2); }

  bool is_symmetric() const { return delta == epsilon; }

  double sigma2() const {
    if (!is_symmetric()) {
      throw std::logic_error("NoiseModel: sigma2 is only defined when delta == epsilon");
    }
    return delta;
  }
};

}  // namespace gkpft
