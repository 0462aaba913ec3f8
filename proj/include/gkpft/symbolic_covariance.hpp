#pragma once

#include <stdexcept>
#include <utility>

#include "gkpft/matrix.hpp"
#include "gkpft/noise_model.hpp"
#include "gkpft/rational.hpp"

namespace gkpft {

/// Covariance matrix of the classical shift noise riding on an encoded state,
/// kept as an exact linear form in the two noise symbols:
///
///   eta = delta_coeff * delta + epsilon_coeff * epsilon
///
/// Quadrature ordering is (q_1..q_N, p_1..p_N). Both coefficient matrices are
/// required to be symmetric; every operation in gaussian_core preserves that
/// exactly.
class SymbolicCovariance {
 public:
  SymbolicCovariance(Mat<Rational> delta_coeff, Mat<Rational> epsilon_coeff)
      : delta_coeff_(std::move(delta_coeff)), epsilon_coeff_(std::move(epsilon_coeff)) {
    if (delta_coeff_.dim() != epsilon_coeff_.dim()) {
      throw std::invalid_argument("SymbolicCovariance: coefficient dims differ");
    }
    if (delta_coeff_.dim() != 2 && delta_coeff_.dim() != 4) {
      throw std::invalid_argument("SymbolicCovariance: dim must be 2 or 4");
    }
    if (!delta_coeff_.is_symmetric() || !epsilon_coeff_.is_symmetric()) {
      throw std::invalid_argument("SymbolicCovariance: coefficients must be symmetric");
    }
  }

  static SymbolicCovariance zero(int dim) {
    return SymbolicCovariance(Mat<Rational>(dim), Mat<Rational>(dim));
  }

  int dim() const { return delta_coeff_.dim(); }
  int modes() const { return dim() / 2; }

  const Mat<Rational>& delta_coeff() const { return delta_coeff_; }
  const Mat<Rational>& epsilon_coeff() const { return epsilon_coeff_; }

  Mat<double> evaluate(const NoiseModel& noise) const {
    Mat<double> out(dim());
    for (int r = 0; r < dim(); ++r) {
      for (int c = 0; c < dim(); ++c) {
        out(r, c) = delta_coeff_(r, c).to_double() * noise.delta +
                    epsilon_coeff_(r, c).to_double() * noise.epsilon;
      }
    }
    return out;
  }

  bool is_symmetric() const {
    return delta_coeff_.is_symmetric() && epsilon_coeff_.is_symmetric();
  }

  bool is_psd_at(const NoiseModel& noise, double tol = 1e-12) const {
    return is_positive_semidefinite(evaluate(noise), tol);
  }

  friend bool operator==(const SymbolicCovariance& a, const SymbolicCovariance& b) {
    return a.delta_coeff_ == b.delta_coeff_ && a.epsilon_coeff_ == b.epsilon_coeff_;
  }
  friend bool operator!=(const SymbolicCovariance& a, const SymbolicCovariance& b) {
    return !(a == b);
  }

 private:
  Mat<Rational> delta_coeff_;
  Mat<Rational> epsilon_coeff_;
};

}  // namespace gkpft
