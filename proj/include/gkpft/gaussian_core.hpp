#pragma once

#include <stdexcept>

#include "gkpft/matrix.hpp"
#include "gkpft/rational.hpp"
#include "gkpft/symbolic_covariance.hpp"

namespace gkpft {

// Exact counterparts of the canonical symplectic maps, for coefficient-level
// propagation. Same conventions as SymplecticMap.

inline Mat<Rational> shear_step_exact(const Rational& m) {
  return Mat<Rational>(2, {-m, Rational(-1), Rational(1), Rational(0)});
}

inline Mat<Rational> two_mode_fourier_exact() {
  return Mat<Rational>(4, {0, 0, -1, 0,   //
                           0, 0, 0, -1,   //
                           1, 0, 0, 0,    //
                           0, 1, 0, 0});
}

inline Mat<Rational> cz_exact(int weight) {
  if (weight != 1 && weight != -1) {
    throw std::invalid_argument("cz_exact: weight must be +1 or -1");
  }
  const Rational w(weight);
  return Mat<Rational>(4, {1, 0, 0, 0,              //
                           0, 1, 0, 0,              //
                           Rational(0), w, 1, 0,    //
                           w, Rational(0), 0, 1});
}

namespace detail {

inline SymbolicCovariance apply_map(const SymbolicCovariance& eta, const Mat<Rational>& s) {
  return SymbolicCovariance(congruence(s, eta.delta_coeff()),
                            congruence(s, eta.epsilon_coeff()));
}

// Cluster teleportation injects fresh squeezing noise of variance epsilon
// into every p quadrature.
inline SymbolicCovariance add_p_noise(const SymbolicCovariance& eta) {
  Mat<Rational> e = eta.epsilon_coeff();
  const int n = eta.modes();
  for (int m = 0; m < n; ++m) e(n + m, n + m) += Rational(1);
  return SymbolicCovariance(eta.delta_coeff(), e);
}

}  // namespace detail

/// One node of single-mode cluster propagation: conjugate by F P(m), then add
/// variance-epsilon noise in p.
inline SymbolicCovariance single_mode_step(const SymbolicCovariance& eta, const Rational& m) {
  if (eta.dim() != 2) throw std::invalid_argument("single_mode_step: dim must be 2");
  return detail::add_p_noise(detail::apply_map(eta, shear_step_exact(m)));
}

/// One node pair of two-rail propagation: conjugate both modes by the Fourier
/// transform, then add variance-epsilon noise in each p.
inline SymbolicCovariance two_mode_step(const SymbolicCovariance& eta) {
  if (eta.dim() != 4) throw std::invalid_argument("two_mode_step: dim must be 4");
  return detail::add_p_noise(detail::apply_map(eta, two_mode_fourier_exact()));
}

/// The controlled-Z link between the two rails, with its accompanying
/// squeezing noise in each p. The two-rail cluster realizes weight -1; the
/// encoded gate tolerates either sign, so +1 is exposed as well.
inline SymbolicCovariance cz_inject(const SymbolicCovariance& eta, int weight = -1) {
  if (eta.dim() != 4) throw std::invalid_argument("cz_inject: dim must be 4");
  return detail::add_p_noise(detail::apply_map(eta, cz_exact(weight)));
}

/// Ancilla-based shift correction on every mode: the q noise is replaced by
/// fresh ancilla noise of variance delta, and variance-delta noise is added
/// to every p. As a map: Pi_p eta Pi_p + delta*I, with Pi_p zeroing the q
/// rows and columns.
inline SymbolicCovariance correct_map(const SymbolicCovariance& eta) {
  const int dim = eta.dim();
  const int n = eta.modes();
  Mat<Rational> d(dim);
  Mat<Rational> e(dim);
  for (int r = n; r < dim; ++r) {
    for (int c = n; c < dim; ++c) {
      d(r, c) = eta.delta_coeff()(r, c);
      e(r, c) = eta.epsilon_coeff()(r, c);
    }
  }
  for (int i = 0; i < dim; ++i) d(i, i) += Rational(1);
  return SymbolicCovariance(d, e);
}

}  // namespace gkpft
