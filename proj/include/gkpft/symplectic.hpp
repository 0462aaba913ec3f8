#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gkpft/matrix.hpp"

namespace gkpft {

/// Real linear phase-space map of a Gaussian unitary in the
/// (q_1..q_N, p_1..p_N) ordering, with the block symplectic form
/// Omega = [[0, I], [-I, 0]].
class SymplecticMap {
 public:
  explicit SymplecticMap(Mat<double> entries) : entries_(std::move(entries)) {
    if (entries_.dim() % 2 != 0) {
      throw std::invalid_argument("SymplecticMap: dim must be even");
    }
  }

  static Mat<double> symplectic_form(int dim) {
    if (dim % 2 != 0) throw std::invalid_argument("symplectic_form: dim must be even");
    Mat<double> omega(dim);
    const int n = dim / 2;
    for (int i = 0; i < n; ++i) {
      omega(i, n + i) = 1.0;
      omega(n + i, i) = -1.0;
    }
    return omega;
  }

  // One quadrature measurement p + m*q on a linear cluster teleports the
  // state one node over and applies F P(m) = [[-m, -1], [1, 0]].
  static SymplecticMap shear_step(double m) {
    return SymplecticMap(Mat<double>(2, {-m, -1.0, 1.0, 0.0}));
  }

  static SymplecticMap two_mode_fourier() {
    return SymplecticMap(Mat<double>(4, {0.0, 0.0, -1.0, 0.0,   //
                                         0.0, 0.0, 0.0, -1.0,   //
                                         1.0, 0.0, 0.0, 0.0,    //
                                         0.0, 1.0, 0.0, 0.0}));
  }

  static SymplecticMap cz(double weight) {
    return SymplecticMap(Mat<double>(4, {1.0, 0.0, 0.0, 0.0,      //
                                         0.0, 1.0, 0.0, 0.0,      //
                                         0.0, weight, 1.0, 0.0,   //
                                         weight, 0.0, 0.0, 1.0}));
  }

  int dim() const { return entries_.dim(); }
  const Mat<double>& entries() const { return entries_; }

  bool is_symplectic(double tol = 1e-12) const {
    const Mat<double> omega = symplectic_form(dim());
    return max_abs_diff(entries_ * omega * entries_.transposed(), omega) <= tol;
  }

 private:
  Mat<double> entries_;
};

}  // namespace gkpft
