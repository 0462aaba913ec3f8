#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gkpft {

/// Dense square matrix sized at construction. Everything in this library is a
/// 2x2 or 4x4 phase-space block, so value semantics throughout.
template <typename T>
class Mat {
 public:
  explicit Mat(int dim) : dim_(check_dim(dim)), data_(static_cast<std::size_t>(dim) * dim, T{}) {}

  Mat(int dim, std::initializer_list<T> values)
      : dim_(check_dim(dim)), data_(values) {
    if (data_.size() != static_cast<std::size_t>(dim) * dim) {
      throw std::invalid_argument("Mat: initializer size does not match dim*dim");
    }
  }

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  static Mat diagonal(std::initializer_list<T> entries) {
    Mat m(static_cast<int>(entries.size()));
    int i = 0;
    for (const T& v : entries) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  int dim() const { return dim_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  Mat transposed() const {
    Mat t(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_symmetric() const {
    for (int r = 0; r < dim_; ++r)
      for (int c = r + 1; c < dim_; ++c)
        if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_dim(b);
    Mat out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_dim(b);
    Mat out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    a.require_same_dim(b);
    Mat out(a.dim_);
    for (int r = 0; r < a.dim_; ++r) {
      for (int c = 0; c < a.dim_; ++c) {
        T acc{};
        for (int k = 0; k < a.dim_; ++k) acc += a(r, k) * b(k, c);
        out(r, c) = acc;
      }
    }
    return out;
  }

  friend Mat operator*(const T& scalar, const Mat& m) {
    Mat out(m.dim_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = scalar * m.data_[i];
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  static int check_dim(int dim) {
    if (dim <= 0) throw std::invalid_argument("Mat: dim must be positive");
    return dim;
  }

  void require_same_dim(const Mat& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("Mat: dimension mismatch");
  }

  std::size_t index(int r, int c) const {
    if (r < 0 || c < 0 || r >= dim_ || c >= dim_) throw std::out_of_range("Mat: index");
    return static_cast<std::size_t>(r) * dim_ + c;
  }

  int dim_;
  std::vector<T> data_;
};

/// S * M * S^T, the congruence transform a covariance undergoes under the
/// linear phase-space map S.
template <typename T>
Mat<T> congruence(const Mat<T>& s, const Mat<T>& m) {
  return s * m * s.transposed();
}

inline double max_abs_diff(const Mat<double>& a, const Mat<double>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Plenty for
/// the 2x2/4x4 blocks here; used for positive-semidefiniteness checks.
inline std::vector<double> symmetric_eigenvalues(Mat<double> a) {
  const int n = a.dim();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-300) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
  return eig;
}

inline bool is_positive_semidefinite(const Mat<double>& a, double tol = 1e-12) {
  for (double lambda : symmetric_eigenvalues(a)) {
    if (lambda < -tol) return false;
  }
  return true;
}

/// Lower-triangular Cholesky factor L with L L^T = a. Tolerates exact zeros
/// on the diagonal (semidefinite input) by zeroing the column.
inline Mat<double> cholesky(const Mat<double>& a, double tol = 1e-12) {
  const int n = a.dim();
  Mat<double> l(n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d < -tol) throw std::invalid_argument("cholesky: matrix is not positive semidefinite");
    d = d > 0.0 ? std::sqrt(d) : 0.0;
    l(j, j) = d;
    for (int i = j + 1; i < n; ++i) {
      double v = a(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = d > 0.0 ? v / d : 0.0;
    }
  }
  return l;
}

}  // namespace gkpft
