#pragma once

#include <initializer_list>
#include <vector>

#include "krel/scalar.hpp"

namespace krel {

/// Dense matrix of Gaussian rationals, row-major. Rows or columns may be zero;
/// a dim x 0 matrix is the basis of the zero subspace.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Gq> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Gq& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Gq& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n);
  static Mat zero(int r, int c) { return Mat(r, c); }
  /// Row-major construction from nested lists, for tests and fixtures.
  static Mat fromRows(std::initializer_list<std::initializer_list<Gq>> rows);

  Mat conjugateTranspose() const;
  Mat transpose() const;

  std::vector<Gq> col(int j) const;
  void setCol(int j, const std::vector<Gq>& v);
  /// Rows [r0, r0+count) as a new matrix.
  Mat rowSlice(int r0, int count) const;
  /// Columns [c0, c0+count) as a new matrix.
  Mat colSlice(int c0, int count) const;

  friend bool operator==(const Mat& x, const Mat& y);
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(const Gq& s, const Mat& x);

std::vector<Gq> operator*(const Mat& x, const std::vector<Gq>& v);

/// [x | y]
Mat hstack(const Mat& x, const Mat& y);
/// [x ; y]
Mat vstack(const Mat& x, const Mat& y);
/// diag(x, y) as blocks.
Mat blockDiag(const Mat& x, const Mat& y);

bool isHermitian(const Mat& g);

}  // namespace krel
