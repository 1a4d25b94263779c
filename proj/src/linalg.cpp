#include "krel/linalg.hpp"

#include <cassert>

#include "krel/errors.hpp"

namespace krel {

Mat columnEchelon(const Mat& m) {
  Mat w = m;
  int p = 0;  // next pivot column slot
  for (int row = 0; row < w.rows && p < w.cols; ++row) {
    int j = p;
    while (j < w.cols && w.at(row, j).isZero()) ++j;
    if (j == w.cols) continue;
    if (j != p)
      for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, p), w.at(i, j));
    Gq inv = Gq(1) / w.at(row, p);
    for (int i = 0; i < w.rows; ++i) w.at(i, p) = inv * w.at(i, p);
    for (int q = 0; q < w.cols; ++q) {
      if (q == p || w.at(row, q).isZero()) continue;
      Gq t = w.at(row, q);
      for (int i = 0; i < w.rows; ++i) w.at(i, q) = w.at(i, q) - t * w.at(i, p);
    }
    ++p;
  }
  return w.colSlice(0, p);
}

int rank(const Mat& m) { return columnEchelon(m).cols; }

namespace {

/// Row-reduces w in place to reduced row echelon form; returns pivot columns.
std::vector<int> rowReduce(Mat& w) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < w.cols && r < w.rows; ++col) {
    int i = r;
    while (i < w.rows && w.at(i, col).isZero()) ++i;
    if (i == w.rows) continue;
    if (i != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(i, j));
    Gq inv = Gq(1) / w.at(r, col);
    for (int j = 0; j < w.cols; ++j) w.at(r, j) = inv * w.at(r, j);
    for (int q = 0; q < w.rows; ++q) {
      if (q == r || w.at(q, col).isZero()) continue;
      Gq t = w.at(q, col);
      for (int j = 0; j < w.cols; ++j) w.at(q, j) = w.at(q, j) - t * w.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat kernelBasis(const Mat& m) {
  Mat w = m;
  std::vector<int> pivots = rowReduce(w);
  std::vector<bool> isPivot(m.cols, false);
  for (int c : pivots) isPivot[c] = true;

  int freeCount = m.cols - static_cast<int>(pivots.size());
  Mat basis(m.cols, freeCount);
  int slot = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (isPivot[c]) continue;
    basis.at(c, slot) = Gq(1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      basis.at(pivots[r], slot) = -w.at(r, c);
    ++slot;
  }
  return columnEchelon(basis);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  Mat w = hstack(m, Mat::identity(m.rows));
  std::vector<int> pivots = rowReduce(w);
  if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
  return w.colSlice(m.cols, m.cols);
}

Gq determinant(const Mat& m) {
  if (m.rows != m.cols) raise(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Mat w = m;
  Gq det(1);
  for (int k = 0; k < w.rows; ++k) {
    int p = k;
    while (p < w.rows && w.at(p, k).isZero()) ++p;
    if (p == w.rows) return Gq(0);
    if (p != k) {
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(k, j), w.at(p, j));
      det = -det;
    }
    det *= w.at(k, k);
    Gq inv = Gq(1) / w.at(k, k);
    for (int q = k + 1; q < w.rows; ++q) {
      if (w.at(q, k).isZero()) continue;
      Gq t = inv * w.at(q, k);
      for (int j = k; j < w.cols; ++j) w.at(q, j) = w.at(q, j) - t * w.at(k, j);
    }
  }
  return det;
}

Inertia hermitianInertia(const Mat& g) {
  if (!isHermitian(g)) raise(ErrorKind::InvariantViolation, "inertia of non-Hermitian matrix");
  Mat w = g;
  const int n = w.rows;
  Inertia out;

  auto swapIndex = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < n; ++j) std::swap(w.at(x, j), w.at(y, j));
    for (int i = 0; i < n; ++i) std::swap(w.at(i, x), w.at(i, y));
  };
  // Congruence e_j <- e_j + c e_l; updates W <- B^H W B for B = I + c E_{lj}.
  auto addIndex = [&](int j, int l, const Gq& c) {
    for (int i = 0; i < n; ++i) w.at(i, j) = w.at(i, j) + c * w.at(i, l);
    Gq cc = c.conj();
    for (int i = 0; i < n; ++i) w.at(j, i) = w.at(j, i) + cc * w.at(l, i);
  };

  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && w.at(p, p).isZero()) ++p;
    if (p == n) {
      int fj = -1, fl = -1;
      for (int j = k; j < n && fj < 0; ++j)
        for (int l = j + 1; l < n; ++l)
          if (!w.at(j, l).isZero()) {
            fj = j;
            fl = l;
            break;
          }
      if (fj < 0) {
        out.zero += n - k;
        return out;
      }
      // A zero-diagonal block with w(fj,fl) = a != 0 gains the diagonal entry
      // 2*Re(c*a) under e_fj += c e_fl; pick c in {1, i} to make it nonzero.
      Gq a = w.at(fj, fl);
      addIndex(fj, fl, a.re != 0 ? Gq(1) : gqI());
      p = fj;
    }
    swapIndex(k, p);
    assert(w.at(k, k).im == 0);
    Rational d = w.at(k, k).re;
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    Gq invd = Gq(1) / w.at(k, k);
    for (int q = k + 1; q < n; ++q) {
      if (w.at(q, k).isZero()) continue;
      Gq t = w.at(q, k) * invd;
      for (int j = 0; j < n; ++j) w.at(q, j) = w.at(q, j) - t * w.at(k, j);
      Gq tc = t.conj();
      for (int i = 0; i < n; ++i) w.at(i, q) = w.at(i, q) - tc * w.at(i, k);
    }
  }
  return out;
}

}  // namespace krel
