#include "krel/matrix.hpp"

#include "krel/errors.hpp"

namespace krel {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Gq(1);
  return m;
}

Mat Mat::fromRows(std::initializer_list<std::initializer_list<Gq>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      raise(ErrorKind::DimensionMismatch, "ragged row list");
    int j = 0;
    for (const auto& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::conjugateTranspose() const {
  Mat m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

std::vector<Gq> Mat::col(int j) const {
  std::vector<Gq> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

void Mat::setCol(int j, const std::vector<Gq>& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

Mat Mat::rowSlice(int r0, int count) const {
  Mat m(count, cols);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(r0 + i, j);
  return m;
}

Mat Mat::colSlice(int c0, int count) const {
  Mat m(rows, count);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < count; ++j) m.at(i, j) = at(i, c0 + j);
  return m;
}

bool operator==(const Mat& x, const Mat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) raise(ErrorKind::DimensionMismatch, "matrix add");
  Mat m(x.rows, x.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] + y.a[k];
  return m;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) raise(ErrorKind::DimensionMismatch, "matrix sub");
  Mat m(x.rows, x.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] - y.a[k];
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) raise(ErrorKind::DimensionMismatch, "matrix mul");
  Mat m(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Gq& xv = x.at(i, k);
      if (xv.isZero()) continue;
      for (int j = 0; j < y.cols; ++j) m.at(i, j) += xv * y.at(k, j);
    }
  return m;
}

Mat operator*(const Gq& s, const Mat& x) {
  Mat m(x.rows, x.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = s * x.a[k];
  return m;
}

std::vector<Gq> operator*(const Mat& x, const std::vector<Gq>& v) {
  if (x.cols != static_cast<int>(v.size())) raise(ErrorKind::DimensionMismatch, "matrix-vector mul");
  std::vector<Gq> out(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out[i] += x.at(i, j) * v[j];
  return out;
}

Mat hstack(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) raise(ErrorKind::DimensionMismatch, "hstack");
  Mat m(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) m.at(i, x.cols + j) = y.at(i, j);
  }
  return m;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.cols != y.cols) raise(ErrorKind::DimensionMismatch, "vstack");
  Mat m(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) m.at(x.rows + i, j) = y.at(i, j);
  return m;
}

Mat blockDiag(const Mat& x, const Mat& y) {
  Mat m(x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) m.at(x.rows + i, x.cols + j) = y.at(i, j);
  return m;
}

bool isHermitian(const Mat& g) {
  if (g.rows != g.cols) return false;
  for (int i = 0; i < g.rows; ++i)
    for (int j = i; j < g.cols; ++j)
      if (g.at(i, j) != g.at(j, i).conj()) return false;
  return true;
}

}  // namespace krel
