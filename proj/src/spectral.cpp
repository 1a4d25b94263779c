#include "krel/spectral.hpp"

#include <Eigen/Dense>
#include <limits>

#include "krel/errors.hpp"

namespace krel {

namespace {

using Cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

CMat toEigen(const Mat& m) {
  CMat out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = toComplex(m.at(i, j));
  return out;
}

double sigmaMin(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues().tail(1)(0);
}

int numericalRank(const CMat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  double scale = svd.singularValues()(0);
  if (scale == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * scale) ++r;
  return r;
}

// Fixed pseudo-random but deterministic complex matrix, for compressions.
CMat deterministicMatrix(int rows, int cols, unsigned salt) {
  CMat m(rows, cols);
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (salt * 0x2545f4914f6cdd1dull);
  auto next = [&]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) / 9007199254740992.0 - 0.5;
  };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Cx(next(), next());
  return m;
}

}  // namespace

EigenvalueReport finiteEigenvalues(const LinearRelation& r, const FloatConfig& cfg,
                                   ArithmeticMode mode) {
  if (mode == ArithmeticMode::Exact)
    raise(ErrorKind::FloatModeRequired,
          "finite eigenvalues are a float-mode sweep; exact mode only checks "
          "membership at a supplied rational point");
  if (r.from != r.to)
    raise(ErrorKind::SpaceMismatch, "eigenvalues require a relation in a single space");

  EigenvalueReport out;
  out.infiniteEigenvalue = parts(r).mul.dim() > 0;

  const int n = r.from->dim;
  const int k = r.graphDim();
  if (k == 0) return out;

  CMat f = toEigen(r.graph.basis.rowSlice(0, n));
  CMat g = toEigen(r.graph.basis.rowSlice(n, n));

  if (k > n) {
    out.degeneratePencil = true;  // rank(g - z f) <= n < k for every z
    return out;
  }

  const double rankTol = 1e-9;
  const Cx probes[] = {{0.31, 0.77}, {-1.13, 0.41}, {0.97, -1.29}};
  int deficientProbes = 0;
  for (const Cx& z : probes)
    if (numericalRank(g - z * f, rankTol) < k) ++deficientProbes;
  if (deficientProbes == 3) {
    out.degeneratePencil = true;
    return out;
  }

  // Compress to a square pencil, solve by inversion at a regular shift, then
  // keep only candidates at which the original pencil truly drops rank.
  CMat p = deterministicMatrix(k, n, 7u);
  CMat a = p * g, b = p * f;
  const Cx shifts[] = {{0.5, 1.25}, {-0.75, 0.6}, {1.1, -0.9}, {0.0, 2.0}};
  for (const Cx& mu : shifts) {
    CMat base = a - mu * b;
    if (numericalRank(base, 1e-10) < k) continue;
    CMat c = base.partialPivLu().solve(b);
    Eigen::ComplexEigenSolver<CMat> es(c);
    std::vector<Cx> candidates;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      Cx w = es.eigenvalues()(i);
      if (std::abs(w) < 1e-12) continue;  // z at infinity
      candidates.push_back(mu + 1.0 / w);
    }
    for (const Cx& z : candidates) {
      CMat pen = g - z * f;
      double scale = std::max(1.0, pen.norm());
      if (sigmaMin(pen) > 1e-7 * scale) continue;
      bool dup = false;
      for (const Cx& seen : out.values)
        if (std::abs(seen - z) <= cfg.eps * std::max(1.0, std::abs(z))) dup = true;
      if (!dup) out.values.push_back(z);
    }
    return out;
  }
  out.degeneratePencil = true;  // no regular shift found
  return out;
}

int negativeIndexFloat(const KreinSpace& space, const FloatConfig& cfg) {
  CMat g = toEigen(space.gram);
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (g + g.adjoint()));
  int count = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < -cfg.eps) ++count;
  return count;
}

double smallestSingularValue(const Mat& m) { return sigmaMin(toEigen(m)); }

int negativeEigenvalueCount(const std::vector<std::complex<double>>& rowMajor, int n,
                            double eps) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rowMajor[static_cast<std::size_t>(i) * n + j];
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()));
  int count = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < -eps) ++count;
  return count;
}

double pencilScanMinimum(const LinearRelation& r) {
  if (r.from != r.to)
    raise(ErrorKind::SpaceMismatch, "pencil scan requires a relation in a single space");
  const int n = r.from->dim;
  const int k = r.graphDim();
  if (k == 0) return std::numeric_limits<double>::infinity();
  CMat f = toEigen(r.graph.basis.rowSlice(0, n));
  CMat g = toEigen(r.graph.basis.rowSlice(n, n));
  double best = std::numeric_limits<double>::infinity();
  for (double re = -3.0; re <= 3.0 + 1e-12; re += 0.25)
    for (double im = -3.0; im <= 3.0 + 1e-12; im += 0.25) {
      CMat pen = g - Cx(re, im) * f;
      double v = (k == n && pen.rows() == k) ? std::abs(CMat(pen).determinant())
                                             : sigmaMin(pen);
      best = std::min(best, v);
    }
  return best;
}

}  // namespace krel
