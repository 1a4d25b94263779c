#pragma once

#include <complex>
#include <vector>

#include "krel/relation.hpp"

namespace krel {

/// Arithmetic selection for the operations that have a float-only route.
enum class ArithmeticMode { Exact, Float };

struct FloatConfig {
  double eps = 1e-9;  // comparison tolerance for float-mode decisions
};

struct EigenvalueReport {
  /// Pencil singular for every z: a continuum of eigenvalues. A reported
  /// outcome, not an error; multivalued and low-rank relations produce it.
  bool degeneratePencil = false;
  /// mul(r) != {0}, decided exactly.
  bool infiniteEigenvalue = false;
  std::vector<std::complex<double>> values;  // deduplicated within eps
};

/// All finite z with ker(r - z) != {0}, via the pencil of the graph blocks.
EigenvalueReport finiteEigenvalues(const LinearRelation& r, const FloatConfig& cfg,
                                   ArithmeticMode mode = ArithmeticMode::Float);

/// Eigenvalue-sign route for the negative index; agrees with the exact one.
int negativeIndexFloat(const KreinSpace& space, const FloatConfig& cfg);

/// Smallest singular value of the gram, for the float-mode invertibility check.
double smallestSingularValue(const Mat& m);

/// Negative eigenvalues (below -eps) of a Hermitian matrix given row-major.
int negativeEigenvalueCount(const std::vector<std::complex<double>>& rowMajor, int n,
                            double eps);

/// min over a fixed complex scan box of |det(G - zF)| (square pencil) or the
/// smallest singular value (rectangular); +inf for the empty graph.
double pencilScanMinimum(const LinearRelation& r);

}  // namespace krel
