#pragma once

#include <optional>

#include "krel/matrix.hpp"

namespace krel {

/// Reduced column echelon form of the column span of m: zero columns dropped,
/// pivot rows strictly increasing top-down, pivots normalized to 1 and alone
/// in their row. The result is the unique canonical basis of the span, so two
/// spans are equal iff their forms are entrywise equal.
Mat columnEchelon(const Mat& m);

int rank(const Mat& m);

/// Canonical basis of { x : m x = 0 }.
Mat kernelBasis(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// Exact determinant (fraction-free would be overkill here; plain elimination).
Gq determinant(const Mat& m);

/// Signature of a Hermitian matrix by exact congruence diagonalization
/// (Sylvester inertia). Requires isHermitian(g).
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia hermitianInertia(const Mat& g);

}  // namespace krel
