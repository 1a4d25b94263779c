#include "krel/subspace.hpp"

#include "krel/errors.hpp"

namespace krel {

Subspace spanOf(int ambientDim, const Mat& columns) {
  if (columns.rows != ambientDim)
    raise(ErrorKind::DimensionMismatch, "spanning columns must have ambient height");
  return Subspace{ambientDim, columnEchelon(columns)};
}

Subspace zeroSubspace(int ambientDim) { return Subspace{ambientDim, Mat(ambientDim, 0)}; }

Subspace fullSubspace(int ambientDim) { return Subspace{ambientDim, Mat::identity(ambientDim)}; }

namespace {

void checkAmbient(const Subspace& a, const Subspace& b) {
  if (a.ambientDim != b.ambientDim)
    raise(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  checkAmbient(a, b);
  int ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return zeroSubspace(a.ambientDim);
  // a x - b y = 0; the intersection is a applied to the x-part of the kernel.
  Mat sys = hstack(a.basis, Gq(-1) * b.basis);
  Mat ker = kernelBasis(sys);
  Mat xPart = ker.rowSlice(0, ka);
  return spanOf(a.ambientDim, a.basis * xPart);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  checkAmbient(a, b);
  return spanOf(a.ambientDim, hstack(a.basis, b.basis));
}

bool contains(const Subspace& a, const Subspace& b) {
  checkAmbient(a, b);
  return rank(hstack(a.basis, b.basis)) == a.dim();
}

Subspace orthogonalCompanion(const KreinSpace& space, const Subspace& a) {
  if (a.ambientDim != space.dim)
    raise(ErrorKind::AmbientMismatch, "subspace does not live in the given space");
  Mat constraints = a.basis.conjugateTranspose() * space.gram;
  return Subspace{space.dim, kernelBasis(constraints)};
}

Subspace isotropicPart(const KreinSpace& space, const Subspace& a) {
  return intersect(a, orthogonalCompanion(space, a));
}

SubspaceClass classifySubspace(const KreinSpace& space, const Subspace& a) {
  Subspace companion = orthogonalCompanion(space, a);
  SubspaceClass out;
  out.neutral = contains(companion, a);
  out.hyperMaximalNeutral = (a == companion);
  out.nonDegenerate = intersect(a, companion).dim() == 0;
  return out;
}

}  // namespace krel
