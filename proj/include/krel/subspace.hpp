#pragma once

#include "krel/space.hpp"

namespace krel {

/// Linear manifold in a finite-dimensional ambient space, held as the unique
/// reduced-column-echelon basis; equality of subspaces is entrywise equality
/// of bases. The zero subspace has an empty basis.
struct Subspace {
  int ambientDim = 0;
  Mat basis;  // ambientDim x k, canonical

  int dim() const { return basis.cols; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambientDim == b.ambientDim && a.basis == b.basis;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

/// Canonicalizes an arbitrary spanning set of columns.
Subspace spanOf(int ambientDim, const Mat& columns);
Subspace zeroSubspace(int ambientDim);
Subspace fullSubspace(int ambientDim);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// a contains b.
bool contains(const Subspace& a, const Subspace& b);

/// { y : [x, y] = 0 for all x in a } = null space of basis^H * gram.
Subspace orthogonalCompanion(const KreinSpace& space, const Subspace& a);
/// a intersected with its orthogonal companion; zero iff a is non-degenerate.
Subspace isotropicPart(const KreinSpace& space, const Subspace& a);

struct SubspaceClass {
  bool neutral = false;
  bool hyperMaximalNeutral = false;
  bool nonDegenerate = false;
};
SubspaceClass classifySubspace(const KreinSpace& space, const Subspace& a);

inline Subspace orthogonalCompanion(const SpacePtr& s, const Subspace& a) {
  return orthogonalCompanion(*s, a);
}
inline Subspace isotropicPart(const SpacePtr& s, const Subspace& a) {
  return isotropicPart(*s, a);
}
inline SubspaceClass classifySubspace(const SpacePtr& s, const Subspace& a) {
  return classifySubspace(*s, a);
}

}  // namespace krel
