#pragma once

#include <memory>
#include <optional>
#include <string>

#include "krel/linalg.hpp"
#include "krel/matrix.hpp"

namespace krel {

/// Exact orthogonal frame for an indefinite Gram matrix:
/// basis^H * gram * basis = diag(signs), signs in {+1, -1}.
/// Attached at generation time; arbitrary rational Grams need not admit one
/// (e.g. diag(3, -5) has no rational neutral vector at all).
struct UnitFrame {
  Mat basis;
  std::vector<int> signs;
};

/// Finite-dimensional Krein space: Hermitian invertible Gram matrix over the
/// Gaussian rationals. Hilbert case: positive-definite gram. Immutable; spaces
/// are compared by object identity where "the same space" matters.
struct KreinSpace {
  int dim = 0;
  Mat gram;
  std::string label;
  Inertia inertia;  // inertia.zero == 0 by the non-degeneracy invariant
  std::optional<UnitFrame> frame;
};

using SpacePtr = std::shared_ptr<const KreinSpace>;

SpacePtr makeSpace(Mat gram, std::string label = "",
                   std::optional<UnitFrame> frame = std::nullopt);

/// One-dimensional space with gram [g], g a nonzero real rational.
SpacePtr makeLine(const Rational& g, std::string label = "");

/// Hilbert space C^n with identity gram.
SpacePtr makeHilbert(int dim, std::string label = "");

/// [x, y] = y^H * gram * x; sesquilinear, conjugate-linear in the second slot.
Gq innerProduct(const KreinSpace& space, const std::vector<Gq>& x, const std::vector<Gq>& y);
Gq innerProduct(const SpacePtr& space, const std::vector<Gq>& x, const std::vector<Gq>& y);

int negativeIndex(const KreinSpace& space);
int positiveIndex(const KreinSpace& space);
inline int negativeIndex(const SpacePtr& s) { return negativeIndex(*s); }
inline int positiveIndex(const SpacePtr& s) { return positiveIndex(*s); }

/// The doubled space of pairs (f, f') with Gram [[0, -iG], [iG, 0]];
/// always of balanced signature (dim, dim).
SpacePtr doubledSpace(const SpacePtr& space);

/// Graph geometry space of X x Y with Gram diag(G_X, -G_Y).
SpacePtr productSpace(const SpacePtr& x, const SpacePtr& y);

/// K x H with Gram diag(G_K, G_H); H must be positive definite.
SpacePtr graphSideSpace(const SpacePtr& k, const SpacePtr& h);

/// Ambient for the direct orthogonal sum of two spaces: diag(G_1, G_2).
SpacePtr directSumSpace(const SpacePtr& a, const SpacePtr& b);

/// Attempts an exact unit frame by congruence diagonalization plus
/// two-rational-squares rescaling of the pivots. Returns nullopt when some
/// pivot is not a Gaussian-rational norm.
std::optional<UnitFrame> computeUnitFrame(const Mat& gram);

/// x^2 + y^2 = r for a positive rational r, when solvable over the rationals.
std::optional<std::pair<Rational, Rational>> sumOfTwoSquares(const Rational& r);

}  // namespace krel
