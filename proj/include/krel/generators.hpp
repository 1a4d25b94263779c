#pragma once

#include <cstdint>

#include "krel/green.hpp"

namespace krel {

/// SplitMix64 stream; deterministic across platforms, cheap to split so that
/// per-trial streams are independent of execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on [lo, hi] inclusive.
  int uniformInt(int lo, int hi);
  bool coin() { return uniformInt(0, 1) == 1; }
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int maxDim = 6;
  std::optional<int> kappa;
  int entryBound = 8;
  int trials = 500;
};

Rational randomRational(Rng& rng, int bound);
Gq randomScalar(Rng& rng, int bound);
Mat randomMatrix(Rng& rng, int rows, int cols, int bound);

/// Gram = P^H diag(+1 x (dim-kappa), -1 x kappa) P for random invertible P;
/// the inverse of P is attached as the unit frame.
SpacePtr genKreinSpace(Rng& rng, int dim, int kappa);

Subspace genSubspace(Rng& rng, int ambientDim, int k, int bound);

/// Unitary r x r matrix with exact Gaussian-rational entries, built from
/// Pythagorean rotations and unit phases.
Mat randomRationalUnitary(Rng& rng, int r);
/// W with W^H diag(signs) W = diag(signs): rotations within one sign,
/// Pythagorean boosts across opposite signs, unit phases.
Mat randomIndefiniteUnitary(Rng& rng, const std::vector<int>& signs);

/// Graph of a random unitary map between a maximal positive and a maximal
/// negative definite subspace (k = dim/2), or a k-dimensional slice of one.
Subspace genNeutral(Rng& rng, const SpacePtr& space, int k);
Subspace genHyperMaximalNeutral(Rng& rng, const SpacePtr& space);

LinearRelation genRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y, int bound);
LinearRelation genSymmetricRelation(Rng& rng, const SpacePtr& k, int graphDim);
LinearRelation genSelfAdjointRelation(Rng& rng, const SpacePtr& k);
LinearRelation genIsometricRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y, int k);
LinearRelation genUnitaryRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y);

enum class GbrKind { Any, IsometricBoundary, UnitaryBoundary, Ordinary, Surjective };
GbrKind parseGbrKind(const std::string& name);

/// Generation retries up to a fixed budget and re-classifies the result; a
/// kind that cannot be realized raises GenerationExhausted.
GreensBoundaryRelation genGBR(Rng& rng, const SpacePtr& k, const SpacePtr& h, GbrKind kind);

}  // namespace krel
