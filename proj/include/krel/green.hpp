#pragma once

#include "krel/relation.hpp"
#include "krel/spectral.hpp"

namespace krel {

/// Standard caveat attached to classification reports.
const std::string& finiteDimNote();

/// Relation from the doubled space of K to the doubled space of H whose graph
/// satisfies the abstract Green identity on every basis pair, certified at
/// construction. H is a Hilbert space.
struct GreensBoundaryRelation {
  SpacePtr K, H;
  SpacePtr K2, H2;  // cached doubled spaces; object identity is meaningful
  LinearRelation gamma;
};

GreensBoundaryRelation buildGBR(const SpacePtr& k, const SpacePtr& h, const Mat& graphColumns);

/// Component maps: gamma0 (f, f') -> h and gamma1 (f, f') -> h'.
struct BoundaryComponents {
  LinearRelation gamma0;
  LinearRelation gamma1;
};
BoundaryComponents components(const GreensBoundaryRelation& g);

/// All derived relations live in the base space K (or H for the tilded ones).
struct DerivedObjects {
  LinearRelation T;       // dom gamma, as a relation in K
  LinearRelation S;       // adjoint(T)
  LinearRelation M;       // isotropic part of dom gamma
  LinearRelation N;       // ker gamma
  LinearRelation ranRel;  // ran gamma, as a relation in H
  LinearRelation Stilde;  // adjoint(ranRel)
  LinearRelation Mtilde;  // isotropic part of ran gamma
  LinearRelation Ntilde;  // mul gamma
};
DerivedObjects derivedObjects(const GreensBoundaryRelation& g);

struct MaximalityReport {
  bool cond222 = false;  // adjoint of the domain inside the (closed) domain
  bool cond223 = false;  // the same inclusion without the closure; equal here
  bool cond228 = false;  // orthogonal-companion restatement, computed independently
  bool domainIsAdjointOfS = false;  // S+ = dom gamma, verified when cond222 holds
  std::string note;
};
MaximalityReport checkMaximality(const GreensBoundaryRelation& g);

struct BoundaryClass {
  bool greens = true;
  bool isometricBoundary = false;
  bool unitaryBoundary = false;
  bool ordinaryTriple = false;
  bool abGeneralized = false;
  bool bGeneralized = false;
  bool quasiBoundary = false;
  bool sGeneralized = false;
  bool trivial = false;
  std::string note;
};
BoundaryClass classifyBoundary(const GreensBoundaryRelation& g);

/// Coordinate shuffle (f, f', h, h') -> ((f, h), (f', -h')): an involution
/// exchanging boundary relations with relations in K x H.
LinearRelation mainTransformation(const GreensBoundaryRelation& g);
/// Inverse direction; requires aTilde symmetric in the graph-side space so
/// the image satisfies the Green identity.
GreensBoundaryRelation inverseMainTransformation(const LinearRelation& aTilde,
                                                 const SpacePtr& k, const SpacePtr& h);

struct WeylSample {
  Gq z;
  LinearRelation family;  // value at z, a relation in H
  bool isOperator = false;
  bool fullDomain = false;
  std::optional<Mat> matrix;  // present iff operator-valued with full domain
};
WeylSample weylFamily(const GreensBoundaryRelation& g, const Gq& z);

struct MinimalityReport {
  bool minimal = false;
  int achievedSpanDim = 0;
  std::vector<Gq> regularPointsUsed;
};
/// Defect subspaces of T over the sample points of regular type of S must
/// span K. Points that fail the regular-type requirement are dropped; if none
/// remain the set is useless and EmptyRegularSet is raised.
MinimalityReport isMinimal(const GreensBoundaryRelation& g, const std::vector<Gq>& samplePoints);
/// {i, -i, 2i, -2i, 1+i, -1+i} minus detected eigenvalues of S.
std::vector<Gq> defaultRegularGrid(const GreensBoundaryRelation& g);

/// Negative eigenvalues of the block kernel ((M(zi) - M(zj)^H) / (zi - conj zj));
/// the Weyl values must be in matrix form and the points distinct in the open
/// upper half-plane. Float-only; the sign threshold is pinned at 1e-8.
int nevanlinnaNegativeSquares(const GreensBoundaryRelation& g, const std::vector<Gq>& points,
                              ArithmeticMode mode = ArithmeticMode::Float);

struct ClosureReport {
  bool closureIsGreens = false;
  bool kernelClosedSymmetric = false;
  bool maximalityPreserved = false;
  bool associatedRelationStable = false;
  bool isotropicPartInsideS = false;
  std::string note;
};
ClosureReport closureProperties(const GreensBoundaryRelation& g);

struct RangeDensityReport {
  bool gamma0RangeIsImageOfKer1 = false;
  bool gamma0RangeFull = false;
  bool gamma1RangeIsImageOfKer0 = false;
  bool gamma1RangeFull = false;
  bool s0SelfAdjoint = false;
  bool s1SelfAdjoint = false;
  bool sIsKernelIntersection = false;
  bool sAdjointIsComponentwiseSum = false;
  std::string note;
};
/// Requires ran gamma full and the maximality condition.
RangeDensityReport rangeDensityConsequences(const GreensBoundaryRelation& g);

struct MinimalityConsequences {
  bool sIsOperator = false;
  bool noRationalEigenvalues = false;
  double pencilScanMin = 0.0;  // above 1e-6 certifies an empty float scan
  std::string note;
};
/// Requires the maximality condition and minimality over the supplied grid.
MinimalityConsequences minimalityConsequences(const GreensBoundaryRelation& g,
                                              const std::vector<Gq>& grid);

}  // namespace krel
