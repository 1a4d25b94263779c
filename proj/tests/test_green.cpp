#include <doctest.h>

#include "krel/errors.hpp"

#include "krel/generators.hpp"
#include "krel/green.hpp"

using namespace krel;

namespace {

Gq i() { return gqI(); }

/// Graph columns of the boundary map (f, f') -> (f, f') over Hilbert lines.
Mat identityGammaGraph() {
  return Mat::fromRows(
      {{Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(1), Gq(0)}, {Gq(0), Gq(1)}});
}

/// Boundary relation of the 1-dimensional ordinary model: (f, f') -> (f, f').
GreensBoundaryRelation identityGbr() {
  SpacePtr k = makeHilbert(1, "K");
  SpacePtr h = makeHilbert(1, "H");
  return buildGBR(k, h, identityGammaGraph());
}

GreensBoundaryRelation zeroGbr(int dimK, int dimH) {
  SpacePtr k = dimK == 0 ? makeSpace(Mat(0, 0), "K") : makeHilbert(dimK, "K");
  SpacePtr h = dimH == 0 ? makeSpace(Mat(0, 0), "H") : makeHilbert(dimH, "H");
  return buildGBR(k, h, Mat(2 * dimK + 2 * dimH, 0));
}

}  // namespace

TEST_CASE("Green identity certification") {
  // identity graph over Hilbert lines: [f',g] - [f,g'] = (h',k) - (h,k') with h=f, h'=f'
  CHECK_NOTHROW(identityGbr());
  CHECK_NOTHROW(zeroGbr(1, 1));

  // same identity graph, but the left line carries the negative form: the
  // sign mismatch must be rejected with a nonzero defect
  SpacePtr anti = makeLine(Rational(-1), "K");
  SpacePtr h = makeHilbert(1, "H");
  CHECK_THROWS_AS(buildGBR(anti, h, identityGammaGraph()), KrelError);
  try {
    buildGBR(anti, h, identityGammaGraph());
  } catch (const KrelError& e) {
    CHECK(e.kind() == ErrorKind::GreenIdentityViolation);
  }

  // the boundary-value space must be Hilbert
  CHECK_THROWS_AS(buildGBR(h, anti, Mat(4, 0)), KrelError);
}

TEST_CASE("boundary components") {
  GreensBoundaryRelation g = identityGbr();
  BoundaryComponents comp = components(g);
  // gamma0 (f, f') = f and gamma1 (f, f') = f'
  Mat g0 = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(1), Gq(0)}});
  Mat g1 = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  CHECK(comp.gamma0.graph == spanOf(3, g0));
  CHECK(comp.gamma1.graph == spanOf(3, g1));

  GreensBoundaryRelation z = zeroGbr(1, 1);
  BoundaryComponents zc = components(z);
  CHECK(zc.gamma0.graphDim() == 0);
  CHECK(zc.gamma1.graphDim() == 0);

  // ker gamma = ker gamma0 intersect ker gamma1
  Rng rng(404);
  for (int trial = 0; trial < 15; ++trial) {
    int dk = rng.uniformInt(1, 3);
    SpacePtr k = genKreinSpace(rng, dk, rng.uniformInt(0, dk));
    SpacePtr hh = genKreinSpace(rng, rng.uniformInt(1, 3), 0);
    GreensBoundaryRelation gg = genGBR(rng, k, hh, GbrKind::Any);
    BoundaryComponents cc = components(gg);
    CHECK(parts(gg.gamma).ker == intersect(parts(cc.gamma0).ker, parts(cc.gamma1).ker));
  }
}

TEST_CASE("derived objects of fixed boundary relations") {
  GreensBoundaryRelation g = identityGbr();
  DerivedObjects d = derivedObjects(g);
  CHECK(d.T.graph == fullSubspace(2));
  CHECK(d.S.graphDim() == 0);   // adjoint of the full relation
  CHECK(d.N.graphDim() == 0);   // the identity has a trivial kernel
  CHECK(d.M.graphDim() == 0);   // dom is the whole non-degenerate doubled space

  GreensBoundaryRelation z = zeroGbr(1, 1);
  DerivedObjects dz = derivedObjects(z);
  CHECK(dz.T.graphDim() == 0);
  CHECK(dz.S.graph == fullSubspace(2));  // adjoint of the zero relation
}

TEST_CASE("maximality conditions") {
  GreensBoundaryRelation g = identityGbr();
  MaximalityReport m = checkMaximality(g);
  CHECK(m.cond222);
  CHECK(m.cond223);
  CHECK(m.cond228);
  CHECK(m.domainIsAdjointOfS);

  // zero boundary relation over a nonzero space: the adjoint of the zero
  // domain is everything, which is not contained in the zero domain
  MaximalityReport mz = checkMaximality(zeroGbr(1, 1));
  CHECK_FALSE(mz.cond222);

  // dom = the span of (e1, 0) inside a 2-dimensional K: symmetric, not maximal
  SpacePtr k2 = makeHilbert(2, "K");
  SpacePtr h = makeHilbert(1, "H");
  Mat cols(6, 1);
  cols.at(0, 0) = Gq(1);
  GreensBoundaryRelation nonMax = buildGBR(k2, h, cols);
  CHECK(classifyRelation(derivedObjects(nonMax).T).symmetric.value());
  CHECK_FALSE(checkMaximality(nonMax).cond222);
}

TEST_CASE("boundary classification of the ordinary identity model") {
  BoundaryClass cls = classifyBoundary(identityGbr());
  CHECK(cls.greens);
  CHECK(cls.isometricBoundary);
  CHECK(cls.unitaryBoundary);
  CHECK(cls.ordinaryTriple);
  CHECK(cls.abGeneralized);
  CHECK(cls.bGeneralized);
  // ker gamma0 = {0} x C is multivalued, so the operator-kernel classes fail
  CHECK_FALSE(cls.quasiBoundary);
  CHECK_FALSE(cls.sGeneralized);
  CHECK_FALSE(cls.trivial);

  GreensBoundaryRelation g = identityGbr();
  BoundaryComponents comp = components(g);
  LinearRelation ker0 = relationFromGraph(g.K, g.K, parts(comp.gamma0).ker);
  RelationClass k0 = classifyRelation(ker0);
  CHECK(k0.selfAdjoint.value());
  CHECK_FALSE(k0.isOperator);
  LinearRelation ker1 = relationFromGraph(g.K, g.K, parts(comp.gamma1).ker);
  RelationClass k1 = classifyRelation(ker1);
  CHECK(k1.selfAdjoint.value());
  CHECK(k1.isOperator);
}

TEST_CASE("boundary classification edge cases") {
  // zero boundary relation over the zero space: everything degenerates
  BoundaryClass empty = classifyBoundary(zeroGbr(0, 1));
  CHECK(empty.greens);
  CHECK(empty.isometricBoundary);  // the maximality inclusion is vacuous in dim 0
  CHECK(empty.trivial);
  CHECK_FALSE(empty.unitaryBoundary);
  CHECK_FALSE(empty.ordinaryTriple);

  BoundaryClass z11 = classifyBoundary(zeroGbr(1, 1));
  CHECK(z11.greens);
  CHECK_FALSE(z11.isometricBoundary);
  CHECK(z11.trivial);
}

TEST_CASE("main transformation round trip and classification bridge") {
  GreensBoundaryRelation g = identityGbr();
  LinearRelation aTilde = mainTransformation(g);
  // the image of the ordinary identity model is ker x mul = the product of
  // the diagonal and the antidiagonal lines; self-adjoint in diag(1, 1)
  CHECK(classifyRelation(aTilde).selfAdjoint.value());
  GreensBoundaryRelation back = inverseMainTransformation(aTilde, g.K, g.H);
  CHECK(back.gamma.graph == g.gamma.graph);

  // a symmetric but not self-adjoint graph-side relation transforms to an
  // isometric, non-unitary boundary relation
  SpacePtr k = makeHilbert(1, "K");
  SpacePtr h = makeHilbert(1, "H");
  Rng rng(71);
  LinearRelation a1 = genSelfAdjointRelation(rng, k);
  LinearRelation a2 = genSymmetricRelation(rng, h, 0);
  GreensBoundaryRelation iso = inverseMainTransformation(directOrthogonalSum(a1, a2), k, h);
  BoundaryClass cls = classifyBoundary(iso);
  CHECK(cls.isometricBoundary);
  CHECK(cls.trivial);

  // non-symmetric input is rejected
  SpacePtr w = graphSideSpace(k, h);
  LinearRelation notSym = fullRelation(w, w);
  CHECK_THROWS_AS(inverseMainTransformation(notSym, k, h), KrelError);
}

TEST_CASE("coupled graph-side relation transforms to a non-trivial unitary model") {
  // Coupling the two coordinate roles of one plane defeats the trivial-form
  // conclusion that holds for genuinely disjoint components: the image below
  // is the graph of diag(1, -1), everywhere defined and injective.
  SpacePtr k = makeLine(Rational(-1), "K");
  SpacePtr h = makeLine(Rational(1), "H");
  SpacePtr w = graphSideSpace(k, h);
  Mat coupled = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  GreensBoundaryRelation g = inverseMainTransformation(relationFromColumns(w, w, coupled), k, h);
  BoundaryClass cls = classifyBoundary(g);
  CHECK(cls.unitaryBoundary);
  CHECK_FALSE(cls.trivial);
  Mat expected = Mat::fromRows(
      {{Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(1), Gq(0)}, {Gq(0), Gq(-1)}});
  CHECK(g.gamma.graph == spanOf(4, expected));

  // the same failure in Hilbert signature: a coupling self-adjoint relation
  // whose image is a standard unitary operator, not of product form
  SpacePtr k1 = makeHilbert(1, "K1");
  SpacePtr h1 = makeHilbert(1, "H1");
  SpacePtr w1 = graphSideSpace(k1, h1);
  Mat swapGraph = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}, {Gq(1), Gq(0)}});
  GreensBoundaryRelation gs = inverseMainTransformation(relationFromColumns(w1, w1, swapGraph),
                                                        k1, h1);
  BoundaryClass swapCls = classifyBoundary(gs);
  CHECK(swapCls.unitaryBoundary);
  CHECK_FALSE(swapCls.trivial);
  CHECK(parts(gs.gamma).dom == fullSubspace(2));
  CHECK(parts(gs.gamma).ker == zeroSubspace(2));
}

TEST_CASE("Weyl family of the ordinary identity model") {
  GreensBoundaryRelation g = identityGbr();
  for (const Gq& z : {i(), Gq(1) + i(), Gq(2) - Gq(3) * i()}) {
    WeylSample sample = weylFamily(g, z);
    CHECK(sample.isOperator);
    CHECK(sample.fullDomain);
    REQUIRE(sample.matrix);
    CHECK(sample.matrix->at(0, 0) == z);
  }

  WeylSample zero = weylFamily(zeroGbr(1, 1), i());
  CHECK(zero.family.graphDim() == 0);
  CHECK_FALSE(zero.fullDomain);
  CHECK_FALSE(zero.matrix.has_value());
}

TEST_CASE("Weyl symmetry across conjugation for unitary boundary relations") {
  Rng rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    int dim = rng.uniformInt(1, 2);
    SpacePtr k = genKreinSpace(rng, dim, rng.uniformInt(0, 1));
    SpacePtr h = genKreinSpace(rng, dim, 0);
    GreensBoundaryRelation g = genGBR(rng, k, h, GbrKind::Ordinary);
    Gq z = Gq(randomRational(rng, 3)) + i();
    WeylSample plus = weylFamily(g, z);
    WeylSample minus = weylFamily(g, z.conj());
    CHECK(adjoint(plus.family) == minus.family);
  }
}

TEST_CASE("minimality") {
  GreensBoundaryRelation g = identityGbr();
  MinimalityReport r = isMinimal(g, {i()});
  CHECK(r.minimal);
  CHECK(r.achievedSpanDim == 1);

  // defect vectors confined to the first coordinate: the identity model on
  // coordinate one, multiplication by 2 on coordinate two, so the defect
  // span never reaches the second coordinate
  SpacePtr k2 = makeHilbert(2, "K");
  SpacePtr h = makeHilbert(1, "H");
  Mat cols(6, 3);
  cols.at(0, 0) = Gq(1);
  cols.at(4, 0) = Gq(1);  // ((e1, 0), (1, 0))
  cols.at(2, 1) = Gq(1);
  cols.at(5, 1) = Gq(1);  // ((0, e1), (0, 1))
  cols.at(1, 2) = Gq(1);
  cols.at(3, 2) = Gq(2);  // ((e2, 2 e2), 0)
  GreensBoundaryRelation narrow = buildGBR(k2, h, cols);
  std::vector<Gq> grid = defaultRegularGrid(narrow);
  REQUIRE(!grid.empty());
  MinimalityReport narrowReport = isMinimal(narrow, grid);
  CHECK_FALSE(narrowReport.minimal);
  CHECK(narrowReport.achievedSpanDim == 1);

  // a grid consisting only of eigenvalues of S is rejected: for the zero
  // boundary relation S is the full relation, so no point is of regular type
  GreensBoundaryRelation z = zeroGbr(1, 1);
  CHECK_THROWS_AS(isMinimal(z, {i(), Gq(1) + i()}), KrelError);
}

TEST_CASE("Nevanlinna kernel counts") {
  GreensBoundaryRelation g = identityGbr();
  CHECK(nevanlinnaNegativeSquares(g, {i(), Gq(2) * i()}) == 0);
  // single block (M(i) - M(i)^H) / (i - conj i) = (i + i) / 2i = 1
  CHECK(nevanlinnaNegativeSquares(g, {i()}) == 0);
  CHECK_THROWS_AS(nevanlinnaNegativeSquares(g, {i()}, ArithmeticMode::Exact), KrelError);
  CHECK_THROWS_AS(nevanlinnaNegativeSquares(g, {Gq(1)}), KrelError);         // not upper
  CHECK_THROWS_AS(nevanlinnaNegativeSquares(g, {i(), i()}), KrelError);      // repeated
  CHECK_THROWS_AS(nevanlinnaNegativeSquares(zeroGbr(1, 1), {i()}), KrelError);  // no matrix
}

TEST_CASE("closure properties hold on generated boundary relations") {
  Rng rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    int dk = rng.uniformInt(1, 2);
    auto k = genKreinSpace(rng, dk, rng.uniformInt(0, dk));
    auto h = genKreinSpace(rng, k->dim, 0);
    GreensBoundaryRelation g = genGBR(rng, k, h, GbrKind::Ordinary);
    ClosureReport r = closureProperties(g);
    CHECK(r.closureIsGreens);
    CHECK(r.kernelClosedSymmetric);
    CHECK(r.maximalityPreserved);
    CHECK(r.associatedRelationStable);
    CHECK(r.isotropicPartInsideS);
  }
}

TEST_CASE("range density consequences") {
  GreensBoundaryRelation g = identityGbr();
  RangeDensityReport r = rangeDensityConsequences(g);
  CHECK(r.gamma0RangeIsImageOfKer1);
  CHECK(r.gamma0RangeFull);
  CHECK(r.gamma1RangeIsImageOfKer0);
  CHECK(r.gamma1RangeFull);
  CHECK(r.s0SelfAdjoint);
  CHECK(r.s1SelfAdjoint);
  CHECK(r.sIsKernelIntersection);
  CHECK(r.sAdjointIsComponentwiseSum);

  CHECK_THROWS_AS(rangeDensityConsequences(zeroGbr(1, 1)), KrelError);
}

TEST_CASE("minimality consequences") {
  GreensBoundaryRelation g = identityGbr();
  MinimalityConsequences m = minimalityConsequences(g, {i()});
  CHECK(m.sIsOperator);
  CHECK(m.noRationalEigenvalues);
  CHECK(m.pencilScanMin > 1e-6);

  CHECK_THROWS_AS(minimalityConsequences(zeroGbr(1, 1), {i()}), KrelError);
}

TEST_CASE("default regular grid removes eigenvalues of S") {
  // In the Minkowski plane the neutral vector f = (1, 1) supports the
  // one-dimensional symmetric S = span((f, i f)) with eigenvalue i. A
  // boundary map defined on all of S+ realizes it as the associated relation:
  // columns below satisfy the Green identity with S+ = span(b1, b2, b3).
  SpacePtr k = makeSpace(Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(-1)}}), "K");
  SpacePtr h = makeHilbert(1, "H");
  Mat cols = Mat::fromRows({{Gq(1), Gq(0), Gq(1)},
                            {Gq(1), Gq(0), Gq(0)},
                            {Gq(0), Gq(1), -i()},
                            {Gq(0), Gq(1), Gq(0)},
                            {Gq(0), Gq(0), Gq(1)},
                            {-i(), Gq(1), -i()}});
  GreensBoundaryRelation g = buildGBR(k, h, cols);
  DerivedObjects d = derivedObjects(g);
  Mat sGraph(4, 1);
  sGraph.at(0, 0) = Gq(1);
  sGraph.at(1, 0) = Gq(1);
  sGraph.at(2, 0) = i();
  sGraph.at(3, 0) = i();
  CHECK(d.S.graph == spanOf(4, sGraph));
  CHECK(hasEigenvalueAt(d.S, i()));
  std::vector<Gq> grid = defaultRegularGrid(g);
  CHECK(grid.size() == 5);  // i is excluded, the other candidates stay
  for (const Gq& z : grid) CHECK_FALSE(hasEigenvalueAt(d.S, z));
}
