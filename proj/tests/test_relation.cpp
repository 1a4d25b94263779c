#include <doctest.h>

#include "krel/errors.hpp"

#include "krel/generators.hpp"
#include "krel/spectral.hpp"

using namespace krel;

namespace {

Gq i() { return gqI(); }

/// dim dom + dim mul = dim graph = dim ran + dim ker
void checkPartDimensions(const LinearRelation& r) {
  RelationParts p = parts(r);
  CHECK(p.dom.dim() + p.mul.dim() == r.graphDim());
  CHECK(p.ran.dim() + p.ker.dim() == r.graphDim());
}

}  // namespace

TEST_CASE("parts of fixed relations") {
  SpacePtr h2 = makeHilbert(2);
  LinearRelation id = identityRelation(h2);
  RelationParts p = parts(id);
  CHECK(p.dom == fullSubspace(2));
  CHECK(p.ran == fullSubspace(2));
  CHECK(p.ker == zeroSubspace(2));
  CHECK(p.mul == zeroSubspace(2));

  // T with empty domain and one-dimensional multivalued part
  Mat cols = Mat::fromRows({{Gq(0)}, {Gq(0)}, {Gq(1)}, {Gq(2)}});
  LinearRelation tInf = relationFromColumns(h2, h2, cols);
  RelationParts pInf = parts(tInf);
  CHECK(pInf.dom == zeroSubspace(2));
  CHECK(pInf.mul == spanOf(2, Mat::fromRows({{Gq(1)}, {Gq(2)}})));

  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    SpacePtr x = genKreinSpace(rng, rng.uniformInt(1, 6), 0);
    SpacePtr y = genKreinSpace(rng, rng.uniformInt(1, 6), 0);
    checkPartDimensions(genRelation(rng, x, y, 5));
  }
}

TEST_CASE("relation algebra basics") {
  SpacePtr h2 = makeHilbert(2);
  Rng rng(55);
  LinearRelation r = genRelation(rng, h2, h2, 5);
  CHECK(inverse(inverse(r)) == r);
  CHECK(compose(identityRelation(h2), r) == r);
  CHECK(compose(r, identityRelation(h2)) == r);
  CHECK(componentwiseSum(r, r) == r);
  // the zero graph absorbs the domain, leaving {0} x mul(r)
  LinearRelation absorbed = operatorSum(zeroGraphRelation(h2, h2), r);
  CHECK(parts(absorbed).dom == zeroSubspace(2));
  CHECK(parts(absorbed).mul == parts(r).mul);

  // scaling scales the range side only
  Mat a = Mat::fromRows({{Gq(2), Gq(0)}, {Gq(0), Gq(3)}});
  LinearRelation diag = operatorRelation(h2, h2, a);
  LinearRelation scaled = scaleRelation(Gq(2), diag);
  CHECK(scaled == operatorRelation(h2, h2, Gq(2) * a));

  // operator sum of two everywhere-defined operators adds the matrices
  Mat b = Mat::fromRows({{Gq(0), Gq(1)}, {Gq(1), Gq(0)}});
  CHECK(operatorSum(operatorRelation(h2, h2, a), operatorRelation(h2, h2, b)) ==
        operatorRelation(h2, h2, a + b));

  // shift is the derived form R - z * identity
  LinearRelation shifted = shiftBy(diag, Gq(2));
  CHECK(shifted == operatorRelation(h2, h2, a - Gq(2) * Mat::identity(2)));

  CHECK_THROWS_AS(disjointSum(diag, diag), KrelError);
  LinearRelation vertical = relationFromColumns(
      h2, h2, Mat::fromRows({{Gq(0)}, {Gq(0)}, {Gq(1)}, {Gq(0)}}));
  CHECK(disjointSum(zeroGraphRelation(h2, h2), vertical) == vertical);

  Subspace axis = spanOf(2, Mat::fromRows({{Gq(1)}, {Gq(0)}}));
  LinearRelation restricted = restrictTo(diag, axis);
  CHECK(parts(restricted).dom == axis);
  CHECK(restricted.graphDim() == 1);
}

TEST_CASE("adjoint fixed values and routes") {
  SpacePtr h2 = makeHilbert(2);
  CHECK(adjoint(identityRelation(h2)) == identityRelation(h2));

  // the full graph over the anti-Hilbert line has the zero adjoint
  SpacePtr anti = makeLine(Rational(-1));
  LinearRelation full = fullRelation(anti, anti);
  LinearRelation adj = adjoint(full);
  CHECK(adj.graphDim() == 0);
  CHECK_FALSE(classifyRelation(full).symmetric.value());

  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int dx = rng.uniformInt(1, 6), dy = rng.uniformInt(1, 6);
    SpacePtr x = genKreinSpace(rng, dx, rng.uniformInt(0, dx));
    SpacePtr y = genKreinSpace(rng, dy, rng.uniformInt(0, dy));
    LinearRelation r = genRelation(rng, x, y, 5);
    LinearRelation byDef = adjointDefinitional(r);
    LinearRelation byCompanion = adjointViaCompanion(r);
    CHECK(byDef == byCompanion);
    CHECK(adjoint(adjoint(r)) == r);
    CHECK(orthogonalCompanion(x, parts(r).dom) == parts(byDef).mul);
    CHECK(parts(byDef).ker == orthogonalCompanion(y, parts(r).ran));
  }
}

TEST_CASE("classification of fixed relations") {
  SpacePtr hilbertLine = makeHilbert(1, "X");
  SpacePtr hilbertLine2 = makeHilbert(1, "Y");
  LinearRelation idAcross = operatorRelation(hilbertLine, hilbertLine2, Mat::identity(1));
  RelationClass c = classifyRelation(idAcross);
  CHECK(c.isometric);
  CHECK(c.unitary);
  CHECK_FALSE(c.symmetric.has_value());  // different endpoint spaces

  // unitary scalar of modulus one with exact rational coordinates
  Mat phase(1, 1);
  phase.at(0, 0) = Gq(Rational(3, 5), Rational(4, 5));
  RelationClass cPhase = classifyRelation(operatorRelation(hilbertLine, hilbertLine2, phase));
  CHECK(cPhase.unitary);

  // the coupled diagonal relation in graph coordinates over gram diag(-1, 1)
  SpacePtr w = graphSideSpace(makeLine(Rational(-1)), makeLine(Rational(1)));
  Mat coupled = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  RelationClass cCoupled = classifyRelation(relationFromColumns(w, w, coupled));
  CHECK(cCoupled.selfAdjoint.value());
  CHECK(cCoupled.symmetric.value());
}

TEST_CASE("exact eigenvalue membership and defect subspaces") {
  SpacePtr h2 = makeHilbert(2);
  LinearRelation id = identityRelation(h2);
  CHECK(hasEigenvalueAt(id, Gq(1)));
  CHECK(defectSubspace(id, Gq(1)) == fullSubspace(2));
  CHECK(isRegularPoint(id, Gq(0)));
  CHECK_FALSE(isPointOfRegularType(id, Gq(1)));

  LinearRelation zero = operatorRelation(h2, h2, Mat::zero(2, 2));
  CHECK(isRegularPoint(zero, i()));
  CHECK(defectSubspace(zero, i()) == zeroSubspace(2));
  CHECK(hasEigenvalueAt(zero, Gq(0)));

  // defect via the derived shift agrees with the pencil kernel
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    int ds = rng.uniformInt(1, 4);
    SpacePtr s = genKreinSpace(rng, ds, rng.uniformInt(0, ds));
    LinearRelation r = genRelation(rng, s, s, 4);
    Gq z = randomScalar(rng, 3);
    CHECK(defectSubspace(r, z) == parts(shiftBy(r, z)).ker);
  }
}

TEST_CASE("float pencil eigenvalues") {
  SpacePtr h2 = makeHilbert(2);
  FloatConfig fc;

  EigenvalueReport idReport = finiteEigenvalues(identityRelation(h2), fc);
  REQUIRE(idReport.values.size() == 1);
  CHECK(std::abs(idReport.values[0] - std::complex<double>(1, 0)) < 1e-7);
  CHECK_FALSE(idReport.degeneratePencil);
  CHECK_FALSE(idReport.infiniteEigenvalue);

  Mat d23 = Mat::fromRows({{Gq(2), Gq(0)}, {Gq(0), Gq(3)}});
  EigenvalueReport dReport = finiteEigenvalues(operatorRelation(h2, h2, d23), fc);
  REQUIRE(dReport.values.size() == 2);
  double lo = std::min(dReport.values[0].real(), dReport.values[1].real());
  double hi = std::max(dReport.values[0].real(), dReport.values[1].real());
  CHECK(std::abs(lo - 2.0) < 1e-7);
  CHECK(std::abs(hi - 3.0) < 1e-7);

  CHECK(finiteEigenvalues(fullRelation(h2, h2), fc).degeneratePencil);
  CHECK(finiteEigenvalues(relationFromColumns(
                              h2, h2, Mat::fromRows({{Gq(0)}, {Gq(0)}, {Gq(1)}, {Gq(0)}})),
                          fc)
            .infiniteEigenvalue);
  CHECK_THROWS_AS(finiteEigenvalues(identityRelation(h2), fc, ArithmeticMode::Exact), KrelError);

  // eigenvalues of self-adjoint relations in a Hilbert space are real; the
  // dense real-axis scan of the pencil minimum is the oracle
  SpacePtr h3 = makeHilbert(3);
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    LinearRelation sa = genSelfAdjointRelation(rng, h3);
    EigenvalueReport rep = finiteEigenvalues(sa, fc);
    CHECK_FALSE(rep.degeneratePencil);
    for (const auto& z : rep.values) CHECK(std::abs(z.imag()) < 1e-6);
  }
}

TEST_CASE("direct orthogonal sum") {
  SpacePtr k1 = makeHilbert(1, "K1");
  SpacePtr k2 = makeHilbert(1, "K2");
  LinearRelation sum = directOrthogonalSum(identityRelation(k1), identityRelation(k2));
  CHECK(sum.from->dim == 2);
  CHECK(classifyRelation(sum).selfAdjoint.value());
  CHECK_THROWS_AS(directOrthogonalSum(identityRelation(k1), identityRelation(k1)), KrelError);

  Rng rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    int da = rng.uniformInt(1, 3), db = rng.uniformInt(1, 3);
    SpacePtr a = genKreinSpace(rng, da, rng.uniformInt(0, da));
    SpacePtr b = genKreinSpace(rng, db, rng.uniformInt(0, db));
    LinearRelation a1 = genSymmetricRelation(rng, a, rng.uniformInt(0, a->dim));
    LinearRelation a2 = genSymmetricRelation(rng, b, rng.uniformInt(0, b->dim));
    CHECK(classifyRelation(directOrthogonalSum(a1, a2)).symmetric.value());
  }
}

TEST_CASE("isometry correspondence on generated instances") {
  Rng rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = rng.uniformInt(1, 3);
    int kappa = rng.uniformInt(0, dim);
    SpacePtr x = genKreinSpace(rng, dim, kappa);
    SpacePtr y = genKreinSpace(rng, dim, kappa);
    SpacePtr prod = productSpace(x, y);
    int cap = std::min(positiveIndex(prod), negativeIndex(prod));
    LinearRelation iso = genIsometricRelation(rng, x, y, rng.uniformInt(0, cap));
    RelationClass ci = classifyRelation(iso);
    CHECK(ci.isometric);
    CHECK(ci.neutralInProduct);
    LinearRelation uni = genUnitaryRelation(rng, x, y);
    RelationClass cu = classifyRelation(uni);
    CHECK(cu.unitary);
    CHECK(cu.hyperMaximalInProduct);
  }
}
