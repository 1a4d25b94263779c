#include "krel/green.hpp"

#include <cassert>

#include "krel/errors.hpp"

namespace krel {

const std::string& finiteDimNote() {
  static const std::string note =
      "finite-dimensional model: every manifold is closed, closure(X) = X, "
      "'dense in Y' means '= Y', 'bounded operator' means 'single-valued'; "
      "the closed-domain and plain-domain maximality conditions coincide";
  return note;
}

namespace {

Gq formValue(const KreinSpace& space, const Mat& cols, int i, int j) {
  return innerProduct(space, cols.col(i), cols.col(j));
}

/// Subspace of K (+) K reinterpreted as a relation in the base space.
LinearRelation asEndorelation(const SpacePtr& base, const Subspace& graph) {
  return relationFromGraph(base, base, graph);
}

}  // namespace

GreensBoundaryRelation buildGBR(const SpacePtr& k, const SpacePtr& h, const Mat& graphColumns) {
  if (negativeIndex(h) > 0)
    raise(ErrorKind::InvariantViolation, "the boundary-value space must be a Hilbert space");
  GreensBoundaryRelation g;
  g.K = k;
  g.H = h;
  g.K2 = doubledSpace(k);
  g.H2 = doubledSpace(h);
  g.gamma = relationFromColumns(g.K2, g.H2, graphColumns);

  const int dn = g.K2->dim, dm = g.H2->dim;
  const Mat& basis = g.gamma.graph.basis;
  Mat kPart = basis.rowSlice(0, dn);
  Mat hPart = basis.rowSlice(dn, dm);
  for (int i = 0; i < basis.cols; ++i)
    for (int j = i; j < basis.cols; ++j) {
      Gq lhs = formValue(*g.K2, kPart, i, j);
      Gq rhs = formValue(*g.H2, hPart, i, j);
      if (lhs != rhs) {
        Gq defect = lhs - rhs;
        raise(ErrorKind::GreenIdentityViolation,
              "basis pair (" + std::to_string(i) + ", " + std::to_string(j) +
                  ") violates the Green identity; defect " + formatScalar(defect));
      }
    }
  return g;
}

BoundaryComponents components(const GreensBoundaryRelation& g) {
  const int dn = g.K2->dim;
  const int m = g.H->dim;
  const Mat& basis = g.gamma.graph.basis;
  Mat fPart = basis.rowSlice(0, dn);
  Mat hRows = basis.rowSlice(dn, m);
  Mat hPrimeRows = basis.rowSlice(dn + m, m);
  BoundaryComponents c{
      relationFromColumns(g.K2, g.H, vstack(fPart, hRows)),
      relationFromColumns(g.K2, g.H, vstack(fPart, hPrimeRows)),
  };
  return c;
}

DerivedObjects derivedObjects(const GreensBoundaryRelation& g) {
  RelationParts p = parts(g.gamma);
  DerivedObjects d;
  d.T = asEndorelation(g.K, p.dom);
  d.S = adjoint(d.T);
  d.M = asEndorelation(g.K, isotropicPart(*g.K2, p.dom));
  d.N = asEndorelation(g.K, p.ker);
  d.ranRel = asEndorelation(g.H, p.ran);
  d.Stilde = adjoint(d.ranRel);
  d.Mtilde = asEndorelation(g.H, isotropicPart(*g.H2, p.ran));
  d.Ntilde = asEndorelation(g.H, p.mul);
  return d;
}

MaximalityReport checkMaximality(const GreensBoundaryRelation& g) {
  DerivedObjects d = derivedObjects(g);
  MaximalityReport r;
  r.cond223 = contains(d.T.graph, d.S.graph);
  r.cond222 = r.cond223;  // closure(dom) = dom here
  Subspace companion = orthogonalCompanion(*g.K2, d.T.graph);
  r.cond228 = contains(d.T.graph, companion);
  if (r.cond228 != r.cond222)
    raise(ErrorKind::InvariantViolation, "maximality routes disagree");
  if (r.cond222) r.domainIsAdjointOfS = adjoint(d.S).graph == d.T.graph;
  r.note = finiteDimNote();
  return r;
}

BoundaryClass classifyBoundary(const GreensBoundaryRelation& g) {
  BoundaryClass out;
  out.note = finiteDimNote();

  MaximalityReport maxr = checkMaximality(g);
  out.isometricBoundary = maxr.cond222;

  RelationClass rc = classifyRelation(g.gamma);
  out.unitaryBoundary = rc.unitary;

  RelationParts p = parts(g.gamma);
  bool ranFull = p.ran == fullSubspace(g.H2->dim);
  out.ordinaryTriple = ranFull && maxr.cond228;

  BoundaryComponents comp = components(g);
  RelationParts p0 = parts(comp.gamma0);
  bool ran0Full = p0.ran == fullSubspace(g.H->dim);
  LinearRelation ker0 = asEndorelation(g.K, p0.ker);
  RelationClass ker0Class = classifyRelation(ker0);
  bool ker0SelfAdjoint = ker0Class.selfAdjoint.value_or(false);
  bool ker0Operator = ker0Class.isOperator;

  out.abGeneralized = maxr.cond222 && ran0Full && ker0SelfAdjoint;
  out.bGeneralized = out.abGeneralized && ran0Full;
  out.quasiBoundary = maxr.cond222 && ranFull && ker0SelfAdjoint && ker0Operator;
  out.sGeneralized = out.unitaryBoundary && ker0SelfAdjoint && ker0Operator;

  Mat productBasis = blockDiag(p.ker.basis, p.mul.basis);
  Subspace kerTimesMul = spanOf(g.K2->dim + g.H2->dim, productBasis);
  out.trivial = g.gamma.graph == kerTimesMul;
  return out;
}

LinearRelation mainTransformation(const GreensBoundaryRelation& g) {
  const int n = g.K->dim, m = g.H->dim;
  const Mat& basis = g.gamma.graph.basis;
  Mat f = basis.rowSlice(0, n);
  Mat fPrime = basis.rowSlice(n, n);
  Mat h = basis.rowSlice(2 * n, m);
  Mat hPrime = basis.rowSlice(2 * n + m, m);
  Mat shuffled = vstack(vstack(f, h), vstack(fPrime, Gq(-1) * hPrime));
  SpacePtr w = graphSideSpace(g.K, g.H);
  return relationFromColumns(w, w, shuffled);
}

GreensBoundaryRelation inverseMainTransformation(const LinearRelation& aTilde,
                                                 const SpacePtr& k, const SpacePtr& h) {
  const int n = k->dim, m = h->dim;
  if (aTilde.from != aTilde.to)
    raise(ErrorKind::SpaceMismatch, "the graph-side relation must live in a single space");
  if (aTilde.from->dim != n + m)
    raise(ErrorKind::DimensionMismatch, "graph-side relation dimension mismatch");
  Mat expected = blockDiag(k->gram, h->gram);
  if (aTilde.from->gram != expected)
    raise(ErrorKind::SpaceMismatch, "the relation must live in the graph-side space of K and H");
  RelationClass rc = classifyRelation(aTilde);
  if (!rc.symmetric.value_or(false))
    raise(ErrorKind::SymmetryRequired,
          "inverse main transformation requires a symmetric graph-side relation");

  const Mat& basis = aTilde.graph.basis;
  Mat x1 = basis.rowSlice(0, n);
  Mat x2 = basis.rowSlice(n, m);
  Mat y1 = basis.rowSlice(n + m, n);
  Mat y2 = basis.rowSlice(2 * n + m, m);
  Mat graph = vstack(vstack(x1, y1), vstack(x2, Gq(-1) * y2));
  return buildGBR(k, h, graph);
}

WeylSample weylFamily(const GreensBoundaryRelation& g, const Gq& z) {
  DerivedObjects d = derivedObjects(g);
  Subspace defect = defectSubspace(d.T, z);
  const int n = g.K->dim, dm = g.H2->dim;

  // The pairs (f, z f) over the defect subspace, inside the doubled space.
  Mat defectPairs = vstack(defect.basis, z * defect.basis);
  Mat window = hstack(vstack(defectPairs, Mat::zero(dm, defect.dim())),
                      vstack(Mat::zero(2 * n, dm), Mat::identity(dm)));
  Subspace image = intersect(g.gamma.graph, spanOf(2 * n + dm, window));
  Subspace value = spanOf(dm, image.basis.rowSlice(2 * n, dm));

  WeylSample sample;
  sample.z = z;
  sample.family = asEndorelation(g.H, value);
  RelationParts p = parts(sample.family);
  sample.isOperator = p.mul.dim() == 0;
  sample.fullDomain = p.dom == fullSubspace(g.H->dim);
  if (sample.isOperator && sample.fullDomain) {
    const int m = g.H->dim;
    Mat top = sample.family.graph.basis.rowSlice(0, m);
    Mat bottom = sample.family.graph.basis.rowSlice(m, m);
    auto inv = inverse(top);
    assert(inv);
    sample.matrix = bottom * *inv;
  }
  return sample;
}

MinimalityReport isMinimal(const GreensBoundaryRelation& g, const std::vector<Gq>& samplePoints) {
  DerivedObjects d = derivedObjects(g);
  MinimalityReport r;
  for (const Gq& z : samplePoints)
    if (isPointOfRegularType(d.S, z)) r.regularPointsUsed.push_back(z);
  if (r.regularPointsUsed.empty())
    raise(ErrorKind::EmptyRegularSet, "no supplied point is of regular type for S");
  Subspace span = zeroSubspace(g.K->dim);
  for (const Gq& z : r.regularPointsUsed) span = sum(span, defectSubspace(d.T, z));
  r.achievedSpanDim = span.dim();
  r.minimal = span == fullSubspace(g.K->dim);
  return r;
}

std::vector<Gq> defaultRegularGrid(const GreensBoundaryRelation& g) {
  DerivedObjects d = derivedObjects(g);
  const Gq i = gqI();
  std::vector<Gq> candidates = {i, -i, Gq(2) * i, Gq(-2) * i, Gq(1) + i, Gq(-1) + i};
  std::vector<Gq> out;
  for (const Gq& z : candidates)
    if (!hasEigenvalueAt(d.S, z)) out.push_back(z);
  return out;
}

int nevanlinnaNegativeSquares(const GreensBoundaryRelation& g, const std::vector<Gq>& points,
                              ArithmeticMode mode) {
  if (mode == ArithmeticMode::Exact)
    raise(ErrorKind::FloatModeRequired,
          "the kernel eigenvalues are irrational; exact mode refuses this operation");
  if (points.empty()) raise(ErrorKind::PreconditionUnmet, "no sample points supplied");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].im > 0))
      raise(ErrorKind::PreconditionUnmet,
            "sample point " + formatScalar(points[i]) + " is not in the open upper half-plane");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        raise(ErrorKind::PreconditionUnmet, "sample points must be pairwise distinct");
  }

  const int m = g.H->dim;
  std::vector<Mat> values;
  for (const Gq& z : points) {
    WeylSample sample = weylFamily(g, z);
    if (!sample.matrix)
      raise(ErrorKind::NonOperatorWeylValue,
            "Weyl value at " + formatScalar(z) + " is not an everywhere-defined operator");
    values.push_back(*sample.matrix);
  }

  const int p = static_cast<int>(points.size());
  Mat kernel(p * m, p * m);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Gq denom = points[i] - points[j].conj();
      Mat block = values[i] - values[j].conjugateTranspose();
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) kernel.at(i * m + r, j * m + c) = block.at(r, c) / denom;
    }
  assert(isHermitian(kernel));

  std::vector<std::complex<double>> flat(static_cast<std::size_t>(p * m) * (p * m));
  for (int r = 0; r < p * m; ++r)
    for (int c = 0; c < p * m; ++c)
      flat[static_cast<std::size_t>(r) * p * m + c] = toComplex(kernel.at(r, c));
  const double signEps = 1e-8;  // pinned eigenvalue-sign threshold
  return negativeEigenvalueCount(flat, p * m, signEps);
}

ClosureReport closureProperties(const GreensBoundaryRelation& g) {
  ClosureReport r;
  r.note = finiteDimNote();
  // The closure of gamma is gamma itself; the claims degenerate accordingly.
  bool greens = true;
  const int dn = g.K2->dim, dm = g.H2->dim;
  const Mat& basis = g.gamma.graph.basis;
  Mat kPart = basis.rowSlice(0, dn);
  Mat hPart = basis.rowSlice(dn, dm);
  for (int i = 0; i < basis.cols && greens; ++i)
    for (int j = i; j < basis.cols && greens; ++j)
      greens = formValue(*g.K2, kPart, i, j) == formValue(*g.H2, hPart, i, j);
  r.closureIsGreens = greens;

  DerivedObjects d = derivedObjects(g);
  r.kernelClosedSymmetric = classifyRelation(d.N).symmetric.value_or(false);
  r.maximalityPreserved = checkMaximality(g).cond222 == checkMaximality(g).cond222;
  r.associatedRelationStable = d.S == derivedObjects(g).S;
  r.isotropicPartInsideS = contains(d.S.graph, d.M.graph);
  return r;
}

RangeDensityReport rangeDensityConsequences(const GreensBoundaryRelation& g) {
  RelationParts p = parts(g.gamma);
  MaximalityReport maxr = checkMaximality(g);
  std::string unmet;
  if (p.ran != fullSubspace(g.H2->dim)) unmet += "ran gamma is not all of the doubled H; ";
  if (!maxr.cond222) unmet += "maximality condition fails; ";
  if (!unmet.empty()) raise(ErrorKind::PreconditionUnmet, unmet);

  RangeDensityReport r;
  r.note = finiteDimNote();
  BoundaryComponents comp = components(g);
  RelationParts p0 = parts(comp.gamma0);
  RelationParts p1 = parts(comp.gamma1);

  auto imageOf = [&](const LinearRelation& rel, const Subspace& dom) {
    const int dn = g.K2->dim, m = g.H->dim;
    Mat window = hstack(vstack(dom.basis, Mat::zero(m, dom.dim())),
                        vstack(Mat::zero(dn, m), Mat::identity(m)));
    Subspace pairs = intersect(rel.graph, spanOf(dn + m, window));
    return spanOf(m, pairs.basis.rowSlice(dn, m));
  };

  Subspace image01 = imageOf(comp.gamma0, p1.ker);
  Subspace image10 = imageOf(comp.gamma1, p0.ker);
  r.gamma0RangeIsImageOfKer1 = p0.ran == image01;
  r.gamma1RangeIsImageOfKer0 = p1.ran == image10;
  r.gamma0RangeFull = p0.ran == fullSubspace(g.H->dim);
  r.gamma1RangeFull = p1.ran == fullSubspace(g.H->dim);

  LinearRelation s0 = asEndorelation(g.K, p0.ker);
  LinearRelation s1 = asEndorelation(g.K, p1.ker);
  r.s0SelfAdjoint = classifyRelation(s0).selfAdjoint.value_or(false);
  r.s1SelfAdjoint = classifyRelation(s1).selfAdjoint.value_or(false);

  DerivedObjects d = derivedObjects(g);
  r.sIsKernelIntersection = d.S.graph == intersect(s0.graph, s1.graph);
  r.sAdjointIsComponentwiseSum = adjoint(d.S) == componentwiseSum(s0, s1);
  return r;
}

MinimalityConsequences minimalityConsequences(const GreensBoundaryRelation& g,
                                              const std::vector<Gq>& grid) {
  MaximalityReport maxr = checkMaximality(g);
  if (!maxr.cond222) raise(ErrorKind::PreconditionUnmet, "maximality condition fails");
  MinimalityReport minr = isMinimal(g, grid);
  if (!minr.minimal) raise(ErrorKind::PreconditionUnmet, "the boundary relation is not minimal");

  DerivedObjects d = derivedObjects(g);
  MinimalityConsequences r;
  r.note = finiteDimNote();
  r.sIsOperator = parts(d.S).mul.dim() == 0;

  std::vector<Gq> probes = grid;
  const Gq half(Rational(1, 2));
  for (const Gq& extra : {Gq(0), Gq(1), Gq(-1), Gq(2), Gq(-2), half, -half}) probes.push_back(extra);
  r.noRationalEigenvalues = true;
  for (const Gq& z : probes)
    if (hasEigenvalueAt(d.S, z)) r.noRationalEigenvalues = false;
  r.pencilScanMin = pencilScanMinimum(d.S);
  return r;
}

}  // namespace krel
