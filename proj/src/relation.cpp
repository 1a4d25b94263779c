#include "krel/relation.hpp"

#include "krel/errors.hpp"

namespace krel {

namespace {

void requireEndorelation(const LinearRelation& r, const char* what) {
  if (r.from != r.to)
    raise(ErrorKind::SpaceMismatch, std::string(what) + " requires a relation in a single space");
}

void requireSameSpaces(const LinearRelation& a, const LinearRelation& b, const char* what) {
  if (a.from != b.from || a.to != b.to)
    raise(ErrorKind::SpaceMismatch, std::string(what) + " requires relations between the same spaces");
}

Mat topBlock(const LinearRelation& r) { return r.graph.basis.rowSlice(0, r.from->dim); }
Mat bottomBlock(const LinearRelation& r) { return r.graph.basis.rowSlice(r.from->dim, r.to->dim); }

}  // namespace

LinearRelation relationFromColumns(SpacePtr from, SpacePtr to, const Mat& columns) {
  int ambient = from->dim + to->dim;
  return LinearRelation{std::move(from), std::move(to), spanOf(ambient, columns)};
}

LinearRelation relationFromGraph(SpacePtr from, SpacePtr to, Subspace graph) {
  if (graph.ambientDim != from->dim + to->dim)
    raise(ErrorKind::DimensionMismatch, "graph ambient does not match from (+) to");
  return LinearRelation{std::move(from), std::move(to), std::move(graph)};
}

LinearRelation operatorRelation(SpacePtr from, SpacePtr to, const Mat& a) {
  if (a.rows != to->dim || a.cols != from->dim)
    raise(ErrorKind::DimensionMismatch, "operator matrix shape");
  Mat cols = vstack(Mat::identity(from->dim), a);
  return relationFromColumns(std::move(from), std::move(to), cols);
}

LinearRelation identityRelation(const SpacePtr& space) {
  return operatorRelation(space, space, Mat::identity(space->dim));
}

LinearRelation zeroGraphRelation(SpacePtr from, SpacePtr to) {
  int ambient = from->dim + to->dim;
  return LinearRelation{std::move(from), std::move(to), zeroSubspace(ambient)};
}

LinearRelation fullRelation(SpacePtr from, SpacePtr to) {
  int ambient = from->dim + to->dim;
  return LinearRelation{std::move(from), std::move(to), fullSubspace(ambient)};
}

bool operator==(const LinearRelation& a, const LinearRelation& b) {
  return a.from == b.from && a.to == b.to && a.graph == b.graph;
}

RelationParts parts(const LinearRelation& r) {
  const int n = r.from->dim, m = r.to->dim;
  RelationParts p;
  p.dom = spanOf(n, topBlock(r));
  p.ran = spanOf(m, bottomBlock(r));
  Mat xAxis = vstack(Mat::identity(n), Mat::zero(m, n));
  Subspace kerPairs = intersect(r.graph, Subspace{n + m, columnEchelon(xAxis)});
  p.ker = spanOf(n, kerPairs.basis.rowSlice(0, n));
  Mat yAxis = vstack(Mat::zero(n, m), Mat::identity(m));
  Subspace mulPairs = intersect(r.graph, Subspace{n + m, columnEchelon(yAxis)});
  p.mul = spanOf(m, mulPairs.basis.rowSlice(n, m));
  return p;
}

LinearRelation inverse(const LinearRelation& r) {
  Mat swapped = vstack(bottomBlock(r), topBlock(r));
  return relationFromColumns(r.to, r.from, swapped);
}

LinearRelation scaleRelation(const Gq& z, const LinearRelation& r) {
  Mat cols = vstack(topBlock(r), z * bottomBlock(r));
  return relationFromColumns(r.from, r.to, cols);
}

LinearRelation operatorSum(const LinearRelation& s, const LinearRelation& t) {
  requireSameSpaces(s, t, "operator sum");
  const int n = s.from->dim, m = s.to->dim;
  // Triples (f, g, k) with (f, g) in s and (f, k) in t.
  int ks = s.graphDim(), kt = t.graphDim();
  Mat e1 = vstack(vstack(topBlock(s), bottomBlock(s)), Mat::zero(m, ks));
  e1 = hstack(e1, vstack(Mat::zero(n + m, m), Mat::identity(m)));
  Mat e2 = vstack(vstack(topBlock(t), Mat::zero(m, kt)), bottomBlock(t));
  e2 = hstack(e2, vstack(vstack(Mat::zero(n, m), Mat::identity(m)), Mat::zero(m, m)));
  Subspace triples = intersect(spanOf(n + 2 * m, e1), spanOf(n + 2 * m, e2));
  Mat f = triples.basis.rowSlice(0, n);
  Mat gk = triples.basis.rowSlice(n, m) + triples.basis.rowSlice(n + m, m);
  return relationFromColumns(s.from, s.to, vstack(f, gk));
}

LinearRelation componentwiseSum(const LinearRelation& s, const LinearRelation& t) {
  requireSameSpaces(s, t, "componentwise sum");
  return relationFromGraph(s.from, s.to, sum(s.graph, t.graph));
}

LinearRelation disjointSum(const LinearRelation& s, const LinearRelation& t) {
  requireSameSpaces(s, t, "disjoint sum");
  if (intersect(s.graph, t.graph).dim() != 0)
    raise(ErrorKind::DisjointnessRequired, "summands have a nonzero common pair");
  return componentwiseSum(s, t);
}

LinearRelation compose(const LinearRelation& u, const LinearRelation& t) {
  if (t.to != u.from)
    raise(ErrorKind::SpaceMismatch, "composition requires the inner spaces to coincide");
  const int n = t.from->dim, m = t.to->dim, w = u.to->dim;
  int kt = t.graphDim(), ku = u.graphDim();
  // Triples (f, g, k) with (f, g) in t and (g, k) in u.
  Mat e1 = vstack(vstack(topBlock(t), bottomBlock(t)), Mat::zero(w, kt));
  e1 = hstack(e1, vstack(Mat::zero(n + m, w), Mat::identity(w)));
  Mat e2 = vstack(vstack(Mat::zero(n, ku), topBlock(u)), bottomBlock(u));
  e2 = hstack(e2, vstack(Mat::identity(n), Mat::zero(m + w, n)));
  Subspace triples = intersect(spanOf(n + m + w, e1), spanOf(n + m + w, e2));
  Mat f = triples.basis.rowSlice(0, n);
  Mat k = triples.basis.rowSlice(n + m, w);
  return relationFromColumns(t.from, u.to, vstack(f, k));
}

LinearRelation restrictTo(const LinearRelation& r, const Subspace& d) {
  const int n = r.from->dim, m = r.to->dim;
  if (d.ambientDim != n) raise(ErrorKind::AmbientMismatch, "restriction domain ambient");
  Mat window = hstack(vstack(d.basis, Mat::zero(m, d.dim())),
                      vstack(Mat::zero(n, m), Mat::identity(m)));
  Subspace g = intersect(r.graph, spanOf(n + m, window));
  return relationFromGraph(r.from, r.to, g);
}

LinearRelation shiftBy(const LinearRelation& r, const Gq& z) {
  requireEndorelation(r, "shift");
  return operatorSum(r, scaleRelation(-z, identityRelation(r.from)));
}

LinearRelation adjointDefinitional(const LinearRelation& r) {
  const int n = r.from->dim, m = r.to->dim;
  // (k, h) is adjoint-paired iff (G_X f_j)^H h - (G_Y g_j)^H k = 0 per column.
  Mat gxF = r.from->gram * topBlock(r);
  Mat gyG = r.to->gram * bottomBlock(r);
  Mat system = hstack(Gq(-1) * gyG.conjugateTranspose(), gxF.conjugateTranspose());
  Mat ker = kernelBasis(system);  // stacked (k; h) in Y (+) X
  return relationFromColumns(r.to, r.from, ker);
}

LinearRelation adjointViaCompanion(const LinearRelation& r) {
  SpacePtr p = productSpace(r.from, r.to);
  Subspace companion = orthogonalCompanion(*p, r.graph);
  Mat swapped = vstack(companion.basis.rowSlice(r.from->dim, r.to->dim),
                       companion.basis.rowSlice(0, r.from->dim));
  return relationFromColumns(r.to, r.from, swapped);
}

LinearRelation adjoint(const LinearRelation& r) {
  LinearRelation byDef = adjointDefinitional(r);
  LinearRelation byCompanion = adjointViaCompanion(r);
  if (byDef.graph != byCompanion.graph)
    raise(ErrorKind::InvariantViolation, "adjoint routes disagree");
  return byDef;
}

RelationClass classifyRelation(const LinearRelation& r) {
  RelationClass out;
  RelationParts p = parts(r);
  out.isOperator = p.mul.dim() == 0;

  LinearRelation adj = adjoint(r);
  LinearRelation inv = inverse(r);
  bool defIsometric = contains(adj.graph, inv.graph);
  bool defUnitary = adj.graph == inv.graph;

  SpacePtr prod = productSpace(r.from, r.to);
  SubspaceClass geo = classifySubspace(*prod, r.graph);
  out.neutralInProduct = geo.neutral;
  out.hyperMaximalInProduct = geo.hyperMaximalNeutral;
  if (defIsometric != geo.neutral || defUnitary != geo.hyperMaximalNeutral)
    raise(ErrorKind::InvariantViolation, "isometry routes disagree");
  out.isometric = defIsometric;
  out.unitary = defUnitary;

  if (r.from == r.to) {
    bool defSymmetric = contains(adj.graph, r.graph);
    bool defSelfAdjoint = adj.graph == r.graph;
    SpacePtr doubled = doubledSpace(r.from);
    SubspaceClass geo2 = classifySubspace(*doubled, r.graph);
    if (defSymmetric != geo2.neutral || defSelfAdjoint != geo2.hyperMaximalNeutral)
      raise(ErrorKind::InvariantViolation, "symmetry routes disagree");
    out.symmetric = defSymmetric;
    out.selfAdjoint = defSelfAdjoint;
  }
  return out;
}

Subspace defectSubspace(const LinearRelation& r, const Gq& z) {
  requireEndorelation(r, "defect subspace");
  Mat pencil = bottomBlock(r) - z * topBlock(r);
  Mat ker = kernelBasis(pencil);
  return spanOf(r.from->dim, topBlock(r) * ker);
}

bool hasEigenvalueAt(const LinearRelation& r, const Gq& z) {
  return defectSubspace(r, z).dim() > 0;
}

bool isPointOfRegularType(const LinearRelation& r, const Gq& z) {
  return defectSubspace(r, z).dim() == 0;
}

bool isRegularPoint(const LinearRelation& r, const Gq& z) {
  if (!isPointOfRegularType(r, z)) return false;
  Mat shifted = bottomBlock(r) - z * topBlock(r);
  return rank(shifted) == r.from->dim;
}

LinearRelation directOrthogonalSum(const LinearRelation& a1, const LinearRelation& a2) {
  requireEndorelation(a1, "direct orthogonal sum");
  requireEndorelation(a2, "direct orthogonal sum");
  if (a1.from == a2.from)
    raise(ErrorKind::SpaceMismatch,
          "direct orthogonal sum requires distinct component spaces");
  SpacePtr amb = directSumSpace(a1.from, a2.from);
  const int n1 = a1.from->dim, n2 = a2.from->dim;
  int k1 = a1.graphDim(), k2 = a2.graphDim();
  Mat c1 = vstack(vstack(topBlock(a1), Mat::zero(n2, k1)),
                  vstack(bottomBlock(a1), Mat::zero(n2, k1)));
  Mat c2 = vstack(vstack(Mat::zero(n1, k2), topBlock(a2)),
                  vstack(Mat::zero(n1, k2), bottomBlock(a2)));
  return relationFromColumns(amb, amb, hstack(c1, c2));
}

}  // namespace krel
