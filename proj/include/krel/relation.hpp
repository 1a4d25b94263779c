#pragma once

#include <optional>

#include "krel/subspace.hpp"

namespace krel {

/// Possibly multivalued, possibly non-densely-defined linear relation between
/// Krein spaces, stored as the canonical graph subspace of from (+) to.
struct LinearRelation {
  SpacePtr from;
  SpacePtr to;
  Subspace graph;  // ambient dim = from->dim + to->dim

  int graphDim() const { return graph.dim(); }
};

LinearRelation relationFromColumns(SpacePtr from, SpacePtr to, const Mat& columns);
LinearRelation relationFromGraph(SpacePtr from, SpacePtr to, Subspace graph);
/// Graph of the everywhere-defined operator given by matrix a: to->dim x from->dim.
LinearRelation operatorRelation(SpacePtr from, SpacePtr to, const Mat& a);
LinearRelation identityRelation(const SpacePtr& space);
LinearRelation zeroGraphRelation(SpacePtr from, SpacePtr to);  // the relation {0}
LinearRelation fullRelation(SpacePtr from, SpacePtr to);       // all of from x to

struct RelationParts {
  Subspace dom, ran, ker, mul;
};
RelationParts parts(const LinearRelation& r);

bool operator==(const LinearRelation& a, const LinearRelation& b);

LinearRelation inverse(const LinearRelation& r);
LinearRelation scaleRelation(const Gq& z, const LinearRelation& r);
/// { (f, g + k) : (f, g) in s, (f, k) in t }
LinearRelation operatorSum(const LinearRelation& s, const LinearRelation& t);
/// { (f + h, g + k) : (f, g) in s, (h, k) in t }; the graph sum.
LinearRelation componentwiseSum(const LinearRelation& s, const LinearRelation& t);
/// componentwiseSum restricted to graph-disjoint summands.
LinearRelation disjointSum(const LinearRelation& s, const LinearRelation& t);
/// { (f, k) : (f, g) in t, (g, k) in u }
LinearRelation compose(const LinearRelation& u, const LinearRelation& t);
/// Pairs of r whose first component lies in d.
LinearRelation restrictTo(const LinearRelation& r, const Subspace& d);
/// r - z, as operatorSum(r, scaleRelation(-z, identity)).
LinearRelation shiftBy(const LinearRelation& r, const Gq& z);

/// Adjoint by the definitional solve of [f, h]_X = [g, k]_Y over the graph.
LinearRelation adjointDefinitional(const LinearRelation& r);
/// Adjoint as the inverted orthogonal companion of the graph in X x Y.
LinearRelation adjointViaCompanion(const LinearRelation& r);
/// Both routes, which must agree exactly; returns the common value (maps Y->X).
LinearRelation adjoint(const LinearRelation& r);

struct RelationClass {
  bool isOperator = false;
  bool isometric = false;
  bool unitary = false;
  bool neutralInProduct = false;
  bool hyperMaximalInProduct = false;
  std::optional<bool> symmetric;   // only for endorelations
  std::optional<bool> selfAdjoint; // only for endorelations
};
/// Each flag is computed both from the graph geometry and from its
/// definitional form; disagreement raises, as it would mean a broken kernel.
RelationClass classifyRelation(const LinearRelation& r);

/// ker(r - z); exact for rational z. Requires from == to.
Subspace defectSubspace(const LinearRelation& r, const Gq& z);
bool hasEigenvalueAt(const LinearRelation& r, const Gq& z);
/// ker(r - z) = {0}; the inverse is then automatically a single-valued
/// everywhere-bounded operator in finite dimension.
bool isPointOfRegularType(const LinearRelation& r, const Gq& z);
/// Point of regular type with full range of r - z.
bool isRegularPoint(const LinearRelation& r, const Gq& z);

/// Direct orthogonal sum of endorelations living in distinct spaces; the
/// result lives in the block-diagonal sum space.
LinearRelation directOrthogonalSum(const LinearRelation& a1, const LinearRelation& a2);

}  // namespace krel
