#pragma once

#include <json.hpp>

#include "krel/green.hpp"

namespace krel {

using Json = nlohmann::ordered_json;

Json matrixRowMajor(const Mat& m);
Mat matrixFromRowMajor(const Json& j);
/// Relation graphs travel as arrays of columns.
Json matrixColumns(const Mat& m);
Mat matrixFromColumns(const Json& j, int expectedRows);

Json spaceToJson(const KreinSpace& s);
inline Json spaceToJson(const SpacePtr& s) { return spaceToJson(*s); }
SpacePtr spaceFromJson(const Json& j);

Json subspaceToJson(const SpacePtr& space, const Subspace& s);
Json relationToJson(const LinearRelation& r);
/// Structurally equal endpoint documents deserialize to one shared space, so
/// endorelation classifications stay available.
LinearRelation relationFromJson(const Json& j);
Json gbrToJson(const GreensBoundaryRelation& g);
GreensBoundaryRelation gbrFromJson(const Json& j);

/// {"kind": ..., "schemaVersion": 1, "payload": ...}
Json instanceDocument(const std::string& kind, Json payload);
struct InstanceDocument {
  std::string kind;
  Json payload;
};
InstanceDocument parseInstanceDocument(const Json& j);

Json relationClassToJson(const RelationClass& c);
Json boundaryClassToJson(const BoundaryClass& c);
Json maximalityToJson(const MaximalityReport& r);
Json partsToJson(const LinearRelation& r);
Json derivedObjectsToJson(const DerivedObjects& d);
Json weylSampleToJson(const WeylSample& w);

/// Full classification report for a relation or boundary-relation document.
Json classifyRelationReport(const LinearRelation& r);
Json classifyBoundaryReport(const GreensBoundaryRelation& g);

Json parseJsonText(const std::string& text);

}  // namespace krel
