#include "krel/json_io.hpp"

#include "krel/errors.hpp"

namespace krel {

namespace {

Gq scalarFromJson(const Json& j) {
  if (!j.is_string()) raise(ErrorKind::Parse, "scalar entries must be strings");
  return parseScalar(j.get<std::string>());
}

[[noreturn]] void badDoc(const std::string& what) { raise(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) badDoc(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json parseJsonText(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) badDoc("malformed JSON");
  return j;
}

Json matrixRowMajor(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(formatScalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrixFromRowMajor(const Json& j) {
  if (!j.is_array()) badDoc("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) badDoc("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalarFromJson(row.at(c));
  }
  return m;
}

Json matrixColumns(const Mat& m) {
  Json cols = Json::array();
  for (int j = 0; j < m.cols; ++j) {
    Json col = Json::array();
    for (int i = 0; i < m.rows; ++i) col.push_back(formatScalar(m.at(i, j)));
    cols.push_back(std::move(col));
  }
  return cols;
}

Mat matrixFromColumns(const Json& j, int expectedRows) {
  if (!j.is_array()) badDoc("graph must be an array of columns");
  int cols = static_cast<int>(j.size());
  Mat m(expectedRows, cols);
  for (int c = 0; c < cols; ++c) {
    const Json& col = j.at(c);
    if (!col.is_array() || static_cast<int>(col.size()) != expectedRows)
      badDoc("graph column has the wrong height");
    for (int i = 0; i < expectedRows; ++i) m.at(i, c) = scalarFromJson(col.at(i));
  }
  return m;
}

Json spaceToJson(const KreinSpace& s) {
  Json j;
  j["dim"] = s.dim;
  j["gram"] = matrixRowMajor(s.gram);
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

SpacePtr spaceFromJson(const Json& j) {
  int dim = field(j, "dim").get<int>();
  Mat gram = matrixFromRowMajor(field(j, "gram"));
  if (gram.rows != dim || gram.cols != dim) badDoc("gram shape does not match dim");
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
  auto frame = computeUnitFrame(gram);
  return makeSpace(std::move(gram), std::move(label), std::move(frame));
}

Json subspaceToJson(const SpacePtr& space, const Subspace& s) {
  Json j;
  j["space"] = spaceToJson(space);
  j["basis"] = matrixRowMajor(s.basis);
  return j;
}

Json relationToJson(const LinearRelation& r) {
  Json j;
  j["from"] = spaceToJson(r.from);
  j["to"] = spaceToJson(r.to);
  j["graph"] = matrixColumns(r.graph.basis);
  return j;
}

LinearRelation relationFromJson(const Json& j) {
  Json fromDoc = field(j, "from");
  Json toDoc = field(j, "to");
  SpacePtr from = spaceFromJson(fromDoc);
  SpacePtr to = fromDoc == toDoc ? from : spaceFromJson(toDoc);
  Mat graph = matrixFromColumns(field(j, "graph"), from->dim + to->dim);
  return relationFromColumns(from, to, graph);
}

Json gbrToJson(const GreensBoundaryRelation& g) {
  Json j;
  j["K"] = spaceToJson(g.K);
  j["H"] = spaceToJson(g.H);
  j["graph"] = matrixColumns(g.gamma.graph.basis);
  return j;
}

GreensBoundaryRelation gbrFromJson(const Json& j) {
  SpacePtr k = spaceFromJson(field(j, "K"));
  SpacePtr h = spaceFromJson(field(j, "H"));
  Mat graph = matrixFromColumns(field(j, "graph"), 2 * k->dim + 2 * h->dim);
  return buildGBR(k, h, graph);
}

Json instanceDocument(const std::string& kind, Json payload) {
  Json j;
  j["kind"] = kind;
  j["schemaVersion"] = 1;
  j["payload"] = std::move(payload);
  return j;
}

InstanceDocument parseInstanceDocument(const Json& j) {
  InstanceDocument doc;
  doc.kind = field(j, "kind").get<std::string>();
  if (field(j, "schemaVersion").get<int>() != 1) badDoc("unsupported schemaVersion");
  static const char* kinds[] = {"space", "subspace", "relation", "gbr", "counterexample"};
  bool known = false;
  for (const char* k : kinds) known = known || doc.kind == k;
  if (!known) badDoc("unknown document kind '" + doc.kind + "'");
  doc.payload = field(j, "payload");
  return doc;
}

Json relationClassToJson(const RelationClass& c) {
  Json j;
  j["operator"] = c.isOperator;
  j["isometric"] = c.isometric;
  j["unitary"] = c.unitary;
  j["neutralInProduct"] = c.neutralInProduct;
  j["hyperMaximalInProduct"] = c.hyperMaximalInProduct;
  j["symmetric"] = c.symmetric ? Json(*c.symmetric) : Json(nullptr);
  j["selfAdjoint"] = c.selfAdjoint ? Json(*c.selfAdjoint) : Json(nullptr);
  return j;
}

Json boundaryClassToJson(const BoundaryClass& c) {
  Json j;
  j["greens"] = c.greens;
  j["isometricBoundary"] = c.isometricBoundary;
  j["unitaryBoundary"] = c.unitaryBoundary;
  j["ordinaryTriple"] = c.ordinaryTriple;
  j["abGeneralized"] = c.abGeneralized;
  j["bGeneralized"] = c.bGeneralized;
  j["quasiBoundary"] = c.quasiBoundary;
  j["sGeneralized"] = c.sGeneralized;
  j["trivial"] = c.trivial;
  j["note"] = c.note;
  return j;
}

Json maximalityToJson(const MaximalityReport& r) {
  Json j;
  j["cond222"] = r.cond222;
  j["cond223"] = r.cond223;
  j["cond228"] = r.cond228;
  j["domainIsAdjointOfS"] = r.domainIsAdjointOfS;
  j["note"] = r.note;
  return j;
}

Json partsToJson(const LinearRelation& r) {
  RelationParts p = parts(r);
  Json j;
  j["dom"] = matrixRowMajor(p.dom.basis);
  j["ran"] = matrixRowMajor(p.ran.basis);
  j["ker"] = matrixRowMajor(p.ker.basis);
  j["mul"] = matrixRowMajor(p.mul.basis);
  return j;
}

Json derivedObjectsToJson(const DerivedObjects& d) {
  Json j;
  j["T"] = matrixRowMajor(d.T.graph.basis);
  j["S"] = matrixRowMajor(d.S.graph.basis);
  j["M"] = matrixRowMajor(d.M.graph.basis);
  j["N"] = matrixRowMajor(d.N.graph.basis);
  j["Stilde"] = matrixRowMajor(d.Stilde.graph.basis);
  j["Mtilde"] = matrixRowMajor(d.Mtilde.graph.basis);
  j["Ntilde"] = matrixRowMajor(d.Ntilde.graph.basis);
  return j;
}

Json weylSampleToJson(const WeylSample& w) {
  Json j;
  j["z"] = formatScalar(w.z);
  j["isOperator"] = w.isOperator;
  j["fullDomain"] = w.fullDomain;
  j["family"] = matrixColumns(w.family.graph.basis);
  j["matrix"] = w.matrix ? matrixRowMajor(*w.matrix) : Json(nullptr);
  return j;
}

Json classifyRelationReport(const LinearRelation& r) {
  Json j;
  j["kind"] = "relation";
  j["flags"] = relationClassToJson(classifyRelation(r));
  j["parts"] = partsToJson(r);
  j["note"] = finiteDimNote();
  return j;
}

Json classifyBoundaryReport(const GreensBoundaryRelation& g) {
  Json j;
  j["kind"] = "gbr";
  j["flags"] = boundaryClassToJson(classifyBoundary(g));
  j["maximality"] = maximalityToJson(checkMaximality(g));
  j["derived"] = derivedObjectsToJson(derivedObjects(g));
  j["note"] = finiteDimNote();
  return j;
}

}  // namespace krel
