#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krel/errors.hpp"
#include "krel/suites.hpp"

namespace py = pybind11;

namespace {

using krel::Json;

std::string classifyDocument(const std::string& text) {
  krel::InstanceDocument doc = krel::parseInstanceDocument(krel::parseJsonText(text));
  if (doc.kind == "relation")
    return krel::classifyRelationReport(krel::relationFromJson(doc.payload)).dump();
  if (doc.kind == "gbr")
    return krel::classifyBoundaryReport(krel::gbrFromJson(doc.payload)).dump();
  krel::raise(krel::ErrorKind::Parse, "classify expects a relation or gbr document");
}

std::string adjointDocument(const std::string& text) {
  krel::InstanceDocument doc = krel::parseInstanceDocument(krel::parseJsonText(text));
  if (doc.kind != "relation")
    krel::raise(krel::ErrorKind::Parse, "adjoint expects a relation document");
  krel::LinearRelation adj = krel::adjoint(krel::relationFromJson(doc.payload));
  return krel::instanceDocument("relation", krel::relationToJson(adj)).dump();
}

std::string weylSamples(const std::string& text, const std::vector<std::string>& zs) {
  krel::InstanceDocument doc = krel::parseInstanceDocument(krel::parseJsonText(text));
  if (doc.kind != "gbr") krel::raise(krel::ErrorKind::Parse, "weyl expects a gbr document");
  krel::GreensBoundaryRelation g = krel::gbrFromJson(doc.payload);
  Json out = Json::array();
  for (const std::string& z : zs)
    out.push_back(krel::weylSampleToJson(krel::weylFamily(g, krel::parseScalar(z))));
  return out.dump();
}

std::string runSuiteJson(const std::string& suite, std::uint64_t seed, int trials, int maxDim,
                         int entryBound) {
  krel::GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.maxDim = maxDim;
  cfg.entryBound = entryBound;
  return krel::reportToJson(krel::runSuite(suite, cfg)).dump();
}

std::string replayJson(const std::string& text) {
  return krel::reportToJson(krel::replayCounterexample(krel::parseJsonText(text))).dump();
}

krel::Mat matFromStrings(const std::vector<std::vector<std::string>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  krel::Mat m(r, c);
  for (int x = 0; x < r; ++x) {
    if (static_cast<int>(rows[x].size()) != c)
      krel::raise(krel::ErrorKind::Parse, "ragged matrix");
    for (int y = 0; y < c; ++y) m.at(x, y) = krel::parseScalar(rows[x][y]);
  }
  return m;
}

int negativeIndexOf(const std::vector<std::vector<std::string>>& gram) {
  return krel::negativeIndex(krel::makeSpace(matFromStrings(gram)));
}

std::string innerProductOf(const std::vector<std::vector<std::string>>& gram,
                           const std::vector<std::string>& x, const std::vector<std::string>& y) {
  krel::SpacePtr s = krel::makeSpace(matFromStrings(gram));
  std::vector<krel::Gq> vx, vy;
  for (const auto& e : x) vx.push_back(krel::parseScalar(e));
  for (const auto& e : y) vy.push_back(krel::parseScalar(e));
  return krel::formatScalar(krel::innerProduct(s, vx, vy));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact calculus of linear relations between finite-dimensional Krein spaces";

  py::register_exception<krel::KrelError>(m, "KrelError");

  m.def("classify_document", &classifyDocument, py::arg("document"),
        "Classification report (JSON) for a relation or gbr instance document.");
  m.def("adjoint_document", &adjointDocument, py::arg("document"),
        "Adjoint of a relation instance document, as a relation document.");
  m.def("weyl_samples", &weylSamples, py::arg("document"), py::arg("points"),
        "Weyl family samples of a gbr document at rational-complex points.");
  m.def("run_suite", &runSuiteJson, py::arg("suite"), py::arg("seed") = 1,
        py::arg("trials") = 500, py::arg("max_dim") = 6, py::arg("entry_bound") = 8,
        "Run a registered property suite; returns the canonical report JSON.");
  m.def("replay", &replayJson, py::arg("document"),
        "Re-run a stored counterexample document.");
  m.def("registered_suites", &krel::registeredSuites);
  m.def("negative_index", &negativeIndexOf, py::arg("gram"),
        "Number of negative squares of a Hermitian invertible gram matrix.");
  m.def("inner_product", &innerProductOf, py::arg("gram"), py::arg("x"), py::arg("y"),
        "[x, y] = y^H gram x with exact scalars, conjugate-linear in y.");
  m.def("finite_dim_note", [] { return krel::finiteDimNote(); });
}
