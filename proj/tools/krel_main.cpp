#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "krel/errors.hpp"
#include "krel/json_io.hpp"
#include "krel/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitSuiteFailure = 3;
constexpr int kExitStarved = 4;

int exitCodeFor(const krel::KrelError& e) {
  switch (e.kind()) {
    case krel::ErrorKind::Parse:
    case krel::ErrorKind::UnknownSuite:
      return kExitParse;
    default:
      return kExitInvariant;
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) krel::raise(krel::ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ModeConfig {
  krel::ArithmeticMode mode = krel::ArithmeticMode::Exact;
  double eps = 1e-9;
};

ModeConfig modeFromEnvironment() {
  ModeConfig cfg;
  const char* env = std::getenv("KREL_MODE");
  if (!env) return cfg;
  std::string value(env);
  if (value == "exact")
    cfg.mode = krel::ArithmeticMode::Exact;
  else if (value == "float")
    cfg.mode = krel::ArithmeticMode::Float;
  else
    krel::raise(krel::ErrorKind::Parse, "KREL_MODE must be 'exact' or 'float'");
  return cfg;
}

void floatModeSpaceCheck(const krel::SpacePtr& space, const ModeConfig& mode) {
  if (mode.mode != krel::ArithmeticMode::Float) return;
  if (krel::smallestSingularValue(space->gram) <= mode.eps)
    krel::raise(krel::ErrorKind::InvariantViolation,
                "gram fails the float-mode invertibility threshold");
}

int cmdClassify(const std::string& path, const ModeConfig& mode) {
  krel::Json doc = krel::parseJsonText(readFile(path));
  krel::InstanceDocument instance = krel::parseInstanceDocument(doc);
  krel::Json report;
  if (instance.kind == "relation") {
    krel::LinearRelation r = krel::relationFromJson(instance.payload);
    floatModeSpaceCheck(r.from, mode);
    floatModeSpaceCheck(r.to, mode);
    report = krel::classifyRelationReport(r);
  } else if (instance.kind == "gbr") {
    krel::GreensBoundaryRelation g = krel::gbrFromJson(instance.payload);
    floatModeSpaceCheck(g.K, mode);
    floatModeSpaceCheck(g.H, mode);
    report = krel::classifyBoundaryReport(g);
  } else {
    krel::raise(krel::ErrorKind::Parse, "classify expects a relation or gbr document");
  }
  std::cout << report.dump() << "\n";
  return kExitOk;
}

int cmdAdjoint(const std::string& path, const ModeConfig& mode) {
  krel::Json doc = krel::parseJsonText(readFile(path));
  krel::InstanceDocument instance = krel::parseInstanceDocument(doc);
  if (instance.kind != "relation")
    krel::raise(krel::ErrorKind::Parse, "adjoint expects a relation document");
  krel::LinearRelation r = krel::relationFromJson(instance.payload);
  floatModeSpaceCheck(r.from, mode);
  floatModeSpaceCheck(r.to, mode);
  krel::LinearRelation adj = krel::adjoint(r);
  std::cout << krel::instanceDocument("relation", krel::relationToJson(adj)).dump() << "\n";
  return kExitOk;
}

int cmdWeyl(const std::string& path, const std::vector<std::string>& zs, const ModeConfig& mode) {
  krel::Json doc = krel::parseJsonText(readFile(path));
  krel::InstanceDocument instance = krel::parseInstanceDocument(doc);
  if (instance.kind != "gbr") krel::raise(krel::ErrorKind::Parse, "weyl expects a gbr document");
  krel::GreensBoundaryRelation g = krel::gbrFromJson(instance.payload);
  floatModeSpaceCheck(g.K, mode);
  floatModeSpaceCheck(g.H, mode);
  krel::Json out = krel::Json::array();
  for (const std::string& zText : zs)
    out.push_back(krel::weylSampleToJson(krel::weylFamily(g, krel::parseScalar(zText))));
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int reportExit(const krel::PropertyReport& report) {
  std::cout << krel::reportToJson(report).dump() << "\n";
  std::cerr << "elapsed " << report.elapsedSeconds << " s\n";
  if (report.status == "FAIL") return kExitSuiteFailure;
  if (report.status == "HYPOTHESIS-STARVED") return kExitStarved;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of linear relations between Krein spaces"};
  app.require_subcommand(1);

  std::string path;
  std::vector<std::string> zs;
  krel::GeneratorConfig cfg;
  std::string suiteId;
  double floatEps = 1e-9;

  CLI::App* classify = app.add_subcommand("classify", "classify a relation or boundary relation");
  classify->add_option("file", path)->required();

  CLI::App* adjointCmd = app.add_subcommand("adjoint", "adjoint of a relation document");
  adjointCmd->add_option("file", path)->required();

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl family samples of a boundary relation");
  weyl->add_option("file", path)->required();
  weyl->add_option("--z", zs, "sample points, e.g. 0+1*i")->required();

  CLI::App* suite = app.add_subcommand("suite", "run a registered property suite");
  suite->add_option("--suite", suiteId)->required();
  suite->add_option("--seed", cfg.seed);
  suite->add_option("--trials", cfg.trials);
  suite->add_option("--max-dim", cfg.maxDim);
  suite->add_option("--entry-bound", cfg.entryBound);
  suite->add_option("--float-eps", floatEps);

  CLI::App* replay = app.add_subcommand("replay", "re-run a stored counterexample");
  replay->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ModeConfig mode = modeFromEnvironment();
    mode.eps = floatEps;
    if (classify->parsed()) return cmdClassify(path, mode);
    if (adjointCmd->parsed()) return cmdAdjoint(path, mode);
    if (weyl->parsed()) return cmdWeyl(path, zs, mode);
    if (suite->parsed()) return reportExit(krel::runSuite(suiteId, cfg));
    if (replay->parsed())
      return reportExit(krel::replayCounterexample(krel::parseJsonText(readFile(path))));
  } catch (const krel::KrelError& e) {
    krel::Json err;
    err["error"] = krel::errorKindName(e.kind());
    err["detail"] = e.detail();
    std::cout << err.dump() << "\n";
    return exitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
