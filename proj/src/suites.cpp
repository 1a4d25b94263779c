#include "krel/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "krel/errors.hpp"

namespace krel {

namespace {

struct CheckOutcome {
  enum class Status { Pass, Fail, Vacuous };
  Status status = Status::Vacuous;
  std::string detail;
};

CheckOutcome pass() { return {CheckOutcome::Status::Pass, ""}; }
CheckOutcome fail(std::string detail) { return {CheckOutcome::Status::Fail, std::move(detail)}; }
CheckOutcome vacuous() { return {CheckOutcome::Status::Vacuous, ""}; }
CheckOutcome require(bool ok, const std::string& what) {
  return ok ? pass() : fail(what);
}

using CheckFn = std::function<CheckOutcome(const Json&)>;
struct Check {
  std::string id;
  CheckFn run;
};
struct SuiteDef {
  std::function<Json(Rng&, const GeneratorConfig&)> generate;
  std::vector<Check> checks;
  bool singleTrial = false;
};

LinearRelation rel(const Json& b, const char* key) { return relationFromJson(b.at(key)); }
GreensBoundaryRelation loadGbr(const Json& b, const char* key = "gbr") {
  return gbrFromJson(b.at(key));
}

int capDim(const GeneratorConfig& cfg, int cap) { return std::max(1, std::min(cfg.maxDim, cap)); }

SpacePtr randSpace(Rng& rng, int maxDim, std::optional<int> kappaCap = std::nullopt) {
  int dim = rng.uniformInt(1, maxDim);
  int cap = kappaCap ? std::min(*kappaCap, dim) : dim;
  return genKreinSpace(rng, dim, rng.uniformInt(0, cap));
}

SpacePtr randHilbert(Rng& rng, int maxDim) {
  return genKreinSpace(rng, rng.uniformInt(1, maxDim), 0);
}

/// K and H for boundary-relation suites; equalDims forces dim H = dim K.
std::pair<SpacePtr, SpacePtr> boundarySpaces(Rng& rng, const GeneratorConfig& cfg,
                                             bool equalDims, int kappaCap = 3) {
  int cap = capDim(cfg, 3);
  int dk = rng.uniformInt(1, cap);
  SpacePtr k = genKreinSpace(rng, dk, rng.uniformInt(0, std::min(kappaCap, dk)));
  int dh = equalDims ? dk : rng.uniformInt(1, cap);
  SpacePtr h = genKreinSpace(rng, dh, 0);
  return {k, h};
}

Json gbrBundle(const GreensBoundaryRelation& g) {
  Json b;
  b["gbr"] = gbrToJson(g);
  return b;
}

bool selfAdjointFlag(const LinearRelation& r) {
  return classifyRelation(r).selfAdjoint.value_or(false);
}
bool symmetricFlag(const LinearRelation& r) {
  return classifyRelation(r).symmetric.value_or(false);
}

LinearRelation kerAsRelation(const SpacePtr& base, const LinearRelation& r) {
  return relationFromGraph(base, base, parts(r).ker);
}

// ---------------------------------------------------------------------------
// suite bodies

SuiteDef suiteLemma26() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [k, h] = boundarySpaces(rng, cfg, rng.coin());
    return gbrBundle(genGBR(rng, k, h, GbrKind::Any));
  };
  def.checks = {
      {"boundary-kernels-symmetric",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto comp = components(g);
         bool ok = symmetricFlag(kerAsRelation(g.K, comp.gamma0)) &&
                   symmetricFlag(kerAsRelation(g.K, comp.gamma1)) &&
                   symmetricFlag(relationFromGraph(g.K, g.K, parts(g.gamma).ker));
         return require(ok, "a boundary kernel is not symmetric");
       }},
      {"boundary-muls-symmetric",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto comp = components(g);
         RelationParts p = parts(g.gamma);
         bool ok = symmetricFlag(relationFromGraph(g.H, g.H, p.mul));
         // component multivalued parts, embedded as the corresponding
         // component slot of the doubled target
         Subspace mul0 = parts(comp.gamma0).mul;
         Subspace mul1 = parts(comp.gamma1).mul;
         Mat emb0 = vstack(mul0.basis, Mat::zero(g.H->dim, mul0.dim()));
         Mat emb1 = vstack(Mat::zero(g.H->dim, mul1.dim()), mul1.basis);
         ok = ok && symmetricFlag(relationFromColumns(g.H, g.H, emb0)) &&
              symmetricFlag(relationFromColumns(g.H, g.H, emb1));
         return require(ok, "a multivalued boundary part is not symmetric");
       }},
  };
  return def;
}

SuiteDef suiteProp28() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [k, h] = boundarySpaces(rng, cfg, rng.coin());
    return gbrBundle(genGBR(rng, k, h, GbrKind::Any));
  };
  def.checks = {
      {"maximality-iff-symmetric-closure",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto d = derivedObjects(g);
         bool cond = checkMaximality(g).cond222;
         bool sSymmetric = symmetricFlag(d.S);
         bool sAdjointIsDomain = adjoint(d.S).graph == d.T.graph;
         return require(cond == (sSymmetric && sAdjointIsDomain),
                        "maximality does not match the symmetric associated relation");
       }},
      {"isotropic-part-equals-s",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto m = checkMaximality(g);
         if (!m.cond223) return vacuous();
         auto d = derivedObjects(g);
         return require(d.M == d.S, "isotropic part of the domain differs from S");
       }},
  };
  return def;
}

SuiteDef suiteCor216() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.coin();
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    GbrKind kind = ordinary ? GbrKind::Ordinary
                            : (rng.coin() ? GbrKind::UnitaryBoundary : GbrKind::IsometricBoundary);
    GreensBoundaryRelation g = genGBR(rng, k, h, kind);
    Json b = gbrBundle(g);
    // an intermediate symmetric extension A with S <= A <= A+ <= dom
    LinearRelation a = ordinary ? genSymmetricRelation(rng, k, rng.uniformInt(0, k->dim))
                                : derivedObjects(g).S;
    b["A"] = relationToJson(a);
    return b;
  };
  def.checks = {
      {"restriction-stays-maximal",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto a = rel(b, "A");
         auto d = derivedObjects(g);
         LinearRelation aPlus = adjointDefinitional(relationFromGraph(g.K, g.K, a.graph));
         bool chain = contains(a.graph, d.S.graph) && contains(aPlus.graph, a.graph) &&
                      contains(d.T.graph, aPlus.graph);
         if (!chain) return vacuous();
         if (!checkMaximality(g).cond222) return fail("the ambient relation lost maximality");
         LinearRelation restricted = restrictTo(g.gamma, aPlus.graph);
         GreensBoundaryRelation tilde = buildGBR(g.K, g.H, restricted.graph.basis);
         return require(checkMaximality(tilde).cond222,
                        "the restricted boundary relation lost maximality");
       }},
  };
  return def;
}

SuiteDef suiteProp34() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    int cap = capDim(cfg, 6);
    SpacePtr x = randSpace(rng, cap);
    SpacePtr y = randSpace(rng, cap);
    Json b;
    b["R"] = relationToJson(genRelation(rng, x, y, cfg.entryBound));
    return b;
  };
  def.checks = {
      {"canonical-closure-fixed",
       [](const Json& b) {
         auto r = rel(b, "R");
         bool ok = spanOf(r.graph.ambientDim, r.graph.basis) == r.graph &&
                   adjoint(r).graph == adjoint(r).graph;
         return require(ok, "canonical form is not idempotent");
       }},
      {"adjoint-routes-agree",
       [](const Json& b) {
         auto r = rel(b, "R");
         return require(adjointDefinitional(r) == adjointViaCompanion(r),
                        "definitional and companion adjoints differ");
       }},
      {"double-adjoint-is-closure",
       [](const Json& b) {
         auto r = rel(b, "R");
         return require(adjoint(adjoint(r)) == r, "double adjoint is not the relation");
       }},
      {"domain-companion-is-mul-of-adjoint",
       [](const Json& b) {
         auto r = rel(b, "R");
         Subspace lhs = orthogonalCompanion(*r.from, parts(r).dom);
         Subspace rhs = parts(adjoint(r)).mul;
         return require(lhs == rhs, "companion of the domain is not mul of the adjoint");
       }},
      {"kernel-of-adjoint-is-range-companion",
       [](const Json& b) {
         auto r = rel(b, "R");
         Subspace lhs = parts(adjoint(r)).ker;
         Subspace rhs = orthogonalCompanion(*r.to, parts(r).ran);
         return require(lhs == rhs, "kernel of the adjoint is not the range companion");
       }},
      {"inverse-companion-swap",
       [](const Json& b) {
         auto r = rel(b, "R");
         LinearRelation t = inverse(r);  // in Y x X
         Subspace lhs = orthogonalCompanion(*productSpace(r.from, r.to), r.graph);
         Subspace comp = orthogonalCompanion(*productSpace(t.from, t.to), t.graph);
         Mat swapped = vstack(comp.basis.rowSlice(t.from->dim, t.to->dim),
                              comp.basis.rowSlice(0, t.from->dim));
         Subspace rhs = spanOf(lhs.ambientDim, swapped);
         return require(lhs == rhs, "companion does not commute with inversion");
       }},
  };
  return def;
}

std::pair<SpacePtr, SpacePtr> matchedSignatureSpaces(Rng& rng, const GeneratorConfig& cfg,
                                                     int cap) {
  int dim = rng.uniformInt(1, capDim(cfg, cap));
  int kappa = rng.uniformInt(0, dim);
  SpacePtr x = genKreinSpace(rng, dim, kappa);
  SpacePtr y = genKreinSpace(rng, dim, kappa);
  return {x, y};
}

SuiteDef suiteProp38() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [x, y] = matchedSignatureSpaces(rng, cfg, 4);
    SpacePtr prod = productSpace(x, y);
    int capNeutral = std::min(positiveIndex(prod), negativeIndex(prod));
    Json b;
    b["Viso"] = relationToJson(genIsometricRelation(rng, x, y, rng.uniformInt(0, capNeutral)));
    b["Vuni"] = relationToJson(genUnitaryRelation(rng, x, y));
    b["R"] = relationToJson(genRelation(rng, x, y, cfg.entryBound));
    return b;
  };
  def.checks = {
      {"generated-isometric-is-neutral",
       [](const Json& b) {
         auto c = classifyRelation(rel(b, "Viso"));
         return require(c.isometric && c.neutralInProduct, "generated isometric not neutral");
       }},
      {"generated-unitary-is-hypermaximal",
       [](const Json& b) {
         auto c = classifyRelation(rel(b, "Vuni"));
         return require(c.unitary && c.hyperMaximalInProduct,
                        "generated unitary not hyper-maximal neutral");
       }},
      {"random-relation-correspondence",
       [](const Json& b) {
         auto r = rel(b, "R");
         bool defIso = contains(adjoint(r).graph, inverse(r).graph);
         bool defUni = adjoint(r).graph == inverse(r).graph;
         auto geo = classifySubspace(*productSpace(r.from, r.to), r.graph);
         return require(defIso == geo.neutral && defUni == geo.hyperMaximalNeutral,
                        "graph geometry disagrees with the defining inclusions");
       }},
  };
  return def;
}

SuiteDef suiteProp310() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    SpacePtr k = randSpace(rng, capDim(cfg, 4));
    Json b;
    b["K"] = spaceToJson(k);
    Mat f = randomMatrix(rng, 2 * k->dim, 1, cfg.entryBound);
    Mat g = randomMatrix(rng, 2 * k->dim, 1, cfg.entryBound);
    b["fhat"] = matrixColumns(f);
    b["ghat"] = matrixColumns(g);
    b["R"] = relationToJson(genRelation(rng, k, k, cfg.entryBound));
    b["Asym"] = relationToJson(genSymmetricRelation(rng, k, rng.uniformInt(0, k->dim)));
    b["Asa"] = relationToJson(genSelfAdjointRelation(rng, k));
    return b;
  };
  def.checks = {
      {"swap-form-identity",
       [](const Json& b) {
         SpacePtr k = spaceFromJson(b.at("K"));
         const int n = k->dim;
         Mat f = matrixFromColumns(b.at("fhat"), 2 * n);
         Mat g = matrixFromColumns(b.at("ghat"), 2 * n);
         SpacePtr doubled = doubledSpace(k);
         SpacePtr kxk = productSpace(k, k);
         // (f, f') -> (-i f', -i f)
         std::vector<Gq> swapped(2 * n);
         Gq mi = -gqI();
         for (int i = 0; i < n; ++i) {
           swapped[i] = mi * f.at(n + i, 0);
           swapped[n + i] = mi * f.at(i, 0);
         }
         Gq lhs = innerProduct(doubled, f.col(0), g.col(0));
         Gq rhs = innerProduct(kxk, swapped, g.col(0));
         return require(lhs == rhs, "doubled form does not match the swapped graph form");
       }},
      {"symmetric-iff-neutral-in-doubled",
       [](const Json& b) {
         auto r = rel(b, "R");
         auto aSym = rel(b, "Asym");
         bool defSym = contains(adjoint(r).graph, r.graph);
         bool geoSym = classifySubspace(*doubledSpace(r.from), r.graph).neutral;
         bool ok = (defSym == geoSym) && symmetricFlag(aSym) &&
                   classifySubspace(*doubledSpace(aSym.from), aSym.graph).neutral;
         return require(ok, "symmetry does not match doubled-space neutrality");
       }},
      {"selfadjoint-iff-hypermaximal-in-doubled",
       [](const Json& b) {
         auto r = rel(b, "R");
         auto aSa = rel(b, "Asa");
         bool defSa = adjoint(r).graph == r.graph;
         bool geoSa = classifySubspace(*doubledSpace(r.from), r.graph).hyperMaximalNeutral;
         bool ok = (defSa == geoSa) && selfAdjointFlag(aSa) &&
                   classifySubspace(*doubledSpace(aSa.from), aSa.graph).hyperMaximalNeutral;
         return require(ok, "self-adjointness does not match hyper-maximal neutrality");
       }},
  };
  return def;
}

SuiteDef suiteProp42() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [x, y] = matchedSignatureSpaces(rng, cfg, 4);
    SpacePtr prod = productSpace(x, y);
    int capNeutral = std::min(positiveIndex(prod), negativeIndex(prod));
    Json b;
    b["V"] = relationToJson(genIsometricRelation(rng, x, y, rng.uniformInt(0, capNeutral)));
    b["Vuni"] = relationToJson(genUnitaryRelation(rng, x, y));
    return b;
  };
  auto isoChecks = [](const LinearRelation& v) {
    RelationParts p = parts(v);
    bool ranFull = p.ran == fullSubspace(v.to->dim);
    bool domFull = p.dom == fullSubspace(v.from->dim);
    bool ranNonDeg = isotropicPart(*v.to, p.ran).dim() == 0;
    std::string bad;
    if (ranNonDeg && !(isotropicPart(*v.from, p.dom) == p.ker))
      bad = "non-degenerate range but isotropic(dom) != ker";
    if (ranFull && p.mul.dim() != 0) bad = "full range but multivalued";
    if (domFull && p.ker.dim() != 0) bad = "full domain but nontrivial kernel";
    if (domFull && ranFull && !classifyRelation(v).unitary)
      bad = "everywhere defined and surjective but not unitary";
    bool fired = ranNonDeg || ranFull || domFull;
    if (!bad.empty()) return fail(bad);
    return fired ? pass() : vacuous();
  };
  def.checks = {
      {"isometric-degeneracy-consequences",
       [isoChecks](const Json& b) { return isoChecks(rel(b, "V")); }},
      {"standard-unitary-consequences",
       [isoChecks](const Json& b) { return isoChecks(rel(b, "Vuni")); }},
  };
  return def;
}

SuiteDef suiteThm46() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [x, y] = matchedSignatureSpaces(rng, cfg, 4);
    SpacePtr prod = productSpace(x, y);
    int capNeutral = std::min(positiveIndex(prod), negativeIndex(prod));
    Json b;
    b["V"] = relationToJson(genIsometricRelation(rng, x, y, rng.uniformInt(0, capNeutral)));
    b["Vuni"] = relationToJson(genUnitaryRelation(rng, x, y));
    return b;
  };
  def.checks = {
      {"isotropic-equivalence",
       [](const Json& b) {
         auto v = rel(b, "V");
         RelationParts p = parts(v);
         bool rangeSide = isotropicPart(*v.to, p.ran) == p.mul;
         bool domainSide = isotropicPart(*v.from, p.dom) == p.ker;
         return require(rangeSide == domainSide, "isotropic equivalence broken");
       }},
      {"unitary-companion-identities",
       [](const Json& b) {
         auto v = rel(b, "Vuni");
         RelationParts p = parts(v);
         bool ok = orthogonalCompanion(*v.to, p.ran) == p.mul &&
                   orthogonalCompanion(*v.from, p.dom) == p.ker;
         return require(ok, "companion identities fail for a unitary relation");
       }},
      {"companion-identities-imply-unitary",
       [](const Json& b) {
         auto v = rel(b, "V");
         RelationParts p = parts(v);
         bool companions = orthogonalCompanion(*v.to, p.ran) == p.mul &&
                           orthogonalCompanion(*v.from, p.dom) == p.ker;
         if (!companions) return vacuous();
         return require(adjoint(v) == inverse(v), "companion identities but not unitary");
       }},
  };
  return def;
}

SuiteDef suiteProp52() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.coin();
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    return gbrBundle(genGBR(rng, k, h, ordinary ? GbrKind::Ordinary : GbrKind::Any));
  };
  def.checks = {
      {"range-degeneracy-consequences",
       [](const Json& b) {
         auto g = loadGbr(b);
         RelationParts p = parts(g.gamma);
         auto d = derivedObjects(g);
         bool ranNonDeg = isotropicPart(*g.H2, p.ran).dim() == 0;
         bool ranFull = p.ran == fullSubspace(g.H2->dim);
         bool domFull = p.dom == fullSubspace(g.K2->dim);
         std::string bad;
         if (ranNonDeg && !(d.M == d.N)) bad = "non-degenerate range but M != ker";
         if (ranFull && p.mul.dim() != 0) bad = "full range but multivalued";
         if (domFull && p.ker.dim() != 0) bad = "full domain but nontrivial kernel";
         if (domFull && ranFull && !classifyRelation(g.gamma).unitary)
           bad = "everywhere defined surjective boundary relation not unitary";
         if (!bad.empty()) return fail(bad);
         return (ranNonDeg || ranFull || domFull) ? pass() : vacuous();
       }},
  };
  return def;
}

SuiteDef suiteThm55() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.coin();
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    GbrKind kind = ordinary ? GbrKind::Ordinary
                            : (rng.coin() ? GbrKind::UnitaryBoundary : GbrKind::Any);
    Json b = gbrBundle(genGBR(rng, k, h, kind));
    return b;
  };
  def.checks = {
      {"isotropic-equivalence",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto d = derivedObjects(g);
         return require((d.Mtilde == d.Ntilde) == (d.M == d.N),
                        "range/domain isotropic equivalence broken");
       }},
      {"unitary-companion-identities",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (!classifyRelation(g.gamma).unitary) return vacuous();
         auto d = derivedObjects(g);
         return require(d.S == d.N && d.Stilde == d.Ntilde,
                        "companion identities fail for a unitary boundary relation");
       }},
      {"companion-identities-imply-unitary",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto d = derivedObjects(g);
         if (!(d.S == d.N && d.Stilde == d.Ntilde)) return vacuous();
         return require(adjoint(g.gamma) == inverse(g.gamma),
                        "companion identities but boundary relation not unitary");
       }},
  };
  return def;
}

SuiteDef suiteCor56() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.uniformInt(0, 3) != 0;
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    return gbrBundle(genGBR(rng, k, h, ordinary ? GbrKind::Ordinary : GbrKind::Any));
  };
  def.checks = {
      {"nondegenerate-range-and-maximality-give-m-n-s",
       [](const Json& b) {
         auto g = loadGbr(b);
         RelationParts p = parts(g.gamma);
         bool ranNonDeg = isotropicPart(*g.H2, p.ran).dim() == 0;
         if (!ranNonDeg || !checkMaximality(g).cond223) return vacuous();
         auto d = derivedObjects(g);
         return require(d.M == d.N && d.N == d.S, "M = N = S fails");
       }},
  };
  return def;
}

SuiteDef suiteCor58() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.coin();
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    return gbrBundle(genGBR(rng, k, h, ordinary ? GbrKind::Ordinary : GbrKind::Any));
  };
  def.checks = {
      {"ordinary-flag-characterization",
       [](const Json& b) {
         auto g = loadGbr(b);
         bool flag = classifyBoundary(g).ordinaryTriple;
         bool characterization = parts(g.gamma).ran == fullSubspace(g.H2->dim) &&
                                 checkMaximality(g).cond228;
         return require(flag == characterization, "ordinary flag mismatch");
       }},
      {"ordinary-triple-properties",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (!classifyBoundary(g).ordinaryTriple) return vacuous();
         auto comp = components(g);
         auto d = derivedObjects(g);
         bool ok = parts(g.gamma).mul.dim() == 0 && parts(comp.gamma0).mul.dim() == 0 &&
                   parts(comp.gamma1).mul.dim() == 0 && adjoint(d.S).graph == d.T.graph &&
                   symmetricFlag(d.S);
         return require(ok, "ordinary triple lacks the operator/surjectivity properties");
       }},
  };
  return def;
}

SuiteDef suiteProp510() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    int kindDraw = rng.uniformInt(0, 2);
    bool equal = kindDraw == 2;
    auto [k, h] = boundarySpaces(rng, cfg, equal);
    GbrKind kind = kindDraw == 0 ? GbrKind::Any
                   : kindDraw == 1 ? GbrKind::UnitaryBoundary
                                   : GbrKind::Ordinary;
    return gbrBundle(genGBR(rng, k, h, kind));
  };
  def.checks = {
      {"unitary-iff-hypermaximal-graph",
       [](const Json& b) {
         auto g = loadGbr(b);
         bool flag = classifyBoundary(g).unitaryBoundary;
         bool geo = classifySubspace(*productSpace(g.K2, g.H2), g.gamma.graph)
                        .hyperMaximalNeutral;
         return require(flag == geo, "unitary flag does not match graph geometry");
       }},
      {"maximality-implication-chain",
       [](const Json& b) {
         auto g = loadGbr(b);
         auto m = checkMaximality(g);
         bool unitary = classifyBoundary(g).unitaryBoundary;
         bool ok = (!unitary || m.cond223) && (!m.cond223 || m.cond222);
         return require(ok, "maximality implication chain broken");
       }},
      {"unitary-m-n-s",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (!classifyBoundary(g).unitaryBoundary) return vacuous();
         auto d = derivedObjects(g);
         bool ok = d.M == d.N && d.N == d.S && d.Mtilde == d.Ntilde && d.Ntilde == d.Stilde;
         return require(ok, "M = N = S or its range analogue fails");
       }},
  };
  return def;
}

SuiteDef suiteLemma518() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    int cap = capDim(cfg, 3);
    SpacePtr k1 = randSpace(rng, cap);
    SpacePtr k2 = randSpace(rng, cap);
    auto pick = [&](const SpacePtr& s) {
      switch (rng.uniformInt(0, 2)) {
        case 0: return genSymmetricRelation(rng, s, rng.uniformInt(0, s->dim));
        case 1: return genSelfAdjointRelation(rng, s);
        default: return genRelation(rng, s, s, cfg.entryBound);
      }
    };
    Json b;
    b["A1"] = relationToJson(pick(k1));
    b["A2"] = relationToJson(pick(k2));
    return b;
  };
  def.checks = {
      {"sum-symmetry-transfers-to-components",
       [](const Json& b) {
         auto a1 = rel(b, "A1");
         auto a2 = rel(b, "A2");
         auto sum = directOrthogonalSum(a1, a2);
         bool sumSym = symmetricFlag(sum);
         bool sumSa = selfAdjointFlag(sum);
         if (sumSym && !(symmetricFlag(a1) && symmetricFlag(a2)))
           return fail("symmetric sum with a non-symmetric component");
         if (sumSa && !(selfAdjointFlag(a1) && selfAdjointFlag(a2)))
           return fail("self-adjoint sum with a non-self-adjoint component");
         return sumSym ? pass() : vacuous();
       }},
      {"component-symmetry-transfers-to-sum",
       [](const Json& b) {
         auto a1 = rel(b, "A1");
         auto a2 = rel(b, "A2");
         bool bothSym = symmetricFlag(a1) && symmetricFlag(a2);
         if (!bothSym) return vacuous();
         auto sum = directOrthogonalSum(a1, a2);
         if (!symmetricFlag(sum)) return fail("symmetric components but a non-symmetric sum");
         if (selfAdjointFlag(a1) && selfAdjointFlag(a2) && !selfAdjointFlag(sum))
           return fail("self-adjoint components but a non-self-adjoint sum");
         return pass();
       }},
  };
  return def;
}

/// Fixed instances: the anti-Hilbert line, the Hilbert line, the coupled
/// diagonal relation in their graph-side plane, and the full graphs.
Json example519Bundle() {
  SpacePtr k = makeLine(Rational(-1), "K");
  SpacePtr h = makeLine(Rational(1), "H");
  SpacePtr w = graphSideSpace(k, h);
  Mat diagCols = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  Json b;
  b["K"] = spaceToJson(k);
  b["H"] = spaceToJson(h);
  b["Atilde"] = relationToJson(relationFromColumns(w, w, diagCols));
  b["A1"] = relationToJson(fullRelation(k, k));
  b["A2"] = relationToJson(fullRelation(h, h));
  return b;
}

SuiteDef suiteExample519() {
  SuiteDef def;
  def.singleTrial = true;
  def.generate = [](Rng&, const GeneratorConfig&) { return example519Bundle(); };
  def.checks = {
      {"coupled-diagonal-relation-selfadjoint",
       [](const Json& b) {
         return require(selfAdjointFlag(rel(b, "Atilde")),
                        "the coupled diagonal relation is not self-adjoint");
       }},
      {"full-graphs-not-symmetric",
       [](const Json& b) {
         auto a1 = rel(b, "A1");
         auto a2 = rel(b, "A2");
         bool ok = adjoint(a1).graphDim() == 0 && !symmetricFlag(a1) &&
                   adjoint(a2).graphDim() == 0 && !symmetricFlag(a2);
         return require(ok, "a full graph should have the zero adjoint");
       }},
      {"coupling-not-a-direct-sum",
       [](const Json& b) {
         auto a1 = rel(b, "A1");
         auto a2 = rel(b, "A2");
         auto sum = directOrthogonalSum(a1, a2);
         auto coupled = rel(b, "Atilde");
         bool ok = sum.graphDim() == 4 && coupled.graphDim() == 2 &&
                   !symmetricFlag(sum);
         return require(ok, "the coupled relation should not arise as a direct sum");
       }},
      {"coupled-image-unitary-but-not-trivial",
       [](const Json& b) {
         SpacePtr k = spaceFromJson(b.at("K"));
         SpacePtr h = spaceFromJson(b.at("H"));
         auto g = inverseMainTransformation(rel(b, "Atilde"), k, h);
         BoundaryClass cls = classifyBoundary(g);
         // the image couples K and H, so the trivial-form conclusion of the
         // disjoint-component setting genuinely fails here
         return require(cls.unitaryBoundary && !cls.trivial &&
                            parts(g.gamma).dom == fullSubspace(g.K2->dim),
                        "the transformed coupled relation misclassified");
       }},
  };
  return def;
}

SuiteDef suiteProp520() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [k, h] = boundarySpaces(rng, cfg, true);
    Json b;
    b["K"] = spaceToJson(k);
    b["H"] = spaceToJson(h);
    b["gbrU"] = gbrToJson(genGBR(rng, k, h, GbrKind::UnitaryBoundary));
    b["gbrI"] = gbrToJson(genGBR(rng, k, h, GbrKind::IsometricBoundary));
    b["gbrOrd"] = gbrToJson(genGBR(rng, k, h, GbrKind::Ordinary));
    SpacePtr w = graphSideSpace(k, h);
    b["AtildeSa"] = relationToJson(genSelfAdjointRelation(rng, w));
    b["vec"] = matrixColumns(randomMatrix(rng, 2 * (k->dim + h->dim), 1, cfg.entryBound));
    return b;
  };
  def.checks = {
      {"shuffle-is-involution",
       [](const Json& b) {
         auto g = loadGbr(b, "gbrOrd");
         LinearRelation aTilde = mainTransformation(g);
         GreensBoundaryRelation back = inverseMainTransformation(aTilde, g.K, g.H);
         bool graphsMatch = back.gamma.graph == g.gamma.graph;
         // vector-level involution of the coordinate shuffle
         const int n = g.K->dim, m = g.H->dim;
         Mat v = matrixFromColumns(b.at("vec"), 2 * (n + m));
         auto shuffle = [&](const Mat& in) {
           Mat out(2 * (n + m), 1);
           for (int i = 0; i < n; ++i) out.at(i, 0) = in.at(i, 0);
           for (int i = 0; i < m; ++i) out.at(n + i, 0) = in.at(2 * n + i, 0);
           for (int i = 0; i < n; ++i) out.at(n + m + i, 0) = in.at(n + i, 0);
           for (int i = 0; i < m; ++i) out.at(2 * n + m + i, 0) = -in.at(2 * n + m + i, 0);
           return out;
         };
         bool vectorInvolution = shuffle(shuffle(v)) == v;
         return require(graphsMatch && vectorInvolution, "the shuffle is not an involution");
       }},
      {"generated-unitary-boundary-is-trivial",
       [](const Json& b) {
         auto g = loadGbr(b, "gbrU");
         BoundaryClass cls = classifyBoundary(g);
         RelationParts p = parts(g.gamma);
         bool ok = cls.unitaryBoundary && cls.trivial && p.dom == p.ker && p.ran == p.mul &&
                   classifySubspace(*g.K2, p.dom).hyperMaximalNeutral &&
                   classifySubspace(*g.H2, p.ran).hyperMaximalNeutral;
         return require(ok, "generated unitary boundary relation is not trivial");
       }},
      {"generated-isometric-boundary-is-trivial",
       [](const Json& b) {
         auto g = loadGbr(b, "gbrI");
         BoundaryClass cls = classifyBoundary(g);
         RelationParts p = parts(g.gamma);
         bool ok = cls.isometricBoundary && cls.trivial && p.dom == p.ker && p.ran == p.mul &&
                   classifySubspace(*g.K2, p.dom).neutral &&
                   classifySubspace(*g.H2, p.ran).neutral;
         return require(ok, "generated isometric boundary relation is not trivial");
       }},
      {"selfadjoint-transforms-to-unitary",
       [](const Json& b) {
         SpacePtr k = spaceFromJson(b.at("K"));
         SpacePtr h = spaceFromJson(b.at("H"));
         auto g = inverseMainTransformation(rel(b, "AtildeSa"), k, h);
         return require(classifyBoundary(g).unitaryBoundary,
                        "a self-adjoint graph-side relation must transform to a unitary one");
       }},
      {"unitary-transforms-to-selfadjoint",
       [](const Json& b) {
         bool ok = selfAdjointFlag(mainTransformation(loadGbr(b, "gbrU"))) &&
                   selfAdjointFlag(mainTransformation(loadGbr(b, "gbrOrd"))) &&
                   symmetricFlag(mainTransformation(loadGbr(b, "gbrI")));
         return require(ok, "transformed boundary relation has the wrong symmetry class");
       }},
  };
  return def;
}

SuiteDef suiteProp64() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool minimalFamily = rng.uniformInt(0, 3) != 0;
    auto [k, h] = boundarySpaces(rng, cfg, minimalFamily, 1);
    return gbrBundle(genGBR(rng, k, h,
                            minimalFamily ? GbrKind::Ordinary : GbrKind::UnitaryBoundary));
  };
  def.checks = {
      {"minimal-implies-eigenvalue-free-operator",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (!checkMaximality(g).cond222) return vacuous();
         std::vector<Gq> grid = defaultRegularGrid(g);
         if (grid.empty()) return vacuous();
         MinimalityReport minr = isMinimal(g, grid);
         if (!minr.minimal) return vacuous();
         MinimalityConsequences mc = minimalityConsequences(g, grid);
         bool ok = mc.sIsOperator && mc.noRationalEigenvalues && mc.pencilScanMin > 1e-6;
         return require(ok, "a minimal boundary relation has an eigenvalue-bearing S");
       }},
  };
  return def;
}

std::vector<Gq> thm66Points() {
  const Gq i = gqI();
  return {i, Gq(2) * i, Gq(1) + i, Gq(-1) + Gq(2) * i};
}

SuiteDef suiteThm66() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    int cap = capDim(cfg, 3);
    int dim = rng.uniformInt(1, cap);
    int kappa = rng.uniformInt(0, std::min(1, dim));
    SpacePtr k = genKreinSpace(rng, dim, kappa);
    SpacePtr h = genKreinSpace(rng, dim, 0);
    Json b = gbrBundle(genGBR(rng, k, h, GbrKind::Ordinary));
    b["kappa"] = kappa;
    return b;
  };
  def.checks = {
      {"kernel-negative-squares-bounded-by-kappa",
       [](const Json& b) {
         auto g = loadGbr(b);
         int kappa = b.at("kappa").get<int>();
         if (!classifyBoundary(g).unitaryBoundary) return vacuous();
         std::vector<Gq> grid = defaultRegularGrid(g);
         if (grid.empty() || !isMinimal(g, grid).minimal) return vacuous();
         std::vector<Gq> points = thm66Points();
         int maxCount = -1;
         for (unsigned mask = 1; mask < (1u << points.size()); ++mask) {
           std::vector<Gq> sample;
           for (unsigned bit = 0; bit < points.size(); ++bit)
             if (mask & (1u << bit)) sample.push_back(points[bit]);
           int count;
           try {
             count = nevanlinnaNegativeSquares(g, sample);
           } catch (const KrelError& e) {
             if (e.kind() == ErrorKind::NonOperatorWeylValue) continue;
             throw;
           }
           maxCount = std::max(maxCount, count);
           if (count > kappa)
             return fail("kernel produced " + std::to_string(count) +
                         " negative squares with kappa = " + std::to_string(kappa));
           if (kappa == 0 && count != 0)
             return fail("positive-definite case produced a negative square");
         }
         if (maxCount < 0) return vacuous();
         return pass();
       }},
  };
  return def;
}

SuiteDef suiteProp72() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    bool ordinary = rng.coin();
    auto [k, h] = boundarySpaces(rng, cfg, ordinary);
    return gbrBundle(genGBR(rng, k, h, ordinary ? GbrKind::Ordinary : GbrKind::Any));
  };
  def.checks = {
      {"closure-report-holds",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (isotropicPart(*g.H2, parts(g.gamma).ran).dim() != 0) return vacuous();
         ClosureReport r = closureProperties(g);
         bool ok = r.closureIsGreens && r.kernelClosedSymmetric && r.maximalityPreserved &&
                   r.associatedRelationStable && r.isotropicPartInsideS;
         return require(ok, "a closure property fails");
       }},
  };
  return def;
}

SuiteDef suiteLemma73() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [k, h] = boundarySpaces(rng, cfg, true);
    return gbrBundle(genGBR(rng, k, h, GbrKind::Surjective));
  };
  def.checks = {
      {"component-images-fill-h",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (parts(g.gamma).ran != fullSubspace(g.H2->dim)) return vacuous();
         RangeDensityReport r = rangeDensityConsequences(g);
         bool ok = r.gamma0RangeIsImageOfKer1 && r.gamma0RangeFull &&
                   r.gamma1RangeIsImageOfKer0 && r.gamma1RangeFull;
         return require(ok, "a component image misses part of the boundary space");
       }},
  };
  return def;
}

SuiteDef suiteProp74() {
  SuiteDef def;
  def.generate = [](Rng& rng, const GeneratorConfig& cfg) {
    auto [k, h] = boundarySpaces(rng, cfg, true);
    return gbrBundle(genGBR(rng, k, h, GbrKind::Surjective));
  };
  def.checks = {
      {"kernel-extensions-selfadjoint-disjoint-transversal",
       [](const Json& b) {
         auto g = loadGbr(b);
         if (parts(g.gamma).ran != fullSubspace(g.H2->dim) || !checkMaximality(g).cond222)
           return vacuous();
         RangeDensityReport r = rangeDensityConsequences(g);
         bool ok = r.s0SelfAdjoint && r.s1SelfAdjoint && r.sIsKernelIntersection &&
                   r.sAdjointIsComponentwiseSum && r.gamma0RangeIsImageOfKer1 &&
                   r.gamma0RangeFull;
         return require(ok, "a surjective boundary relation consequence fails");
       }},
  };
  return def;
}

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> reg = [] {
    std::map<std::string, SuiteDef> m;
    m["lemma2.6"] = suiteLemma26();
    m["prop2.8"] = suiteProp28();
    m["cor2.16"] = suiteCor216();
    m["prop3.4"] = suiteProp34();
    m["prop3.8"] = suiteProp38();
    m["prop3.10"] = suiteProp310();
    m["prop4.2"] = suiteProp42();
    m["thm4.6"] = suiteThm46();
    m["prop5.2"] = suiteProp52();
    m["thm5.5"] = suiteThm55();
    m["cor5.6"] = suiteCor56();
    m["cor5.8"] = suiteCor58();
    m["prop5.10"] = suiteProp510();
    m["lemma5.18"] = suiteLemma518();
    m["example5.19"] = suiteExample519();
    m["prop5.20"] = suiteProp520();
    m["prop6.4"] = suiteProp64();
    m["thm6.6"] = suiteThm66();
    m["prop7.2"] = suiteProp72();
    m["lemma7.3"] = suiteLemma73();
    m["prop7.4"] = suiteProp74();
    return m;
  }();
  return reg;
}

Json counterexampleDoc(const std::string& suiteId, const std::string& checkId, int trialIndex,
                       const GeneratorConfig& cfg, const Json& instances,
                       const std::string& detail) {
  Json payload;
  payload["suite"] = suiteId;
  payload["check"] = checkId;
  payload["trialIndex"] = trialIndex;
  Json c;
  c["seed"] = cfg.seed;
  c["trials"] = cfg.trials;
  c["maxDim"] = cfg.maxDim;
  c["entryBound"] = cfg.entryBound;
  payload["config"] = std::move(c);
  payload["instances"] = instances;
  payload["detail"] = detail;
  return instanceDocument("counterexample", std::move(payload));
}

}  // namespace

Json reportToJson(const PropertyReport& r) {
  Json j;
  j["suite"] = r.suiteId;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["maxDim"] = r.maxDim;
  j["entryBound"] = r.entryBound;
  j["heldTrials"] = r.heldTrials;
  j["failures"] = r.failures;
  j["status"] = r.status;
  j["firstCounterexample"] = r.firstCounterexample ? *r.firstCounterexample : Json(nullptr);
  j["note"] = finiteDimNote();
  return j;
}

std::vector<std::string> registeredSuites() {
  std::vector<std::string> out;
  for (const auto& [id, def] : registry()) out.push_back(id);
  return out;
}

PropertyReport runSuite(const std::string& suiteId, const GeneratorConfig& cfg) {
  auto it = registry().find(suiteId);
  if (it == registry().end()) raise(ErrorKind::UnknownSuite, "no suite named '" + suiteId + "'");
  const SuiteDef& def = it->second;

  PropertyReport report;
  report.suiteId = suiteId;
  report.seed = cfg.seed;
  report.maxDim = cfg.maxDim;
  report.entryBound = cfg.entryBound;
  report.trials = def.singleTrial ? 1 : cfg.trials;

  auto start = std::chrono::steady_clock::now();
  Rng master(cfg.seed);
  for (int t = 0; t < report.trials; ++t) {
    Rng trialRng = master.split(static_cast<std::uint64_t>(t));
    Json bundle = def.generate(trialRng, cfg);
    bool held = false, failed = false;
    for (const Check& check : def.checks) {
      CheckOutcome outcome;
      try {
        outcome = check.run(bundle);
      } catch (const KrelError& e) {
        outcome = fail(std::string("unexpected error: ") + e.what());
      }
      if (outcome.status != CheckOutcome::Status::Vacuous) held = true;
      if (outcome.status == CheckOutcome::Status::Fail) {
        failed = true;
        if (!report.firstCounterexample)
          report.firstCounterexample =
              counterexampleDoc(suiteId, check.id, t, cfg, bundle, outcome.detail);
      }
    }
    if (held) ++report.heldTrials;
    if (failed) ++report.failures;
  }
  report.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.failures > 0)
    report.status = "FAIL";
  else if (2 * report.heldTrials <= report.trials)
    report.status = "HYPOTHESIS-STARVED";
  else
    report.status = "PASS";
  return report;
}

PropertyReport replayCounterexample(const Json& doc) {
  InstanceDocument parsed = parseInstanceDocument(doc);
  if (parsed.kind != "counterexample")
    raise(ErrorKind::Parse, "replay expects a counterexample document");
  const Json& payload = parsed.payload;
  std::string suiteId = payload.at("suite").get<std::string>();
  std::string checkId = payload.at("check").get<std::string>();
  auto it = registry().find(suiteId);
  if (it == registry().end()) raise(ErrorKind::UnknownSuite, "no suite named '" + suiteId + "'");
  const Check* check = nullptr;
  for (const Check& c : it->second.checks)
    if (c.id == checkId) check = &c;
  if (!check) raise(ErrorKind::Parse, "suite has no check named '" + checkId + "'");

  PropertyReport report;
  report.suiteId = suiteId;
  report.trials = 1;
  if (payload.contains("config")) {
    const Json& c = payload.at("config");
    report.seed = c.value("seed", 0ull);
    report.maxDim = c.value("maxDim", 0);
    report.entryBound = c.value("entryBound", 0);
  }
  CheckOutcome outcome;
  try {
    outcome = check->run(payload.at("instances"));
  } catch (const KrelError& e) {
    outcome = fail(std::string("unexpected error: ") + e.what());
  }
  report.heldTrials = outcome.status == CheckOutcome::Status::Vacuous ? 0 : 1;
  report.failures = outcome.status == CheckOutcome::Status::Fail ? 1 : 0;
  if (report.failures > 0) report.firstCounterexample = doc;
  report.status = report.failures > 0 ? "FAIL" : "PASS";
  return report;
}

}  // namespace krel
