#include <doctest.h>

#include "krel/errors.hpp"

#include "krel/suites.hpp"

using namespace krel;

TEST_CASE("rng splitting is deterministic and order independent") {
  Rng a(42), b(42);
  CHECK(a.next() == b.next());
  Rng parent(7);
  Rng c5 = parent.split(5);
  parent.next();
  parent.next();
  Rng c5again = Rng(7).split(5);
  CHECK(c5.next() == c5again.next());
}

TEST_CASE("generated spaces have the requested inertia") {
  Rng rng(1);
  for (int dim = 1; dim <= 4; ++dim)
    for (int kappa = 0; kappa <= dim; ++kappa) {
      SpacePtr s = genKreinSpace(rng, dim, kappa);
      CHECK(negativeIndex(s) == kappa);
      CHECK(positiveIndex(s) == dim - kappa);
    }
  SpacePtr line = genKreinSpace(rng, 1, 1);
  CHECK(line->gram.at(0, 0).im == 0);
  CHECK(line->gram.at(0, 0).re < 0);
}

TEST_CASE("neutral generation respects the signature bound") {
  Rng rng(2);
  SpacePtr minkowski = makeSpace(Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(-1)}}), "",
                                 computeUnitFrame(Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(-1)}})));
  Subspace line = genHyperMaximalNeutral(rng, minkowski);
  CHECK(classifySubspace(minkowski, line).hyperMaximalNeutral);

  SpacePtr h2 = makeHilbert(2);
  CHECK_THROWS_AS(genHyperMaximalNeutral(rng, h2), KrelError);
  CHECK_THROWS_AS(genNeutral(rng, h2, 1), KrelError);

  for (int trial = 0; trial < 10; ++trial) {
    int ds = rng.uniformInt(1, 4);
    SpacePtr s = genKreinSpace(rng, ds, rng.uniformInt(0, ds));
    SpacePtr doubled = doubledSpace(s);
    Subspace hm = genHyperMaximalNeutral(rng, doubled);
    CHECK(classifySubspace(doubled, hm).hyperMaximalNeutral);
  }
}

TEST_CASE("indefinite unitaries preserve the sign form exactly") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int r = rng.uniformInt(1, 5);
    std::vector<int> signs(r);
    for (int& s : signs) s = rng.coin() ? 1 : -1;
    Mat w = randomIndefiniteUnitary(rng, signs);
    Mat d(r, r);
    for (int k = 0; k < r; ++k) d.at(k, k) = Gq(signs[k]);
    CHECK(w.conjugateTranspose() * d * w == d);
    Mat u = randomRationalUnitary(rng, r);
    CHECK(u.conjugateTranspose() * u == Mat::identity(r));
  }
}

TEST_CASE("boundary relation generation hits the requested kinds") {
  Rng rng(4);
  for (int trial = 0; trial < 8; ++trial) {
    int dk = rng.uniformInt(1, 2);
    SpacePtr k = genKreinSpace(rng, dk, rng.uniformInt(0, dk));
    SpacePtr h = genKreinSpace(rng, rng.uniformInt(1, 2), 0);

    BoundaryClass any = classifyBoundary(genGBR(rng, k, h, GbrKind::Any));
    CHECK(any.greens);
    BoundaryClass iso = classifyBoundary(genGBR(rng, k, h, GbrKind::IsometricBoundary));
    CHECK(iso.isometricBoundary);
    BoundaryClass uni = classifyBoundary(genGBR(rng, k, h, GbrKind::UnitaryBoundary));
    CHECK(uni.unitaryBoundary);

    SpacePtr hEq = genKreinSpace(rng, k->dim, 0);
    BoundaryClass ord = classifyBoundary(genGBR(rng, k, hEq, GbrKind::Ordinary));
    CHECK(ord.ordinaryTriple);
  }
  // the trivial family over the anti-Hilbert/Hilbert line pair
  SpacePtr kLine = makeLine(Rational(-1), "K");
  SpacePtr hLine = makeLine(Rational(1), "H");
  GreensBoundaryRelation g = genGBR(rng, kLine, hLine, GbrKind::UnitaryBoundary);
  BoundaryClass cls = classifyBoundary(g);
  CHECK(cls.unitaryBoundary);
  CHECK(cls.trivial);
}

TEST_CASE("suite registry and unknown suites") {
  std::vector<std::string> ids = registeredSuites();
  CHECK(ids.size() == 21);
  GeneratorConfig cfg;
  CHECK_THROWS_AS(runSuite("unknown", cfg), KrelError);
}

TEST_CASE("suite reports are deterministic byte for byte") {
  GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.trials = 12;
  cfg.maxDim = 4;
  PropertyReport first = runSuite("prop3.4", cfg);
  PropertyReport second = runSuite("prop3.4", cfg);
  CHECK(reportToJson(first).dump() == reportToJson(second).dump());
  CHECK(first.status == "PASS");
  CHECK(first.failures == 0);
}

TEST_CASE("golden single-trial suite") {
  GeneratorConfig cfg;
  cfg.seed = 9;
  PropertyReport r = runSuite("example5.19", cfg);
  CHECK(r.trials == 1);
  CHECK(r.failures == 0);
  CHECK(r.status == "PASS");
}

TEST_CASE("smoke run of every registered suite") {
  GeneratorConfig cfg;
  cfg.seed = 5;
  cfg.trials = 4;
  cfg.maxDim = 3;
  for (const std::string& id : registeredSuites()) {
    PropertyReport r = runSuite(id, cfg);
    INFO(id, " -> ", reportToJson(r).dump());
    CHECK(r.failures == 0);
  }
}

TEST_CASE("replay re-runs a stored check on stored instances") {
  // a crafted counterexample: the golden self-adjointness check pointed at a
  // relation that is *not* self-adjoint must fail deterministically
  SpacePtr w = makeSpace(Mat::fromRows({{Gq(-1), Gq(0)}, {Gq(0), Gq(1)}}), "W");
  Mat skew = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(0), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  Json instances;
  instances["Atilde"] = relationToJson(relationFromColumns(w, w, skew));
  Json payload;
  payload["suite"] = "example5.19";
  payload["check"] = "coupled-diagonal-relation-selfadjoint";
  payload["trialIndex"] = 0;
  payload["instances"] = instances;
  Json doc = instanceDocument("counterexample", payload);

  PropertyReport r1 = replayCounterexample(doc);
  PropertyReport r2 = replayCounterexample(doc);
  CHECK(r1.failures == 1);
  CHECK(r1.status == "FAIL");
  CHECK(reportToJson(r1).dump() == reportToJson(r2).dump());

  // a healthy instance replays clean
  Json goodPayload = payload;
  SpacePtr k = makeLine(Rational(-1), "K");
  SpacePtr h = makeLine(Rational(1), "H");
  SpacePtr w2 = graphSideSpace(k, h);
  Mat diag = Mat::fromRows({{Gq(1), Gq(0)}, {Gq(1), Gq(0)}, {Gq(0), Gq(1)}, {Gq(0), Gq(1)}});
  goodPayload["instances"]["Atilde"] = relationToJson(relationFromColumns(w2, w2, diag));
  PropertyReport ok = replayCounterexample(instanceDocument("counterexample", goodPayload));
  CHECK(ok.failures == 0);
}
