#include "krel/generators.hpp"

#include <cassert>

#include "krel/errors.hpp"

namespace krel {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::uniformInt(int lo, int hi) {
  assert(hi >= lo);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rng Rng::split(std::uint64_t stream) const {
  Rng child(state_ ^ (0xd1342543de82ef95ull * (stream + 1)));
  child.next();
  return child;
}

Rational randomRational(Rng& rng, int bound) {
  int num = rng.uniformInt(-bound, bound);
  int den = rng.uniformInt(1, bound);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Gq randomScalar(Rng& rng, int bound) {
  return Gq(randomRational(rng, bound), randomRational(rng, bound));
}

Mat randomMatrix(Rng& rng, int rows, int cols, int bound) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = randomScalar(rng, bound);
  return m;
}

SpacePtr genKreinSpace(Rng& rng, int dim, int kappa) {
  if (kappa > dim) raise(ErrorKind::PreconditionUnmet, "kappa exceeds the dimension");
  if (dim == 0) return makeSpace(Mat(0, 0), "K");
  // Small entries keep the Gram and everything downstream cheap and exact.
  Mat p(0, 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat candidate(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Rational re(rng.uniformInt(-2, 2), rng.uniformInt(1, 2));
        Rational im(rng.uniformInt(-1, 1), rng.uniformInt(1, 2));
        re.canonicalize();
        im.canonicalize();
        candidate.at(i, j) = Gq(re, im);
      }
    if (rank(candidate) == dim) {
      p = candidate;
      break;
    }
  }
  if (p.rows == 0) raise(ErrorKind::GenerationExhausted, "no invertible change of basis found");

  Mat d(dim, dim);
  std::vector<int> signs(dim);
  for (int i = 0; i < dim; ++i) {
    signs[i] = i < dim - kappa ? 1 : -1;
    d.at(i, i) = Gq(signs[i]);
  }
  Mat gram = p.conjugateTranspose() * d * p;
  auto pinv = inverse(p);
  UnitFrame frame{*pinv, signs};
  return makeSpace(std::move(gram), "K", std::move(frame));
}

Subspace genSubspace(Rng& rng, int ambientDim, int k, int bound) {
  return spanOf(ambientDim, randomMatrix(rng, ambientDim, k, bound));
}

namespace {

Gq randomPhase(Rng& rng) {
  static const Gq phases[] = {
      Gq(1),
      Gq(-1),
      gqI(),
      -gqI(),
      Gq(Rational(3, 5), Rational(4, 5)),
      Gq(Rational(3, 5), Rational(-4, 5)),
      Gq(Rational(4, 5), Rational(3, 5)),
      Gq(Rational(5, 13), Rational(12, 13)),
      Gq(Rational(12, 13), Rational(-5, 13)),
  };
  return phases[rng.uniformInt(0, static_cast<int>(std::size(phases)) - 1)];
}

// sin/cos pair from a Pythagorean triple: a^2 + b^2 = 1.
std::pair<Rational, Rational> pythagoreanPair(Rng& rng) {
  int m = rng.uniformInt(2, 3);
  int n = rng.uniformInt(1, m - 1);
  Rational c(m * m + n * n);
  Rational a(m * m - n * n);
  Rational b(2 * m * n);
  Rational x = a / c, y = b / c;
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

void applyUnitaryRotation(Rng& rng, Mat& w, int i, int j) {
  auto [ca, cb] = pythagoreanPair(rng);
  Gq a = Gq(ca) * randomPhase(rng);
  Gq b = Gq(cb) * randomPhase(rng);
  // columns i, j <- (a, b), (-conj b, conj a) mix
  for (int r = 0; r < w.rows; ++r) {
    Gq vi = w.at(r, i), vj = w.at(r, j);
    w.at(r, i) = vi * a + vj * b;
    w.at(r, j) = vi * (-b.conj()) + vj * a.conj();
  }
}

void applyBoost(Rng& rng, Mat& w, int i, int j) {
  // cosh/sinh pair: c^2 - s^2 = 1, acting across opposite signature signs.
  // Kept small (5/3, 4/3): boost products are the only norm growth in the
  // generator, and downstream float eigenvalue thresholds need tame entries.
  Rational c(5, 3);
  Rational s(4, 3);
  Gq phase = randomPhase(rng);
  Gq cc = Gq(c), ss = Gq(s) * phase;
  for (int r = 0; r < w.rows; ++r) {
    Gq vi = w.at(r, i), vj = w.at(r, j);
    w.at(r, i) = vi * cc + vj * ss;
    w.at(r, j) = vi * ss.conj() + vj * cc;
  }
}

void applyPhases(Rng& rng, Mat& w) {
  for (int j = 0; j < w.cols; ++j) {
    Gq phase = randomPhase(rng);
    for (int r = 0; r < w.rows; ++r) w.at(r, j) = w.at(r, j) * phase;
  }
}

}  // namespace

Mat randomRationalUnitary(Rng& rng, int r) {
  Mat w = Mat::identity(r);
  applyPhases(rng, w);
  int rounds = r <= 1 ? 0 : rng.uniformInt(1, 2 * r);
  for (int t = 0; t < rounds; ++t) {
    int i = rng.uniformInt(0, r - 1);
    int j = rng.uniformInt(0, r - 2);
    if (j >= i) ++j;
    applyUnitaryRotation(rng, w, i, j);
  }
  assert(w.conjugateTranspose() * w == Mat::identity(r));
  return w;
}

Mat randomIndefiniteUnitary(Rng& rng, const std::vector<int>& signs) {
  const int r = static_cast<int>(signs.size());
  Mat w = Mat::identity(r);
  applyPhases(rng, w);
  int rounds = r <= 1 ? 0 : rng.uniformInt(1, r + 1);
  int boostsLeft = 2;
  for (int t = 0; t < rounds; ++t) {
    int i = rng.uniformInt(0, r - 1);
    int j = rng.uniformInt(0, r - 2);
    if (j >= i) ++j;
    if (signs[i] == signs[j]) {
      applyUnitaryRotation(rng, w, i, j);
    } else if (boostsLeft > 0) {
      applyBoost(rng, w, i, j);
      --boostsLeft;
    }
  }
#ifndef NDEBUG
  Mat d(r, r);
  for (int i = 0; i < r; ++i) d.at(i, i) = Gq(signs[i]);
  assert(w.conjugateTranspose() * d * w == d);
#endif
  return w;
}

namespace {

const UnitFrame& frameOf(const SpacePtr& space) {
  if (!space->frame)
    raise(ErrorKind::GenerationExhausted,
          "space carries no exact unit frame; neutral structure is not "
          "rationally constructible for arbitrary grams");
  return *space->frame;
}

}  // namespace

Subspace genNeutral(Rng& rng, const SpacePtr& space, int k) {
  const UnitFrame& frame = frameOf(space);
  std::vector<int> pos, neg;
  for (int j = 0; j < static_cast<int>(frame.signs.size()); ++j)
    (frame.signs[j] > 0 ? pos : neg).push_back(j);
  int cap = static_cast<int>(std::min(pos.size(), neg.size()));
  if (k > cap)
    raise(ErrorKind::UnbalancedSignature,
          "requested neutral dimension exceeds min(positive, negative) index");
  if (k == 0) return zeroSubspace(space->dim);

  Mat up = randomRationalUnitary(rng, static_cast<int>(pos.size()));
  Mat un = randomRationalUnitary(rng, static_cast<int>(neg.size()));
  Mat p(space->dim, static_cast<int>(pos.size()));
  for (int j = 0; j < p.cols; ++j) p.setCol(j, frame.basis.col(pos[j]));
  Mat n(space->dim, static_cast<int>(neg.size()));
  for (int j = 0; j < n.cols; ++j) n.setCol(j, frame.basis.col(neg[j]));
  Mat rotatedPos = p * up;
  Mat rotatedNeg = n * un;
  Mat cols = rotatedPos.colSlice(0, k) + rotatedNeg.colSlice(0, k);
  Subspace out = spanOf(space->dim, cols);
  assert(classifySubspace(*space, out).neutral);
  return out;
}

Subspace genHyperMaximalNeutral(Rng& rng, const SpacePtr& space) {
  if (positiveIndex(space) != negativeIndex(space))
    raise(ErrorKind::UnbalancedSignature,
          "hyper-maximal neutral subspaces need a balanced signature");
  Subspace out = genNeutral(rng, space, space->dim / 2);
  assert(classifySubspace(*space, out).hyperMaximalNeutral);
  return out;
}

LinearRelation genRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y, int bound) {
  int ambient = x->dim + y->dim;
  int k = rng.uniformInt(0, ambient);
  return relationFromColumns(x, y, randomMatrix(rng, ambient, k, bound));
}

LinearRelation genSymmetricRelation(Rng& rng, const SpacePtr& k, int graphDim) {
  Subspace graph = genNeutral(rng, doubledSpace(k), graphDim);
  return relationFromGraph(k, k, graph);
}

LinearRelation genSelfAdjointRelation(Rng& rng, const SpacePtr& k) {
  Subspace graph = genHyperMaximalNeutral(rng, doubledSpace(k));
  return relationFromGraph(k, k, graph);
}

LinearRelation genIsometricRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y, int k) {
  Subspace graph = genNeutral(rng, productSpace(x, y), k);
  return relationFromGraph(x, y, graph);
}

LinearRelation genUnitaryRelation(Rng& rng, const SpacePtr& x, const SpacePtr& y) {
  Subspace graph = genHyperMaximalNeutral(rng, productSpace(x, y));
  return relationFromGraph(x, y, graph);
}

GbrKind parseGbrKind(const std::string& name) {
  if (name == "any") return GbrKind::Any;
  if (name == "isometricBoundary") return GbrKind::IsometricBoundary;
  if (name == "unitaryBoundary") return GbrKind::UnitaryBoundary;
  if (name == "ordinary") return GbrKind::Ordinary;
  if (name == "surjective") return GbrKind::Surjective;
  raise(ErrorKind::Parse, "unknown boundary-relation kind '" + name + "'");
}

namespace {

/// Frame of a doubled space with columns reordered positives-first, so two
/// doubled frames of equal dimension align sign patterns.
std::pair<Mat, std::vector<int>> orderedFrame(const SpacePtr& doubled) {
  const UnitFrame& f = frameOf(doubled);
  std::vector<int> order;
  for (int j = 0; j < static_cast<int>(f.signs.size()); ++j)
    if (f.signs[j] > 0) order.push_back(j);
  for (int j = 0; j < static_cast<int>(f.signs.size()); ++j)
    if (f.signs[j] < 0) order.push_back(j);
  Mat basis(f.basis.rows, f.basis.cols);
  std::vector<int> signs(order.size());
  for (int j = 0; j < static_cast<int>(order.size()); ++j) {
    basis.setCol(j, f.basis.col(order[j]));
    signs[j] = f.signs[order[j]];
  }
  return {basis, signs};
}

GreensBoundaryRelation genOrdinaryGBR(Rng& rng, const SpacePtr& k, const SpacePtr& h) {
  if (k->dim != h->dim)
    raise(ErrorKind::GenerationExhausted,
          "surjective everywhere-defined boundary relations need dim K = dim H");
  GreensBoundaryRelation probe = buildGBR(k, h, Mat(2 * k->dim + 2 * h->dim, 0));
  auto [fk, signsK] = orderedFrame(probe.K2);
  auto [fh, signsH] = orderedFrame(probe.H2);
  assert(signsK == signsH);
  Mat w = randomIndefiniteUnitary(rng, signsK);
  Mat v = fh * w * *inverse(fk);
  Mat graph = vstack(Mat::identity(2 * k->dim), v);
  return buildGBR(k, h, graph);
}

GreensBoundaryRelation genTrivialGBR(Rng& rng, const SpacePtr& k, const SpacePtr& h,
                                     bool unitary) {
  LinearRelation a1 = genSelfAdjointRelation(rng, k);
  LinearRelation a2 = unitary ? genSelfAdjointRelation(rng, h)
                              : genSymmetricRelation(rng, h, rng.uniformInt(0, h->dim));
  LinearRelation aTilde = directOrthogonalSum(a1, a2);
  return inverseMainTransformation(aTilde, k, h);
}

GreensBoundaryRelation genAnyGBR(Rng& rng, const SpacePtr& k, const SpacePtr& h) {
  switch (rng.uniformInt(0, 3)) {
    case 0: {
      SpacePtr prod = productSpace(doubledSpace(k), doubledSpace(h));
      int cap = std::min(positiveIndex(prod), negativeIndex(prod));
      Subspace graph = genNeutral(rng, prod, rng.uniformInt(0, cap));
      return buildGBR(k, h, graph.basis);
    }
    case 1: {
      // full hyper-maximal graph: a unitary boundary relation, possibly with
      // a proper domain when dim H < dim K
      SpacePtr prod = productSpace(doubledSpace(k), doubledSpace(h));
      Subspace graph = genHyperMaximalNeutral(rng, prod);
      return buildGBR(k, h, graph.basis);
    }
    case 2:
      return genTrivialGBR(rng, k, h, rng.coin());
    default:
      if (k->dim == h->dim) return genOrdinaryGBR(rng, k, h);
      return genTrivialGBR(rng, k, h, true);
  }
}

}  // namespace

GreensBoundaryRelation genGBR(Rng& rng, const SpacePtr& k, const SpacePtr& h, GbrKind kind) {
  const int budget = 100;
  for (int attempt = 0; attempt < budget; ++attempt) {
    GreensBoundaryRelation g = [&] {
      switch (kind) {
        case GbrKind::Any: return genAnyGBR(rng, k, h);
        case GbrKind::IsometricBoundary: return genTrivialGBR(rng, k, h, false);
        case GbrKind::UnitaryBoundary: return genTrivialGBR(rng, k, h, true);
        case GbrKind::Ordinary:
        case GbrKind::Surjective: return genOrdinaryGBR(rng, k, h);
      }
      raise(ErrorKind::GenerationExhausted, "unreachable kind");
    }();
    BoundaryClass cls = classifyBoundary(g);
    bool ok = [&] {
      switch (kind) {
        case GbrKind::Any: return cls.greens;
        case GbrKind::IsometricBoundary: return cls.isometricBoundary;
        case GbrKind::UnitaryBoundary: return cls.unitaryBoundary;
        case GbrKind::Ordinary: return cls.ordinaryTriple;
        case GbrKind::Surjective:
          return parts(g.gamma).ran == fullSubspace(g.H2->dim);
      }
      return false;
    }();
    if (ok) return g;
  }
  raise(ErrorKind::GenerationExhausted, "retry budget exhausted for the requested kind");
}

}  // namespace krel
