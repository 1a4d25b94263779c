#include "krel/space.hpp"

#include <cassert>

#include "krel/errors.hpp"

namespace krel {

namespace {

bool frameValid(const Mat& gram, const UnitFrame& f) {
  if (f.basis.rows != gram.rows || f.basis.cols != gram.cols) return false;
  if (static_cast<int>(f.signs.size()) != f.basis.cols) return false;
  Mat d = f.basis.conjugateTranspose() * gram * f.basis;
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      Gq expect = (i == j) ? Gq(f.signs[i]) : Gq(0);
      if (d.at(i, j) != expect) return false;
    }
  return true;
}

}  // namespace

SpacePtr makeSpace(Mat gram, std::string label, std::optional<UnitFrame> frame) {
  if (gram.rows != gram.cols) raise(ErrorKind::InvariantViolation, "gram must be square");
  if (!isHermitian(gram)) raise(ErrorKind::InvariantViolation, "gram must be Hermitian");
  Inertia in = hermitianInertia(gram);
  if (in.zero != 0) raise(ErrorKind::InvariantViolation, "gram must be invertible (form non-degenerate)");
  if (frame && !frameValid(gram, *frame))
    raise(ErrorKind::InvariantViolation, "unit frame does not diagonalize the gram to signs");
  auto s = std::make_shared<KreinSpace>();
  s->dim = gram.rows;
  s->gram = std::move(gram);
  s->label = std::move(label);
  s->inertia = in;
  s->frame = std::move(frame);
  return s;
}

SpacePtr makeLine(const Rational& g, std::string label) {
  Mat m(1, 1);
  m.at(0, 0) = Gq(g);
  std::optional<UnitFrame> frame;
  Rational mag = g > 0 ? g : Rational(-g);
  if (auto sq = sumOfTwoSquares(Rational(1 / mag))) {
    UnitFrame f;
    f.basis = Mat(1, 1);
    f.basis.at(0, 0) = Gq(sq->first, sq->second);
    f.signs = {g > 0 ? 1 : -1};
    frame = f;
  }
  return makeSpace(std::move(m), std::move(label), std::move(frame));
}

SpacePtr makeHilbert(int dim, std::string label) {
  UnitFrame f;
  f.basis = Mat::identity(dim);
  f.signs.assign(dim, 1);
  return makeSpace(Mat::identity(dim), std::move(label), f);
}

Gq innerProduct(const KreinSpace& space, const std::vector<Gq>& x, const std::vector<Gq>& y) {
  if (static_cast<int>(x.size()) != space.dim || static_cast<int>(y.size()) != space.dim)
    raise(ErrorKind::DimensionMismatch, "inner product arguments must match the space dimension");
  std::vector<Gq> gx = space.gram * x;
  Gq out;
  for (int i = 0; i < space.dim; ++i) out += y[i].conj() * gx[i];
  return out;
}

Gq innerProduct(const SpacePtr& space, const std::vector<Gq>& x, const std::vector<Gq>& y) {
  return innerProduct(*space, x, y);
}

int negativeIndex(const KreinSpace& space) { return space.inertia.negative; }
int positiveIndex(const KreinSpace& space) { return space.inertia.positive; }

SpacePtr doubledSpace(const SpacePtr& space) {
  const int n = space->dim;
  Mat g(2 * n, 2 * n);
  Gq i = gqI();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      g.at(r, n + c) = -i * space->gram.at(r, c);
      g.at(n + r, c) = i * space->gram.at(r, c);
    }
  std::optional<UnitFrame> frame;
  if (space->frame) {
    // From a base frame vector b with [b,b] = s, the pair vectors
    // c*(b, ib) and c*(b, -ib), c = (1+i)/2, have self-products s and -s
    // and are mutually orthogonal here.
    const UnitFrame& bf = *space->frame;
    UnitFrame f;
    f.basis = Mat(2 * n, 2 * n);
    Gq c(Rational(1, 2), Rational(1, 2));
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) {
        Gq b = bf.basis.at(r, j);
        f.basis.at(r, j) = c * b;
        f.basis.at(n + r, j) = c * (i * b);
        f.basis.at(r, n + j) = c * b;
        f.basis.at(n + r, n + j) = c * (-i * b);
      }
    }
    f.signs.resize(2 * n);
    for (int j = 0; j < n; ++j) {
      f.signs[j] = bf.signs[j];
      f.signs[n + j] = -bf.signs[j];
    }
    frame = std::move(f);
  }
  return makeSpace(std::move(g), space->label.empty() ? "" : space->label + "^2", std::move(frame));
}

namespace {

SpacePtr twoBlockSpace(const SpacePtr& a, const SpacePtr& b, bool negateSecond,
                       const std::string& sep) {
  Mat gb = negateSecond ? Gq(-1) * b->gram : b->gram;
  Mat g = blockDiag(a->gram, gb);
  std::optional<UnitFrame> frame;
  if (a->frame && b->frame) {
    UnitFrame f;
    f.basis = blockDiag(a->frame->basis, b->frame->basis);
    f.signs = a->frame->signs;
    for (int s : b->frame->signs) f.signs.push_back(negateSecond ? -s : s);
    frame = std::move(f);
  }
  std::string label;
  if (!a->label.empty() || !b->label.empty()) label = a->label + sep + b->label;
  return makeSpace(std::move(g), std::move(label), std::move(frame));
}

}  // namespace

SpacePtr productSpace(const SpacePtr& x, const SpacePtr& y) {
  return twoBlockSpace(x, y, true, "x");
}

SpacePtr graphSideSpace(const SpacePtr& k, const SpacePtr& h) {
  if (negativeIndex(h) > 0)
    raise(ErrorKind::InvariantViolation, "graph-side space requires a positive-definite second factor");
  return twoBlockSpace(k, h, false, "x");
}

SpacePtr directSumSpace(const SpacePtr& a, const SpacePtr& b) {
  return twoBlockSpace(a, b, false, "[+]");
}

std::optional<UnitFrame> computeUnitFrame(const Mat& gram) {
  if (!isHermitian(gram)) return std::nullopt;
  const int n = gram.rows;
  Mat w = gram;
  Mat basis = Mat::identity(n);

  auto swapIndex = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < n; ++j) std::swap(w.at(x, j), w.at(y, j));
    for (int i = 0; i < n; ++i) std::swap(w.at(i, x), w.at(i, y));
    for (int i = 0; i < n; ++i) std::swap(basis.at(i, x), basis.at(i, y));
  };
  auto addIndex = [&](int j, int l, const Gq& c) {
    for (int i = 0; i < n; ++i) w.at(i, j) = w.at(i, j) + c * w.at(i, l);
    Gq cc = c.conj();
    for (int i = 0; i < n; ++i) w.at(j, i) = w.at(j, i) + cc * w.at(l, i);
    for (int i = 0; i < n; ++i) basis.at(i, j) = basis.at(i, j) + c * basis.at(i, l);
  };

  std::vector<int> signs(n, 0);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && w.at(p, p).isZero()) ++p;
    if (p == n) {
      int fj = -1, fl = -1;
      for (int j = k; j < n && fj < 0; ++j)
        for (int l = j + 1; l < n; ++l)
          if (!w.at(j, l).isZero()) {
            fj = j;
            fl = l;
            break;
          }
      if (fj < 0) return std::nullopt;  // degenerate form
      Gq a = w.at(fj, fl);
      addIndex(fj, fl, a.re != 0 ? Gq(1) : gqI());
      p = fj;
    }
    swapIndex(k, p);
    Rational d = w.at(k, k).re;
    signs[k] = d > 0 ? 1 : -1;
    Gq invd = Gq(1) / w.at(k, k);
    for (int q = k + 1; q < n; ++q) {
      if (w.at(q, k).isZero()) continue;
      Gq t = w.at(q, k) * invd;
      for (int j = 0; j < n; ++j) w.at(q, j) = w.at(q, j) - t * w.at(k, j);
      Gq tc = t.conj();
      for (int i = 0; i < n; ++i) w.at(i, q) = w.at(i, q) - tc * w.at(i, k);
      for (int i = 0; i < n; ++i) basis.at(i, q) = basis.at(i, q) - tc * basis.at(i, k);
    }
    // rescale column k so the self-product becomes +-1
    Rational mag = d > 0 ? d : Rational(-d);
    auto sq = sumOfTwoSquares(Rational(1 / mag));
    if (!sq) return std::nullopt;
    Gq c(sq->first, sq->second);
    for (int i = 0; i < n; ++i) basis.at(i, k) = c * basis.at(i, k);
  }
  UnitFrame f{std::move(basis), std::move(signs)};
  assert(frameValid(gram, f));
  return f;
}

}  // namespace krel
