#include <gmpxx.h>

#include <optional>
#include <utility>

#include "krel/space.hpp"

namespace krel {

namespace {

using Z = mpz_class;

// Nearest-integer quotient of n/d, d != 0.
Z roundDiv(const Z& n, const Z& d) {
  Z dd = d < 0 ? Z(-d) : d;
  Z nn = d < 0 ? Z(-n) : n;
  Z q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
  if (2 * r > dd) q += 1;
  return q;
}

struct Gz {
  Z a, b;  // a + b*i
};

Gz mul(const Gz& x, const Gz& y) {
  return {Z(x.a * y.a - x.b * y.b), Z(x.a * y.b + x.b * y.a)};
}

Gz sub(const Gz& x, const Gz& y) { return {Z(x.a - y.a), Z(x.b - y.b)}; }

bool isZero(const Gz& x) { return x.a == 0 && x.b == 0; }

// Rounded Gaussian-integer division.
Gz div(const Gz& z, const Gz& w) {
  Z n = w.a * w.a + w.b * w.b;
  Z reNum = z.a * w.a + z.b * w.b;
  Z imNum = z.b * w.a - z.a * w.b;
  return {roundDiv(reNum, n), roundDiv(imNum, n)};
}

Gz gaussGcd(Gz z, Gz w) {
  while (!isZero(w)) {
    Gz q = div(z, w);
    Gz r = sub(z, mul(q, w));
    z = w;
    w = r;
  }
  return z;
}

// s with s^2 = -1 (mod p) for prime p = 1 (mod 4).
std::optional<Z> sqrtMinusOne(const Z& p) {
  Z exp = (p - 1) / 4;
  for (unsigned base = 2; base < 1000; ++base) {
    Z s;
    Z b(base);
    mpz_powm(s.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    Z check = (s * s) % p;
    if (check == p - 1) return s;
  }
  return std::nullopt;
}

// x^2 + y^2 = n over the integers, when the classification permits it.
std::optional<std::pair<Z, Z>> twoSquaresInteger(Z n) {
  Gz acc{1, 0};
  auto applyPrime = [&](const Z& p, unsigned long e) -> bool {
    if (p == 2) {
      for (unsigned long i = 0; i < e; ++i) acc = mul(acc, Gz{1, 1});
      return true;
    }
    if (p % 4 == 3) {
      if (e % 2 != 0) return false;
      Z pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      acc = mul(acc, Gz{pk, 0});
      return true;
    }
    auto s = sqrtMinusOne(p);
    if (!s) return false;
    Gz g = gaussGcd(Gz{p, 0}, Gz{*s, 1});
    for (unsigned long i = 0; i < e; ++i) acc = mul(acc, g);
    return true;
  };

  for (Z p = 2; p * p <= n && p < 2000000; p = (p == 2 ? Z(3) : Z(p + 2))) {
    if (n % p != 0) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (!applyPrime(p, e)) return std::nullopt;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;  // unfactored composite
    if (!applyPrime(n, 1)) return std::nullopt;
  }
  Z x = acc.a < 0 ? Z(-acc.a) : acc.a;
  Z y = acc.b < 0 ? Z(-acc.b) : acc.b;
  return std::make_pair(x, y);
}

}  // namespace

std::optional<std::pair<Rational, Rational>> sumOfTwoSquares(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return std::make_pair(Rational(0), Rational(0));
  Z p = r.get_num();
  Z q = r.get_den();
  auto rep = twoSquaresInteger(Z(p * q));
  if (!rep) return std::nullopt;
  Rational x(rep->first, q);
  Rational y(rep->second, q);
  x.canonicalize();
  y.canonicalize();
  return std::make_pair(x, y);
}

}  // namespace krel
