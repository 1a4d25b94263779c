#include "krel/scalar.hpp"

#include <cctype>
#include <cstddef>

#include "krel/errors.hpp"

namespace krel {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::GreenIdentityViolation: return "GreenIdentityViolation";
    case ErrorKind::SymmetryRequired: return "SymmetryRequired";
    case ErrorKind::EmptyRegularSet: return "EmptyRegularSet";
    case ErrorKind::NonOperatorWeylValue: return "NonOperatorWeylValue";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::UnbalancedSignature: return "UnbalancedSignature";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::FloatModeRequired: return "FloatModeRequired";
    case ErrorKind::DisjointnessRequired: return "DisjointnessRequired";
  }
  return "Unknown";
}

Gq operator/(const Gq& a, const Gq& b) {
  if (b.isZero()) raise(ErrorKind::InvariantViolation, "division by zero scalar");
  Rational n = b.normSq();
  Gq num = a * b.conj();
  return Gq(Rational(num.re / n), Rational(num.im / n));
}

std::complex<double> toComplex(const Gq& z) {
  return {z.re.get_d(), z.im.get_d()};
}

std::string formatRational(const Rational& r) {
  return r.get_str();
}

Rational parseRational(const std::string& text) {
  if (text.empty()) raise(ErrorKind::Parse, "empty rational");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      raise(ErrorKind::Parse, "bad rational '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) raise(ErrorKind::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) raise(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string formatScalar(const Gq& z) {
  std::string out = formatRational(z.re);
  Rational im = z.im;
  if (im >= 0) {
    out += "+" + formatRational(im) + "*i";
  } else {
    out += "-" + formatRational(Rational(-im)) + "*i";
  }
  return out;
}

namespace {

// Splits "a+b*i" / "a-b*i" at the sign separating the two components.
// A sign right after '/', at position 0, or directly after another sign
// belongs to a component, not to the separator.
std::size_t findSeparator(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '+' && s[i] != '-') continue;
    char prev = s[i - 1];
    if (prev == '/' || prev == '+' || prev == '-') continue;
    return i;
  }
  return std::string::npos;
}

Rational parseImagComponent(std::string part) {
  // part looks like "b*i", "i", "-i", "+i"
  if (part == "i") return Rational(1);
  if (part == "+i") return Rational(1);
  if (part == "-i") return Rational(-1);
  auto star = part.rfind("*i");
  if (star == std::string::npos || star + 2 != part.size())
    raise(ErrorKind::Parse, "bad imaginary part '" + part + "'");
  return parseRational(part.substr(0, star));
}

}  // namespace

Gq parseScalar(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) raise(ErrorKind::Parse, "empty scalar");

  bool hasI = s.find('i') != std::string::npos;
  if (!hasI) return Gq(parseRational(s));

  std::size_t sep = findSeparator(s);
  if (sep == std::string::npos) {
    // purely imaginary
    return Gq(Rational(0), parseImagComponent(s));
  }
  std::string realPart = s.substr(0, sep);
  std::string imagPart = s.substr(sep);  // keeps the sign
  Rational im;
  if (imagPart[0] == '+')
    im = parseImagComponent(imagPart.substr(1));
  else
    im = Rational(-parseImagComponent(imagPart.substr(1)));
  return Gq(parseRational(realPart), im);
}

}  // namespace krel
