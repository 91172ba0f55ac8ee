#include "ssg/rational.hpp"

#include <limits>
#include <numeric>

#include "ssg/error.hpp"

namespace ssg {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<i128>(num));
    den = narrow(-static_cast<i128>(den));
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t q = std::stoll(b, &used);
    if (used != b.size() || q == 0) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ratio Ratio::of(const Rational& num, const Rational& den) {
  if (den.is_zero()) return num.is_zero() ? undefined() : infinite();
  return finite(num / den);
}

std::string Ratio::str() const {
  switch (kind) {
    case Kind::Finite: return value.str();
    case Kind::Infinite: return "inf";
    case Kind::Undefined: break;
  }
  return "undefined";
}

Ratio Ratio::parse(const std::string& text) {
  if (text == "inf") return infinite();
  if (text == "undefined") return undefined();
  return finite(Rational::parse(text));
}

std::partial_ordering compare(const Ratio& a, const Ratio& b) {
  using K = Ratio::Kind;
  if (a.kind == K::Undefined || b.kind == K::Undefined) return std::partial_ordering::unordered;
  if (a.kind == K::Infinite || b.kind == K::Infinite) {
    if (a.kind == b.kind) return std::partial_ordering::equivalent;
    return a.kind == K::Infinite ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  return a.value <=> b.value;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::MissingGridMetadata: return "missing-grid-metadata";
    case ErrorCode::SameColorSwap: return "same-color-swap";
    case ErrorCode::InconsistentColoring: return "inconsistent-coloring";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::ConstructionFailed: return "construction-failed";
    case ErrorCode::NotATree: return "not-a-tree";
    case ErrorCode::WrongK: return "wrong-k";
    case ErrorCode::UnknownFamily: return "unknown-family";
    case ErrorCode::IncompleteParams: return "incomplete-params";
    case ErrorCode::UnknownExperiment: return "unknown-experiment";
  }
  return "unknown";
}

}  // namespace ssg
