#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ssg {

// Exact fraction in lowest terms with a positive denominator. Arithmetic
// goes through 128-bit intermediates and throws on int64 overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p/q"; integers keep the "/1" so the format is uniform.
  std::string str() const;
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A PoA-style ratio: finite, +infinity (worst equilibrium welfare 0) or
// undefined (no equilibrium to take the minimum over).
struct Ratio {
  enum class Kind { Finite, Infinite, Undefined };
  Kind kind = Kind::Undefined;
  Rational value;

  static Ratio finite(Rational r) { return {Kind::Finite, r}; }
  static Ratio infinite() { return {Kind::Infinite, {}}; }
  static Ratio undefined() { return {Kind::Undefined, {}}; }
  static Ratio of(const Rational& num, const Rational& den);

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  std::string str() const;
  static Ratio parse(const std::string& text);

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

// Total order on defined ratios: finite values, then infinity.
// Undefined compares as unordered.
std::partial_ordering compare(const Ratio& a, const Ratio& b);

}  // namespace ssg
