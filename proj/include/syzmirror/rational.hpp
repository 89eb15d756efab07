#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace syzmirror {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p", "-p" or "p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }
  double to_double() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A point of the ambient space with exact coordinates.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::size_t dim) : coords_(dim) {}
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Rational sum() const;
  bool is_integral() const;
  std::vector<double> to_double() const;
  // "(a,b,c)" with each coordinate in Rational::to_string form.
  std::string to_string() const;

  RationalPoint& operator+=(const RationalPoint& rhs);
  RationalPoint& operator-=(const RationalPoint& rhs);
  RationalPoint& operator*=(const Rational& k);
  friend RationalPoint operator+(RationalPoint a, const RationalPoint& b) { return a += b; }
  friend RationalPoint operator-(RationalPoint a, const RationalPoint& b) { return a -= b; }
  friend RationalPoint operator*(const Rational& k, RationalPoint a) { return a *= k; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  // Lexicographic; points of different length order by length first.
  friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalPoint& a, const RationalPoint& b);

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

}  // namespace syzmirror
