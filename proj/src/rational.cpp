#include "syzmirror/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace syzmirror {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  const BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  return Rational(BigInt(n), d);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational RationalPoint::sum() const {
  Rational total;
  for (const auto& c : coords_) total += c;
  return total;
}

bool RationalPoint::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::vector<double> RationalPoint::to_double() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.to_double());
  return out;
}

RationalPoint& RationalPoint::operator+=(const RationalPoint& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += rhs[i];
  return *this;
}

RationalPoint& RationalPoint::operator-=(const RationalPoint& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= rhs[i];
  return *this;
}

RationalPoint& RationalPoint::operator*=(const Rational& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto cmp = a[i] <=> b[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
  Rational total;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

std::string RationalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += coords_[i].to_string();
  }
  return out + ')';
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) { return os << p.to_string(); }

}  // namespace syzmirror
